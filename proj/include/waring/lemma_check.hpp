#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace waring {

struct LemmaCheckConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::vector<unsigned> n_list{2, 3};
  std::size_t min_vars = 2;
  std::size_t max_vars = 4;
  std::uint64_t max_degree = 3;
  std::int64_t coeff_bound = 5;
  unsigned threads = 1;
};

struct LemmaFailure {
  std::size_t trial;
  unsigned n;
  std::size_t i, j;
  std::string check;
  std::string base;
  std::string detail;
};

struct LemmaReport {
  std::size_t trials = 0;
  std::size_t pair_checks = 0;
  std::vector<LemmaFailure> failures;  // ordered by trial, then pair
};

// For each trial draws f (m uniform in [min_vars, max_vars], n from n_list),
// expands g = f^(2^n) exactly, and for every pair i < j checks:
//   divisibility   both quotients are integers
//   congruence     pi_{i,j}(g) == (c(1)+1) c(x_i) c(x_j) mod 2
//   closed_form    c_g(x_i x_j) equals the closed formula exactly
//   mixed_quotient c_g(x_i x_j)/2^n == c(1)(c(x_i x_j) + c(x_i)c(x_j)) mod 2
//   half_quotient  c_g(x_i^h x_j^h)/2 == c(1)c(x_i x_j) + c(x_i)c(x_j) mod 2
// Trial t uses derive_seed(seed, t), so the report does not depend on threads.
LemmaReport verify_lemma(const LemmaCheckConfig& config);

}  // namespace waring
