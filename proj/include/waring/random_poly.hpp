#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "waring/polynomial.hpp"

namespace waring {

// SplitMix64 step; derives independent per-trial seeds from a run seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// All monomials in x1..xm of total degree <= max_degree, ascending grlex.
std::vector<Monomial> monomials_up_to(std::size_t m, std::uint64_t max_degree);

struct RandomPolyParams {
  std::size_t num_vars = 2;
  std::uint64_t max_degree = 3;
  std::int64_t coeff_bound = 5;
  // Probability that a given monomial gets a coefficient drawn.
  double density = 0.5;
};

// Each monomial of degree <= max_degree independently receives, with
// probability `density`, a coefficient uniform in [-coeff_bound, coeff_bound].
Polynomial random_polynomial(std::mt19937_64& rng, const RandomPolyParams& params);

// Exactly `num_terms` distinct monomials with nonzero coefficients in
// [-coeff_bound, coeff_bound].
Polynomial random_sparse_polynomial(std::mt19937_64& rng, std::size_t num_vars, std::uint64_t max_degree,
                                    std::int64_t coeff_bound, std::size_t num_terms);

}  // namespace waring
