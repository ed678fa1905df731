#include "waring/random_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace waring {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

void extend(std::vector<Exponent>& prefix, std::size_t m, std::uint64_t budget, std::vector<Monomial>& out) {
  if (prefix.size() == m) {
    out.emplace_back(prefix);
    return;
  }
  for (std::uint64_t e = 0; e <= budget; ++e) {
    prefix.push_back(static_cast<Exponent>(e));
    extend(prefix, m, budget - e, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t m, std::uint64_t max_degree) {
  std::vector<Monomial> out;
  std::vector<Exponent> prefix;
  extend(prefix, m, max_degree, out);
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial random_polynomial(std::mt19937_64& rng, const RandomPolyParams& params) {
  if (params.coeff_bound < 0) throw std::invalid_argument("coefficient bound must be non-negative");
  std::bernoulli_distribution pick(params.density);
  std::uniform_int_distribution<std::int64_t> coeff(-params.coeff_bound, params.coeff_bound);
  std::vector<Polynomial::Term> terms;
  for (const auto& mono : monomials_up_to(params.num_vars, params.max_degree)) {
    if (!pick(rng)) continue;
    const std::int64_t c = coeff(rng);
    if (c != 0) terms.push_back({mono, Integer(static_cast<long>(c))});
  }
  return Polynomial::from_terms(params.num_vars, std::move(terms));
}

Polynomial random_sparse_polynomial(std::mt19937_64& rng, std::size_t num_vars, std::uint64_t max_degree,
                                    std::int64_t coeff_bound, std::size_t num_terms) {
  auto monos = monomials_up_to(num_vars, max_degree);
  if (num_terms > monos.size()) throw std::invalid_argument("more terms requested than monomials available");
  if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  std::shuffle(monos.begin(), monos.end(), rng);
  std::uniform_int_distribution<std::int64_t> coeff(1, coeff_bound);
  std::bernoulli_distribution negative(0.5);
  std::vector<Polynomial::Term> terms;
  for (std::size_t t = 0; t < num_terms; ++t) {
    const long c = static_cast<long>(coeff(rng));
    terms.push_back({monos[t], Integer(negative(rng) ? -c : c)});
  }
  return Polynomial::from_terms(num_vars, std::move(terms));
}

}  // namespace waring
