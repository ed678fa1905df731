#include "waring/lemma_check.hpp"

#include <random>
#include <stdexcept>

#include "waring/invariant.hpp"
#include "waring/parallel.hpp"
#include "waring/random_poly.hpp"

namespace waring {

namespace {

bool odd(const Integer& c) { return mpz_odd_p(c.get_mpz_t()) != 0; }

std::vector<LemmaFailure> run_trial(const LemmaCheckConfig& cfg, std::size_t trial, std::size_t& pairs) {
  std::mt19937_64 rng(derive_seed(cfg.seed, trial));
  std::uniform_int_distribution<std::size_t> pick_m(cfg.min_vars, cfg.max_vars);
  std::uniform_int_distribution<std::size_t> pick_n(0, cfg.n_list.size() - 1);
  const std::size_t m = pick_m(rng);
  const PowerExponent n(cfg.n_list[pick_n(rng)]);
  const Polynomial f = random_polynomial(rng, {m, cfg.max_degree, cfg.coeff_bound, 0.5});
  const Polynomial g = pow(f, n.k());

  std::vector<LemmaFailure> failures;
  auto fail = [&](std::size_t i, std::size_t j, const char* check, std::string detail) {
    failures.push_back({trial, n.n(), i, j, check, f.to_string(), std::move(detail)});
  };

  const Integer c0 = f.constant_term();
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) {
      ++pairs;
      const Integer ci = f.coeff(Monomial::variable(i));
      const Integer cj = f.coeff(Monomial::variable(j));
      const Integer cij = f.coeff(Monomial::pair(i, 1, j, 1));
      const Integer g_mixed = g.coeff(Monomial::pair(i, 1, j, 1));
      const Integer g_half = g.coeff(Monomial::pair(i, n.half(), j, n.half()));

      QuotientBits q{};
      try {
        q = quotient_pair(g, n, i, j);
      } catch (const NotInSubringObstruction& e) {
        fail(i, j, "divisibility", e.what());
        continue;
      }

      const bool expected = odd(Integer((c0 + 1) * ci * cj));
      if ((q.mixed != q.half_power) != expected)
        fail(i, j, "congruence", "pi_ij = " + std::to_string(q.mixed != q.half_power));

      const Integer closed = coeff_xixj_closed(f, n, i, j);
      if (closed != g_mixed) fail(i, j, "closed_form", "closed " + closed.get_str() + " vs " + g_mixed.get_str());

      if (q.mixed != odd(Integer(c0 * (cij + ci * cj))))
        fail(i, j, "mixed_quotient", "c(x_i x_j) = " + g_mixed.get_str());
      if (q.half_power != odd(Integer(c0 * cij + ci * cj)))
        fail(i, j, "half_quotient", "c(half power) = " + g_half.get_str());
    }
  }
  return failures;
}

}  // namespace

LemmaReport verify_lemma(const LemmaCheckConfig& config) {
  if (config.n_list.empty()) throw std::invalid_argument("n list must not be empty");
  if (config.min_vars < 2 || config.max_vars < config.min_vars)
    throw std::invalid_argument("variable range must satisfy 2 <= min_vars <= max_vars");

  std::vector<std::vector<LemmaFailure>> per_trial(config.trials);
  std::vector<std::size_t> pair_counts(config.trials, 0);
  parallel_for(config.trials, config.threads,
               [&](std::size_t t) { per_trial[t] = run_trial(config, t, pair_counts[t]); });

  LemmaReport report;
  report.trials = config.trials;
  for (std::size_t t = 0; t < config.trials; ++t) {
    report.pair_checks += pair_counts[t];
    for (auto& f : per_trial[t]) report.failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace waring
