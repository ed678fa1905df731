#include "waring/finite_rings.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "waring/parallel.hpp"

namespace waring {

namespace {

Residue mul_mod(Residue a, Residue b, std::uint64_t q) {
  return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % q);
}

Residue pow_mod(Residue a, std::uint64_t e, std::uint64_t q) {
  Residue result = 1 % q;
  a %= q;
  while (e) {
    if (e & 1) result = mul_mod(result, a, q);
    a = mul_mod(a, a, q);
    e >>= 1;
  }
  return result;
}

void check_args(std::uint64_t q, std::uint64_t k) {
  if (q < 2) throw std::invalid_argument("modulus q must be at least 2");
  if (k < 1) throw std::invalid_argument("exponent k must be at least 1");
  if (q > (std::uint64_t{1} << 32)) throw std::invalid_argument("modulus too large for exhaustive search");
}

// Closure checks for the reachable set S = additive span of the powers P.
// S is a group because BFS steps are symmetric; S*P in S then gives S*S in S
// by distributivity, and P contains 1.
void check_subring(const FiniteRingReport& r) {
  const auto in = [&](Residue x) { return r.distances[x] >= 0; };
  if (!in(0) || r.distances[0] != 0) throw std::logic_error("0 must be reachable at distance 0");
  for (Residue s : r.subring) {
    if (!in((r.q - s) % r.q)) throw std::logic_error("subring not closed under negation at " + std::to_string(s));
    for (Residue p : r.powers) {
      if (!in((s + p) % r.q)) throw std::logic_error("subring not closed under addition at " + std::to_string(s));
      if (!in(mul_mod(s, p, r.q)))
        throw std::logic_error("subring not closed under multiplication at " + std::to_string(s));
    }
  }
}

}  // namespace

std::vector<Residue> kth_powers(std::uint64_t q, std::uint64_t k) {
  check_args(q, k);
  std::vector<bool> seen(q, false);
  for (Residue a = 0; a < q; ++a) seen[pow_mod(a, k, q)] = true;
  std::vector<Residue> out;
  for (Residue r = 0; r < q; ++r)
    if (seen[r]) out.push_back(r);
  return out;
}

FiniteRingReport waring_profile(std::uint64_t q, std::uint64_t k) {
  FiniteRingReport report;
  report.q = q;
  report.k = k;
  report.powers = kth_powers(q, k);

  std::vector<Residue> steps;
  for (Residue p : report.powers) {
    if (p == 0) continue;
    steps.push_back(p);
    steps.push_back(q - p);
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

  report.distances.assign(q, -1);
  report.distances[0] = 0;
  std::vector<Residue> frontier{0}, next;
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (Residue s : frontier) {
      for (Residue step : steps) {
        const Residue t = (s + step) % q;
        if (report.distances[t] < 0) {
          report.distances[t] = depth;
          next.push_back(t);
        }
      }
    }
    std::swap(frontier, next);
  }

  for (Residue r = 0; r < q; ++r) {
    if (report.distances[r] < 0) continue;
    report.subring.push_back(r);
    report.v_value = std::max(report.v_value, report.distances[r]);
  }
  check_subring(report);
  return report;
}

int exact_length_v(std::uint64_t q, std::uint64_t k) {
  const auto powers = kth_powers(q, k);
  std::vector<Residue> signed_powers;
  for (Residue p : powers) {
    signed_powers.push_back(p);
    signed_powers.push_back((q - p) % q);
  }
  const std::size_t target = waring_profile(q, k).subring.size();

  // reach_t = { sums of exactly t signed powers }, t >= 1.
  std::vector<bool> reach(q, false);
  for (Residue p : signed_powers) reach[p] = true;
  for (int t = 1;; ++t) {
    if (static_cast<std::size_t>(std::count(reach.begin(), reach.end(), true)) == target) return t;
    if (t > static_cast<int>(q)) throw std::logic_error("exact-length sums failed to cover the subring");
    std::vector<bool> next(q, false);
    for (Residue s = 0; s < q; ++s)
      if (reach[s])
        for (Residue p : signed_powers) next[(s + p) % q] = true;
    reach = std::move(next);
  }
}

std::vector<FiniteRingReport> sweep(std::uint64_t q_lo, std::uint64_t q_hi, std::uint64_t k, unsigned threads) {
  if (q_lo < 2 || q_hi < q_lo) throw std::invalid_argument("sweep needs 2 <= q_lo <= q_hi");
  std::vector<FiniteRingReport> out(q_hi - q_lo + 1);
  parallel_for(out.size(), threads, [&](std::size_t idx) { out[idx] = waring_profile(q_lo + idx, k); });
  return out;
}

}  // namespace waring
