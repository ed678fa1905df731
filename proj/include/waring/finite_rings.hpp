#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace waring {

using Residue = std::uint64_t;

// J(k, Z/q) and the least v such that every member is a signed sum of at most
// v k-th powers. Sums of "at most v" and "exactly v" agree because 0 = 0^k.
struct FiniteRingReport {
  std::uint64_t q = 0;
  std::uint64_t k = 0;
  std::vector<Residue> powers;   // sorted
  std::vector<Residue> subring;  // sorted
  // distances[r] for r in Z/q; -1 marks residues outside the subring.
  std::vector<int> distances;
  int v_value = 0;

  int distance(Residue r) const { return distances.at(r); }
};

// {a^k mod q : a in Z/q}, sorted.
std::vector<Residue> kth_powers(std::uint64_t q, std::uint64_t k);

// BFS from 0 with steps +-p for every k-th power p. Throws std::logic_error if
// the reachable set fails the subring closure checks.
FiniteRingReport waring_profile(std::uint64_t q, std::uint64_t k);

// Least v such that sums of exactly v signed powers cover the subring,
// computed without relying on zero padding.
int exact_length_v(std::uint64_t q, std::uint64_t k);

// Profiles for q = q_lo..q_hi in increasing order. Uses up to `threads`
// workers; the result does not depend on the worker count.
std::vector<FiniteRingReport> sweep(std::uint64_t q_lo, std::uint64_t q_hi, std::uint64_t k, unsigned threads = 1);

}  // namespace waring
