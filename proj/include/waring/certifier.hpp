#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "waring/invariant.hpp"
#include "waring/pattern_matrix.hpp"

namespace waring {

using BitString = std::vector<bool>;

std::string to_bit_string(const BitString& bits);

// Exact BFS answer: the generator vectors u whose rank-one patterns XOR to
// the target, one per term.
struct ExactWitness {
  std::vector<BitString> generators;
};

// Diagonal d (d[0] for x1) minimizing rank(sym(A) + diag(d)).
struct DiagonalWitness {
  BitString diagonal;
};

// Rows I (1-based); the certified rank is that of the block A[I, complement].
struct BlockWitness {
  std::vector<std::size_t> rows;
};

using Witness = std::variant<std::monostate, ExactWitness, DiagonalWitness, BlockWitness>;

enum class BoundMethod { kCounting, kRankCompletion, kExactSearch, kBlockRank };

std::string method_name(BoundMethod method);

struct CertifiedBound {
  std::size_t lower_bound = 0;
  BoundMethod method = BoundMethod::kCounting;
  Witness witness;
};

class DimensionTooLarge : public std::invalid_argument {
 public:
  DimensionTooLarge(const std::string& what, std::size_t m, std::size_t limit);
  std::size_t m() const { return m_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t m_, limit_;
};

inline constexpr std::size_t kExactSearchMaxDim = 7;
inline constexpr std::size_t kRankCompletionMaxDim = 20;

// Smallest v with v*m >= m(m-1)/2, i.e. ceil((m-1)/2): a lower bound on the
// number of signed 2^n-th powers needed in the worst case over Z[x1..xm].
std::size_t counting_lower_bound(std::size_t m);
CertifiedBound counting_certificate(std::size_t m);

// min over all 2^m diagonals d of rank(sym(A) + diag(d)). Any sum of r
// patterns u*u^T has rank <= r, so this bounds the term count from below.
CertifiedBound rank_completion_bound(const PatternMatrix& target);

// Rank of an off-diagonal block of sym(A), for dimensions too large for the
// diagonal sweep. Also at least 1 whenever A != 0.
CertifiedBound block_rank_bound(const PatternMatrix& target);

// Breadth-first distances over (Z/2)^(m choose 2) with generators the nonzero
// rank-one patterns. Built once per dimension and cached.
class PatternGroupSearch {
 public:
  static const PatternGroupSearch& for_dimension(std::size_t m);

  std::size_t m() const { return m_; }
  std::size_t distance(const PatternMatrix& target) const;
  // Lexicographically smallest generator at each step toward 0.
  std::vector<BitString> witness(const PatternMatrix& target) const;
  std::size_t reachable() const { return reachable_; }
  std::uint64_t group_order() const { return std::uint64_t{1} << (m_ * (m_ - 1) / 2); }
  std::size_t max_distance() const { return layer_sizes_.size() - 1; }
  const std::vector<std::size_t>& layer_sizes() const { return layer_sizes_; }
  std::size_t num_generators() const { return generators_.size(); }

 private:
  explicit PatternGroupSearch(std::size_t m);

  std::size_t m_;
  // Sorted by u, read as a bit string x1 first.
  std::vector<std::pair<BitString, std::uint64_t>> generators_;
  std::vector<std::uint8_t> dist_;
  std::vector<std::size_t> layer_sizes_;
  std::size_t reachable_ = 0;
};

CertifiedBound exact_min_terms(const PatternMatrix& target);

// Best bound available for pi(g): exact search up to m = 7, diagonal sweep up
// to m = 20, block rank beyond. Propagates NotInSubringObstruction.
CertifiedBound certify_powersum_target(const Polynomial& g, PowerExponent n, std::size_t m);
CertifiedBound certify_pattern(const PatternMatrix& target);

// Independent check that the witness supports the bound for this target.
bool verify_certificate(const PatternMatrix& target, const CertifiedBound& bound);

}  // namespace waring
