#include "waring/certifier.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "waring/gf2.hpp"

namespace waring {

namespace {

constexpr std::uint8_t kUnvisited = 0xFF;

BitString bits_of(std::uint64_t x, std::size_t m) {
  // x read with x1 as the most significant of m bits.
  BitString u(m);
  for (std::size_t v = 0; v < m; ++v) u[v] = (x >> (m - 1 - v)) & 1;
  return u;
}

std::size_t block_rank(const PatternMatrix& a, const std::vector<std::size_t>& rows) {
  std::vector<std::size_t> cols;
  for (std::size_t v = 1; v <= a.m(); ++v)
    if (std::find(rows.begin(), rows.end(), v) == rows.end()) cols.push_back(v);
  BitVectorSpace space(cols.size());
  for (std::size_t r : rows) {
    BitString row(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) row[c] = a.get(std::min(r, cols[c]), std::max(r, cols[c]));
    space.add_row(row);
  }
  return space.rank();
}

// Rank of sym(A) + diag(d) through the general-width path.
std::size_t completed_rank(const PatternMatrix& a, const BitString& diagonal) {
  BitVectorSpace space(a.m());
  for (std::size_t i = 1; i <= a.m(); ++i) {
    BitString row(a.m());
    for (std::size_t j = 1; j <= a.m(); ++j)
      row[j - 1] = i == j ? diagonal[i - 1] : a.get(std::min(i, j), std::max(i, j));
    space.add_row(row);
  }
  return space.rank();
}

}  // namespace

std::string to_bit_string(const BitString& bits) {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

std::string method_name(BoundMethod method) {
  switch (method) {
    case BoundMethod::kCounting: return "counting";
    case BoundMethod::kRankCompletion: return "rank_completion";
    case BoundMethod::kExactSearch: return "exact_search";
    case BoundMethod::kBlockRank: return "block_rank";
  }
  return "unknown";
}

DimensionTooLarge::DimensionTooLarge(const std::string& what, std::size_t m, std::size_t limit)
    : std::invalid_argument(what + ": m = " + std::to_string(m) + " exceeds " + std::to_string(limit)),
      m_(m),
      limit_(limit) {}

std::size_t counting_lower_bound(std::size_t m) {
  if (m == 0) throw std::invalid_argument("counting bound needs m >= 1");
  return m / 2;  // == ceil((m - 1) / 2)
}

CertifiedBound counting_certificate(std::size_t m) { return {counting_lower_bound(m), BoundMethod::kCounting, {}}; }

CertifiedBound rank_completion_bound(const PatternMatrix& target) {
  const std::size_t m = target.m();
  if (m > kRankCompletionMaxDim) throw DimensionTooLarge("diagonal completion sweep", m, kRankCompletionMaxDim);

  // Row i as a word with column j at bit (m - j), so rows print x1 first.
  std::vector<std::uint32_t> base(m, 0);
  for (auto [i, j] : target.set_pairs()) {
    base[i - 1] |= std::uint32_t{1} << (m - j);
    base[j - 1] |= std::uint32_t{1} << (m - i);
  }

  std::size_t best = m + 1;
  std::uint32_t best_d = 0;
  std::uint32_t rows[kRankCompletionMaxDim];
  // d is read x1-first, so increasing d visits diagonals in lexicographic order
  // and the first minimum found is the lexicographically smallest.
  for (std::uint64_t d = 0; d < (std::uint64_t{1} << m); ++d) {
    for (std::size_t r = 0; r < m; ++r) rows[r] = base[r] | (((d >> (m - 1 - r)) & 1) << (m - 1 - r));
    const std::size_t r = rank_small(rows, m);
    if (r < best) {
      best = r;
      best_d = static_cast<std::uint32_t>(d);
      if (best == 0) break;
    }
  }
  return {best, BoundMethod::kRankCompletion, DiagonalWitness{bits_of(best_d, m)}};
}

CertifiedBound block_rank_bound(const PatternMatrix& target) {
  const std::size_t m = target.m();
  std::vector<std::vector<std::size_t>> candidates(2);
  for (std::size_t v = 1; v <= m / 2; ++v) candidates[0].push_back(v);
  for (std::size_t v = 1; v <= m; v += 2) candidates[1].push_back(v);

  CertifiedBound best{0, BoundMethod::kBlockRank, BlockWitness{candidates[0]}};
  for (const auto& rows : candidates) {
    const std::size_t r = block_rank(target, rows);
    if (r > best.lower_bound) best = {r, BoundMethod::kBlockRank, BlockWitness{rows}};
  }
  if (best.lower_bound == 0 && !target.is_zero()) best.lower_bound = 1;
  return best;
}

PatternGroupSearch::PatternGroupSearch(std::size_t m) : m_(m) {
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << m); ++x) {
    BitString u = bits_of(x, m);
    const std::uint64_t g = PatternMatrix::rank_one(u).to_index();
    if (g != 0) generators_.emplace_back(std::move(u), g);
  }

  dist_.assign(group_order(), kUnvisited);
  dist_[0] = 0;
  std::vector<std::uint64_t> frontier{0}, next;
  layer_sizes_.push_back(1);
  reachable_ = 1;
  for (std::uint8_t depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (auto s : frontier) {
      for (const auto& gen : generators_) {
        const std::uint64_t t = s ^ gen.second;
        if (dist_[t] == kUnvisited) {
          dist_[t] = depth;
          next.push_back(t);
        }
      }
    }
    if (next.empty()) break;
    layer_sizes_.push_back(next.size());
    reachable_ += next.size();
    std::swap(frontier, next);
  }
}

const PatternGroupSearch& PatternGroupSearch::for_dimension(std::size_t m) {
  if (m == 0) throw std::invalid_argument("pattern search needs m >= 1");
  if (m > kExactSearchMaxDim) throw DimensionTooLarge("exact pattern search", m, kExactSearchMaxDim);
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<PatternGroupSearch>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot.reset(new PatternGroupSearch(m));
  return *slot;
}

std::size_t PatternGroupSearch::distance(const PatternMatrix& target) const {
  if (target.m() != m_) throw std::invalid_argument("pattern dimension does not match the search");
  const auto d = dist_[target.to_index()];
  if (d == kUnvisited) throw std::logic_error("pattern unreachable from zero");
  return d;
}

std::vector<BitString> PatternGroupSearch::witness(const PatternMatrix& target) const {
  std::uint64_t s = target.to_index();
  std::size_t d = distance(target);
  std::vector<BitString> out;
  while (d > 0) {
    for (const auto& [u, g] : generators_) {
      if (dist_[s ^ g] == d - 1) {
        out.push_back(u);
        s ^= g;
        --d;
        break;
      }
    }
  }
  return out;
}

CertifiedBound exact_min_terms(const PatternMatrix& target) {
  const auto& search = PatternGroupSearch::for_dimension(target.m());
  auto generators = search.witness(target);
  const std::size_t v = generators.size();
  return {v, BoundMethod::kExactSearch, ExactWitness{std::move(generators)}};
}

CertifiedBound certify_pattern(const PatternMatrix& target) {
  if (target.m() <= kExactSearchMaxDim) return exact_min_terms(target);
  if (target.m() <= kRankCompletionMaxDim) return rank_completion_bound(target);
  return block_rank_bound(target);
}

CertifiedBound certify_powersum_target(const Polynomial& g, PowerExponent n, std::size_t m) {
  return certify_pattern(phi(g, n, m));
}

bool verify_certificate(const PatternMatrix& target, const CertifiedBound& bound) {
  const std::size_t m = target.m();
  switch (bound.method) {
    case BoundMethod::kCounting:
      return std::holds_alternative<std::monostate>(bound.witness) && bound.lower_bound == counting_lower_bound(m);
    case BoundMethod::kExactSearch: {
      const auto* w = std::get_if<ExactWitness>(&bound.witness);
      if (!w || w->generators.size() != bound.lower_bound) return false;
      PatternMatrix acc(m);
      for (const auto& u : w->generators) {
        if (u.size() != m) return false;
        acc ^= PatternMatrix::rank_one(u);
      }
      return acc == target;
    }
    case BoundMethod::kRankCompletion: {
      const auto* w = std::get_if<DiagonalWitness>(&bound.witness);
      return w && w->diagonal.size() == m && completed_rank(target, w->diagonal) == bound.lower_bound;
    }
    case BoundMethod::kBlockRank: {
      const auto* w = std::get_if<BlockWitness>(&bound.witness);
      if (!w) return false;
      for (std::size_t r : w->rows)
        if (r < 1 || r > m) return false;
      const std::size_t r = block_rank(target, w->rows);
      return r == bound.lower_bound || (r == 0 && bound.lower_bound == 1 && !target.is_zero());
    }
  }
  return false;
}

}  // namespace waring
