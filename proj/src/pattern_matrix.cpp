#include "waring/pattern_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace waring {

PatternMatrix::PatternMatrix(std::size_t m) : m_(m) {
  if (m == 0) throw std::invalid_argument("pattern matrix needs m >= 1");
  words_.assign((num_pairs() + 63) / 64, 0);
}

std::size_t PatternMatrix::pair_index(std::size_t m, std::size_t i, std::size_t j) {
  if (i < 1 || i >= j || j > m)
    throw std::out_of_range("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not 1 <= i < j <= " + std::to_string(m));
  // Pairs starting below i: sum over r < i of (m - r).
  return (i - 1) * (2 * m - i) / 2 + (j - i - 1);
}

bool PatternMatrix::get(std::size_t i, std::size_t j) const {
  const auto p = pair_index(m_, i, j);
  return (words_[p / 64] >> (p % 64)) & 1;
}

void PatternMatrix::set(std::size_t i, std::size_t j, bool value) {
  const auto p = pair_index(m_, i, j);
  const std::uint64_t bit = std::uint64_t{1} << (p % 64);
  if (value) words_[p / 64] |= bit;
  else words_[p / 64] &= ~bit;
}

void PatternMatrix::flip(std::size_t i, std::size_t j) {
  const auto p = pair_index(m_, i, j);
  words_[p / 64] ^= std::uint64_t{1} << (p % 64);
}

bool PatternMatrix::is_zero() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::size_t PatternMatrix::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> PatternMatrix::set_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 1; i <= m_; ++i)
    for (std::size_t j = i + 1; j <= m_; ++j)
      if (get(i, j)) out.emplace_back(i, j);
  return out;
}

PatternMatrix& PatternMatrix::operator^=(const PatternMatrix& other) {
  if (other.m_ != m_) throw std::invalid_argument("pattern matrices of different sizes");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::uint64_t PatternMatrix::to_index() const {
  if (num_pairs() > 64) throw std::length_error("pattern has more than 64 pairs");
  return words_.empty() ? 0 : words_[0];
}

PatternMatrix PatternMatrix::from_index(std::size_t m, std::uint64_t index) {
  PatternMatrix a(m);
  if (a.num_pairs() > 64) throw std::length_error("pattern has more than 64 pairs");
  if (a.num_pairs() < 64 && (index >> a.num_pairs()) != 0)
    throw std::out_of_range("pattern index has bits beyond the pair count");
  if (!a.words_.empty()) a.words_[0] = index;
  return a;
}

PatternMatrix PatternMatrix::rank_one(const std::vector<bool>& u) {
  PatternMatrix a(u.size());
  for (std::size_t i = 1; i <= u.size(); ++i)
    for (std::size_t j = i + 1; j <= u.size(); ++j)
      if (u[i - 1] && u[j - 1]) a.set(i, j);
  return a;
}

std::string PatternMatrix::render_text() const {
  std::string out;
  for (std::size_t i = 1; i <= m_; ++i) {
    for (std::size_t j = 1; j <= m_; ++j) out += j <= i ? '.' : (get(i, j) ? '1' : '0');
    out += '\n';
  }
  return out;
}

}  // namespace waring
