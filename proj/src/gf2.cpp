#include "waring/gf2.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>

namespace waring {

void BitVectorSpace::add_row(const std::vector<bool>& bits) {
  if (bits.size() != m_) throw std::invalid_argument("row width does not match the space dimension");
  std::vector<std::uint64_t> row(words_, 0);
  for (std::size_t c = 0; c < m_; ++c)
    if (bits[c]) row[c / 64] |= std::uint64_t{1} << (c % 64);
  rows_.push_back(std::move(row));
}

void BitVectorSpace::add_row(const char* bits) {
  std::vector<bool> row;
  for (const char* p = bits; *p; ++p) {
    if (*p != '0' && *p != '1') throw std::invalid_argument("bit strings may only contain 0 and 1");
    row.push_back(*p == '1');
  }
  add_row(row);
}

bool BitVectorSpace::get(std::size_t row, std::size_t col) const {
  if (row >= rows_.size() || col >= m_) throw std::out_of_range("bit index outside the row set");
  return (rows_[row][col / 64] >> (col % 64)) & 1;
}

std::size_t BitVectorSpace::rank() const {
  auto rows = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m_ && rank < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (rows[r][w] & bit)
        for (std::size_t k = w; k < words_; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

std::size_t rank_small(std::uint32_t* rows, std::size_t count) {
  std::size_t rank = 0;
  for (std::size_t r = 0; r < count; ++r) {
    const std::uint32_t pivot = rows[r];
    if (!pivot) continue;
    ++rank;
    const std::uint32_t low = pivot & (~pivot + 1);
    for (std::size_t s = r + 1; s < count; ++s)
      if (rows[s] & low) rows[s] ^= pivot;
  }
  return rank;
}

}  // namespace waring
