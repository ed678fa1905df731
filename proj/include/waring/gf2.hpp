#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace waring {

// Row vectors of width m over GF(2), packed 64 columns per word.
class BitVectorSpace {
 public:
  explicit BitVectorSpace(std::size_t m) : m_(m), words_((m + 63) / 64) {}

  std::size_t dimension() const { return m_; }
  std::size_t num_rows() const { return rows_.size(); }

  // Columns are 0-based here.
  void add_row(const std::vector<bool>& bits);
  // Row from a bit string such as "110"; character c is column c.
  void add_row(const char* bits);

  bool get(std::size_t row, std::size_t col) const;

  // Row rank by Gaussian elimination on a copy.
  std::size_t rank() const;

 private:
  std::size_t m_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

inline std::size_t rank_gf2(const BitVectorSpace& v) { return v.rank(); }

// Rank of up to 32 rows of width <= 32, destroying the input.
std::size_t rank_small(std::uint32_t* rows, std::size_t count);

}  // namespace waring
