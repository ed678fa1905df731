#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace waring {

// Element of (Z/2)^(m choose 2): one bit per pair 1 <= i < j <= m, stored in
// lexicographic pair order (1,2), (1,3), ..., (1,m), (2,3), ...
class PatternMatrix {
 public:
  explicit PatternMatrix(std::size_t m);

  std::size_t m() const { return m_; }
  std::size_t num_pairs() const { return m_ * (m_ - 1) / 2; }

  // Throws std::out_of_range unless 1 <= i < j <= m.
  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value = true);
  void flip(std::size_t i, std::size_t j);

  bool is_zero() const;
  std::size_t popcount() const;
  // Set pairs in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> set_pairs() const;

  PatternMatrix& operator^=(const PatternMatrix& other);
  friend PatternMatrix operator^(PatternMatrix a, const PatternMatrix& b) { return a ^= b; }
  bool operator==(const PatternMatrix&) const = default;

  // Bit p of the result is pair number p in lexicographic order. Requires
  // num_pairs() <= 64.
  std::uint64_t to_index() const;
  static PatternMatrix from_index(std::size_t m, std::uint64_t index);

  // Off-diagonal part of u*u^T over GF(2); u[0] is the coefficient of x1.
  static PatternMatrix rank_one(const std::vector<bool>& u);

  // m lines of '0'/'1', with '.' on and below the diagonal.
  std::string render_text() const;

  static std::size_t pair_index(std::size_t m, std::size_t i, std::size_t j);

 private:
  std::size_t m_;
  std::vector<std::uint64_t> words_;
};

}  // namespace waring
