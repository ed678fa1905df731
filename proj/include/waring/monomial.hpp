#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace waring {

using Exponent = std::uint32_t;

// x1^e1 * x2^e2 * ... with trailing zero exponents trimmed, so the same
// monomial compares equal regardless of how many variables the ambient ring
// declares. Variable indices are 1-based in the public API.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  static Monomial one() { return Monomial{}; }
  // x_var^power
  static Monomial variable(std::size_t var, Exponent power = 1);
  // x_i * x_j, or x_i^a * x_j^b
  static Monomial pair(std::size_t i, Exponent a, std::size_t j, Exponent b);

  // Exponent of x_var (1-based). Zero beyond the stored length.
  Exponent exponent(std::size_t var) const;
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t total_degree() const { return degree_; }
  // Highest variable index with a nonzero exponent; 0 for the unit monomial.
  std::size_t max_variable() const { return exps_.size(); }
  bool is_one() const { return exps_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;

  // Graded lexicographic order with x1 > x2 > ... .
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

  // "x1^2*x3", or "1" for the unit monomial.
  std::string to_string() const;

  // Recomputes the degree from the exponents; used by invariant checks.
  bool is_canonical() const;

 private:
  void trim();

  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace waring
