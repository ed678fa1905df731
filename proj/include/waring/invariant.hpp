#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "waring/pattern_matrix.hpp"
#include "waring/polynomial.hpp"

namespace waring {

// The exponent k = 2^n with n >= 2. Both divisibility facts the invariant
// relies on fail for k = 2, so n < 2 is rejected here.
class PowerExponent {
 public:
  static constexpr unsigned kMaxN = 30;

  explicit PowerExponent(unsigned n);

  unsigned n() const { return n_; }
  std::uint64_t k() const { return std::uint64_t{1} << n_; }
  // 2^(n-1), the exponent of each variable in the half-power monomial.
  Exponent half() const { return static_cast<Exponent>(std::uint64_t{1} << (n_ - 1)); }

  bool operator==(const PowerExponent&) const = default;

 private:
  unsigned n_;
};

struct SignedBase {
  int sign;  // +1 or -1
  Polynomial base;
};

// A formal sum  sum_t sign_t * base_t^(2^n). The number of terms is the v in
// "g is a signed sum of v powers".
class PowerSum {
 public:
  explicit PowerSum(PowerExponent exponent, std::vector<SignedBase> terms = {});

  const PowerExponent& exponent() const { return exponent_; }
  const std::vector<SignedBase>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  // Largest variable count among the bases (1 for the empty sum).
  std::size_t num_vars() const;

  void push(int sign, Polynomial base);

 private:
  PowerExponent exponent_;
  std::vector<SignedBase> terms_;
};

// A coefficient failed one of the divisibility conditions every element of
// J(2^n, R_m) satisfies, which certifies that the polynomial is not in J.
class NotInSubringObstruction : public std::runtime_error {
 public:
  enum class Kind { kMixedLinear, kHalfPower };

  NotInSubringObstruction(Kind kind, std::size_t i, std::size_t j, Monomial monomial, Integer coefficient,
                          Integer divisor);

  Kind kind() const { return kind_; }
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  const Monomial& monomial() const { return monomial_; }
  const Integer& coefficient() const { return coefficient_; }
  const Integer& divisor() const { return divisor_; }

 private:
  Kind kind_;
  std::size_t i_, j_;
  Monomial monomial_;
  Integer coefficient_;
  Integer divisor_;
};

// Closed form for the x_i*x_j coefficient of f^(2^n):
//   2^n c(1)^(2^n-1) c(x_i x_j) + 2^n (2^n - 1) c(1)^(2^n-2) c(x_i) c(x_j).
Integer coeff_xixj_closed(const Polynomial& f, PowerExponent n, std::size_t i, std::size_t j);

struct QuotientBits {
  bool mixed;       // c_g(x_i x_j) / 2^n  mod 2
  bool half_power;  // c_g(x_i^(2^(n-1)) x_j^(2^(n-1))) / 2  mod 2
  bool operator==(const QuotientBits&) const = default;
};

// Reads the two quotients off the coefficients of g. Coefficients may be
// exact or already reduced into [0, 2^(n+1)). Throws NotInSubringObstruction
// on a divisibility failure and std::out_of_range unless 1 <= i < j <= num_vars.
QuotientBits quotient_pair(const Polynomial& g, PowerExponent n, std::size_t i, std::size_t j);

// pi_{i,j}(g): the two quotients summed mod 2.
bool phi_ij(const Polynomial& g, PowerExponent n, std::size_t i, std::size_t j);

// pi(g) over all pairs of Z[x1..xm]; m must cover every variable g uses.
PatternMatrix phi(const Polynomial& g, PowerExponent n, std::size_t m);

// pi(f^(2^n)) without expanding: bit (i,j) = (c(1)+1) c(x_i) c(x_j) mod 2.
// m defaults to f.num_vars().
PatternMatrix phi_closed_of_base(const Polynomial& f, PowerExponent n, std::optional<std::size_t> m = std::nullopt);

// Degree <= 2^n, coefficients mod 2^(n+1): enough to read both quotients.
TruncationSpec phi_truncation(PowerExponent n);

Polynomial expand(const PowerSum& s, const TruncationSpec& spec = {});

// XOR of the closed forms of the bases. Signs drop out mod 2.
PatternMatrix phi_of_powersum(const PowerSum& s, std::optional<std::size_t> m = std::nullopt);

enum class ExpansionPath {
  kExact,              // phi(expand(s, exact))
  kTruncated,          // phi(expand(s, phi_truncation))
  kPairwiseTruncated,  // per pair (i,j): other variables set to 0 before the truncated expansion
};

// The read-off map applied to the expansion of s, computed along `path`.
// All three paths agree; kPairwiseTruncated is the one that scales.
PatternMatrix phi_of_expansion(const PowerSum& s, ExpansionPath path, std::optional<std::size_t> m = std::nullopt);

}  // namespace waring
