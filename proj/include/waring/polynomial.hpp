#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "waring/monomial.hpp"

namespace waring {

using Integer = mpz_class;

// Controls how much of a product is kept. Both cuts are applied after every
// intermediate product, which is sound because total degree only grows and
// reduction mod M commutes with ring operations.
class TruncationSpec {
 public:
  TruncationSpec() = default;
  // max_total_degree: nullopt keeps every monomial.
  // coefficient_modulus: 0 for exact integers, otherwise >= 2.
  TruncationSpec(std::optional<std::uint64_t> max_total_degree, Integer coefficient_modulus);

  static TruncationSpec exact() { return {}; }
  static TruncationSpec degree_mod(std::uint64_t max_total_degree, Integer coefficient_modulus) {
    return {max_total_degree, std::move(coefficient_modulus)};
  }

  const std::optional<std::uint64_t>& max_total_degree() const { return max_degree_; }
  const Integer& coefficient_modulus() const { return modulus_; }
  bool is_exact() const { return !max_degree_ && modulus_ == 0; }
  bool keeps(std::uint64_t degree) const { return !max_degree_ || degree <= *max_degree_; }

 private:
  std::optional<std::uint64_t> max_degree_;
  Integer modulus_ = 0;
};

// Sparse polynomial in Z[x1..xm]. Terms are kept in descending graded-lex
// order with no zero coefficients; the zero polynomial has no terms but keeps
// its variable count. Values are immutable once built.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  explicit Polynomial(std::size_t num_vars = 1);

  static Polynomial constant(const Integer& c, std::size_t num_vars = 1);
  // x_var in Z[x1..x_max(var, num_vars)].
  static Polynomial variable(std::size_t var, std::size_t num_vars = 0);
  // Merges repeated monomials and drops zeros. Throws std::out_of_range if a
  // monomial mentions a variable beyond num_vars.
  static Polynomial from_terms(std::size_t num_vars, std::vector<Term> terms);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t total_degree() const;

  // c_f(x^a); zero when absent. Throws std::out_of_range if `a` mentions a
  // variable beyond num_vars().
  Integer coeff(const Monomial& a) const;
  Integer constant_term() const { return coeff(Monomial::one()); }

  // Same polynomial viewed in Z[x1..xm]; m must cover every used variable.
  Polynomial with_num_vars(std::size_t m) const;
  // Image under x_v -> 0 for every v not listed.
  Polynomial restrict_to(std::span<const std::size_t> vars) const;
  // Drops monomials over the degree cap and reduces coefficients into [0, M).
  Polynomial reduced(const TruncationSpec& spec) const;

  Polynomial operator-() const;

  // Renders as e.g. "4*x1^2*x2 - 3"; the zero polynomial renders as "0".
  std::string to_string() const;

  bool is_canonical() const;

  // Mathematical equality: the variable count is not compared, matching the
  // embedding Z[x1..xm] into Z[x1..xm+1].
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  friend class PolynomialBuilder;

  std::size_t num_vars_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial sub(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g, const TruncationSpec& spec = {});
// f^e by repeated squaring, truncating after every intermediate product.
Polynomial pow(const Polynomial& f, std::uint64_t e, const TruncationSpec& spec = {});
Polynomial scale(const Polynomial& f, const Integer& c);

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return sub(f, g); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return mul(f, g); }

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace waring
