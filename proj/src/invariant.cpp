#include "waring/invariant.hpp"

#include <algorithm>
#include <array>

namespace waring {

namespace {

void check_pair(std::size_t i, std::size_t j, std::size_t m) {
  if (i < 1 || i >= j || j > m)
    throw std::out_of_range("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not 1 <= i < j <= " + std::to_string(m));
}

Integer two_to(unsigned e) {
  Integer out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), e);
  return out;
}

Integer ipow(const Integer& base, std::uint64_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

bool odd(const Integer& c) { return mpz_odd_p(c.get_mpz_t()) != 0; }

std::string describe(const Monomial& mono, const Integer& c, const Integer& d) {
  return "coefficient " + c.get_str() + " of " + mono.to_string() + " is not divisible by " + d.get_str() +
         "; the polynomial is not a signed sum of powers of this exponent";
}

}  // namespace

PowerExponent::PowerExponent(unsigned n) : n_(n) {
  if (n < 2) throw std::invalid_argument("power exponent 2^n needs n >= 2, got n = " + std::to_string(n));
  if (n > kMaxN) throw std::invalid_argument("power exponent 2^n supports n <= " + std::to_string(kMaxN));
}

PowerSum::PowerSum(PowerExponent exponent, std::vector<SignedBase> terms) : exponent_(exponent) {
  for (auto& t : terms) push(t.sign, std::move(t.base));
}

std::size_t PowerSum::num_vars() const {
  std::size_t m = 1;
  for (const auto& t : terms_) m = std::max(m, t.base.num_vars());
  return m;
}

void PowerSum::push(int sign, Polynomial base) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("power sum signs must be +1 or -1");
  terms_.push_back({sign, std::move(base)});
}

NotInSubringObstruction::NotInSubringObstruction(Kind kind, std::size_t i, std::size_t j, Monomial monomial,
                                                 Integer coefficient, Integer divisor)
    : std::runtime_error(describe(monomial, coefficient, divisor)),
      kind_(kind),
      i_(i),
      j_(j),
      monomial_(std::move(monomial)),
      coefficient_(std::move(coefficient)),
      divisor_(std::move(divisor)) {}

Integer coeff_xixj_closed(const Polynomial& f, PowerExponent n, std::size_t i, std::size_t j) {
  check_pair(i, j, f.num_vars());
  const Integer c0 = f.constant_term();
  const Integer ci = f.coeff(Monomial::variable(i));
  const Integer cj = f.coeff(Monomial::variable(j));
  const Integer cij = f.coeff(Monomial::pair(i, 1, j, 1));
  const std::uint64_t k = n.k();
  const Integer two_n = two_to(n.n());
  return two_n * ipow(c0, k - 1) * cij + two_n * Integer(two_n - 1) * ipow(c0, k - 2) * ci * cj;
}

QuotientBits quotient_pair(const Polynomial& g, PowerExponent n, std::size_t i, std::size_t j) {
  check_pair(i, j, g.num_vars());
  using Kind = NotInSubringObstruction::Kind;

  const Monomial mixed = Monomial::pair(i, 1, j, 1);
  const Integer c_mixed = g.coeff(mixed);
  if (!mpz_divisible_2exp_p(c_mixed.get_mpz_t(), n.n()))
    throw NotInSubringObstruction(Kind::kMixedLinear, i, j, mixed, c_mixed, two_to(n.n()));

  const Monomial half = Monomial::pair(i, n.half(), j, n.half());
  const Integer c_half = g.coeff(half);
  if (odd(c_half)) throw NotInSubringObstruction(Kind::kHalfPower, i, j, half, c_half, 2);

  // Two's-complement bit tests give the quotient's parity for negatives too.
  return {mpz_tstbit(c_mixed.get_mpz_t(), n.n()) != 0, mpz_tstbit(c_half.get_mpz_t(), 1) != 0};
}

bool phi_ij(const Polynomial& g, PowerExponent n, std::size_t i, std::size_t j) {
  const auto q = quotient_pair(g, n, i, j);
  return q.mixed != q.half_power;
}

PatternMatrix phi(const Polynomial& g, PowerExponent n, std::size_t m) {
  const Polynomial gm = g.with_num_vars(m);
  PatternMatrix out(m);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      if (phi_ij(gm, n, i, j)) out.set(i, j);
  return out;
}

PatternMatrix phi_closed_of_base(const Polynomial& f, PowerExponent /*n*/, std::optional<std::size_t> m) {
  const std::size_t dim = m.value_or(f.num_vars());
  PatternMatrix out(dim);
  if (odd(f.constant_term())) return out;
  std::vector<bool> u(dim, false);
  for (const auto& t : f.terms()) {
    if (t.monomial.total_degree() != 1 || !odd(t.coeff)) continue;
    const std::size_t v = t.monomial.max_variable();
    if (v > dim) throw std::out_of_range("base polynomial has a linear term beyond x" + std::to_string(dim));
    u[v - 1] = true;
  }
  return PatternMatrix::rank_one(u);
}

TruncationSpec phi_truncation(PowerExponent n) { return TruncationSpec::degree_mod(n.k(), two_to(n.n() + 1)); }

Polynomial expand(const PowerSum& s, const TruncationSpec& spec) {
  Polynomial acc(s.num_vars());
  for (const auto& t : s.terms()) {
    Polynomial p = pow(t.base, s.exponent().k(), spec);
    acc = t.sign > 0 ? add(acc, p) : sub(acc, p);
  }
  return acc.reduced(spec);
}

PatternMatrix phi_of_powersum(const PowerSum& s, std::optional<std::size_t> m) {
  const std::size_t dim = m.value_or(s.num_vars());
  PatternMatrix out(dim);
  for (const auto& t : s.terms()) out ^= phi_closed_of_base(t.base, s.exponent(), dim);
  return out;
}

PatternMatrix phi_of_expansion(const PowerSum& s, ExpansionPath path, std::optional<std::size_t> m) {
  const std::size_t dim = m.value_or(s.num_vars());
  const PowerExponent n = s.exponent();
  switch (path) {
    case ExpansionPath::kExact:
      return phi(expand(s), n, dim);
    case ExpansionPath::kTruncated:
      return phi(expand(s, phi_truncation(n)), n, dim);
    case ExpansionPath::kPairwiseTruncated:
      break;
  }
  if (s.num_vars() > dim) throw std::out_of_range("power sum uses variables beyond x" + std::to_string(dim));
  const TruncationSpec spec = phi_truncation(n);
  PatternMatrix out(dim);
  for (std::size_t i = 1; i <= dim; ++i) {
    for (std::size_t j = i + 1; j <= dim; ++j) {
      const std::array<std::size_t, 2> keep{i, j};
      PowerSum restricted(n);
      for (const auto& t : s.terms()) restricted.push(t.sign, t.base.restrict_to(keep).with_num_vars(dim));
      if (phi_ij(expand(restricted, spec).with_num_vars(dim), n, i, j)) out.set(i, j);
    }
  }
  return out;
}

}  // namespace waring
