#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "waring/invariant.hpp"
#include "waring/parser.hpp"
#include "waring/report_json.hpp"

using namespace waring;
using waring::testing::multinomial_coeff;
using waring::testing::OracleTerms;

namespace {

const PowerExponent kFour(2);

Polynomial P(const char* text, std::size_t m = 1) { return parse_poly(text, m); }

// pi_{i,j} of sum_t sign_t * base_t^4 computed from multinomial expansions.
bool oracle_bit(const std::vector<std::pair<int, OracleTerms>>& sum, std::size_t m, std::size_t i, std::size_t j) {
  long long mixed = 0, half = 0;
  for (const auto& [sign, terms] : sum) {
    waring::testing::DenseExps a(m, 0), b(m, 0);
    a[i - 1] = a[j - 1] = 1;
    b[i - 1] = b[j - 1] = 2;
    mixed += sign * multinomial_coeff(terms, 4, a);
    half += sign * multinomial_coeff(terms, 4, b);
  }
  EXPECT_EQ(mixed % 4, 0);
  EXPECT_EQ(half % 2, 0);
  return ((mixed / 4 + half / 2) % 2 + 2) % 2 == 1;
}

}  // namespace

TEST(PowerExponent, RejectsSquares) {
  EXPECT_THROW(PowerExponent(1), std::invalid_argument);
  EXPECT_THROW(PowerExponent(0), std::invalid_argument);
  EXPECT_EQ(PowerExponent(3).k(), 8u);
  EXPECT_EQ(PowerExponent(3).half(), 4u);
}

TEST(Invariant, ClosedFormExamples) {
  const long oracle = multinomial_coeff({{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}, 4, {1, 1});
  EXPECT_EQ(coeff_xixj_closed(P("1 + x1 + x2"), kFour, 1, 2), oracle);
  EXPECT_EQ(coeff_xixj_closed(P("x1 + x2"), kFour, 1, 2), 0);
  EXPECT_EQ(coeff_xixj_closed(P("1 + x1", 2), kFour, 1, 2), 0);
  EXPECT_THROW(coeff_xixj_closed(P("x1 + x2"), kFour, 2, 1), std::out_of_range);
  EXPECT_THROW(coeff_xixj_closed(P("x1 + x2"), kFour, 1, 3), std::out_of_range);
}

TEST(Invariant, QuotientPairExamples) {
  EXPECT_EQ(multinomial_coeff({{{1, 0}, 1}, {{0, 1}, 1}}, 4, {2, 2}), 6);
  EXPECT_EQ(quotient_pair(pow(P("x1 + x2"), 4), kFour, 1, 2), (QuotientBits{false, true}));
  EXPECT_EQ(quotient_pair(Polynomial(2), kFour, 1, 2), (QuotientBits{false, false}));
  try {
    quotient_pair(P("x1*x2"), kFour, 1, 2);
    FAIL() << "x1*x2 should be obstructed";
  } catch (const NotInSubringObstruction& e) {
    EXPECT_EQ(e.kind(), NotInSubringObstruction::Kind::kMixedLinear);
    EXPECT_EQ(e.coefficient(), 1);
    EXPECT_EQ(e.divisor(), 4);
    EXPECT_EQ(e.i(), 1u);
    EXPECT_EQ(e.j(), 2u);
  }
  // Divisible at x1*x2 but odd at x1^2*x2^2.
  try {
    quotient_pair(P("x1^2*x2^2"), kFour, 1, 2);
    FAIL() << "x1^2*x2^2 should be obstructed";
  } catch (const NotInSubringObstruction& e) {
    EXPECT_EQ(e.kind(), NotInSubringObstruction::Kind::kHalfPower);
  }
}

TEST(Invariant, PhiIjExamples) {
  EXPECT_TRUE(phi_ij(pow(P("x1 + x2"), 4), kFour, 1, 2));
  EXPECT_FALSE(phi_ij(pow(P("1 + x1 + x2"), 4), kFour, 1, 2));
  EXPECT_FALSE(phi_ij(pow(P("x1 + x3"), 4), kFour, 1, 2));
}

TEST(Invariant, NegativeCoefficientsReadCorrectly) {
  // -(x1+x2)^4 has the same invariant as +(x1+x2)^4.
  EXPECT_TRUE(phi_ij(-pow(P("x1 + x2"), 4), kFour, 1, 2));
  EXPECT_TRUE(phi_ij(pow(P("x1 - x2"), 4), kFour, 1, 2));
}

TEST(Invariant, ClosedOfBaseExamples) {
  PatternMatrix only12(3);
  only12.set(1, 2);
  EXPECT_EQ(phi_closed_of_base(P("x1 + x2"), kFour, 3), only12);
  EXPECT_TRUE(phi_closed_of_base(P("1 + x1 + x2"), kFour).is_zero());
  EXPECT_EQ(phi_closed_of_base(P("x1 + x2 + x3"), kFour).popcount(), 3u);
}

TEST(Invariant, PhiExamples) {
  const Polynomial g = pow(P("x1 + x2"), 4) + pow(P("x2 + x3"), 4);
  const PatternMatrix a = phi(g, kFour, 3);
  const OracleTerms f12{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}}, f23{{{0, 1, 0}, 1}, {{0, 0, 1}, 1}};
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}})
    EXPECT_EQ(a.get(i, j), oracle_bit({{1, f12}, {1, f23}}, 3, i, j)) << i << "," << j;
  EXPECT_TRUE(a.get(1, 2));
  EXPECT_FALSE(a.get(1, 3));
  EXPECT_TRUE(a.get(2, 3));

  EXPECT_TRUE(phi(Polynomial(3), kFour, 3).is_zero());
  EXPECT_TRUE(phi(pow(P("x1 + x2"), 4) - pow(P("x1 + x2"), 4), kFour, 2).is_zero());
  EXPECT_THROW(phi(P("x1*x2"), kFour, 2), NotInSubringObstruction);
  EXPECT_THROW(phi(P("x3"), kFour, 2), std::out_of_range);
}

TEST(Invariant, PowerSumExamples) {
  PowerSum one(kFour, {{1, P("x1 + x2")}});
  EXPECT_EQ(phi_of_powersum(one).set_pairs(), (std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}}));
  EXPECT_TRUE(phi_of_powersum(PowerSum(kFour), 3).is_zero());

  PowerSum cancel(kFour, {{1, P("x1 + x2")}, {-1, P("x1 + x2")}});
  EXPECT_TRUE(phi_of_powersum(cancel).is_zero());
  EXPECT_TRUE(expand(cancel).is_zero());
  EXPECT_EQ(phi_of_powersum(cancel), phi(expand(cancel), kFour, 2));
  EXPECT_THROW(PowerSum(kFour).push(0, P("x1")), std::invalid_argument);
}

TEST(InvariantProperties, LemmaOnRandomCorpus) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> pick_m(2, 4);
  for (int trial = 0; trial < 120; ++trial) {
    const PowerExponent n(trial % 2 ? 3 : 2);
    const std::size_t m = pick_m(rng);
    const Polynomial f = random_polynomial(rng, {m, 3, 5, 0.5});
    const Polynomial g = pow(f, n.k());
    const Integer c0 = f.constant_term();
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = i + 1; j <= m; ++j) {
        const Integer ci = f.coeff(Monomial::variable(i)), cj = f.coeff(Monomial::variable(j));
        const Integer cij = f.coeff(Monomial::pair(i, 1, j, 1));
        QuotientBits q{};
        ASSERT_NO_THROW(q = quotient_pair(g, n, i, j)) << f;
        const Integer closed = coeff_xixj_closed(f, n, i, j);
        EXPECT_EQ(closed, g.coeff(Monomial::pair(i, 1, j, 1)));
        EXPECT_EQ(phi_ij(g, n, i, j), mpz_odd_p(Integer((c0 + 1) * ci * cj).get_mpz_t()) != 0);
        EXPECT_EQ(q.mixed, mpz_odd_p(Integer(c0 * (cij + ci * cj)).get_mpz_t()) != 0);
        EXPECT_EQ(q.half_power, mpz_odd_p(Integer(c0 * cij + ci * cj).get_mpz_t()) != 0);
      }
    }
    EXPECT_EQ(phi(g, n, m), phi_closed_of_base(f, n)) << f;
  }
}

TEST(InvariantProperties, ReadOffIsAdditive) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = waring::testing::random_powersum(rng, 2, 3, 3, 2, 4);
    const auto t = waring::testing::random_powersum(rng, 2, 3, 3, 2, 4);
    const Polynomial g = expand(s).with_num_vars(3), h = expand(t).with_num_vars(3);
    EXPECT_EQ(phi(g + h, kFour, 3), phi(g, kFour, 3) ^ phi(h, kFour, 3));
    EXPECT_EQ(phi(g - h, kFour, 3), phi(g, kFour, 3) ^ phi(h, kFour, 3));
  }
}

TEST(InvariantProperties, DependsOnlyOnLinearPartMod2) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> shift(-3, 3);
  const auto monos = monomials_up_to(4, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = random_polynomial(rng, {4, 3, 5, 0.5});
    const PatternMatrix before = phi_closed_of_base(f, kFour);
    // Arbitrary change in degree >= 2, even change in degree <= 1.
    std::vector<Polynomial::Term> delta;
    for (const auto& mono : monos) {
      const int s = shift(rng);
      delta.push_back({mono, mono.total_degree() >= 2 ? s : 2 * s});
    }
    const Polynomial g = f + Polynomial::from_terms(4, delta);
    EXPECT_EQ(phi_closed_of_base(g, kFour), before) << f << " vs " << g;
  }
}

TEST(InvariantProperties, ExpansionPathsAgree) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = trial % 3 == 0 ? 3 : 2;
    const auto s = waring::testing::random_powersum(rng, n, 3, 3, 2, 5);
    const PatternMatrix exact = phi_of_expansion(s, ExpansionPath::kExact, 3);
    EXPECT_EQ(phi_of_expansion(s, ExpansionPath::kTruncated, 3), exact);
    EXPECT_EQ(phi_of_expansion(s, ExpansionPath::kPairwiseTruncated, 3), exact);
    EXPECT_EQ(phi_of_powersum(s, 3), exact);
  }
}

TEST(PatternMatrix, AddressingAndRendering) {
  PatternMatrix a(3);
  a.set(1, 2);
  a.set(2, 3);
  EXPECT_EQ(a.render_text(), ".10\n..1\n...\n");
  EXPECT_EQ(to_json(a).dump(), R"({"bits":[[1,2],[2,3]],"m":3})");
  EXPECT_THROW(a.get(2, 2), std::out_of_range);
  EXPECT_THROW(a.set(3, 1), std::out_of_range);
  EXPECT_THROW(a.get(1, 4), std::out_of_range);
  EXPECT_THROW(a ^= PatternMatrix(4), std::invalid_argument);
  EXPECT_EQ(PatternMatrix::from_index(3, a.to_index()), a);
  EXPECT_EQ(PatternMatrix(1).num_pairs(), 0u);
  PatternMatrix big(30);
  big.set(29, 30);
  EXPECT_TRUE(big.get(29, 30));
  EXPECT_EQ(big.popcount(), 1u);
  EXPECT_THROW(big.to_index(), std::length_error);
}
