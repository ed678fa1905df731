#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "waring/certifier.hpp"
#include "waring/gf2.hpp"
#include "waring/parser.hpp"
#include "waring/report_json.hpp"

using namespace waring;
using waring::testing::completion_rows;
using waring::testing::span_rank;
using waring::testing::subset_min_terms;

namespace {

PatternMatrix pattern(std::size_t m, std::initializer_list<std::pair<std::size_t, std::size_t>> bits) {
  PatternMatrix a(m);
  for (auto [i, j] : bits) a.set(i, j);
  return a;
}

std::size_t oracle_completion_rank(const PatternMatrix& a) {
  std::size_t best = SIZE_MAX;
  for (std::uint64_t d = 0; d < (std::uint64_t{1} << a.m()); ++d)
    best = std::min(best, span_rank(completion_rows(a, d)));
  return best;
}

}  // namespace

TEST(Counting, Examples) {
  EXPECT_EQ(counting_lower_bound(9), 4u);
  EXPECT_EQ(counting_lower_bound(1), 0u);
  EXPECT_EQ(counting_lower_bound(2), 1u);
  for (std::size_t m = 1; m <= 100; ++m) {
    const std::size_t v = counting_lower_bound(m);
    EXPECT_GE(v * m, m * (m - 1) / 2);
    if (v > 0) EXPECT_LT((v - 1) * m, m * (m - 1) / 2);
  }
  EXPECT_THROW(counting_lower_bound(0), std::invalid_argument);
}

TEST(Gf2, RankExamples) {
  BitVectorSpace v(3);
  v.add_row("110");
  v.add_row("011");
  v.add_row("101");
  EXPECT_EQ(span_rank({0b011, 0b110, 0b101}), 2u);
  EXPECT_EQ(rank_gf2(v), 2u);
  EXPECT_EQ(rank_gf2(BitVectorSpace(5)), 0u);
  BitVectorSpace id(4);
  for (const char* r : {"1000", "0100", "0010", "0001"}) id.add_row(r);
  EXPECT_EQ(rank_gf2(id), 4u);
  EXPECT_THROW(id.add_row("101"), std::invalid_argument);
}

TEST(Gf2, WideRowsMatchSpanOracle) {
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 30; ++trial) {
    // 70 columns crosses a word boundary; only the first 6 are random so the
    // subset oracle stays cheap.
    BitVectorSpace wide(70);
    std::vector<std::uint64_t> narrow;
    for (int r = 0; r < 8; ++r) {
      std::vector<bool> row(70, false);
      std::uint64_t w = 0;
      for (int c = 0; c < 6; ++c)
        if (coin(rng)) {
          row[c] = true;
          w |= std::uint64_t{1} << c;
        }
      if (r == 7) row[69] = true, w |= std::uint64_t{1} << 6;
      wide.add_row(row);
      narrow.push_back(w);
    }
    EXPECT_EQ(wide.rank(), span_rank(narrow));
  }
}

TEST(RankCompletion, Examples) {
  const auto zero = rank_completion_bound(PatternMatrix(4));
  EXPECT_EQ(zero.lower_bound, 0u);
  EXPECT_EQ(std::get<DiagonalWitness>(zero.witness).diagonal, BitString(4, false));

  const auto single = pattern(2, {{1, 2}});
  EXPECT_EQ(oracle_completion_rank(single), 1u);
  const auto b1 = rank_completion_bound(single);
  EXPECT_EQ(b1.lower_bound, 1u);
  EXPECT_EQ(std::get<DiagonalWitness>(b1.witness).diagonal, (BitString{true, true}));

  const auto two = pattern(4, {{1, 2}, {3, 4}});
  EXPECT_EQ(oracle_completion_rank(two), 2u);
  EXPECT_EQ(rank_completion_bound(two).lower_bound, 2u);
  EXPECT_TRUE(verify_certificate(two, rank_completion_bound(two)));

  EXPECT_THROW(rank_completion_bound(PatternMatrix(21)), DimensionTooLarge);
}

TEST(RankCompletion, MatchesOracleOnRandomPatterns) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = waring::testing::random_pattern(rng, 2 + trial % 5);
    const auto bound = rank_completion_bound(a);
    EXPECT_EQ(bound.lower_bound, oracle_completion_rank(a));
    EXPECT_TRUE(verify_certificate(a, bound));
  }
}

TEST(ExactSearch, Examples) {
  EXPECT_EQ(exact_min_terms(PatternMatrix(3)).lower_bound, 0u);

  const auto all = exact_min_terms(pattern(3, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(all.lower_bound, 1u);
  EXPECT_EQ(std::get<ExactWitness>(all.witness).generators, (std::vector<BitString>{{true, true, true}}));

  const auto single = exact_min_terms(pattern(3, {{1, 2}}));
  EXPECT_EQ(single.lower_bound, 1u);
  EXPECT_EQ(to_bit_string(std::get<ExactWitness>(single.witness).generators.at(0)), "110");
  EXPECT_EQ(to_json(single).dump(), R"({"lower_bound":1,"method":"exact_search","witness":["110"]})");

  EXPECT_THROW(exact_min_terms(PatternMatrix(8)), DimensionTooLarge);
}

TEST(ExactSearch, MatchesSubsetOracleExhaustively) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const std::uint64_t order = std::uint64_t{1} << (m * (m - 1) / 2);
    for (std::uint64_t idx = 0; idx < order; ++idx) {
      const auto a = PatternMatrix::from_index(m, idx);
      const auto bound = exact_min_terms(a);
      EXPECT_EQ(bound.lower_bound, subset_min_terms(a)) << a.render_text();
      EXPECT_TRUE(verify_certificate(a, bound));
      EXPECT_LE(rank_completion_bound(a).lower_bound, bound.lower_bound);
    }
  }
}

TEST(ExactSearch, WorstCaseMeetsCountingBound) {
  // Some pattern needs at least ceil((m-1)/2) terms.
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto& search = PatternGroupSearch::for_dimension(m);
    EXPECT_EQ(search.reachable(), search.group_order());
    EXPECT_GE(search.max_distance(), counting_lower_bound(m)) << m;
  }
}

TEST(Certify, PowerSumTargets) {
  const PowerExponent n(2);
  const auto b1 = certify_powersum_target(parse_poly("(x1+x2)^4"), n, 2);
  EXPECT_EQ(b1.lower_bound, 1u);

  const auto b2 = certify_powersum_target(parse_poly("(x1+x2)^4 + (x3+x4)^4"), n, 4);
  EXPECT_EQ(b2.lower_bound, 2u);
  EXPECT_EQ(b2.method, BoundMethod::kExactSearch);
  EXPECT_EQ(subset_min_terms(pattern(4, {{1, 2}, {3, 4}})), 2u);

  const auto b3 = certify_powersum_target(parse_poly("(x1+x2+x3+x4+x5)^4"), n, 5);
  EXPECT_EQ(b3.lower_bound, 1u);
  EXPECT_EQ(to_bit_string(std::get<ExactWitness>(b3.witness).generators.at(0)), "11111");

  EXPECT_THROW(certify_powersum_target(parse_poly("x1*x2"), n, 2), NotInSubringObstruction);
}

TEST(Certify, MethodByDimension) {
  std::mt19937_64 rng(9);
  const auto mid = waring::testing::random_pattern(rng, 12);
  const auto b_mid = certify_pattern(mid);
  EXPECT_EQ(b_mid.method, BoundMethod::kRankCompletion);
  EXPECT_TRUE(verify_certificate(mid, b_mid));

  // A disjoint union of k edges needs k terms; the block bound sees them all
  // when each edge straddles the interleaved split.
  PatternMatrix wide(30);
  for (std::size_t i = 1; i < 30; i += 2) wide.set(i, i + 1);
  const auto b_wide = certify_pattern(wide);
  EXPECT_EQ(b_wide.method, BoundMethod::kBlockRank);
  EXPECT_EQ(b_wide.lower_bound, 15u);
  EXPECT_TRUE(verify_certificate(wide, b_wide));

  PatternMatrix inside(30);
  inside.set(1, 3);
  const auto b_inside = block_rank_bound(inside);
  EXPECT_EQ(b_inside.lower_bound, 1u);
  EXPECT_TRUE(verify_certificate(inside, b_inside));
}

TEST(Certify, TamperedWitnessesAreRejected) {
  const auto a = pattern(4, {{1, 2}, {3, 4}});
  auto exact = exact_min_terms(a);
  std::get<ExactWitness>(exact.witness).generators.pop_back();
  exact.lower_bound = 1;
  EXPECT_FALSE(verify_certificate(a, exact));

  auto diag = rank_completion_bound(a);
  diag.lower_bound = 3;
  EXPECT_FALSE(verify_certificate(a, diag));

  EXPECT_TRUE(verify_certificate(a, counting_certificate(4)));
  EXPECT_EQ(to_json(counting_certificate(9)).dump(), R"({"lower_bound":4,"method":"counting","witness":[]})");
}
