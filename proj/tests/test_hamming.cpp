#include <gtest/gtest.h>

#include "genemagic/hamming.hpp"
#include "genemagic/tables.hpp"
#include "oracle.hpp"

using namespace genemagic;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(4, 0), 1U);
  EXPECT_EQ(binomial(4, 2), 6U);
  EXPECT_EQ(binomial(9, 4), 126U);
  EXPECT_EQ(binomial(3, 4), 0U);
}

TEST(Monomial, Labels) {
  EXPECT_EQ(monomial_label(0, 4), "b^4");
  EXPECT_EQ(monomial_label(4, 4), "a^4");
  EXPECT_EQ(monomial_label(1, 3), "ab^2");
  EXPECT_EQ(monomial_label(2, 2), "a^2");
  EXPECT_EQ(monomial_label(1, 2), "ab");
  EXPECT_EQ(monomial_label(0, 1), "b");
}

TEST(WeightGrid, M2Matrix) {
  const auto wg = weight_grid(load_canonical(CanonicalTableId::M2));
  const std::size_t expect[4][4] = {{0, 1, 1, 0}, {1, 2, 2, 1}, {1, 2, 2, 1}, {0, 1, 1, 0}};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(wg.weights(r, c), expect[r][c]);
  }
}

TEST(WeightGrid, R16FirstCells) {
  const auto wg = weight_grid(load_canonical(CanonicalTableId::R16));
  EXPECT_EQ(wg.weights(0, 0), 0U);
  EXPECT_EQ(wg.monomial(0, 0), "b^4");
  EXPECT_EQ(wg.weights(0, 1), 4U);
  EXPECT_EQ(wg.monomial(0, 1), "a^4");
}

TEST(WeightGrid, R8BFirstRowAsComputed) {
  const auto wg = weight_grid(load_canonical(CanonicalTableId::R8B));
  const std::size_t expect[8] = {0, 2, 1, 1, 3, 1, 2, 2};
  for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(wg.weights(0, c), expect[c]);
}

TEST(WeightGrid, MatchesOracleAndComplementInvariant) {
  for (auto id : kCanonicalTables) {
    const auto g = load_canonical(id);
    const auto wg = weight_grid(g);
    for (std::size_t r = 0; r < g.side(); ++r) {
      for (std::size_t c = 0; c < g.side(); ++c) {
        EXPECT_EQ(wg.weights(r, c), static_cast<std::size_t>(oracle::weight(g(r, c).str())));
        EXPECT_EQ(hamming_weight(complement(g(r, c))), wg.weights(r, c));
      }
    }
  }
}

TEST(Frequency, CanonicalGrids) {
  EXPECT_EQ(frequency_distribution(load_canonical(CanonicalTableId::M1)).counts,
            (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(frequency_distribution(load_canonical(CanonicalTableId::R8A)).counts,
            (std::vector<std::uint64_t>{8, 24, 24, 8}));
  const auto r16 = frequency_distribution(load_canonical(CanonicalTableId::R16));
  EXPECT_EQ(r16.counts, (std::vector<std::uint64_t>{16, 64, 96, 64, 16}));
  EXPECT_TRUE(r16.match);
  EXPECT_FALSE(frequency_distribution(load_canonical(CanonicalTableId::ENZ)).match);
}

TEST(Frequency, FullEnumerationUpToFour) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::size_t> weights;
    for (const auto& w : all_words(n)) weights.push_back(static_cast<std::size_t>(oracle::weight(w.str())));
    const auto counts = weight_counts(weights, n);
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(counts[k], binomial(n, k) << n) << n << "," << k;
  }
}

TEST(Balance, R16RowsAndBlocks) {
  const auto g = load_canonical(CanonicalTableId::R16);
  EXPECT_TRUE(all_pass(balance_report(g, rows(16))));
  EXPECT_TRUE(all_pass(balance_report(g, blocks(16, 4))));
}

TEST(Balance, R16ColumnsAreMirroredNotBinomial) {
  const auto g = load_canonical(CanonicalTableId::R16);
  const auto wg = weight_grid(g);
  const std::vector<std::uint64_t> low{2, 2, 6, 6, 0};
  const std::vector<std::uint64_t> high{0, 6, 6, 2, 2};
  for (std::size_t c = 0; c < 16; ++c) {
    const auto counts = weight_counts(values_of(wg.weights, Region::column(c)), 4);
    EXPECT_TRUE(counts == low || counts == high) << "column " << c + 1;
  }
  for (const auto& v : balance_report(g, columns(16))) EXPECT_FALSE(v.pass);
}

TEST(Balance, R16DiagonalsAreNotBinomial) {
  const auto g = load_canonical(CanonicalTableId::R16);
  const auto wg = weight_grid(g);
  for (const auto& d : diagonals()) {
    EXPECT_EQ(weight_counts(values_of(wg.weights, d), 4), (std::vector<std::uint64_t>{2, 2, 6, 6, 0}));
  }
  for (const auto& v : balance_report(g, diagonals())) EXPECT_FALSE(v.pass);
}

TEST(Balance, R8BRowsOnly) {
  const auto g = load_canonical(CanonicalTableId::R8B);
  EXPECT_TRUE(all_pass(balance_report(g, rows(8))));
  for (const auto& v : balance_report(g, columns(8))) EXPECT_FALSE(v.pass) << v.region.label();
  EXPECT_TRUE(all_pass(balance_report(load_canonical(CanonicalTableId::R8A), columns(8))));
}

TEST(Balance, RegionSizeMustBeMultiple) {
  const auto g = load_canonical(CanonicalTableId::R16);
  EXPECT_THROW((void)balance_report(g, {Region::half_row(0, 0)}), ShapeError);
  EXPECT_NO_THROW((void)balance_report(load_canonical(CanonicalTableId::R4), {Region::row(0)}));
}
