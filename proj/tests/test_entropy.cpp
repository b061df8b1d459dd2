#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "genemagic/entropy.hpp"
#include "genemagic/tables.hpp"
#include "oracle.hpp"

using namespace genemagic;

namespace {

constexpr double kTol = 5e-5;

ProbabilityGrid probs(CanonicalTableId id, Notation n) { return normalize(load_canonical(id), n); }

std::vector<std::uint64_t> row_values(const ProbabilityGrid& p, std::size_t r) {
  return values_of(p.numerators, Region::row(r));
}

}  // namespace

TEST(Normalize, R8ABinFirstRow) {
  const auto p = probs(CanonicalTableId::R8A, Notation::bin);
  EXPECT_EQ(p.denominator, 444444U);
  const std::uint64_t expect[8] = {0, 100110, 111011, 11101, 101, 100011, 111110, 11000};
  const double decimals[8] = {0.00000, 0.22525, 0.24977, 0.02498, 0.00023, 0.22502, 0.25000, 0.02475};
  for (std::size_t c = 0; c < 8; ++c) {
    EXPECT_EQ(p.numerators(0, c), expect[c]);
    EXPECT_NEAR(oracle::round_to(to_double(p.probability(0, c)), 5), decimals[c], 1e-9);
  }
}

TEST(Normalize, LinesSumToExactlyOne) {
  for (auto id : {CanonicalTableId::R4, CanonicalTableId::R8A, CanonicalTableId::R8B, CanonicalTableId::R16}) {
    for (auto n : kNotations) {
      const auto p = probs(id, n);
      for (const auto& line : lines(p.side())) EXPECT_EQ(p.total(line), Rational(1)) << line.label();
    }
  }
}

TEST(Normalize, RejectsNonMagic) {
  try {
    (void)probs(CanonicalTableId::M2, Notation::dec);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("row 2"), std::string::npos) << msg;
  }
  EXPECT_THROW((void)probs(CanonicalTableId::ENZ, Notation::dec), PreconditionError);
}

TEST(Entropy, SingleTerm) {
  EXPECT_NEAR(oracle::round_to(entropy_term(11, 2222), 4), 0.0114, 1e-12);
  EXPECT_EQ(entropy_term(0, 7), 0.0);
  EXPECT_EQ(entropy_term(7, 7), 0.0);
  EXPECT_NEAR(entropy_term(100110, 444444), 0.1458, kTol);
}

TEST(Entropy, UniformRow) {
  EXPECT_NEAR(4 * entropy_term(1, 4), std::log10(4.0), 1e-12);
}

TEST(Entropy, R8ABinRowsMatchOracleAndMultiset) {
  const auto p = probs(CanonicalTableId::R8A, Notation::bin);
  const auto rep = shannon_report(p);
  std::vector<double> rounded;
  for (std::size_t r = 0; r < 8; ++r) {
    EXPECT_NEAR(rep.row_sums[r], oracle::row_entropy(row_values(p, r)), 1e-12);
    rounded.push_back(oracle::round_to(rep.row_sums[r], 4));
  }
  std::sort(rounded.begin(), rounded.end());
  const std::vector<double> expect = {0.6732, 0.6732, 0.6734, 0.6734, 0.6796, 0.6796, 0.6797, 0.6797};
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(rounded[i], expect[i], kTol);
}

TEST(Entropy, R8BRowsAndColumnsInBand) {
  const auto rep = shannon_report(probs(CanonicalTableId::R8B, Notation::bin));
  for (auto v : rep.row_sums) {
    EXPECT_GE(oracle::round_to(v, 4), 0.6761 - kTol);
    EXPECT_LE(oracle::round_to(v, 4), 0.6769 + kTol);
  }
  for (auto v : rep.col_sums) {
    EXPECT_GE(oracle::round_to(v, 4), 0.6761 - kTol);
    EXPECT_LE(oracle::round_to(v, 4), 0.6769 + kTol);
  }
  EXPECT_NEAR(oracle::round_to(rep.diag_sums[0], 4), 0.6763, kTol);
}

TEST(Entropy, R16RowsAndColumnsInBand) {
  const auto rep = shannon_report(probs(CanonicalTableId::R16, Notation::bin));
  for (const auto* group : {&rep.row_sums, &rep.col_sums}) {
    for (auto v : *group) {
      EXPECT_GE(oracle::round_to(v, 5), 0.97749 - 1e-9);
      EXPECT_LE(oracle::round_to(v, 5), 0.97752 + 1e-9);
    }
  }
}

TEST(Entropy, TermsAreNonNegativeAndBounded) {
  for (auto id : {CanonicalTableId::R4, CanonicalTableId::R8A, CanonicalTableId::R8B, CanonicalTableId::R16}) {
    for (auto n : kNotations) {
      const auto p = probs(id, n);
      const auto rep = shannon_report(p);
      for (auto t : rep.terms) EXPECT_GE(t, 0.0);
      const double bound = std::log10(static_cast<double>(p.side())) + 1e-12;
      for (auto v : rep.row_sums) EXPECT_LE(v, bound);
      for (auto v : rep.col_sums) EXPECT_LE(v, bound);
    }
  }
}

TEST(Entropy, R4RowMultisetIsPermutationInvariant) {
  // Row entropies depend only on the multiset of a row's cells.
  const auto p = probs(CanonicalTableId::R4, Notation::dec);
  const auto rep = shannon_report(p);
  for (std::size_t r = 0; r < 4; ++r) {
    auto v = row_values(p, r);
    std::reverse(v.begin(), v.end());
    EXPECT_NEAR(rep.row_sums[r], oracle::row_entropy(v), 1e-12);
  }
}

TEST(OrderIndex, R8BEqualsS2OverS1Squared) {
  const std::uint64_t s1[] = {444444, 2220, 260};
  const std::uint64_t s2[] = {44893328844ULL, 717060, 11180};
  std::size_t i = 0;
  for (auto n : {Notation::bin, Notation::digit, Notation::dec}) {
    const auto idx = order_index(probs(CanonicalTableId::R8B, n));
    const Rational expect(static_cast<std::int64_t>(s2[i]), static_cast<std::int64_t>(s1[i] * s1[i]));
    for (const auto* group : {&idx.rows, &idx.columns, &idx.diagonals}) {
      for (const auto& v : *group) EXPECT_EQ(v, expect);
    }
    ++i;
  }
  EXPECT_NEAR(to_double(order_index(probs(CanonicalTableId::R8B, Notation::bin)).rows[0]), 0.2273, kTol);
}

TEST(OrderIndex, R16Bin) {
  const auto idx = order_index(probs(CanonicalTableId::R16, Notation::bin));
  for (const auto& v : idx.rows) EXPECT_NEAR(to_double(v), 0.11364, 5e-6);
  EXPECT_EQ(idx.rows[0], Rational(897867554657688LL, 88888888LL * 88888888LL));
}

TEST(OrderIndex, DegenerateRow) {
  Matrix<std::uint64_t> m(2);
  m(0, 0) = 5;
  m(0, 1) = 0;
  m(1, 0) = 0;
  m(1, 1) = 5;
  const auto p = normalize(NumericGrid{"unit", Notation::dec, m});
  EXPECT_EQ(order_index(p, Region::row(0)), Rational(1));
  EXPECT_EQ(shannon_report(p).row_sums[0], 0.0);
}

TEST(Display, Precision) {
  EXPECT_EQ(display_precision(4), 4);
  EXPECT_EQ(display_precision(8), 4);
  EXPECT_EQ(display_precision(16), 5);
}
