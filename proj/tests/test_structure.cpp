#include <gtest/gtest.h>

#include <set>
#include <string>

#include "genemagic/structure.hpp"
#include "genemagic/tables.hpp"

using namespace genemagic;

namespace {

const Grid& r4() {
  static const Grid g = load_canonical(CanonicalTableId::R4);
  return g;
}

SymbolGrid symbols(const std::vector<std::string>& rows) {
  SymbolGrid out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows.size(); ++c) out(r, c) = rows[r][c];
  }
  return out;
}

}  // namespace

TEST(PlacePermutation, SpecExamples) {
  EXPECT_TRUE(place_permutation_report(r4(), 1, {Region::row(0)}).front().pass);
  EXPECT_TRUE(place_permutation_report(r4(), 2, {Region::main_diagonal()}).front().pass);
  const auto m2 = load_canonical(CanonicalTableId::M2);
  EXPECT_TRUE(place_permutation_report(m2, 1, {Region::row(0)}).front().pass);
  EXPECT_FALSE(place_permutation_report(m2, 1, {Region::column(0)}).front().pass);
}

TEST(PlacePermutation, R4PassesLinesAndBlocks) {
  auto regions = lines(4);
  for (auto& b : blocks(4, 2)) regions.push_back(b);
  for (std::size_t p = 1; p <= 2; ++p) EXPECT_TRUE(all_pass(place_permutation_report(r4(), p, regions))) << p;
}

TEST(PlacePermutation, R16EveryPlaceRowsColumnsBlocks) {
  const auto r16 = load_canonical(CanonicalTableId::R16);
  auto regions = rows(16);
  for (auto& r : columns(16)) regions.push_back(r);
  for (auto& b : blocks(16, 4)) regions.push_back(b);
  for (std::size_t p = 1; p <= 4; ++p) {
    EXPECT_TRUE(all_pass(place_permutation_report(r16, p, regions))) << "place " << p;
  }
}

TEST(PlacePermutation, Errors) {
  EXPECT_THROW((void)place_permutation_report(r4(), 0, {Region::row(0)}), DomainError);
  EXPECT_THROW((void)place_permutation_report(r4(), 3, {Region::row(0)}), DomainError);
  EXPECT_THROW((void)place_permutation_report(r4(), 1, {Region::half_row(0, 0)}), ShapeError);
}

TEST(Latin, R4ProjectionsAreOrthogonalDiagonalLatin) {
  const auto first = project(r4(), 1);
  const auto second = project(r4(), 2);
  EXPECT_EQ(latin_square_check(first), (LatinResult{true, true}));
  EXPECT_EQ(latin_square_check(second), (LatinResult{true, true}));
  EXPECT_TRUE(orthogonality_check(first, second));
  EXPECT_FALSE(orthogonality_check(first, first));
}

TEST(Latin, M2ProjectionsAreOrthogonal) {
  const auto m2 = load_canonical(CanonicalTableId::M2);
  EXPECT_TRUE(orthogonality_check(project(m2, 1), project(m2, 2)));
}

TEST(Latin, HandBuiltArrays) {
  EXPECT_EQ(latin_square_check(symbols({"CCCC", "CCCC", "CCCC", "CCCC"})), (LatinResult{false, false}));
  EXPECT_EQ(latin_square_check(symbols({"abc", "bca", "cab"})), (LatinResult{true, false}));
  EXPECT_EQ(latin_square_check(symbols({"ab", "ba"})), (LatinResult{true, false}));
  EXPECT_THROW((void)latin_square_check(symbols({"ab", "cd"})), ShapeError);
  EXPECT_THROW((void)orthogonality_check(symbols({"ab", "ba"}), symbols({"abc", "bca", "cab"})),
               ShapeError);
}

TEST(XorGrid, R4IsLatinButNotDiagonal) {
  const auto x = xor_letter_grid(r4());
  EXPECT_EQ(x(0, 0), '3');
  EXPECT_EQ(x(0, 2), '0');
  EXPECT_EQ(latin_square_check(x), (LatinResult{true, false}));
}

TEST(XorGrid, R8AIsDiagonalLatin) {
  const auto x = xor_letter_grid(load_canonical(CanonicalTableId::R8A));
  std::string first;
  for (std::size_t c = 0; c < 8; ++c) first += x(0, c);
  EXPECT_EQ(first, "ahcfdebg");
  EXPECT_EQ(latin_square_check(x), (LatinResult{true, true}));
}

TEST(XorGrid, R8ABlocksSplitIntoTwoGroups) {
  const auto x = xor_letter_grid(load_canonical(CanonicalTableId::R8A));
  const std::set<char> g1{'a', 'd', 'e', 'h'};
  const std::set<char> g2{'b', 'c', 'f', 'g'};
  for (const auto& b : blocks(8, 2)) {
    const auto v = values_of(x, b);
    const std::set<char> s(v.begin(), v.end());
    EXPECT_TRUE(s == g1 || s == g2) << b.label();
  }
}

TEST(XorGrid, R8BIsNotLatin) {
  const auto x = xor_letter_grid(load_canonical(CanonicalTableId::R8B));
  EXPECT_FALSE(latin_square_check(x).latin);
}

TEST(XorGrid, UnsupportedWordLength) {
  EXPECT_THROW((void)xor_letter_grid(load_canonical(CanonicalTableId::R16)), ShapeError);
  EXPECT_THROW((void)xor_letter_grid(load_canonical(CanonicalTableId::M1)), ShapeError);
}

TEST(StructureReport, R4Summary) {
  const auto rep = structure_report(r4());
  ASSERT_EQ(rep.places.size(), 2U);
  EXPECT_TRUE(rep.places[0].latin.diagonal_latin);
  EXPECT_TRUE(all_pass(rep.places[1].regions));
  ASSERT_EQ(rep.orthogonality.size(), 1U);
  EXPECT_TRUE(rep.orthogonality[0].orthogonal);
  ASSERT_TRUE(rep.xor_latin.has_value());
  EXPECT_FALSE(rep.xor_latin->diagonal_latin);
}

TEST(StructureReport, StandardRegionsHaveSizesDivisibleByFour) {
  for (std::size_t side : {4U, 8U, 16U}) {
    for (const auto& r : standard_regions(side)) EXPECT_EQ(cells_of(r, side).size() % 4, 0U);
  }
}
