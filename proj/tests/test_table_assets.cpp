#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "genemagic/grid.hpp"
#include "genemagic/tables.hpp"

using namespace genemagic;

namespace {
Word W(std::string_view s) { return Word::parse(s); }
}  // namespace

TEST(Canonical, ShapesAndWordLengths) {
  struct Expect {
    CanonicalTableId id;
    std::size_t side, n;
  };
  for (auto [id, side, n] : {Expect{CanonicalTableId::M1, 2, 1}, Expect{CanonicalTableId::M2, 4, 2},
                             Expect{CanonicalTableId::M3, 8, 3}, Expect{CanonicalTableId::R4, 4, 2},
                             Expect{CanonicalTableId::R8A, 8, 3}, Expect{CanonicalTableId::R8B, 8, 3},
                             Expect{CanonicalTableId::R16, 16, 4}, Expect{CanonicalTableId::ENZ, 4, 4}}) {
    const auto g = load_canonical(id);
    EXPECT_EQ(g.side(), side) << to_string(id);
    EXPECT_EQ(g.word_len, n) << to_string(id);
    EXPECT_EQ(g.name, to_string(id));
    EXPECT_EQ(g.is_complete(), id != CanonicalTableId::ENZ) << to_string(id);
  }
}

TEST(Canonical, KnownCells) {
  EXPECT_EQ(load_canonical(CanonicalTableId::R4)(0, 0), W("AT"));
  EXPECT_EQ(load_canonical(CanonicalTableId::R8B)(0, 0), W("CGG"));
  EXPECT_EQ(load_canonical(CanonicalTableId::R8A)(0, 1), W("TAT"));
  const auto r16 = load_canonical(CanonicalTableId::R16);
  EXPECT_EQ(r16(0, 0), W("CCCC"));
  EXPECT_EQ(r16(0, 1), W("TATA"));
  EXPECT_EQ(r16(8, 0), W("CGAT"));
  EXPECT_EQ(r16(8, 2), W("GATC"));
  EXPECT_EQ(r16(15, 15), W("GCGG"));
}

TEST(Canonical, R16HoldsEveryTetramerOnce) {
  // Enumerate all 256 tetramers independently and look each one up.
  const auto r16 = load_canonical(CanonicalTableId::R16);
  const std::string letters = "CATG";
  int found = 0;
  for (char a : letters)
    for (char b : letters)
      for (char c : letters)
        for (char d : letters) {
          const std::string s{a, b, c, d};
          const auto count = std::count(r16.cells.begin(), r16.cells.end(), W(s));
          EXPECT_EQ(count, 1) << s;
          found += static_cast<int>(count);
        }
  EXPECT_EQ(found, 256);
}

TEST(Canonical, EightByEightTablesArePermutationsOfEachOther) {
  const auto a = load_canonical(CanonicalTableId::R8A);
  const auto b = load_canonical(CanonicalTableId::R8B);
  std::multiset<Word> ma(a.cells.begin(), a.cells.end());
  std::multiset<Word> mb(b.cells.begin(), b.cells.end());
  EXPECT_EQ(ma, mb);
  EXPECT_NE(a.cells, b.cells);
}

TEST(Canonical, R4CarriesRawCombinationTable) {
  const auto r4 = load_canonical(CanonicalTableId::R4);
  ASSERT_GE(r4.notes.size(), 6U);
  EXPECT_EQ(r4.notes[2], "1 2 3 4 | 5 5 5 5 | 9 9 10 10 | 14 15 15 14 | 17 19 20 18");
}

TEST(Canonical, IdLookup) {
  EXPECT_EQ(parse_canonical_id("r8b"), CanonicalTableId::R8B);
  EXPECT_THROW((void)parse_canonical_id("R32"), ParseError);
}

TEST(ParseGrid, Basic) {
  const auto g = parse_grid("n=2 size=2\nCA TG\nGG AC\n");
  EXPECT_EQ(g.side(), 2U);
  EXPECT_EQ(g.word_len, 2U);
  EXPECT_EQ(g(1, 1), W("AC"));
  EXPECT_TRUE(g.name.empty());
}

TEST(ParseGrid, CommentsBlankLinesAndTrailingSpace) {
  const auto g = parse_grid("# hello\n\nn=1 size=2 name=tiny   \n# mid\nC A  \nT G\n\n");
  EXPECT_EQ(g.name, "tiny");
  EXPECT_EQ(g.notes, (std::vector<std::string>{"hello", "mid"}));
  EXPECT_TRUE(g.is_complete());
}

TEST(ParseGrid, RaggedRowNamesRow) {
  try {
    (void)parse_grid("n=2 size=4\nAT TG CC GA\nCA GC AG\nGG CT TA AC\nTC AA GT CG\n");
    FAIL() << "expected ShapeError";
  } catch (const ShapeError& e) {
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos) << e.what();
  }
}

TEST(ParseGrid, BadLetterNamesLetter) {
  try {
    (void)parse_grid("n=3 size=1\nAXT\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'X'"), std::string::npos) << e.what();
  }
}

TEST(ParseGrid, OtherErrors) {
  EXPECT_THROW((void)parse_grid(""), ParseError);
  EXPECT_THROW((void)parse_grid("n=2\nAA\n"), ParseError);
  EXPECT_THROW((void)parse_grid("n=2 size=x\n"), ParseError);
  EXPECT_THROW((void)parse_grid("n=2 size=2 colour=red\nAA CC\nGG TT\n"), ParseError);
  EXPECT_THROW((void)parse_grid("n=2 size=2\nAA CC\n"), ShapeError);
  EXPECT_THROW((void)parse_grid("n=2 size=1\nAA\nCC\n"), ShapeError);
  EXPECT_THROW((void)parse_grid("n=2 size=2\nAA CCC\nGG TT\n"), ShapeError);
  EXPECT_THROW((void)parse_grid("n=1 size=2 notation=dec\n1 2\n3 4\n"), ParseError);
}

TEST(ParseGrid, DuplicatesOnlyFlaggedWhenCompletenessRequired) {
  const std::string text = "n=1 size=2\nC C\nT G\n";
  EXPECT_NO_THROW((void)parse_grid(text));
  EXPECT_THROW((void)parse_grid(text, ParseOptions{true}), DataError);
  EXPECT_THROW((void)parse_grid("n=2 size=2\nCC CA\nCT CG\n", ParseOptions{true}), DataError);
}

TEST(SerializeGrid, KhajurahoUnderDec) {
  const auto text = serialize_grid(load_canonical(CanonicalTableId::R4), Notation::dec);
  EXPECT_NE(text.find("n=2 size=4 name=R4 notation=dec\n 7 12  1 14\n 2 13  8 11\n16  3 10  5\n 9  6 15  4\n"),
            std::string::npos)
      << text;
}

TEST(SerializeGrid, DigitFirstRow) {
  const auto text = serialize_grid(load_canonical(CanonicalTableId::R4), Notation::digit);
  EXPECT_NE(text.find("\n23 34 11 42\n"), std::string::npos) << text;
}

TEST(SerializeGrid, RoundTripOnAllCanonicalGrids) {
  for (auto id : kCanonicalTables) {
    const auto g = load_canonical(id);
    EXPECT_EQ(parse_grid(serialize_grid(g)), g) << to_string(id);
  }
}
