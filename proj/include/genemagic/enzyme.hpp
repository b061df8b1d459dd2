#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "genemagic/error.hpp"
#include "genemagic/grid.hpp"
#include "genemagic/magic.hpp"
#include "genemagic/nucleotide.hpp"
#include "genemagic/region.hpp"

namespace genemagic {

enum class Orientation { same, opposite };

[[nodiscard]] constexpr std::string_view to_string(Orientation o) noexcept {
  return o == Orientation::same ? "same" : "opposite";
}

struct EnzymeRecord {
  std::string_view tetramer;
  Orientation orientation;
  int enzyme_count;
};

// Antiparallel tetramers with enzyme counts. Entry i of each orientation forms the
// i-th antiparallel pair (same[i], opposite[i]).
inline constexpr std::array<EnzymeRecord, 16> kEnzymeTable = {{
    {"AGCT", Orientation::same, 9},      {"CGTA", Orientation::same, 0},
    {"TACG", Orientation::same, 0},      {"CTAG", Orientation::same, 9},
    {"GCAT", Orientation::same, 1},      {"TCGA", Orientation::same, 32},
    {"ATGC", Orientation::same, 0},      {"GATC", Orientation::same, 45},
    {"TAGC", Orientation::opposite, 0},  {"ACGT", Orientation::opposite, 2},
    {"GTAC", Orientation::opposite, 4},  {"GCTA", Orientation::opposite, 0},
    {"TGCA", Orientation::opposite, 11}, {"ATCG", Orientation::opposite, 0},
    {"CATG", Orientation::opposite, 3},  {"CGAT", Orientation::opposite, 0},
}};

// Group totals from the table header. The per-tetramer counts above add up
// to 96 and 20.
inline constexpr int kDeclaredSameTotal = 88;
inline constexpr int kDeclaredOppositeTotal = 20;

[[nodiscard]] inline int listed_total(Orientation o) noexcept {
  int total = 0;
  for (const auto& rec : kEnzymeTable) {
    if (rec.orientation == o) total += rec.enzyme_count;
  }
  return total;
}

[[nodiscard]] inline std::span<const EnzymeRecord> enzyme_table() noexcept { return kEnzymeTable; }

/// The eight (same, opposite) antiparallel pairs.
[[nodiscard]] inline std::array<std::pair<Word, Word>, 8> antiparallel_pairs() {
  std::array<std::pair<Word, Word>, 8> out;
  for (std::size_t i = 0; i < 8; ++i) {
    out[i] = {Word::parse(kEnzymeTable[i].tetramer), Word::parse(kEnzymeTable[i + 8].tetramer)};
  }
  return out;
}

namespace detail {

inline void require_distinct_tetramer(const Word& w) {
  if (w.size() != 4) {
    throw DomainError("expected a tetramer, got " + std::to_string(w.size()) + " letters (\"" +
                      w.str() + "\")");
  }
  std::set<Nucleotide> letters(w.begin(), w.end());
  if (letters.size() != 4) {
    throw DomainError("tetramer " + w.str() + " repeats a letter; all four bases are required");
  }
}

}  // namespace detail

[[nodiscard]] inline std::optional<EnzymeRecord> find_enzyme(const Word& tetramer) {
  detail::require_distinct_tetramer(tetramer);
  const auto text = tetramer.str();
  for (const auto& rec : kEnzymeTable) {
    if (rec.tetramer == text) return rec;
  }
  return std::nullopt;
}

enum class Classification { same, opposite, unlisted };

[[nodiscard]] constexpr std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::same: return "same";
    case Classification::opposite: return "opposite";
    case Classification::unlisted: return "unlisted";
  }
  return "?";
}

/// Orientation group of a four-distinct-letter tetramer, or unlisted.
[[nodiscard]] inline Classification classify(const Word& tetramer) {
  const auto rec = find_enzyme(tetramer);
  if (!rec) return Classification::unlisted;
  return rec->orientation == Orientation::same ? Classification::same : Classification::opposite;
}

/// True iff some cyclically adjacent pair of letters (the last letter wraps
/// to the first) is a complementary dimer AT, TA, GC or CG.
[[nodiscard]] inline bool antiparallel_check(const Word& tetramer) {
  detail::require_distinct_tetramer(tetramer);
  for (std::size_t i = 0; i < 4; ++i) {
    if (complement(tetramer[i]) == tetramer[(i + 1) % 4]) return true;
  }
  return false;
}

struct OrientationSums {
  std::uint64_t same = 0;
  std::uint64_t opposite = 0;
};

/// Encoded totals of the eight tetramers in each orientation group.
[[nodiscard]] inline OrientationSums orientation_sums(Notation notation) {
  OrientationSums out;
  for (const auto& rec : kEnzymeTable) {
    const auto v = encode(Word::parse(rec.tetramer), notation);
    (rec.orientation == Orientation::same ? out.same : out.opposite) += v;
  }
  return out;
}

/// True iff each antiparallel pair sits inside one aligned 4x4 block and all
/// of those blocks lie in the lower half of the 16x16 grid.
[[nodiscard]] inline bool block_locality_check(const Grid& grid) {
  if (grid.word_len != 4 || grid.side() != 16) {
    throw ShapeError("block locality needs a 16x16 grid of tetramers, got " +
                     std::to_string(grid.side()) + "x" + std::to_string(grid.side()) + " with n=" +
                     std::to_string(grid.word_len));
  }
  const auto locate = [&](const Word& w) {
    auto cell = grid.find(w);
    if (!cell) throw DataError("tetramer " + w.str() + " is missing from grid " + grid.name);
    return *cell;
  };
  bool ok = true;
  for (const auto& [same, opposite] : antiparallel_pairs()) {
    const auto a = locate(same);
    const auto b = locate(opposite);
    const bool same_block = a.row / 4 == b.row / 4 && a.col / 4 == b.col / 4;
    ok = ok && same_block && a.row >= 8 && b.row >= 8;
  }
  return ok;
}

}  // namespace genemagic
