#pragma once

#include <array>
#include <optional>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genemagic/error.hpp"
#include "genemagic/grid.hpp"
#include "genemagic/matrix.hpp"
#include "genemagic/nucleotide.hpp"
#include "genemagic/region.hpp"

namespace genemagic {

using SymbolGrid = Matrix<char>;

/// Letters found at a 1-based position of every word.
[[nodiscard]] inline SymbolGrid project(const Grid& grid, std::size_t place) {
  if (place == 0 || place > grid.word_len) {
    throw DomainError("place " + std::to_string(place) + " is outside 1.." +
                      std::to_string(grid.word_len));
  }
  return grid.cells.map([place](const Word& w) { return to_char(w[place - 1]); });
}

/// For each region, whether the letters at `place` are evenly spread over
/// C, A, T, G: a permutation for 4-cell regions, size/4 of each otherwise.
[[nodiscard]] inline std::vector<RegionVerdict> place_permutation_report(
    const Grid& grid, std::size_t place, const std::vector<Region>& regions) {
  const auto letters = project(grid, place);
  std::vector<RegionVerdict> out;
  out.reserve(regions.size());
  for (const auto& region : regions) {
    const auto cells = cells_of(region, grid.side());
    if (cells.size() % 4 != 0) {
      throw ShapeError(region.label() + " has " + std::to_string(cells.size()) +
                       " cells; letter balance needs a multiple of 4");
    }
    std::array<std::size_t, 4> counts{};
    for (const auto& cell : cells) ++counts[bits(parse_nucleotide(letters[cell]))];
    bool pass = true;
    for (auto n : counts) pass = pass && n == cells.size() / 4;
    out.push_back({region, pass});
  }
  return out;
}

struct LatinResult {
  bool latin = false;
  bool diagonal_latin = false;

  friend bool operator==(const LatinResult&, const LatinResult&) = default;
};

namespace detail {

inline std::set<char> alphabet(const SymbolGrid& a) { return {a.begin(), a.end()}; }

inline void require_alphabet_fits(const SymbolGrid& a, std::string_view what) {
  const auto symbols = alphabet(a);
  if (symbols.size() > a.side()) {
    throw ShapeError(std::string(what) + " uses " + std::to_string(symbols.size()) +
                     " distinct symbols, more than its side " + std::to_string(a.side()));
  }
}

inline bool all_distinct(const std::vector<char>& v) {
  return std::set<char>(v.begin(), v.end()).size() == v.size();
}

}  // namespace detail

/// Latin: every row and column holds N distinct symbols. Diagonal Latin:
/// additionally both main diagonals do. Arrays with more than N distinct
/// symbols are rejected with ShapeError.
[[nodiscard]] inline LatinResult latin_square_check(const SymbolGrid& a) {
  detail::require_alphabet_fits(a, "array");
  const std::size_t n = a.side();
  const auto symbols = detail::alphabet(a);
  LatinResult result;
  if (symbols.size() != n) return result;
  result.latin = true;
  for (std::size_t i = 0; i < n && result.latin; ++i) {
    result.latin = detail::all_distinct(values_of(a, Region::row(i))) &&
                   detail::all_distinct(values_of(a, Region::column(i)));
  }
  result.diagonal_latin = result.latin &&
                          detail::all_distinct(values_of(a, Region::main_diagonal())) &&
                          detail::all_distinct(values_of(a, Region::anti_diagonal()));
  return result;
}

/// True iff superimposing the arrays yields N^2 distinct ordered pairs.
[[nodiscard]] inline bool orthogonality_check(const SymbolGrid& a, const SymbolGrid& b) {
  if (a.side() != b.side()) {
    throw ShapeError("orthogonality needs equal sides, got " + std::to_string(a.side()) +
                     " and " + std::to_string(b.side()));
  }
  detail::require_alphabet_fits(a, "first array");
  detail::require_alphabet_fits(b, "second array");
  std::set<std::pair<char, char>> pairs;
  for (std::size_t i = 0; i < a.size(); ++i) pairs.emplace(a.data()[i], b.data()[i]);
  return pairs.size() == a.size();
}

/// Replaces every word by the symbol of its XOR reduction: digits 0..3 for
/// dinucleotides, letters a..h (000 -> a, ..., 111 -> h) for trinucleotides.
[[nodiscard]] inline SymbolGrid xor_letter_grid(const Grid& grid) {
  if (grid.word_len != 2 && grid.word_len != 3) {
    throw ShapeError("XOR symbol grids are defined for word length 2 or 3, got " +
                     std::to_string(grid.word_len));
  }
  const char base = grid.word_len == 2 ? '0' : 'a';
  return grid.cells.map([base](const Word& w) {
    unsigned v = 0;
    for (char bit : xor_reduce(w)) v = (v << 1U) | static_cast<unsigned>(bit - '0');
    return static_cast<char>(base + v);
  });
}

/// Regions used for the standard structure report: lines, aligned square
/// blocks and half-lines, keeping only those whose size is a multiple of 4.
[[nodiscard]] inline std::vector<Region> standard_regions(std::size_t side) {
  std::vector<Region> candidates = lines(side);
  for (std::size_t k = 2; k < side; ++k) {
    if (side % k == 0) {
      for (auto& b : blocks(side, k)) candidates.push_back(b);
    }
  }
  if (side % 2 == 0) {
    for (auto& h : half_lines(side)) candidates.push_back(h);
  }
  std::vector<Region> out;
  for (auto& r : candidates) {
    if (cells_of(r, side).size() % 4 == 0) out.push_back(r);
  }
  return out;
}

struct PlaceReport {
  std::size_t place = 0;
  LatinResult latin;
  std::vector<RegionVerdict> regions;
};

struct OrthogonalPair {
  std::size_t first = 0;
  std::size_t second = 0;
  bool orthogonal = false;
};

/// Everything the structure checks say about one grid.
struct StructureReport {
  std::string source;
  std::vector<PlaceReport> places;
  std::vector<OrthogonalPair> orthogonality;
  std::optional<SymbolGrid> xor_grid;
  std::optional<LatinResult> xor_latin;
};

[[nodiscard]] inline StructureReport structure_report(const Grid& grid) {
  StructureReport out;
  out.source = grid.name;
  const auto regions = standard_regions(grid.side());
  for (std::size_t p = 1; p <= grid.word_len; ++p) {
    const auto letters = project(grid, p);
    PlaceReport pr{p, {}, place_permutation_report(grid, p, regions)};
    if (detail::alphabet(letters).size() <= grid.side()) pr.latin = latin_square_check(letters);
    out.places.push_back(std::move(pr));
  }
  if (grid.side() == 4) {
    for (std::size_t a = 1; a <= grid.word_len; ++a) {
      for (std::size_t b = a + 1; b <= grid.word_len; ++b) {
        out.orthogonality.push_back({a, b, orthogonality_check(project(grid, a), project(grid, b))});
      }
    }
  }
  if (grid.word_len == 2 || grid.word_len == 3) {
    out.xor_grid = xor_letter_grid(grid);
    if (detail::alphabet(*out.xor_grid).size() <= grid.side()) {
      out.xor_latin = latin_square_check(*out.xor_grid);
    }
  }
  return out;
}

}  // namespace genemagic
