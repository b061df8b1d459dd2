#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "genemagic/error.hpp"
#include "genemagic/grid.hpp"
#include "genemagic/matrix.hpp"
#include "genemagic/nucleotide.hpp"
#include "genemagic/region.hpp"

namespace genemagic {

// The largest square-sum the shipped tables produce must survive exactly.
static_assert(std::numeric_limits<std::uint64_t>::max() > 897'867'554'657'688ULL);

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw RangeError("exact sum overflows 64 bits");
  return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw RangeError("exact product overflows 64 bits");
  return out;
}

template <typename Range>
std::optional<typename Range::value_type> common_value(const Range& values) {
  if (values.empty()) return std::nullopt;
  const auto first = *values.begin();
  for (const auto& v : values) {
    if (v != first) return std::nullopt;
  }
  return first;
}

}  // namespace detail

/// A grid rendered into exact integers under one notation.
struct NumericGrid {
  std::string source;
  Notation notation = Notation::dec;
  Matrix<std::uint64_t> values;

  [[nodiscard]] std::size_t side() const noexcept { return values.side(); }
};

[[nodiscard]] inline NumericGrid render(const Grid& grid, Notation notation) {
  return {grid.name, notation, grid.cells.map([notation](const Word& w) { return encode(w, notation); })};
}

/// Sum and sum of squares over one region.
struct RegionSums {
  Region region;
  std::uint64_t sum = 0;
  std::uint64_t square_sum = 0;
};

[[nodiscard]] inline RegionSums region_sums(const Matrix<std::uint64_t>& values, const Region& region) {
  RegionSums out{region};
  for (const auto& cell : cells_of(region, values.side())) {
    const auto v = values[cell];
    out.sum = detail::checked_add(out.sum, v);
    out.square_sum = detail::checked_add(out.square_sum, detail::checked_mul(v, v));
  }
  return out;
}

struct BlockStat {
  RegionSums totals;
  /// Set for square blocks of side >= 3: rows, columns and both diagonals of
  /// the block share one sum.
  std::optional<bool> magic_subsquare;
  /// That shared sum, when the block is a magic subsquare.
  std::optional<std::uint64_t> line_sum;
};

struct MagicVerdict {
  bool magic = false;
  bool bimagic = false;
  bool column_bimagic = false;
};

/// A value that is an exact multiple of 37.
struct Divisibility {
  std::uint64_t value = 0;
  std::uint64_t quotient = 0;

  friend bool operator==(const Divisibility&, const Divisibility&) = default;
};

[[nodiscard]] constexpr std::optional<std::uint64_t> quotient_by_37(std::uint64_t value) noexcept {
  if (value % 37 != 0) return std::nullopt;
  return value / 37;
}

struct MagicReport {
  std::string source;
  Notation notation = Notation::dec;
  std::size_t side = 0;

  std::vector<RegionSums> row_sums;
  std::vector<RegionSums> column_sums;
  std::vector<RegionSums> diagonal_sums;  // main, anti
  /// Aligned k x k block totals for every k with 2 <= k < side dividing side.
  std::map<std::size_t, std::vector<BlockStat>> block_sums;
  std::vector<RegionSums> half_line_sums;

  /// Common row sum; empty when rows disagree.
  std::optional<std::uint64_t> s1;
  /// Common square-sum over all rows, columns and diagonals.
  std::optional<std::uint64_t> s2;
  /// Common square-sum over the columns alone.
  std::optional<std::uint64_t> s2_columns;

  MagicVerdict verdict;
  std::vector<Divisibility> divisibility;
};

[[nodiscard]] inline std::vector<BlockStat> block_report(const NumericGrid& g, std::size_t height,
                                                         std::size_t width) {
  std::vector<BlockStat> out;
  for (const auto& region : rect_blocks(g.side(), height, width)) {
    BlockStat stat{region_sums(g.values, region), std::nullopt, std::nullopt};
    if (height == width && height >= 3) {
      const auto cells = cells_of(region, g.side());
      const std::size_t r0 = cells.front().row;
      const std::size_t c0 = cells.front().col;
      Matrix<std::uint64_t> sub(height);
      for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < height; ++c) sub(r, c) = g.values(r0 + r, c0 + c);
      }
      std::vector<std::uint64_t> sums;
      for (const auto& line : lines(height)) sums.push_back(region_sums(sub, line).sum);
      stat.line_sum = detail::common_value(sums);
      stat.magic_subsquare = stat.line_sum.has_value();
    }
    out.push_back(stat);
  }
  return out;
}

/// Totals of every aligned k x k block; blocks of side >= 3 are also checked
/// for being magic subsquares.
[[nodiscard]] inline std::vector<BlockStat> block_report(const Grid& grid, Notation notation,
                                                         std::size_t k) {
  return block_report(render(grid, notation), k, k);
}

/// Totals of every aligned rows x cols block.
[[nodiscard]] inline std::vector<BlockStat> rect_block_report(const Grid& grid, Notation notation,
                                                              std::size_t rows, std::size_t cols) {
  return block_report(render(grid, notation), rows, cols);
}

/// Distinct line sums, line square-sums and half-line sums that are
/// multiples of 37, ascending.
[[nodiscard]] inline std::vector<Divisibility> divisibility_facts(const MagicReport& report) {
  std::set<std::uint64_t> values;
  for (const auto* group : {&report.row_sums, &report.column_sums, &report.diagonal_sums}) {
    for (const auto& s : *group) {
      values.insert(s.sum);
      values.insert(s.square_sum);
    }
  }
  for (const auto& s : report.half_line_sums) values.insert(s.sum);
  std::vector<Divisibility> out;
  for (auto v : values) {
    if (auto q = quotient_by_37(v); q && v != 0) out.push_back({v, *q});
  }
  return out;
}

[[nodiscard]] inline MagicReport analyze(const NumericGrid& g) {
  MagicReport report;
  report.source = g.source;
  report.notation = g.notation;
  report.side = g.side();
  const std::size_t n = g.side();

  for (const auto& r : rows(n)) report.row_sums.push_back(region_sums(g.values, r));
  for (const auto& r : columns(n)) report.column_sums.push_back(region_sums(g.values, r));
  for (const auto& r : diagonals()) report.diagonal_sums.push_back(region_sums(g.values, r));
  for (std::size_t k = 2; k < n; ++k) {
    if (n % k == 0) report.block_sums.emplace(k, block_report(g, k, k));
  }
  if (n % 2 == 0) {
    for (const auto& r : half_lines(n)) report.half_line_sums.push_back(region_sums(g.values, r));
  }

  std::vector<std::uint64_t> row_s1, all_s1, all_s2, col_s2;
  for (const auto& s : report.row_sums) row_s1.push_back(s.sum);
  for (const auto* group : {&report.row_sums, &report.column_sums, &report.diagonal_sums}) {
    for (const auto& s : *group) {
      all_s1.push_back(s.sum);
      all_s2.push_back(s.square_sum);
    }
  }
  for (const auto& s : report.column_sums) col_s2.push_back(s.square_sum);

  report.s1 = detail::common_value(row_s1);
  report.s2 = detail::common_value(all_s2);
  report.s2_columns = detail::common_value(col_s2);
  report.verdict.magic = detail::common_value(all_s1).has_value();
  report.verdict.bimagic = report.verdict.magic && report.s2.has_value();
  report.verdict.column_bimagic = report.verdict.magic && report.s2_columns.has_value();
  report.divisibility = divisibility_facts(report);
  return report;
}

/// Exact S1/S2 analysis of a grid under a notation.
[[nodiscard]] inline MagicReport analyze(const Grid& grid, Notation notation) {
  return analyze(render(grid, notation));
}

}  // namespace genemagic
