#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "genemagic/error.hpp"
#include "genemagic/matrix.hpp"

namespace genemagic {

enum class RegionKind {
  row,
  column,
  main_diagonal,
  anti_diagonal,
  block,
  half_row,
  half_column,
  half_diagonal,
};

[[nodiscard]] constexpr std::string_view to_string(RegionKind k) noexcept {
  switch (k) {
    case RegionKind::row: return "row";
    case RegionKind::column: return "column";
    case RegionKind::main_diagonal: return "main_diagonal";
    case RegionKind::anti_diagonal: return "anti_diagonal";
    case RegionKind::block: return "block";
    case RegionKind::half_row: return "half_row";
    case RegionKind::half_column: return "half_column";
    case RegionKind::half_diagonal: return "half_diagonal";
  }
  return "?";
}

/// A set of cells of a square grid. Indices are zero-based.
///
/// - row/column: `index` is the line.
/// - block: `index` numbers the aligned height x width blocks row-major.
/// - half_row/half_column: `index` is the line, `part` is 0 (first half) or 1.
/// - half_diagonal: `index` is 0 (main) or 1 (anti), `part` as above.
struct Region {
  RegionKind kind = RegionKind::row;
  std::size_t index = 0;
  std::size_t part = 0;
  std::size_t height = 0;
  std::size_t width = 0;

  static Region row(std::size_t i) { return {RegionKind::row, i}; }
  static Region column(std::size_t i) { return {RegionKind::column, i}; }
  static Region main_diagonal() { return {RegionKind::main_diagonal}; }
  static Region anti_diagonal() { return {RegionKind::anti_diagonal}; }
  static Region block(std::size_t k, std::size_t i) { return {RegionKind::block, i, 0, k, k}; }
  static Region rect_block(std::size_t h, std::size_t w, std::size_t i) {
    return {RegionKind::block, i, 0, h, w};
  }
  static Region half_row(std::size_t i, std::size_t part) { return {RegionKind::half_row, i, part}; }
  static Region half_column(std::size_t i, std::size_t part) {
    return {RegionKind::half_column, i, part};
  }
  static Region half_diagonal(std::size_t diag, std::size_t part) {
    return {RegionKind::half_diagonal, diag, part};
  }

  /// Stable label, e.g. "row 3", "block 4x4 #2", "half_row 5.2".
  [[nodiscard]] std::string label() const {
    switch (kind) {
      case RegionKind::row:
      case RegionKind::column:
        return std::string(to_string(kind)) + " " + std::to_string(index + 1);
      case RegionKind::main_diagonal:
      case RegionKind::anti_diagonal:
        return std::string(to_string(kind));
      case RegionKind::block:
        return "block " + std::to_string(height) + "x" + std::to_string(width) + " #" +
               std::to_string(index + 1);
      case RegionKind::half_row:
      case RegionKind::half_column:
        return std::string(to_string(kind)) + " " + std::to_string(index + 1) + "." +
               std::to_string(part + 1);
      case RegionKind::half_diagonal:
        return std::string(index == 0 ? "half_main_diagonal " : "half_anti_diagonal ") +
               std::to_string(part + 1);
    }
    return "?";
  }

  friend bool operator==(const Region&, const Region&) = default;
};

/// Cells covered by a region in a grid of the given side.
[[nodiscard]] inline std::vector<Cell> cells_of(const Region& region, std::size_t side) {
  std::vector<Cell> out;
  const auto check_line = [&](std::size_t i) {
    if (i >= side) {
      throw ShapeError(region.label() + " is outside a grid of side " + std::to_string(side));
    }
  };
  const auto check_half = [&] {
    if (side % 2 != 0) throw ShapeError("half-lines need an even side, got " + std::to_string(side));
    if (region.part > 1) throw ShapeError(region.label() + ": part must be 0 or 1");
  };
  const std::size_t half = side / 2;
  switch (region.kind) {
    case RegionKind::row:
      check_line(region.index);
      for (std::size_t c = 0; c < side; ++c) out.push_back({region.index, c});
      break;
    case RegionKind::column:
      check_line(region.index);
      for (std::size_t r = 0; r < side; ++r) out.push_back({r, region.index});
      break;
    case RegionKind::main_diagonal:
      for (std::size_t i = 0; i < side; ++i) out.push_back({i, i});
      break;
    case RegionKind::anti_diagonal:
      for (std::size_t i = 0; i < side; ++i) out.push_back({i, side - 1 - i});
      break;
    case RegionKind::block: {
      if (region.height == 0 || region.width == 0 || side % region.height != 0 ||
          side % region.width != 0) {
        throw ShapeError("block " + std::to_string(region.height) + "x" +
                         std::to_string(region.width) + " does not tile a grid of side " +
                         std::to_string(side));
      }
      const std::size_t per_row = side / region.width;
      const std::size_t count = per_row * (side / region.height);
      if (region.index >= count) throw ShapeError(region.label() + " is outside the grid");
      const std::size_t r0 = (region.index / per_row) * region.height;
      const std::size_t c0 = (region.index % per_row) * region.width;
      for (std::size_t r = 0; r < region.height; ++r) {
        for (std::size_t c = 0; c < region.width; ++c) out.push_back({r0 + r, c0 + c});
      }
      break;
    }
    case RegionKind::half_row:
      check_line(region.index);
      check_half();
      for (std::size_t c = 0; c < half; ++c) out.push_back({region.index, region.part * half + c});
      break;
    case RegionKind::half_column:
      check_line(region.index);
      check_half();
      for (std::size_t r = 0; r < half; ++r) out.push_back({region.part * half + r, region.index});
      break;
    case RegionKind::half_diagonal:
      check_half();
      if (region.index > 1) throw ShapeError("half_diagonal index must be 0 (main) or 1 (anti)");
      for (std::size_t i = 0; i < half; ++i) {
        const std::size_t r = region.part * half + i;
        out.push_back({r, region.index == 0 ? r : side - 1 - r});
      }
      break;
  }
  return out;
}

template <typename T>
[[nodiscard]] std::vector<T> values_of(const Matrix<T>& m, const Region& region) {
  std::vector<T> out;
  for (const auto& cell : cells_of(region, m.side())) out.push_back(m[cell]);
  return out;
}

// Standard region families, all in a fixed order.

[[nodiscard]] inline std::vector<Region> rows(std::size_t side) {
  std::vector<Region> out;
  for (std::size_t i = 0; i < side; ++i) out.push_back(Region::row(i));
  return out;
}

[[nodiscard]] inline std::vector<Region> columns(std::size_t side) {
  std::vector<Region> out;
  for (std::size_t i = 0; i < side; ++i) out.push_back(Region::column(i));
  return out;
}

[[nodiscard]] inline std::vector<Region> diagonals() {
  return {Region::main_diagonal(), Region::anti_diagonal()};
}

/// Rows, then columns, then the two main diagonals.
[[nodiscard]] inline std::vector<Region> lines(std::size_t side) {
  auto out = rows(side);
  for (auto& r : columns(side)) out.push_back(r);
  for (auto& r : diagonals()) out.push_back(r);
  return out;
}

[[nodiscard]] inline std::vector<Region> rect_blocks(std::size_t side, std::size_t height,
                                                     std::size_t width) {
  if (height == 0 || width == 0 || side % height != 0 || side % width != 0) {
    throw ShapeError("block " + std::to_string(height) + "x" + std::to_string(width) +
                     " does not tile a grid of side " + std::to_string(side));
  }
  std::vector<Region> out;
  const std::size_t count = (side / height) * (side / width);
  for (std::size_t i = 0; i < count; ++i) out.push_back(Region::rect_block(height, width, i));
  return out;
}

[[nodiscard]] inline std::vector<Region> blocks(std::size_t side, std::size_t k) {
  return rect_blocks(side, k, k);
}

/// Half rows, half columns and half diagonals of an even-sided grid.
[[nodiscard]] inline std::vector<Region> half_lines(std::size_t side) {
  if (side % 2 != 0) throw ShapeError("half-lines need an even side, got " + std::to_string(side));
  std::vector<Region> out;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t p = 0; p < 2; ++p) out.push_back(Region::half_row(i, p));
  }
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t p = 0; p < 2; ++p) out.push_back(Region::half_column(i, p));
  }
  for (std::size_t d = 0; d < 2; ++d) {
    for (std::size_t p = 0; p < 2; ++p) out.push_back(Region::half_diagonal(d, p));
  }
  return out;
}

/// A boolean outcome for one region.
struct RegionVerdict {
  Region region;
  bool pass = false;

  friend bool operator==(const RegionVerdict&, const RegionVerdict&) = default;
};

[[nodiscard]] inline bool all_pass(const std::vector<RegionVerdict>& verdicts) {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

}  // namespace genemagic
