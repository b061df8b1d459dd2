#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "genemagic/error.hpp"
#include "genemagic/grid.hpp"
#include "genemagic/matrix.hpp"
#include "genemagic/nucleotide.hpp"
#include "genemagic/region.hpp"

namespace genemagic {

[[nodiscard]] constexpr std::uint64_t binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

/// Label a^k b^(n-k) with unit exponents dropped, e.g. "a^2b^2", "ab^3", "b^4".
[[nodiscard]] inline std::string monomial_label(std::size_t k, std::size_t n) {
  const auto factor = [](char var, std::size_t e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(e);
  };
  return factor('a', k) + factor('b', n - k);
}

/// Per-cell Hamming weights (A and T count as a, C and G as b).
struct WeightGrid {
  std::size_t word_len = 0;
  Matrix<std::size_t> weights;

  [[nodiscard]] std::size_t side() const noexcept { return weights.side(); }
  [[nodiscard]] std::string monomial(std::size_t r, std::size_t c) const {
    return monomial_label(weights(r, c), word_len);
  }
};

[[nodiscard]] inline WeightGrid weight_grid(const Grid& grid) {
  return {grid.word_len, grid.cells.map([](const Word& w) { return hamming_weight(w); })};
}

/// Counts of each weight 0..n next to the binomial expectation C(n,k) * 2^n.
struct FrequencyTable {
  std::size_t n = 0;
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> expected;
  bool match = false;
};

[[nodiscard]] inline std::vector<std::uint64_t> weight_counts(const std::vector<std::size_t>& weights,
                                                              std::size_t n) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (auto w : weights) ++counts.at(w);
  return counts;
}

[[nodiscard]] inline FrequencyTable frequency_distribution(const Grid& grid) {
  FrequencyTable t;
  t.n = grid.word_len;
  t.counts = weight_counts(weight_grid(grid).weights.data(), t.n);
  for (std::size_t k = 0; k <= t.n; ++k) t.expected.push_back(binomial(t.n, k) << t.n);
  t.match = t.counts == t.expected;
  return t;
}

/// A region passes when its weight counts are C(n,k) * size / 2^n for every
/// k. Region sizes that are not a multiple of 2^n raise ShapeError.
[[nodiscard]] inline std::vector<RegionVerdict> balance_report(const Grid& grid,
                                                               const std::vector<Region>& regions) {
  const auto wg = weight_grid(grid);
  const std::size_t n = grid.word_len;
  const std::size_t unit = std::size_t{1} << n;
  std::vector<RegionVerdict> out;
  for (const auto& region : regions) {
    const auto weights = values_of(wg.weights, region);
    if (weights.size() % unit != 0) {
      throw ShapeError(region.label() + " has " + std::to_string(weights.size()) +
                       " cells; weight balance for n=" + std::to_string(n) +
                       " needs a multiple of " + std::to_string(unit));
    }
    const auto counts = weight_counts(weights, n);
    bool pass = true;
    for (std::size_t k = 0; k <= n; ++k) {
      pass = pass && counts[k] == binomial(n, k) * (weights.size() / unit);
    }
    out.push_back({region, pass});
  }
  return out;
}

}  // namespace genemagic
