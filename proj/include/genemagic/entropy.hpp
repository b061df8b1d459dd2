#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "genemagic/error.hpp"
#include "genemagic/grid.hpp"
#include "genemagic/magic.hpp"
#include "genemagic/matrix.hpp"
#include "genemagic/region.hpp"

namespace genemagic {

using Rational = boost::rational<std::int64_t>;

/// Cells of a magic grid divided by its magic sum, kept exact as
/// numerator / common denominator.
struct ProbabilityGrid {
  std::string source;
  Notation notation = Notation::dec;
  Matrix<std::uint64_t> numerators;
  std::uint64_t denominator = 1;

  [[nodiscard]] std::size_t side() const noexcept { return numerators.side(); }

  [[nodiscard]] Rational probability(std::size_t r, std::size_t c) const {
    return {static_cast<std::int64_t>(numerators(r, c)), static_cast<std::int64_t>(denominator)};
  }

  /// Exact sum of the probabilities over a region.
  [[nodiscard]] Rational total(const Region& region) const {
    std::uint64_t num = 0;
    for (auto v : values_of(numerators, region)) num = detail::checked_add(num, v);
    return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(denominator)};
  }
};

/// Divides every cell by the magic sum. Rows and columns must share one sum;
/// otherwise PreconditionError names the first line that disagrees.
[[nodiscard]] inline ProbabilityGrid normalize(const NumericGrid& g) {
  const std::size_t n = g.side();
  if (n == 0) throw PreconditionError("cannot normalize an empty grid");
  const auto reference = region_sums(g.values, Region::row(0)).sum;
  for (const auto& line : lines(n)) {
    if (line.kind == RegionKind::main_diagonal || line.kind == RegionKind::anti_diagonal) continue;
    const auto s = region_sums(g.values, line).sum;
    if (s != reference) {
      throw PreconditionError("grid " + (g.source.empty() ? std::string("<input>") : g.source) +
                              " is not magic under " + std::string(to_string(g.notation)) +
                              ": row 1 sums to " + std::to_string(reference) + " but " +
                              line.label() + " sums to " + std::to_string(s));
    }
  }
  if (reference == 0) throw PreconditionError("magic sum is zero");
  if (reference > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw RangeError("magic sum " + std::to_string(reference) + " exceeds the exact rational range");
  }
  return {g.source, g.notation, g.values, reference};
}

[[nodiscard]] inline ProbabilityGrid normalize(const Grid& grid, Notation notation) {
  return normalize(render(grid, notation));
}

/// -p log10 p for p = num/den, with 0 log 0 = 0. Evaluated from the exact
/// fraction, never from a rounded probability.
[[nodiscard]] inline double entropy_term(std::uint64_t num, std::uint64_t den) {
  if (num == 0) return 0.0;
  const long double p = static_cast<long double>(num) / static_cast<long double>(den);
  const long double log_ratio =
      std::log10(static_cast<long double>(den)) - std::log10(static_cast<long double>(num));
  return static_cast<double>(p * log_ratio);
}

struct OrderIndex {
  std::vector<Rational> rows;
  std::vector<Rational> columns;
  std::vector<Rational> diagonals;  // main, anti
};

/// Sum of p^2 over a region, exact.
[[nodiscard]] inline Rational order_index(const ProbabilityGrid& p, const Region& region) {
  std::uint64_t num = 0;
  for (auto v : values_of(p.numerators, region)) {
    num = detail::checked_add(num, detail::checked_mul(v, v));
  }
  const auto den = detail::checked_mul(p.denominator, p.denominator);
  constexpr auto kMax = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  if (num > kMax || den > kMax) throw RangeError("order index exceeds the exact rational range");
  return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

/// Genome order index S(P) for every row, column and main diagonal.
[[nodiscard]] inline OrderIndex order_index(const ProbabilityGrid& p) {
  OrderIndex out;
  for (const auto& r : rows(p.side())) out.rows.push_back(order_index(p, r));
  for (const auto& r : columns(p.side())) out.columns.push_back(order_index(p, r));
  for (const auto& r : diagonals()) out.diagonals.push_back(order_index(p, r));
  return out;
}

struct EntropyReport {
  Matrix<double> terms;
  std::vector<double> row_sums;
  std::vector<double> col_sums;
  std::vector<double> diag_sums;  // main, anti
  std::vector<Rational> order_index_rows;
};

[[nodiscard]] inline EntropyReport shannon_report(const ProbabilityGrid& p) {
  EntropyReport out;
  const std::size_t n = p.side();
  out.terms = Matrix<double>(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.terms(r, c) = entropy_term(p.numerators(r, c), p.denominator);
  }
  const auto line_sum = [&](const Region& region) {
    double s = 0.0;
    for (auto t : values_of(out.terms, region)) s += t;
    return s;
  };
  for (const auto& r : rows(n)) out.row_sums.push_back(line_sum(r));
  for (const auto& r : columns(n)) out.col_sums.push_back(line_sum(r));
  for (const auto& r : diagonals()) out.diag_sums.push_back(line_sum(r));
  for (const auto& r : rows(n)) out.order_index_rows.push_back(order_index(p, r));
  return out;
}

/// Display decimals used for entropy tables: 4 up to 8x8, 5 beyond.
[[nodiscard]] constexpr int display_precision(std::size_t side) noexcept { return side > 8 ? 5 : 4; }

[[nodiscard]] inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace genemagic
