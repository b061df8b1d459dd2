#pragma once

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "genemagic/enzyme.hpp"
#include "genemagic/entropy.hpp"
#include "genemagic/grid.hpp"
#include "genemagic/hamming.hpp"
#include "genemagic/magic.hpp"
#include "genemagic/structure.hpp"

// Renderers for the CLI: JSON (stable key order), CSV, markdown and plain
// text. Every list is emitted in a fixed order so output is reproducible.

namespace genemagic::report {

using Json = nlohmann::ordered_json;

struct DecimalStyle {
  int precision = 4;
  bool comma = false;
};

[[nodiscard]] inline std::string format_decimal(double value, DecimalStyle style) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(style.precision) << value;
  auto s = out.str();
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  if (style.comma) {
    for (auto& c : s) {
      if (c == '.') c = ',';
    }
  }
  return s;
}

namespace detail {

inline Json optional_json(const std::optional<std::uint64_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline std::string optional_text(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

inline std::string kind_of(const Region& r) {
  if (r.kind == RegionKind::block) {
    return "block_" + std::to_string(r.height) + "x" + std::to_string(r.width);
  }
  return std::string(to_string(r.kind));
}

/// 1-based ordinal of the region within its family.
inline std::size_t index_of(const Region& r) {
  switch (r.kind) {
    case RegionKind::half_row:
    case RegionKind::half_column:
    case RegionKind::half_diagonal:
      return 2 * r.index + r.part + 1;
    default:
      return r.index + 1;
  }
}

inline Json region_json(const RegionSums& s) {
  return Json{{"kind", kind_of(s.region)},
              {"index", index_of(s.region)},
              {"sum", s.sum},
              {"square_sum", s.square_sum}};
}

inline Json rational_json(const Rational& r, DecimalStyle style) {
  return Json{{"numerator", r.numerator()},
              {"denominator", r.denominator()},
              {"decimal", format_decimal(to_double(r), style)}};
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

// ---------------------------------------------------------------- magic

[[nodiscard]] inline Json magic_json(const MagicReport& r) {
  Json regions = Json::array();
  for (const auto* group : {&r.row_sums, &r.column_sums, &r.diagonal_sums}) {
    for (const auto& s : *group) regions.push_back(detail::region_json(s));
  }
  for (const auto& [k, stats] : r.block_sums) {
    for (const auto& b : stats) {
      auto j = detail::region_json(b.totals);
      if (b.magic_subsquare) {
        j["magic_subsquare"] = *b.magic_subsquare;
        j["line_sum"] = detail::optional_json(b.line_sum);
      }
      regions.push_back(std::move(j));
    }
  }
  for (const auto& s : r.half_line_sums) regions.push_back(detail::region_json(s));

  Json divisibility = Json::array();
  for (const auto& d : r.divisibility) {
    divisibility.push_back(Json{{"value", d.value}, {"quotient", d.quotient}});
  }
  return Json{{"grid", r.source},
              {"notation", to_string(r.notation)},
              {"s1", detail::optional_json(r.s1)},
              {"s2", detail::optional_json(r.s2)},
              {"s2_columns", detail::optional_json(r.s2_columns)},
              {"verdicts",
               Json{{"magic", r.verdict.magic},
                    {"bimagic", r.verdict.bimagic},
                    {"column_bimagic", r.verdict.column_bimagic}}},
              {"regions", std::move(regions)},
              {"divisibility", std::move(divisibility)}};
}

[[nodiscard]] inline std::string magic_csv(const MagicReport& r) {
  std::ostringstream out;
  out << "kind,index,sum,square_sum\n";
  for (const auto& j : magic_json(r)["regions"]) {
    out << j["kind"].get<std::string>() << ',' << j["index"].get<std::size_t>() << ','
        << j["sum"].get<std::uint64_t>() << ',' << j["square_sum"].get<std::uint64_t>() << '\n';
  }
  return out.str();
}

namespace detail {

inline std::string sum_statement(const std::string& label, std::size_t side,
                                 const std::optional<std::uint64_t>& v) {
  std::string s = label + "^{" + std::to_string(side) + "x" + std::to_string(side) + "} := ";
  if (!v) return s + "(not constant)";
  s += std::to_string(*v);
  if (auto q = quotient_by_37(*v); q && *v != 0) s += " = " + std::to_string(*q) + " x 37";
  return s;
}

inline std::string join_sums(const std::vector<RegionSums>& v, bool squares) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(squares ? s.square_sum : s.sum);
  }
  return out;
}

}  // namespace detail

[[nodiscard]] inline std::string magic_text(const MagicReport& r) {
  std::ostringstream out;
  out << "grid " << r.source << " (" << r.side << "x" << r.side << ", notation "
      << to_string(r.notation) << ")\n";
  out << "  magic: " << (r.verdict.magic ? "yes" : "no")
      << "  bimagic: " << (r.verdict.bimagic ? "yes" : "no")
      << "  column-bimagic: " << (r.verdict.column_bimagic ? "yes" : "no") << '\n';
  out << "  " << detail::sum_statement("S1", r.side, r.s1) << '\n';
  out << "  " << detail::sum_statement("S2", r.side, r.s2) << '\n';
  if (!r.s2 && r.s2_columns) out << "  " << detail::sum_statement("S2 (columns)", r.side, r.s2_columns) << '\n';
  out << "  row sums:           " << detail::join_sums(r.row_sums, false) << '\n';
  out << "  column sums:        " << detail::join_sums(r.column_sums, false) << '\n';
  out << "  diagonal sums:      " << detail::join_sums(r.diagonal_sums, false) << '\n';
  out << "  row square-sums:    " << detail::join_sums(r.row_sums, true) << '\n';
  out << "  column square-sums: " << detail::join_sums(r.column_sums, true) << '\n';
  out << "  diagonal sq-sums:   " << detail::join_sums(r.diagonal_sums, true) << '\n';
  for (const auto& [k, stats] : r.block_sums) {
    std::vector<RegionSums> totals;
    bool all_magic = true;
    for (const auto& b : stats) {
      totals.push_back(b.totals);
      all_magic = all_magic && b.magic_subsquare.value_or(false);
    }
    out << "  " << k << "x" << k << " block totals: " << detail::join_sums(totals, false);
    if (k >= 3) out << (all_magic ? "  (all magic subsquares)" : "  (not all magic)");
    out << '\n';
  }
  if (!r.half_line_sums.empty()) {
    out << "  half-line sums:     " << detail::join_sums(r.half_line_sums, false) << '\n';
  }
  out << "  multiples of 37:   ";
  if (r.divisibility.empty()) out << " none";
  for (const auto& d : r.divisibility) out << ' ' << d.value << "=" << d.quotient << "x37";
  out << '\n';
  return out.str();
}

[[nodiscard]] inline std::string magic_markdown(const MagicReport& r) {
  std::ostringstream out;
  out << "## " << r.source << " under " << to_string(r.notation) << "\n\n";
  out << "- " << detail::sum_statement("S1", r.side, r.s1) << "\n";
  out << "- " << detail::sum_statement("S2", r.side, r.s2) << "\n";
  if (!r.s2 && r.s2_columns) out << "- " << detail::sum_statement("S2 (columns)", r.side, r.s2_columns) << "\n";
  out << "- magic: " << (r.verdict.magic ? "yes" : "no") << ", bimagic: "
      << (r.verdict.bimagic ? "yes" : "no") << ", column-bimagic: "
      << (r.verdict.column_bimagic ? "yes" : "no") << "\n\n";
  out << "| region | sum | square sum |\n|---|---:|---:|\n";
  for (const auto& j : magic_json(r)["regions"]) {
    out << "| " << j["kind"].get<std::string>() << ' ' << j["index"].get<std::size_t>() << " | "
        << j["sum"].get<std::uint64_t>() << " | " << j["square_sum"].get<std::uint64_t>() << " |\n";
  }
  if (!r.divisibility.empty()) {
    out << "\n| value | quotient by 37 |\n|---:|---:|\n";
    for (const auto& d : r.divisibility) out << "| " << d.value << " | " << d.quotient << " |\n";
  }
  return out.str();
}

// ------------------------------------------------------------ structure

namespace detail {

inline Json latin_json(const LatinResult& l) {
  return Json{{"latin", l.latin}, {"diagonal_latin", l.diagonal_latin}};
}

inline std::vector<std::string> symbol_rows(const SymbolGrid& g) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < g.side(); ++r) {
    std::string row;
    for (std::size_t c = 0; c < g.side(); ++c) {
      if (c > 0) row += ' ';
      row += g(r, c);
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace detail

[[nodiscard]] inline Json structure_json(const StructureReport& s) {
  Json places = Json::array();
  for (const auto& p : s.places) {
    Json regions = Json::array();
    for (const auto& v : p.regions) {
      regions.push_back(Json{{"region", v.region.label()}, {"pass", v.pass}});
    }
    places.push_back(Json{{"place", p.place}, {"latin", detail::latin_json(p.latin)}, {"regions", regions}});
  }
  Json ortho = Json::array();
  for (const auto& o : s.orthogonality) {
    ortho.push_back(Json{{"places", {o.first, o.second}}, {"orthogonal", o.orthogonal}});
  }
  Json out{{"grid", s.source}, {"places", places}, {"orthogonality", ortho}};
  if (s.xor_grid) {
    out["xor_grid"] = Json{{"rows", detail::symbol_rows(*s.xor_grid)},
                           {"latin", s.xor_latin ? detail::latin_json(*s.xor_latin) : Json(nullptr)}};
  }
  return out;
}

[[nodiscard]] inline std::string structure_text(const StructureReport& s) {
  std::ostringstream out;
  out << "structure of " << s.source << '\n';
  for (const auto& p : s.places) {
    std::size_t passed = 0;
    for (const auto& v : p.regions) passed += v.pass ? 1 : 0;
    out << "  place " << p.place << ": balanced in " << passed << "/" << p.regions.size()
        << " regions; latin " << (p.latin.latin ? "yes" : "no") << ", diagonal latin "
        << (p.latin.diagonal_latin ? "yes" : "no") << '\n';
    for (const auto& v : p.regions) {
      if (!v.pass) out << "    unbalanced: " << v.region.label() << '\n';
    }
  }
  for (const auto& o : s.orthogonality) {
    out << "  places " << o.first << " and " << o.second << ": "
        << (o.orthogonal ? "orthogonal" : "not orthogonal") << '\n';
  }
  if (s.xor_grid) {
    out << "  xor grid";
    if (s.xor_latin) {
      out << " (latin " << (s.xor_latin->latin ? "yes" : "no") << ", diagonal latin "
          << (s.xor_latin->diagonal_latin ? "yes" : "no") << ")";
    }
    out << ":\n";
    for (const auto& row : detail::symbol_rows(*s.xor_grid)) out << "    " << row << '\n';
  }
  return out.str();
}

[[nodiscard]] inline std::string structure_markdown(const StructureReport& s) {
  std::ostringstream out;
  out << "## Structure of " << s.source << "\n\n| place | region | balanced |\n|---:|---|---|\n";
  for (const auto& p : s.places) {
    for (const auto& v : p.regions) {
      out << "| " << p.place << " | " << v.region.label() << " | " << (v.pass ? "yes" : "no") << " |\n";
    }
  }
  return out.str();
}

// -------------------------------------------------------------- entropy

struct EntropyBundle {
  ProbabilityGrid probabilities;
  EntropyReport entropy;
  OrderIndex order;
};

[[nodiscard]] inline EntropyBundle entropy_bundle(const ProbabilityGrid& p) {
  return {p, shannon_report(p), order_index(p)};
}

[[nodiscard]] inline Json entropy_json(const EntropyBundle& b, DecimalStyle style) {
  const auto& p = b.probabilities;
  Json cells = Json::array();
  for (std::size_t r = 0; r < p.side(); ++r) {
    for (std::size_t c = 0; c < p.side(); ++c) {
      const auto q = p.probability(r, c);
      cells.push_back(Json{{"row", r + 1},
                           {"col", c + 1},
                           {"numerator", q.numerator()},
                           {"denominator", q.denominator()},
                           {"probability", format_decimal(to_double(q), style)},
                           {"term", format_decimal(b.entropy.terms(r, c), style)}});
    }
  }
  const auto lines_json = [&](const std::vector<double>& h, const std::vector<Rational>& s) {
    Json a = Json::array();
    for (std::size_t i = 0; i < h.size(); ++i) {
      a.push_back(Json{{"index", i + 1},
                       {"entropy", format_decimal(h[i], style)},
                       {"order_index", detail::rational_json(s[i], style)}});
    }
    return a;
  };
  return Json{{"grid", p.source},
              {"notation", to_string(p.notation)},
              {"magic_sum", p.denominator},
              {"log_base", 10},
              {"rows", lines_json(b.entropy.row_sums, b.order.rows)},
              {"columns", lines_json(b.entropy.col_sums, b.order.columns)},
              {"diagonals", lines_json(b.entropy.diag_sums, b.order.diagonals)},
              {"cells", std::move(cells)}};
}

/// One line per row, column and diagonal: entropy and order index.
[[nodiscard]] inline std::string entropy_csv(const EntropyBundle& b, DecimalStyle style) {
  std::ostringstream out;
  out << "kind,index,entropy,order_index,order_index_numerator,order_index_denominator\n";
  const auto emit = [&](const char* kind, const std::vector<double>& h, const std::vector<Rational>& s) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      out << kind << ',' << i + 1 << ',' << detail::csv_escape(format_decimal(h[i], style)) << ','
          << detail::csv_escape(format_decimal(to_double(s[i]), style)) << ',' << s[i].numerator()
          << ',' << s[i].denominator() << '\n';
    }
  };
  emit("row", b.entropy.row_sums, b.order.rows);
  emit("column", b.entropy.col_sums, b.order.columns);
  emit("diagonal", b.entropy.diag_sums, b.order.diagonals);
  return out.str();
}

/// One line per cell: exact probability and entropy term.
[[nodiscard]] inline std::string entropy_cells_csv(const EntropyBundle& b, DecimalStyle style) {
  std::ostringstream out;
  out << "row,col,numerator,denominator,probability,term\n";
  const auto& p = b.probabilities;
  for (std::size_t r = 0; r < p.side(); ++r) {
    for (std::size_t c = 0; c < p.side(); ++c) {
      const auto q = p.probability(r, c);
      out << r + 1 << ',' << c + 1 << ',' << q.numerator() << ',' << q.denominator() << ','
          << detail::csv_escape(format_decimal(to_double(q), style)) << ','
          << detail::csv_escape(format_decimal(b.entropy.terms(r, c), style)) << '\n';
    }
  }
  return out.str();
}

/// Entropy-term table with row sums on the right, column sums underneath and
/// the two diagonal sums in the corners (anti-diagonal top right, main
/// diagonal bottom right).
[[nodiscard]] inline std::string entropy_table(const EntropyBundle& b, DecimalStyle style,
                                               bool markdown) {
  const auto& e = b.entropy;
  const std::size_t n = b.probabilities.side();
  std::ostringstream out;
  const auto row = [&](const std::vector<std::string>& cells) {
    if (markdown) {
      out << '|';
      for (const auto& c : cells) out << ' ' << c << " |";
    } else {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << (i ? "  " : "") << std::setw(style.precision + 3) << cells[i];
      }
    }
    out << '\n';
  };
  std::vector<std::string> header(n, "");
  header.push_back(format_decimal(e.diag_sums[1], style));
  row(header);
  if (markdown) {
    out << '|';
    for (std::size_t i = 0; i <= n; ++i) out << "---:|";
    out << '\n';
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::string> cells;
    for (std::size_t c = 0; c < n; ++c) cells.push_back(format_decimal(e.terms(r, c), style));
    cells.push_back(format_decimal(e.row_sums[r], style));
    row(cells);
  }
  std::vector<std::string> footer;
  for (auto v : e.col_sums) footer.push_back(format_decimal(v, style));
  footer.push_back(format_decimal(e.diag_sums[0], style));
  row(footer);
  return out.str();
}

[[nodiscard]] inline std::string entropy_text(const EntropyBundle& b, DecimalStyle style) {
  std::ostringstream out;
  const auto& p = b.probabilities;
  out << "entropy of " << p.source << " under " << to_string(p.notation) << " (magic sum "
      << p.denominator << ", log base 10)\n";
  out << entropy_table(b, style, false);
  out << "order index S(P) per row:";
  for (const auto& s : b.order.rows) out << ' ' << format_decimal(to_double(s), style);
  out << "\norder index S(P) per column:";
  for (const auto& s : b.order.columns) out << ' ' << format_decimal(to_double(s), style);
  out << '\n';
  return out.str();
}

// -------------------------------------------------------------- hamming

[[nodiscard]] inline Json frequency_json(const FrequencyTable& t) {
  return Json{{"n", t.n}, {"counts", t.counts}, {"binomial", t.expected}, {"match", t.match}};
}

[[nodiscard]] inline std::string weight_csv(const WeightGrid& w) {
  std::ostringstream out;
  out << "row,col,weight,monomial\n";
  for (std::size_t r = 0; r < w.side(); ++r) {
    for (std::size_t c = 0; c < w.side(); ++c) {
      out << r + 1 << ',' << c + 1 << ',' << w.weights(r, c) << ',' << w.monomial(r, c) << '\n';
    }
  }
  return out.str();
}

[[nodiscard]] inline Json hamming_json(const Grid& grid) {
  const auto w = weight_grid(grid);
  Json rows_json = Json::array();
  for (std::size_t r = 0; r < w.side(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < w.side(); ++c) row.push_back(Json{{"weight", w.weights(r, c)}, {"monomial", w.monomial(r, c)}});
    rows_json.push_back(std::move(row));
  }
  Json balance = Json::array();
  const std::size_t unit = std::size_t{1} << grid.word_len;
  std::vector<Region> regions;
  for (auto& r : lines(grid.side())) {
    if (grid.side() % unit == 0) regions.push_back(r);
  }
  for (std::size_t k = 2; k < grid.side(); ++k) {
    if (grid.side() % k == 0 && (k * k) % unit == 0) {
      for (auto& b : blocks(grid.side(), k)) regions.push_back(b);
    }
  }
  for (const auto& v : balance_report(grid, regions)) {
    balance.push_back(Json{{"region", v.region.label()}, {"pass", v.pass}});
  }
  return Json{{"grid", grid.name},
              {"frequency", frequency_json(frequency_distribution(grid))},
              {"weights", std::move(rows_json)},
              {"balance", std::move(balance)}};
}

[[nodiscard]] inline std::string hamming_text(const Grid& grid) {
  const auto w = weight_grid(grid);
  const auto f = frequency_distribution(grid);
  std::ostringstream out;
  out << "hamming weights of " << grid.name << " (n=" << grid.word_len << ")\n";
  std::size_t width = 0;
  for (std::size_t r = 0; r < w.side(); ++r) {
    for (std::size_t c = 0; c < w.side(); ++c) width = std::max(width, w.monomial(r, c).size());
  }
  for (std::size_t r = 0; r < w.side(); ++r) {
    out << ' ';
    for (std::size_t c = 0; c < w.side(); ++c) {
      out << ' ' << w.weights(r, c) << ':' << std::left << std::setw(static_cast<int>(width))
          << w.monomial(r, c) << std::right;
    }
    out << '\n';
  }
  out << "frequency by weight:";
  for (auto c : f.counts) out << ' ' << c;
  out << "\nbinomial x 2^n:     ";
  for (auto c : f.expected) out << ' ' << c;
  out << "\nmatch: " << (f.match ? "yes" : "no") << '\n';
  return out.str();
}

[[nodiscard]] inline std::string hamming_markdown(const Grid& grid) {
  const auto f = frequency_distribution(grid);
  std::ostringstream out;
  out << "## Hamming weights of " << grid.name << "\n\n| weight | monomial | count | C(n,k) x 2^n |\n|---:|---|---:|---:|\n";
  for (std::size_t k = 0; k <= f.n; ++k) {
    out << "| " << k << " | " << monomial_label(k, f.n) << " | " << f.counts[k] << " | " << f.expected[k] << " |\n";
  }
  return out.str();
}

// -------------------------------------------------------------- enzymes

[[nodiscard]] inline Json enzymes_json(std::optional<Orientation> only) {
  Json records = Json::array();
  for (const auto& rec : enzyme_table()) {
    if (only && rec.orientation != *only) continue;
    const auto w = Word::parse(rec.tetramer);
    records.push_back(Json{{"tetramer", rec.tetramer},
                           {"orientation", to_string(rec.orientation)},
                           {"enzyme_count", rec.enzyme_count},
                           {"encodings",
                            Json{{"bin", bit_string(w)},
                                 {"digit", encode(w, Notation::digit)},
                                 {"dec", encode(w, Notation::dec)}}}});
  }
  Json sums = Json::object();
  for (auto n : kNotations) {
    const auto s = orientation_sums(n);
    Json entry;
    if (!only || *only == Orientation::same) entry["same"] = s.same;
    if (!only || *only == Orientation::opposite) entry["opposite"] = s.opposite;
    sums[std::string(to_string(n))] = entry;
  }
  Json totals = Json::object();
  for (auto o : {Orientation::same, Orientation::opposite}) {
    if (only && o != *only) continue;
    totals[std::string(to_string(o))] =
        Json{{"listed", listed_total(o)},
             {"declared", o == Orientation::same ? kDeclaredSameTotal : kDeclaredOppositeTotal}};
  }
  return Json{{"records", std::move(records)}, {"sums", std::move(sums)}, {"enzyme_totals", std::move(totals)}};
}

[[nodiscard]] inline std::string enzymes_csv(std::optional<Orientation> only) {
  std::ostringstream out;
  out << "tetramer,orientation,enzyme_count,bin,digit,dec\n";
  for (const auto& rec : enzyme_table()) {
    if (only && rec.orientation != *only) continue;
    const auto w = Word::parse(rec.tetramer);
    out << rec.tetramer << ',' << to_string(rec.orientation) << ',' << rec.enzyme_count << ','
        << bit_string(w) << ',' << encode(w, Notation::digit) << ',' << encode(w, Notation::dec) << '\n';
  }
  return out.str();
}

[[nodiscard]] inline std::string enzymes_text(std::optional<Orientation> only, bool markdown) {
  std::ostringstream out;
  if (markdown) out << "| tetramer | orientation | enzymes | bin | digit | dec |\n|---|---|---:|---|---:|---:|\n";
  for (const auto& rec : enzyme_table()) {
    if (only && rec.orientation != *only) continue;
    const auto w = Word::parse(rec.tetramer);
    if (markdown) {
      out << "| " << rec.tetramer << " | " << to_string(rec.orientation) << " | " << rec.enzyme_count
          << " | " << bit_string(w) << " | " << encode(w, Notation::digit) << " | "
          << encode(w, Notation::dec) << " |\n";
    } else {
      out << rec.tetramer << "  " << std::left << std::setw(9) << to_string(rec.orientation) << std::right
          << std::setw(3) << rec.enzyme_count << "  " << bit_string(w) << "  " << encode(w, Notation::digit)
          << "  " << std::setw(3) << encode(w, Notation::dec) << '\n';
    }
  }
  out << (markdown ? "\n" : "");
  for (auto n : kNotations) {
    const auto s = orientation_sums(n);
    out << (markdown ? "- " : "") << "sum " << to_string(n) << ':';
    if (!only || *only == Orientation::same) out << " same=" << s.same;
    if (!only || *only == Orientation::opposite) out << " opposite=" << s.opposite;
    out << '\n';
  }
  return out.str();
}

}  // namespace genemagic::report
