#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genemagic/entropy.hpp"
#include "genemagic/enzyme.hpp"
#include "genemagic/genetic_code.hpp"
#include "genemagic/grid.hpp"
#include "genemagic/hamming.hpp"
#include "genemagic/magic.hpp"
#include "genemagic/report.hpp"
#include "genemagic/structure.hpp"
#include "genemagic/tables.hpp"

namespace genemagic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { text, csv, json, md };

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "md") return OutputFormat::md;
  throw UsageError("unknown format '" + s + "' (expected text, csv, json or md)");
}

struct TableSource {
  std::string id;
  std::string input;

  void attach(CLI::App* cmd) {
    cmd->add_option("table", id, "Canonical table id (M1, M2, M3, R4, R8A, R8B, R16, ENZ)");
    cmd->add_option("--input", input, "Grid file in the n=<len> size=<N> text format");
  }

  [[nodiscard]] Grid load() const {
    if (id.empty() == input.empty()) {
      throw UsageError("give exactly one of a table id or --input FILE");
    }
    if (!id.empty()) return load_canonical(parse_canonical_id(id));
    std::ifstream in(input);
    if (!in) throw UsageError("cannot read grid file '" + input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    Grid g = parse_grid(buf.str());
    if (g.name.empty()) g.name = input;
    return g;
  }
};

inline report::DecimalStyle decimal_style(std::size_t side, bool comma) {
  report::DecimalStyle style{display_precision(side), comma};
  if (const char* env = std::getenv("GENEMAGIC_PRECISION"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const int p = std::stoi(env, &used);
      if (used != std::string(env).size() || p < 0 || p > 17) throw std::invalid_argument(env);
      style.precision = p;
    } catch (const std::exception&) {
      throw UsageError(std::string("GENEMAGIC_PRECISION must be an integer in 0..17, got '") + env + "'");
    }
  }
  return style;
}

inline void print_json(std::ostream& out, const report::Json& j) { out << j.dump(2) << '\n'; }

inline std::string grid_csv(const Grid& g, std::optional<Notation> notation) {
  std::ostringstream out;
  for (std::size_t r = 0; r < g.side(); ++r) {
    for (std::size_t c = 0; c < g.side(); ++c) {
      if (c > 0) out << ',';
      out << (notation ? std::to_string(encode(g(r, c), *notation)) : g(r, c).str());
    }
    out << '\n';
  }
  return out.str();
}

inline std::string grid_markdown(const Grid& g, std::optional<Notation> notation) {
  std::ostringstream out;
  out << "## " << g.name << "\n\n|";
  for (std::size_t c = 0; c < g.side(); ++c) out << ' ' << c + 1 << " |";
  out << "\n|";
  for (std::size_t c = 0; c < g.side(); ++c) out << "---|";
  out << '\n';
  for (std::size_t r = 0; r < g.side(); ++r) {
    out << '|';
    for (std::size_t c = 0; c < g.side(); ++c) {
      out << ' ' << (notation ? std::to_string(encode(g(r, c), *notation)) : g(r, c).str()) << " |";
    }
    out << '\n';
  }
  return out.str();
}

inline report::Json grid_json(const Grid& g, std::optional<Notation> notation) {
  report::Json rows = report::Json::array();
  for (std::size_t r = 0; r < g.side(); ++r) {
    report::Json row = report::Json::array();
    for (std::size_t c = 0; c < g.side(); ++c) {
      if (notation) {
        row.push_back(encode(g(r, c), *notation));
      } else {
        row.push_back(g(r, c).str());
      }
    }
    rows.push_back(std::move(row));
  }
  return report::Json{{"grid", g.name},
                      {"n", g.word_len},
                      {"size", g.side()},
                      {"notation", notation ? report::Json(to_string(*notation)) : report::Json(nullptr)},
                      {"rows", std::move(rows)}};
}

}  // namespace detail

/// Runs the command line `args` (program name excluded). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when --strict verification
/// fails, 2 on usage or input errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of genetic-code tables: magic sums, Latin structure, Hamming weights, "
               "entropy and antiparallel tetramers."};
  app.name("genemagic");
  app.require_subcommand(1);

  std::string format_text = "text";
  std::string notation_text;
  bool strict = false;
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_text, "Output format: text, csv, json or md");
  };

  auto* list_cmd = app.add_subcommand("list", "List the embedded tables");
  add_format(list_cmd);

  detail::TableSource source;

  auto* show_cmd = app.add_subcommand("show", "Print a table, as letters or under a notation");
  source.attach(show_cmd);
  show_cmd->add_option("--notation", notation_text, "bin, digit or dec");
  add_format(show_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Exact S1/S2 magic and bimagic verification");
  source.attach(verify_cmd);
  verify_cmd->add_option("--notation", notation_text, "bin, digit or dec (default dec)");
  add_format(verify_cmd);
  verify_cmd->add_flag("--strict", strict, "Exit 1 unless the grid is magic");
  std::size_t block_k = 0;
  std::string rect_spec;
  bool with_structure = false;
  verify_cmd->add_option("--block", block_k, "Report aligned k x k blocks");
  verify_cmd->add_option("--rect", rect_spec, "Report aligned RxC blocks, e.g. 2x4");
  verify_cmd->add_flag("--structure", with_structure,
                       "Report letter balance, Latin and XOR-grid structure instead of sums");

  auto* entropy_cmd = app.add_subcommand("entropy", "Shannon entropy and genome order index");
  source.attach(entropy_cmd);
  entropy_cmd->add_option("--notation", notation_text, "bin, digit or dec (default bin)");
  add_format(entropy_cmd);
  bool decimal_comma = false;
  bool cells = false;
  entropy_cmd->add_flag("--decimal-comma", decimal_comma, "Print decimals with a comma");
  entropy_cmd->add_flag("--cells", cells, "CSV: one line per cell instead of per line");

  auto* hamming_cmd = app.add_subcommand("hamming", "Hamming weights and binomial frequencies");
  source.attach(hamming_cmd);
  add_format(hamming_cmd);
  hamming_cmd->add_flag("--strict", strict, "Exit 1 unless frequencies match the binomial law");

  auto* enzymes_cmd = app.add_subcommand("enzymes", "Antiparallel restriction-site tetramers");
  std::string orientation_text;
  std::vector<std::string> tetramers;
  enzymes_cmd->add_option("--orientation", orientation_text, "same or opposite");
  enzymes_cmd->add_option("tetramers", tetramers, "Tetramers to classify");
  add_format(enzymes_cmd);

  auto* translate_cmd = app.add_subcommand("translate", "Translate codons with the standard code");
  std::vector<std::string> codons;
  translate_cmd->add_option("codons", codons, "Codons to translate")->required();
  add_format(translate_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "genemagic: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const auto format = detail::parse_format(format_text);
    const auto notation_or = [&](Notation fallback) {
      return notation_text.empty() ? fallback : parse_notation(notation_text);
    };

    if (list_cmd->parsed()) {
      report::Json j = report::Json::array();
      std::ostringstream text;
      for (auto id : kCanonicalTables) {
        const auto g = load_canonical(id);
        j.push_back(report::Json{{"id", to_string(id)}, {"n", g.word_len}, {"size", g.side()},
                                 {"complete", g.is_complete()}});
        text << to_string(id) << "  " << g.side() << "x" << g.side() << "  n=" << g.word_len
             << (g.is_complete() ? "  all words once" : "") << '\n';
      }
      if (format == OutputFormat::json) {
        detail::print_json(out, j);
      } else if (format == OutputFormat::csv) {
        out << "id,n,size,complete\n";
        for (const auto& e : j) {
          out << e["id"].get<std::string>() << ',' << e["n"].get<std::size_t>() << ','
              << e["size"].get<std::size_t>() << ',' << (e["complete"].get<bool>() ? "true" : "false") << '\n';
        }
      } else {
        out << text.str();
      }
      return kExitOk;
    }

    if (show_cmd->parsed()) {
      const auto grid = source.load();
      std::optional<Notation> notation;
      if (!notation_text.empty()) notation = parse_notation(notation_text);
      switch (format) {
        case OutputFormat::text: out << serialize_grid(grid, notation); break;
        case OutputFormat::csv: out << detail::grid_csv(grid, notation); break;
        case OutputFormat::json: detail::print_json(out, detail::grid_json(grid, notation)); break;
        case OutputFormat::md: out << detail::grid_markdown(grid, notation); break;
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const auto grid = source.load();
      if (with_structure) {
        const auto s = structure_report(grid);
        switch (format) {
          case OutputFormat::json: detail::print_json(out, report::structure_json(s)); break;
          case OutputFormat::md: out << report::structure_markdown(s); break;
          case OutputFormat::csv:
            out << "place,region,pass\n";
            for (const auto& p : s.places) {
              for (const auto& v : p.regions) {
                out << p.place << ',' << v.region.label() << ',' << (v.pass ? "true" : "false") << '\n';
              }
            }
            break;
          case OutputFormat::text: out << report::structure_text(s); break;
        }
        bool ok = true;
        for (const auto& p : s.places) ok = ok && all_pass(p.regions);
        if (strict && !ok) throw detail::VerificationFailed(grid.name + " has unbalanced regions");
        return kExitOk;
      }

      const auto notation = notation_or(Notation::dec);
      if (block_k != 0 || !rect_spec.empty()) {
        std::size_t h = block_k;
        std::size_t w = block_k;
        if (!rect_spec.empty()) {
          const auto x = rect_spec.find('x');
          try {
            if (x == std::string::npos) throw std::invalid_argument(rect_spec);
            h = std::stoul(rect_spec.substr(0, x));
            w = std::stoul(rect_spec.substr(x + 1));
          } catch (const std::exception&) {
            throw detail::UsageError("--rect expects RxC, e.g. 2x4; got '" + rect_spec + "'");
          }
        }
        const auto stats = block_report(render(grid, notation), h, w);
        report::Json j = report::Json::array();
        for (const auto& b : stats) {
          report::Json e{{"block", b.totals.region.index + 1},
                         {"sum", b.totals.sum},
                         {"square_sum", b.totals.square_sum}};
          if (b.magic_subsquare) {
            e["magic_subsquare"] = *b.magic_subsquare;
            e["line_sum"] = b.line_sum ? report::Json(*b.line_sum) : report::Json(nullptr);
          }
          j.push_back(std::move(e));
        }
        if (format == OutputFormat::json) {
          detail::print_json(out, report::Json{{"grid", grid.name},
                                               {"notation", to_string(notation)},
                                               {"block", std::to_string(h) + "x" + std::to_string(w)},
                                               {"blocks", j}});
        } else {
          out << (format == OutputFormat::md ? "| block | sum | square sum | line sum |\n|---:|---:|---:|---:|\n"
                                             : format == OutputFormat::csv ? "block,sum,square_sum,line_sum\n" : "");
          for (const auto& e : j) {
            const std::string line_sum = e.contains("line_sum") && !e["line_sum"].is_null()
                                             ? std::to_string(e["line_sum"].get<std::uint64_t>())
                                             : "";
            if (format == OutputFormat::md) {
              out << "| " << e["block"] << " | " << e["sum"] << " | " << e["square_sum"] << " | "
                  << line_sum << " |\n";
            } else if (format == OutputFormat::csv) {
              out << e["block"] << ',' << e["sum"] << ',' << e["square_sum"] << ',' << line_sum << '\n';
            } else {
              out << "block " << e["block"] << ": sum " << e["sum"] << ", square sum " << e["square_sum"];
              if (!line_sum.empty()) out << ", magic with line sum " << line_sum;
              out << '\n';
            }
          }
        }
        return kExitOk;
      }

      const auto rep = analyze(grid, notation);
      switch (format) {
        case OutputFormat::text: out << report::magic_text(rep); break;
        case OutputFormat::csv: out << report::magic_csv(rep); break;
        case OutputFormat::json: detail::print_json(out, report::magic_json(rep)); break;
        case OutputFormat::md: out << report::magic_markdown(rep); break;
      }
      if (strict && !rep.verdict.magic) {
        throw detail::VerificationFailed(grid.name + " is not magic under " + std::string(to_string(notation)));
      }
      return kExitOk;
    }

    if (entropy_cmd->parsed()) {
      const auto grid = source.load();
      const auto notation = notation_or(Notation::bin);
      ProbabilityGrid p;
      try {
        p = normalize(grid, notation);
      } catch (const PreconditionError& e) {
        throw detail::VerificationFailed(e.what());
      }
      const auto bundle = report::entropy_bundle(p);
      const auto style = detail::decimal_style(grid.side(), decimal_comma);
      switch (format) {
        case OutputFormat::text: out << report::entropy_text(bundle, style); break;
        case OutputFormat::csv:
          out << (cells ? report::entropy_cells_csv(bundle, style) : report::entropy_csv(bundle, style));
          break;
        case OutputFormat::json: detail::print_json(out, report::entropy_json(bundle, style)); break;
        case OutputFormat::md: out << report::entropy_table(bundle, style, true); break;
      }
      return kExitOk;
    }

    if (hamming_cmd->parsed()) {
      const auto grid = source.load();
      switch (format) {
        case OutputFormat::text: out << report::hamming_text(grid); break;
        case OutputFormat::csv: out << report::weight_csv(weight_grid(grid)); break;
        case OutputFormat::json: detail::print_json(out, report::hamming_json(grid)); break;
        case OutputFormat::md: out << report::hamming_markdown(grid); break;
      }
      if (strict && !frequency_distribution(grid).match) {
        throw detail::VerificationFailed(grid.name + " does not follow the binomial weight law");
      }
      return kExitOk;
    }

    if (enzymes_cmd->parsed()) {
      std::optional<Orientation> only;
      if (orientation_text == "same") {
        only = Orientation::same;
      } else if (orientation_text == "opposite") {
        only = Orientation::opposite;
      } else if (!orientation_text.empty()) {
        throw detail::UsageError("--orientation must be same or opposite");
      }
      if (!tetramers.empty()) {
        report::Json j = report::Json::array();
        for (const auto& t : tetramers) {
          const auto w = Word::parse(t);
          const auto rec = find_enzyme(w);
          j.push_back(report::Json{{"tetramer", w.str()},
                                   {"classification", to_string(classify(w))},
                                   {"antiparallel", antiparallel_check(w)},
                                   {"enzyme_count", rec ? report::Json(rec->enzyme_count) : report::Json(nullptr)}});
        }
        if (format == OutputFormat::json) {
          detail::print_json(out, j);
        } else {
          if (format == OutputFormat::csv) out << "tetramer,classification,antiparallel,enzyme_count\n";
          for (const auto& e : j) {
            const std::string count = e["enzyme_count"].is_null() ? "" : std::to_string(e["enzyme_count"].get<int>());
            if (format == OutputFormat::csv) {
              out << e["tetramer"].get<std::string>() << ',' << e["classification"].get<std::string>() << ','
                  << (e["antiparallel"].get<bool>() ? "true" : "false") << ',' << count << '\n';
            } else {
              out << e["tetramer"].get<std::string>() << ": " << e["classification"].get<std::string>()
                  << (e["antiparallel"].get<bool>() ? ", antiparallel" : ", not antiparallel")
                  << (count.empty() ? "" : ", " + count + " enzymes") << '\n';
            }
          }
        }
        return kExitOk;
      }
      switch (format) {
        case OutputFormat::text: out << report::enzymes_text(only, false); break;
        case OutputFormat::csv: out << report::enzymes_csv(only); break;
        case OutputFormat::json: detail::print_json(out, report::enzymes_json(only)); break;
        case OutputFormat::md: out << report::enzymes_text(only, true); break;
      }
      return kExitOk;
    }

    if (translate_cmd->parsed()) {
      report::Json j = report::Json::array();
      for (const auto& c : codons) {
        const auto w = Word::parse(c);
        j.push_back(report::Json{{"codon", w.str()}, {"amino_acid", translate(w)}});
      }
      if (format == OutputFormat::json) {
        detail::print_json(out, j);
      } else {
        if (format == OutputFormat::csv) out << "codon,amino_acid\n";
        if (format == OutputFormat::md) out << "| codon | amino acid |\n|---|---|\n";
        for (const auto& e : j) {
          const auto codon = e["codon"].get<std::string>();
          const auto aa = e["amino_acid"].get<std::string>();
          if (format == OutputFormat::csv) {
            out << codon << ',' << aa << '\n';
          } else if (format == OutputFormat::md) {
            out << "| " << codon << " | " << aa << " |\n";
          } else {
            out << codon << ' ' << aa << '\n';
          }
        }
      }
      return kExitOk;
    }
  } catch (const detail::VerificationFailed& e) {
    err << "genemagic: verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const detail::UsageError& e) {
    err << "genemagic: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "genemagic: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace genemagic::cli
