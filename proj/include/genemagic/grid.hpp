#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "genemagic/error.hpp"
#include "genemagic/matrix.hpp"
#include "genemagic/nucleotide.hpp"

namespace genemagic {

/// Square arrangement of equal-length words.
struct Grid {
  std::string name;
  std::size_t word_len = 0;
  Matrix<Word> cells;
  /// Free-form comment lines carried through the text format.
  std::vector<std::string> notes;

  [[nodiscard]] std::size_t side() const noexcept { return cells.side(); }
  const Word& operator()(std::size_t r, std::size_t c) const { return cells(r, c); }

  [[nodiscard]] std::optional<Cell> find(const Word& w) const {
    for (std::size_t r = 0; r < side(); ++r) {
      for (std::size_t c = 0; c < side(); ++c) {
        if (cells(r, c) == w) return Cell{r, c};
      }
    }
    return std::nullopt;
  }

  /// True when the grid holds each of the 4^n words of its length exactly once.
  [[nodiscard]] bool is_complete() const {
    if (word_len == 0 || 2 * word_len >= 64) return false;
    if (cells.size() != (std::size_t{1} << (2 * word_len))) return false;
    std::set<Word> seen(cells.begin(), cells.end());
    return seen.size() == cells.size();
  }

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Builds a grid from rows of word text, validating shape and word length.
[[nodiscard]] inline Grid make_grid(std::string name,
                                    const std::vector<std::vector<std::string>>& rows) {
  const std::size_t side = rows.size();
  if (side == 0) throw ShapeError("grid has no rows");
  std::vector<Word> cells;
  cells.reserve(side * side);
  std::size_t word_len = 0;
  for (std::size_t r = 0; r < side; ++r) {
    if (rows[r].size() != side) {
      throw ShapeError("row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                       " cells, expected " + std::to_string(side));
    }
    for (const auto& text : rows[r]) {
      Word w = Word::parse(text);
      if (word_len == 0) word_len = w.size();
      if (w.size() != word_len) {
        throw ShapeError("row " + std::to_string(r + 1) + ": word \"" + text + "\" has length " +
                         std::to_string(w.size()) + ", expected " + std::to_string(word_len));
      }
      cells.push_back(std::move(w));
    }
  }
  return Grid{std::move(name), word_len, Matrix<Word>(side, std::move(cells)), {}};
}

struct ParseOptions {
  /// Reject grids that do not contain every word of their length exactly once.
  bool require_complete = false;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::size_t parse_size_field(std::string_view key, std::string_view value) {
  if (value.empty() || !std::all_of(value.begin(), value.end(),
                                    [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("header field '" + std::string(key) + "' needs a positive integer, got '" +
                     std::string(value) + "'");
  }
  const auto v = std::stoull(std::string(value));
  if (v == 0) throw ParseError("header field '" + std::string(key) + "' must be positive");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

/// Parses the line-oriented grid format:
///
///     # comment
///     n=2 size=4 [name=R4]
///     AT TG CC GA
///     ...
///
/// Blank lines and lines starting with '#' are skipped (comments are kept in
/// Grid::notes).
[[nodiscard]] inline Grid parse_grid(std::string_view text, ParseOptions options = {}) {
  std::vector<std::string> notes;
  std::optional<std::size_t> word_len;
  std::optional<std::size_t> side;
  std::string name;
  std::vector<Word> cells;
  std::size_t row = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto note = line.substr(1);
      if (!note.empty() && note.front() == ' ') note.remove_prefix(1);
      notes.emplace_back(note);
      continue;
    }
    const auto tokens = detail::split_ws(line);
    if (!side) {
      for (const auto& tok : tokens) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
          throw ParseError("line " + std::to_string(line_no) + ": expected header 'n=<len> size=<N>', got '" +
                           std::string(line) + "'");
        }
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        if (key == "n") {
          word_len = detail::parse_size_field(key, value);
        } else if (key == "size") {
          side = detail::parse_size_field(key, value);
        } else if (key == "name") {
          name = value;
        } else if (key == "notation") {
          throw ParseError("line " + std::to_string(line_no) +
                           ": numeral grids cannot be parsed back into words");
        } else {
          throw ParseError("line " + std::to_string(line_no) + ": unknown header field '" + key + "'");
        }
      }
      if (!word_len || !side) {
        throw ParseError("line " + std::to_string(line_no) + ": header needs both n= and size=");
      }
      cells.reserve(*side * *side);
      continue;
    }
    if (row >= *side) {
      throw ShapeError("line " + std::to_string(line_no) + ": more than " + std::to_string(*side) +
                       " rows");
    }
    if (tokens.size() != *side) {
      throw ShapeError("row " + std::to_string(row + 1) + " (line " + std::to_string(line_no) +
                       ") has " + std::to_string(tokens.size()) + " cells, expected " +
                       std::to_string(*side));
    }
    for (std::size_t c = 0; c < tokens.size(); ++c) {
      Word w;
      try {
        w = Word::parse(tokens[c]);
      } catch (const ParseError& e) {
        throw ParseError("row " + std::to_string(row + 1) + ", cell " + std::to_string(c + 1) +
                         ": " + e.what());
      }
      if (w.size() != *word_len) {
        throw ShapeError("row " + std::to_string(row + 1) + ", cell " + std::to_string(c + 1) +
                         ": word \"" + tokens[c] + "\" has length " + std::to_string(w.size()) +
                         ", expected " + std::to_string(*word_len));
      }
      cells.push_back(std::move(w));
    }
    ++row;
  }
  if (!side) throw ParseError("missing header line 'n=<len> size=<N>'");
  if (row != *side) {
    throw ShapeError("grid has " + std::to_string(row) + " rows, expected " + std::to_string(*side));
  }

  Grid grid{std::move(name), *word_len, Matrix<Word>(*side, std::move(cells)), std::move(notes)};
  if (options.require_complete) {
    std::set<Word> seen;
    for (std::size_t r = 0; r < grid.side(); ++r) {
      for (std::size_t c = 0; c < grid.side(); ++c) {
        if (!seen.insert(grid(r, c)).second) {
          throw DataError("duplicate word " + grid(r, c).str() + " at row " + std::to_string(r + 1) +
                          ", cell " + std::to_string(c + 1));
        }
      }
    }
    if (!grid.is_complete()) {
      throw DataError("grid does not contain all " + std::to_string(std::size_t{1} << (2 * grid.word_len)) +
                      " words of length " + std::to_string(grid.word_len));
    }
  }
  return grid;
}

/// Writes a grid in the text format. With a notation, cells are emitted as
/// right-aligned base-10 numerals and the header carries notation=<tag>.
[[nodiscard]] inline std::string serialize_grid(const Grid& grid,
                                                std::optional<Notation> notation = std::nullopt) {
  std::ostringstream out;
  for (const auto& note : grid.notes) out << (note.empty() ? "#" : "# " + note) << '\n';
  out << "n=" << grid.word_len << " size=" << grid.side();
  if (!grid.name.empty()) out << " name=" << grid.name;
  if (notation) out << " notation=" << to_string(*notation);
  out << '\n';

  std::vector<std::string> text;
  text.reserve(grid.cells.size());
  std::size_t width = 0;
  for (const auto& w : grid.cells) {
    text.push_back(notation ? std::to_string(encode(w, *notation)) : w.str());
    width = std::max(width, text.back().size());
  }
  for (std::size_t r = 0; r < grid.side(); ++r) {
    for (std::size_t c = 0; c < grid.side(); ++c) {
      const auto& cell = text[r * grid.side() + c];
      if (c > 0) out << ' ';
      if (notation) out << std::string(width - cell.size(), ' ');
      out << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace genemagic
