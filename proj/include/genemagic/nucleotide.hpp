#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "genemagic/error.hpp"

namespace genemagic {

/// A DNA base. The enumerator value is the base's two-bit code.
enum class Nucleotide : std::uint8_t { C = 0, A = 1, T = 2, G = 3 };

inline constexpr std::array<Nucleotide, 4> kNucleotides = {Nucleotide::C, Nucleotide::A,
                                                          Nucleotide::T, Nucleotide::G};

[[nodiscard]] constexpr char to_char(Nucleotide n) noexcept {
  constexpr std::array<char, 4> letters = {'C', 'A', 'T', 'G'};
  return letters[static_cast<std::size_t>(n)];
}

/// Two-bit code: C=00, A=01, T=10, G=11.
[[nodiscard]] constexpr unsigned bits(Nucleotide n) noexcept { return static_cast<unsigned>(n); }

[[nodiscard]] constexpr unsigned high_bit(Nucleotide n) noexcept { return bits(n) >> 1U; }
[[nodiscard]] constexpr unsigned low_bit(Nucleotide n) noexcept { return bits(n) & 1U; }

/// Single-digit code: C=1, A=2, T=3, G=4.
[[nodiscard]] constexpr unsigned digit(Nucleotide n) noexcept { return bits(n) + 1U; }

/// Watson-Crick partner: C<->G, A<->T.
[[nodiscard]] constexpr Nucleotide complement(Nucleotide n) noexcept {
  return static_cast<Nucleotide>(3U - bits(n));
}

/// A and T are the letters whose two code bits differ.
[[nodiscard]] constexpr bool is_weak(Nucleotide n) noexcept { return high_bit(n) != low_bit(n); }

/// Parses one letter. Lowercase is accepted, and U is read as T.
[[nodiscard]] inline Nucleotide parse_nucleotide(char c) {
  switch (c) {
    case 'C': case 'c': return Nucleotide::C;
    case 'A': case 'a': return Nucleotide::A;
    case 'T': case 't': case 'U': case 'u': return Nucleotide::T;
    case 'G': case 'g': return Nucleotide::G;
    default:
      throw ParseError(std::string("invalid nucleotide letter '") + c + "'");
  }
}

/// Fixed-length sequence of nucleotides, length >= 1.
class Word {
 public:
  Word() = default;

  explicit Word(std::vector<Nucleotide> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw ParseError("a word needs at least one letter");
  }

  /// Parses the text form (letters, no separators).
  [[nodiscard]] static Word parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty word");
    std::vector<Nucleotide> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      try {
        letters.push_back(parse_nucleotide(text[i]));
      } catch (const ParseError&) {
        throw ParseError("invalid nucleotide letter '" + std::string(1, text[i]) +
                         "' at position " + std::to_string(i + 1) + " of \"" +
                         std::string(text) + "\"");
      }
    }
    return Word(std::move(letters));
  }

  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] Nucleotide operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] const std::vector<Nucleotide>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  [[nodiscard]] std::string str() const {
    std::string out;
    out.reserve(letters_.size());
    for (auto n : letters_) out.push_back(to_char(n));
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Nucleotide> letters_;
};

enum class Notation { bin, digit, dec };

inline constexpr std::array<Notation, 3> kNotations = {Notation::bin, Notation::digit,
                                                      Notation::dec};

[[nodiscard]] constexpr std::string_view to_string(Notation n) noexcept {
  switch (n) {
    case Notation::bin: return "bin";
    case Notation::digit: return "digit";
    case Notation::dec: return "dec";
  }
  return "?";
}

[[nodiscard]] inline Notation parse_notation(std::string_view s) {
  std::string lower(s);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "bin") return Notation::bin;
  if (lower == "digit") return Notation::digit;
  if (lower == "dec") return Notation::dec;
  throw ParseError("unknown notation '" + std::string(s) + "' (expected bin, digit or dec)");
}

/// Longest word whose BIN numeral (2n decimal digits) fits a 64-bit integer.
inline constexpr std::size_t kMaxEncodableLength = 9;

/// Concatenated two-bit codes, e.g. TTA -> "101001".
[[nodiscard]] inline std::string bit_string(const Word& w) {
  std::string out;
  out.reserve(2 * w.size());
  for (auto n : w) {
    out.push_back(static_cast<char>('0' + high_bit(n)));
    out.push_back(static_cast<char>('0' + low_bit(n)));
  }
  return out;
}

/// Numeric value of a word under a notation.
///
/// BIN reads the bit string as a base-10 numeral (TTA -> 101001), DIGIT reads
/// the 1..4 digit string as a base-10 numeral (TAT -> 323) and DEC reads the
/// bit string in base 2 and adds one (TTA -> 42 - 1 = 41). Words longer than
/// kMaxEncodableLength raise RangeError.
[[nodiscard]] inline std::uint64_t encode(const Word& w, Notation notation) {
  if (w.size() > kMaxEncodableLength) {
    throw RangeError("word length " + std::to_string(w.size()) +
                     " exceeds the encodable limit of " +
                     std::to_string(kMaxEncodableLength) + " letters");
  }
  std::uint64_t value = 0;
  switch (notation) {
    case Notation::bin:
      for (auto n : w) value = value * 100 + 10 * high_bit(n) + low_bit(n);
      return value;
    case Notation::digit:
      for (auto n : w) value = value * 10 + digit(n);
      return value;
    case Notation::dec:
      for (auto n : w) value = (value << 2U) | bits(n);
      return value + 1;
  }
  return value;
}

/// Pair of n-bit strings: first bit of every letter, second bit of every letter.
struct GrayPair {
  std::string top;
  std::string bottom;

  friend bool operator==(const GrayPair&, const GrayPair&) = default;
};

[[nodiscard]] inline GrayPair gray_pair(const Word& w) {
  GrayPair p;
  for (auto n : w) {
    p.top.push_back(static_cast<char>('0' + high_bit(n)));
    p.bottom.push_back(static_cast<char>('0' + low_bit(n)));
  }
  return p;
}

/// Modulo-2 sum of the Gray pair rows; bit i is set iff letter i is A or T.
[[nodiscard]] inline std::string xor_reduce(const Word& w) {
  const auto p = gray_pair(w);
  std::string out(p.top.size(), '0');
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.top[i] == p.bottom[i] ? '0' : '1';
  return out;
}

/// Hamming distance between the Gray pair rows, i.e. the number of A/T letters.
[[nodiscard]] inline std::size_t hamming_weight(const Word& w) {
  std::size_t k = 0;
  for (auto n : w) k += is_weak(n) ? 1 : 0;
  return k;
}

[[nodiscard]] inline Word complement(const Word& w) {
  std::vector<Nucleotide> out;
  out.reserve(w.size());
  for (auto n : w) out.push_back(complement(n));
  return Word(std::move(out));
}

/// All 4^n words of length n in DEC order (CC..C first, GG..G last).
[[nodiscard]] inline std::vector<Word> all_words(std::size_t n) {
  if (n == 0 || n > kMaxEncodableLength) {
    throw RangeError("word length must be in 1.." + std::to_string(kMaxEncodableLength));
  }
  const std::size_t count = std::size_t{1} << (2 * n);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<Nucleotide> letters(n);
    for (std::size_t i = 0; i < n; ++i) {
      letters[n - 1 - i] = static_cast<Nucleotide>((code >> (2 * i)) & 3U);
    }
    out.emplace_back(std::move(letters));
  }
  return out;
}

}  // namespace genemagic
