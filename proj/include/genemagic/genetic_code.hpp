#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "genemagic/error.hpp"
#include "genemagic/nucleotide.hpp"

namespace genemagic {

namespace detail {

// Standard code (NCBI table 1), codons enumerated with base order T, C, A, G.
inline constexpr std::string_view kStandardCode =
    "FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG";

constexpr std::size_t tcag_index(Nucleotide n) {
  switch (n) {
    case Nucleotide::T: return 0;
    case Nucleotide::C: return 1;
    case Nucleotide::A: return 2;
    case Nucleotide::G: return 3;
  }
  return 0;
}

constexpr std::string_view three_letter(char aa) {
  switch (aa) {
    case 'A': return "Ala"; case 'R': return "Arg"; case 'N': return "Asn";
    case 'D': return "Asp"; case 'C': return "Cys"; case 'Q': return "Gln";
    case 'E': return "Glu"; case 'G': return "Gly"; case 'H': return "His";
    case 'I': return "Ile"; case 'L': return "Leu"; case 'K': return "Lys";
    case 'M': return "Met"; case 'F': return "Phe"; case 'P': return "Pro";
    case 'S': return "Ser"; case 'T': return "Thr"; case 'W': return "Trp";
    case 'Y': return "Tyr"; case 'V': return "Val"; case '*': return "Stop";
    default: return "?";
  }
}

}  // namespace detail

/// Three-letter amino-acid label of a codon under the standard genetic code,
/// or "Stop" for TAA, TAG and TGA.
[[nodiscard]] inline std::string translate(const Word& codon) {
  if (codon.size() != 3) {
    throw ShapeError("translate expects a codon of 3 letters, got " +
                     std::to_string(codon.size()) + " (\"" + codon.str() + "\")");
  }
  const std::size_t idx = 16 * detail::tcag_index(codon[0]) + 4 * detail::tcag_index(codon[1]) +
                          detail::tcag_index(codon[2]);
  return std::string(detail::three_letter(detail::kStandardCode[idx]));
}

}  // namespace genemagic
