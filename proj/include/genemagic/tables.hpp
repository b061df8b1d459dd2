#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "genemagic/error.hpp"
#include "genemagic/grid.hpp"

namespace genemagic {

enum class CanonicalTableId { M1, M2, M3, R4, R8A, R8B, R16, ENZ };

inline constexpr std::array<CanonicalTableId, 8> kCanonicalTables = {
    CanonicalTableId::M1,  CanonicalTableId::M2,  CanonicalTableId::M3,  CanonicalTableId::R4,
    CanonicalTableId::R8A, CanonicalTableId::R8B, CanonicalTableId::R16, CanonicalTableId::ENZ};

namespace assets {

// Cell data is verbatim; the grid text format is the storage format.
inline constexpr std::string_view kM1 = R"grid(# Base matrix of single letters.
n=1 size=2 name=M1
C A
T G
)grid";

inline constexpr std::string_view kM2 = R"grid(# Base matrix of all 16 dinucleotides.
n=2 size=4 name=M2
CC AC TC GC
CA AA TA GA
CT AT TT GT
CG AG TG GG
)grid";

inline constexpr std::string_view kM3 = R"grid(# Base matrix of all 64 trinucleotides.
n=3 size=8 name=M3
CCC ACC TCC GCC CTC ATC TTC GTC
CCA ACA TCA GCA CTA ATA TTA GTA
CCT ACT TCT GCT CTT ATT TTT GTT
CCG ACG TCG GCG CTG ATG TTG GTG
CAC AAC TAC GAC CGC AGC TGC GGC
CAA AAA TAA GAA CGA AGA TGA GGA
CAT AAT TAT GAT CGT AGT TGT GGT
CAG AAG TAG GAG CGG AGG TGG GGG
)grid";

inline constexpr std::string_view kR4 = R"grid(# Reconfigured 4x4 dinucleotide square (Khajuraho square under DEC).
# Twenty combinations listed alongside the square, kept verbatim as raw data:
# 1 2 3 4 | 5 5 5 5 | 9 9 10 10 | 14 15 15 14 | 17 19 20 18
# 1 2 3 4 | 6 6 6 6 | 9 9 10 10 | 16 13 13 16 | 19 17 18 20
# 1 2 3 4 | 7 7 7 7 | 11 11 12 12 | 16 13 13 16 | 20 18 17 19
# 1 2 3 4 | 8 8 8 8 | 11 11 12 12 | 14 15 15 14 | 18 20 19 17
n=2 size=4 name=R4
AT TG CC GA
CA GC AG TT
GG CT TA AC
TC AA GT CG
)grid";

inline constexpr std::string_view kR8A = R"grid(# 8x8 trinucleotide square, magic and column-bimagic.
n=3 size=8 name=R8A
CCC TAT GTG AGA CAA TCG GGT ATC
GTA AGG CCT TAC GGC ATT CAG TCA
AGT GTC TAA CCG ATG GGA TCC CAT
TAG CCA AGC GTT TCT CAC ATA GGG
CTG TGA GCC AAT CGT TTC GAA ACG
GCT AAC CTA TGG GAG ACA CGC TTT
AAA GCG TGT CTC ACC GAT TTG CGA
TGC CTT AAG GCA TTA CGG ACT GAC
)grid";

inline constexpr std::string_view kR8B = R"grid(# 8x8 trinucleotide square, fully bimagic.
n=3 size=8 name=R8B
CGG TTC TCG CAC ATT GGA GAT ACA
ATA GGT GAA ACT CGC TTG TCC CAG
CCC TAG TGC CTG AAA GCT GTA AGT
AAT GCA GTT AGA CCG TAC TGG CTC
TAA CCT CTA TGT GCC AAG AGC GTG
GCG AAC AGG GTC TAT CCA CTT TGA
TTT CGA CAT TCA GGG ATC ACG GAC
GGC ATG ACC GAG TTA CGT CAA TCT
)grid";

inline constexpr std::string_view kR16 = R"grid(# 16x16 tetranucleotide square, bimagic under all three notations.
n=4 size=16 name=R16
CCCC TATA GTGT AGAG CAAT TCGG GGTC ATCA CTTG TGCT GCAA AAGC CGGA TTAC GACG ACTT
GTAG AGGT CCTA TACC GGCA ATTC CAGG TCAT GCGC AAAA CTCT TGTG GATT ACCG CGAC TTGA
AGTA GTCC TAAG CCGT ATGG GGAT TCCA CATC AACT GCTG TGGC CTAA ACAC GAGA TTTT CGCG
TAGT CCAG AGCC GTTA TCTC CACA ATAT GGGG TGAA CTGC AATG GCCT TTCG CGTT ACGA GAAC
CTGA TGAC GCCG AATT CGTG TTCT GAAA ACGC CCAT TAGG GTTC AGCA CACC TCTA GGGT ATAG
GCTT AACG CTAC TGGA GAGC ACAA CGCT TTTG GTCA AGTC CCGG TAAT GGAG ATGT CATA TCCC
AAAC GCGA TGTT CTCG ACCT GATG TTGC CGAA AGGG GTAT TACA CCTC ATTA GGCC TCAG CAGT
TGCG CTTT AAGA GCAC TTAA CGGC ACTG GACT TATC CCCA AGAT GTGG TCGT CAAG ATCC GGTA
CGAT TTGG GATC ACCA CTCC TGTA GCGT AAAG CAGA TCAC GGCG ATTT CCTG TACT GTAA AGGC
GACA ACTC CGGG TTAT GCAG AAGT CTTA TGCC GGTT ATCG CAAC TCGA GTGC AGAA CCCT TATG
ACGG GAAT TTCA CGTC AATA GCCC TGAG CTGT ATAC GGGA TCTT CACG AGCT GTTG TAGC CCAA
TTTC CGCA ACAT GAGG TGGT CTAG AACC GCTA TCCG CATT ATGA GGAC TAAA CCGC AGTG GTCT
CATG TCCT GGAA ATGC CCGA TAAC GTCG AGTT CGCC TTTA GAGT ACAG CTAT TGGG GCTC AACA
GGGC ATAA CACT TCTG GTTT AGCG CCAC TAGA GAAG ACGT CGTA TTCC GCCA AATC CTGG TGAT
ATCT GGTG TCGC CAAA AGAC GTGA TATT CCCG ACTA GACC TTAG CGGT AAGG GCAT TGCA CTTC
TCAA CAGC ATTG GGCT TACG CCTT AGGA GTAC TTGT CGAG ACCC GATA TGTC CTCA AAAT GCGG
)grid";

inline constexpr std::string_view kENZ = R"grid(# The 16 antiparallel restriction-site tetramers.
# Rows 1-2: same orientation; rows 3-4: opposite orientation (table order).
n=4 size=4 name=ENZ
AGCT CGTA TACG CTAG
GCAT TCGA ATGC GATC
TAGC ACGT GTAC GCTA
TGCA ATCG CATG CGAT
)grid";

}  // namespace assets

[[nodiscard]] constexpr std::string_view to_string(CanonicalTableId id) noexcept {
  switch (id) {
    case CanonicalTableId::M1: return "M1";
    case CanonicalTableId::M2: return "M2";
    case CanonicalTableId::M3: return "M3";
    case CanonicalTableId::R4: return "R4";
    case CanonicalTableId::R8A: return "R8A";
    case CanonicalTableId::R8B: return "R8B";
    case CanonicalTableId::R16: return "R16";
    case CanonicalTableId::ENZ: return "ENZ";
  }
  return "?";
}

[[nodiscard]] inline std::optional<CanonicalTableId> find_canonical(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (auto id : kCanonicalTables) {
    if (to_string(id) == upper) return id;
  }
  return std::nullopt;
}

[[nodiscard]] inline CanonicalTableId parse_canonical_id(std::string_view name) {
  if (auto id = find_canonical(name)) return *id;
  throw ParseError("unknown table id '" + std::string(name) +
                   "' (expected M1, M2, M3, R4, R8A, R8B, R16 or ENZ)");
}

[[nodiscard]] constexpr std::string_view canonical_text(CanonicalTableId id) noexcept {
  switch (id) {
    case CanonicalTableId::M1: return assets::kM1;
    case CanonicalTableId::M2: return assets::kM2;
    case CanonicalTableId::M3: return assets::kM3;
    case CanonicalTableId::R4: return assets::kR4;
    case CanonicalTableId::R8A: return assets::kR8A;
    case CanonicalTableId::R8B: return assets::kR8B;
    case CanonicalTableId::R16: return assets::kR16;
    case CanonicalTableId::ENZ: return assets::kENZ;
  }
  return {};
}

/// Returns the embedded grid for a table id. Every id except ENZ holds all
/// words of its length exactly once.
[[nodiscard]] inline Grid load_canonical(CanonicalTableId id) {
  return parse_grid(canonical_text(id), ParseOptions{id != CanonicalTableId::ENZ});
}

}  // namespace genemagic
