// Loads a grid file and prints its magic sums under every notation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "genemagic/genemagic.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: analyze_grid FILE\n";
    return 2;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "cannot open " << argv[1] << '\n';
    return 2;
  }
  std::stringstream text;
  text << in.rdbuf();

  try {
    const auto grid = genemagic::parse_grid(text.str());
    for (auto n : genemagic::kNotations) {
      const auto rep = genemagic::analyze(grid, n);
      std::cout << genemagic::to_string(n) << ": ";
      if (rep.s1) {
        std::cout << "S1 " << *rep.s1;
      } else {
        std::cout << "rows disagree";
      }
      if (rep.s2) std::cout << ", S2 " << *rep.s2;
      std::cout << (rep.verdict.bimagic ? " (bimagic)" : rep.verdict.magic ? " (magic)" : "") << '\n';
    }
  } catch (const genemagic::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
