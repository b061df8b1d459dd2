#pragma once

#include "genemagic/entropy.hpp"
#include "genemagic/enzyme.hpp"
#include "genemagic/error.hpp"
#include "genemagic/genetic_code.hpp"
#include "genemagic/grid.hpp"
#include "genemagic/hamming.hpp"
#include "genemagic/magic.hpp"
#include "genemagic/matrix.hpp"
#include "genemagic/nucleotide.hpp"
#include "genemagic/region.hpp"
#include "genemagic/structure.hpp"
#include "genemagic/tables.hpp"
