#pragma once

#include <string>
#include <vector>

#include "quadstab/abelian.hpp"
#include "quadstab/catalog.hpp"
#include "quadstab/cosets.hpp"

namespace quadstab {

// One named class pushed through to coordinates in a homology structure.
struct ClassReport {
  std::string name;
  Word representative;  // in ambient generators
  Word rewritten;       // in subgroup generators (== representative for
                        // ambient reports)
  std::vector<mpz_class> coordinates;
  ElementOrder order;
  std::string source;
};

// Output of the stabilizer pipeline for one (case, Arf value):
// coset table -> subgroup presentation -> abelianization -> class reports.
struct PipelineResult {
  Family family;
  int genus;
  int arf_value;
  bool used_explicit_words;  // Todd-Coxeter on the listed generator words
  CosetTable table;
  int index;  // == table.n_cosets
  Presentation subgroup;
  AbelianStructure homology;
  std::vector<ClassReport> classes;
};

// Computes the basepoint-stabilizer data for gc at the given Arf value.
// Cases with an explicit subgroup word list go through Todd-Coxeter on that
// list; the others through the refinement permutation action. Throws
// CosetLimitExceeded if enumeration defines more than max_cosets cosets.
PipelineResult stabilizer_pipeline(const GroupCase& gc, int arf_value,
                                   int max_cosets = 1000000,
                                   Traversal traversal = Traversal::BFS);

// Abelianization of the ambient presentation, with reports for the named
// classes that live in the ambient group.
struct AmbientReport {
  AbelianStructure homology;
  std::vector<ClassReport> classes;
};

AmbientReport ambient_homology(const GroupCase& gc);

}  // namespace quadstab
