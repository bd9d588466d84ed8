#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quadstab/perm.hpp"
#include "quadstab/qforms.hpp"
#include "quadstab/words.hpp"

namespace quadstab {

enum class Family { MCG, Sp };

std::string family_name(Family f);  // "mcg" / "sp"
// Accepts "mcg"/"sp" (any case); nullopt otherwise.
std::optional<Family> parse_family(const std::string& text);

// A distinguished first-homology class: a representative word together with
// whatever the source computation pins down about it (its order, or an
// expression as an integer combination of other named classes of the same
// stabilizer).
struct NamedClass {
  std::string name;
  // Arf value of the stabilizer the representative lives in; nullopt means
  // the class lives in the ambient group.
  std::optional<int> arf;
  Word representative;
  // Exactly one of {order, infinite_order, combination} is meaningful when
  // set; order==1 encodes a class known to vanish.
  std::optional<mpz_class> order;
  bool infinite_order = false;
  // expected class = sum of coef * class(other-name), same (case, arf).
  std::vector<std::pair<long long, std::string>> combination;
  std::string source;  // provenance tag
};

// One group of the catalog: a presentation, the symplectic images of its
// generators, and the per-Arf data (basepoint refinements, label
// dictionaries, printed cycle strings, explicit stabilizer generators).
// All cross-checks run at construction; a GroupCase obtained from get_case
// is always validated.
struct GroupCase {
  Family family = Family::MCG;
  int genus = 0;
  Presentation presentation;
  // parallel to presentation.generators
  std::vector<SymplecticMatrix> matrices;
  // indexed by arf value (0, 1)
  std::vector<QuadraticRefinement> basepoints;
  // labels[arf][k] = canonical index of the refinement printed as label k+1;
  // empty when the source prints no labeling for that Arf class
  std::vector<std::vector<int>> labels;
  // printed_cycles[arf][i] = cycle string for generator i ("" family-wide
  // when nothing is printed for that Arf class)
  std::vector<std::vector<std::string>> printed_cycles;
  // subgroup_words[arf] = explicit generator words for the basepoint
  // stabilizer; empty means the pipeline derives Schreier generators instead
  std::vector<std::vector<Word>> subgroup_words;
  // words used to move classes between conjugate stabilizers
  std::vector<Word> conjugators;
  std::vector<NamedClass> classes;
  // datum key -> provenance tag, e.g. "presentation" -> "catalog:mcg-g2/..."
  std::map<std::string, std::string> sources;

  const SymplecticMatrix& matrix(const std::string& gen) const;

  // The permutation action of the presentation on the refinements of the
  // given Arf value, points being canonical indices. Construction re-checks
  // that every relator acts as the identity.
  PermAction refinement_action(int arf_value) const;

  // canonical_index of basepoints[arf_value]
  int basepoint_index(int arf_value) const;

  const NamedClass& named_class(const std::string& name) const;
};

// "mcg-g2", "sp-g1", ...
std::string case_id(Family f, int genus);

// The validated catalog entry for (family, genus); throws UnknownCase unless
// family is MCG or Sp and genus is 1, 2 or 3. The returned reference is to
// function-local static storage, constructed (and validated) on first use.
const GroupCase& get_case(Family family, int genus);

// Names of the differential-algebra spec files shipped with the catalog.
std::vector<std::string> cdga_names();

// The verbatim spec-file text for one shipped complex; throws UnknownCase
// for names outside cdga_names().
const std::string& cdga_spec_text(const std::string& name);

}  // namespace quadstab
