#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quadstab/perm.hpp"
#include "quadstab/words.hpp"

namespace quadstab {

// A complete coset table for a finite-index subgroup. Coset 0 is the subgroup
// itself. `transitions` has one row per coset and 2k columns: the images under
// the k generators, then under their inverses; the two halves are mutually
// inverse. Every relator loops at every coset and every subgroup generator
// loops at coset 0. transversal[0] is the identity.
struct CosetTable {
  std::vector<std::string> generators;
  int n_cosets = 0;
  std::vector<std::vector<int>> transitions;
  std::vector<Word> subgroup_generators;
  std::vector<Word> transversal;

  int n_generators() const { return static_cast<int>(generators.size()); }
  // letter in [0, 2k): generators first, then inverses
  int step(int coset, int letter) const { return transitions.at(coset).at(letter); }
};

// Coset table of the stabilizer preimage: cosets biject with the orbit of the
// basepoint, relabeled so the basepoint is coset 0 (BFS discovery order).
// The traversal choice affects only the transversal words, not the numbering.
CosetTable coset_table_from_action(const PermAction& action, int basepoint,
                                   Traversal transversal_tree = Traversal::BFS);

// HLT coset enumeration with coincidence handling. The budget counts cosets
// ever defined, not live ones; exceeding it throws CosetLimitExceeded (which
// cannot distinguish infinite index from a budget that is merely too small).
// On success the table is complete and closed, with cosets renumbered by BFS
// from 0 for determinism.
CosetTable todd_coxeter(const Presentation& pres,
                        const std::vector<Word>& subgroup_gens,
                        long long max_cosets = 1000000,
                        Traversal transversal_tree = Traversal::BFS);

// The nontrivial Schreier generators x{coset}{gen} in (coset, generator)
// order, each with its defining word t_c * g * t_{c.g}^-1 in the ambient
// generators.
std::vector<std::pair<std::string, Word>> schreier_generator_definitions(
    const CosetTable& table);

// Reidemeister-Schreier presentation of the subgroup: generators are the
// nontrivial Schreier generators; relators are the rewrites of every relator
// of `pres` at every coset (n_cosets * |relators| of them, kept verbatim
// after free reduction, no Tietze simplification).
Presentation reidemeister_schreier(const Presentation& pres,
                                   const CosetTable& table);

// Rewrites a word lying in the subgroup as a word in the Schreier generators.
// Throws NotInSubgroup if w does not trace a loop at coset 0.
Word rewrite_subgroup_word(const CosetTable& table, const Word& w);

// Plain text matrix: one row per coset, entries separated by single spaces,
// columns are generators then inverses.
std::string serialize_table(const CosetTable& table);

}  // namespace quadstab
