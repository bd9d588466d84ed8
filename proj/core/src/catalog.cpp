#include "quadstab/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "quadstab/errors.hpp"

namespace quadstab {

namespace {

Word W(const std::string& text) { return parse_word(text); }

std::vector<Word> word_list(const std::vector<std::string>& texts) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_word(t));
  return out;
}

// transvection along the sum of the basis vectors with the given 0-based
// indices (basis order e1, f1, e2, f2, ...)
SymplecticMatrix twist(int genus, std::initializer_list<int> support) {
  std::vector<long long> c(size_t(2) * genus, 0);
  for (int i : support) c.at(size_t(i)) = 1;
  return transvection_matrix(c);
}

NamedClass make_class(std::string name, std::optional<int> arf_value,
                      const std::string& rep,
                      std::optional<long long> order, bool infinite,
                      std::vector<std::pair<long long, std::string>> combo) {
  NamedClass c;
  c.name = std::move(name);
  c.arf = arf_value;
  c.representative = parse_word(rep);
  if (order) c.order = mpz_class(static_cast<long>(*order));
  c.infinite_order = infinite;
  c.combination = std::move(combo);
  return c;
}

SymplecticMatrix evaluate_matrix(const GroupCase& gc, const Word& w) {
  SymplecticMatrix result = SymplecticMatrix::identity(gc.genus);
  for (const auto& syl : w.syllables()) {
    const SymplecticMatrix& base = gc.matrix(syl.gen);
    SymplecticMatrix factor = syl.exp >= 0 ? base : base.inverse();
    long long reps = syl.exp >= 0 ? syl.exp : -syl.exp;
    for (long long i = 0; i < reps; ++i) result = result * factor;
  }
  return result;
}

void fill_sources(GroupCase& gc) {
  const std::string prefix = "catalog:" + case_id(gc.family, gc.genus) + "/";
  auto tag = [&](const std::string& key) { gc.sources[key] = prefix + key; };
  tag("presentation");
  tag("matrices");
  for (int a = 0; a < 2; ++a) {
    std::string suffix = "-arf" + std::to_string(a);
    tag("basepoint" + suffix);
    if (!gc.labels[a].empty()) tag("labels" + suffix);
    if (!gc.printed_cycles[a].empty()) tag("cycles" + suffix);
    if (!gc.subgroup_words[a].empty()) tag("subgroup" + suffix);
  }
  if (!gc.conjugators.empty()) tag("conjugators");
  for (auto& c : gc.classes) {
    c.source = prefix + "class-" + c.name;
    gc.sources["class-" + c.name] = c.source;
  }
  if (gc.family == Family::Sp && gc.genus == 3)
    gc.sources["derivation"] = prefix + "surrogate-via-mcg-g3";
}

void validate_case(const GroupCase& gc) {
  const std::string id = case_id(gc.family, gc.genus);
  auto fail = [&](const std::string& what) {
    throw std::logic_error("catalog entry " + id + ": " + what);
  };

  if (gc.matrices.size() != gc.presentation.generators.size())
    fail("generator/matrix count mismatch");
  if (gc.basepoints.size() != 2 || gc.labels.size() != 2 ||
      gc.printed_cycles.size() != 2 || gc.subgroup_words.size() != 2)
    fail("per-arf arrays must have length 2");

  // the generator-to-matrix map must send every relator to the identity
  for (const auto& rel : gc.presentation.relators)
    if (!evaluate_matrix(gc, rel).is_identity())
      fail("relator is not a matrix identity");

  for (int a = 0; a < 2; ++a) {
    if (arf(gc.basepoints[a]) != a) fail("basepoint has wrong Arf invariant");
    auto points = enumerate_refinements(gc.genus, a);
    int n = static_cast<int>(points.size());
    // constructing the action re-checks that all relators act trivially
    PermAction action = gc.refinement_action(a);
    int base = gc.basepoint_index(a);

    if (!gc.labels[a].empty()) {
      if (static_cast<int>(gc.labels[a].size()) != n)
        fail("label dictionary has wrong size");
      std::set<int> seen(gc.labels[a].begin(), gc.labels[a].end());
      if (static_cast<int>(seen.size()) != n || *seen.begin() != 0 ||
          *seen.rbegin() != n - 1)
        fail("label dictionary is not a bijection");
    }

    if (!gc.printed_cycles[a].empty()) {
      if (gc.labels[a].empty()) fail("printed cycles without labels");
      if (gc.printed_cycles[a].size() != gc.presentation.generators.size())
        fail("printed cycle count mismatch");
      std::vector<int> inverse_label(n);
      for (int k = 0; k < n; ++k) inverse_label[gc.labels[a][k]] = k;
      for (size_t i = 0; i < gc.presentation.generators.size(); ++i) {
        Permutation p =
            evaluate_word(action, Word::generator(gc.presentation.generators[i]));
        std::vector<int> relabeled(n);
        for (int k = 0; k < n; ++k)
          relabeled[k] = inverse_label[p.apply(gc.labels[a][k])];
        if (print_cycles(Permutation(relabeled)) != gc.printed_cycles[a][i])
          fail("printed cycle mismatch for generator " +
               gc.presentation.generators[i]);
      }
    }

    if (!gc.subgroup_words[a].empty()) {
      std::vector<bool> fixed(n, true);
      for (const auto& w : gc.subgroup_words[a]) {
        Permutation p = evaluate_word(action, w);
        if (p.apply(base) != base) fail("subgroup word moves the basepoint");
        for (int k = 0; k < n; ++k)
          if (p.apply(k) != k) fixed[k] = false;
      }
      // the basepoint is recoverable from the word list alone
      for (int k = 0; k < n; ++k)
        if (fixed[k] != (k == base))
          fail("subgroup words fix a point other than the basepoint");
    }
  }

  std::set<std::string> class_names;
  for (const auto& c : gc.classes) {
    if (!class_names.insert(c.name).second) fail("duplicate class " + c.name);
    if (c.arf) {
      PermAction action = gc.refinement_action(*c.arf);
      Permutation p = evaluate_word(action, c.representative);
      if (p.apply(gc.basepoint_index(*c.arf)) != gc.basepoint_index(*c.arf))
        fail("class " + c.name + " does not stabilize its basepoint");
    }
    for (const auto& [coef, other] : c.combination) {
      (void)coef;
      auto it = std::find_if(gc.classes.begin(), gc.classes.end(),
                             [&](const NamedClass& o) { return o.name == other; });
      if (it == gc.classes.end())
        fail("class " + c.name + " references unknown class " + other);
      if (it->arf != c.arf)
        fail("class " + c.name + " combination crosses stabilizers");
    }
  }
}

// ---------------------------------------------------------------------------
// case data

const char kMcg1Pres[] = "gens a b; rels a*b*a*b^-1*a^-1*b^-1;";

const char kMcg2Pres[] =
    "gens a1 a2 b1 b2 e;\n"
    "rels a1*b1*a1*b1^-1*a1^-1*b1^-1,\n"
    "     a2*b2*a2*b2^-1*a2^-1*b2^-1,\n"
    "     a1*e*a1*e^-1*a1^-1*e^-1,\n"
    "     a2*e*a2*e^-1*a2^-1*e^-1,\n"
    "     a1*a2*a1^-1*a2^-1,\n"
    "     a1*b2*a1^-1*b2^-1,\n"
    "     b1*a2*b1^-1*a2^-1,\n"
    "     b1*b2*b1^-1*b2^-1,\n"
    "     b1*e*b1^-1*e^-1,\n"
    "     b2*e*b2^-1*e^-1,\n"
    "     (b2*a2*e*a1*b1^2*a1*e*a2*b2)*(b1*a1*e*a2)^-5;";

const char kMcg3Pres[] =
    "gens a1 a2 a3 b1 b2 e1 e2;\n"
    "rels a1*b1*a1*b1^-1*a1^-1*b1^-1,\n"
    "     a2*b2*a2*b2^-1*a2^-1*b2^-1,\n"
    "     a1*e1*a1*e1^-1*a1^-1*e1^-1,\n"
    "     a2*e1*a2*e1^-1*a2^-1*e1^-1,\n"
    "     a2*e2*a2*e2^-1*a2^-1*e2^-1,\n"
    "     a3*e2*a3*e2^-1*a3^-1*e2^-1,\n"
    "     a1*a2*a1^-1*a2^-1,\n"
    "     a1*a3*a1^-1*a3^-1,\n"
    "     a3*a2*a3^-1*a2^-1,\n"
    "     b1*b2*b1^-1*b2^-1,\n"
    "     a1*b2*a1^-1*b2^-1,\n"
    "     a2*b1*a2^-1*b1^-1,\n"
    "     a3*b2*a3^-1*b2^-1,\n"
    "     a3*b1*a3^-1*b1^-1,\n"
    "     b1*e1*b1^-1*e1^-1,\n"
    "     b2*e1*b2^-1*e1^-1,\n"
    "     b1*e2*b1^-1*e2^-1,\n"
    "     b2*e2*b2^-1*e2^-1,\n"
    "     a1*e2*a1^-1*e2^-1,\n"
    "     a3*e1*a3^-1*e1^-1,\n"
    "     e1*e2*e1^-1*e2^-1,\n"
    "     (b1*a1*e1*a2)^-5*b2*a2*e1*a1*b1^2*a1*e1*a2*b2,\n"
    "     ((b2*a2*e1*b1^-1)*(e2*a2*a3*e2)*(a2*e1*a1*b1)^-1*b2*(a2*e1*a1*b1)"
    "*(e2*a2*a3*e2)^-1*(b1*e1^-1*a2^-1*b2^-1)*a1*a2*a3)^-1"
    "*(a2*e1*a1*b1)^-1*b2*(a2*e1*a1*b1)*(e2*a2*a3*e2)"
    "*(a2*e1*a1*b1)^-1*b2*(a2*e1*a1*b1)*(e2*a2*a3*e2)^-1"
    "*(e1*a1*a2*e1)*(e2*a2*a3*e2)"
    "*(a2*e1*a1*b1)^-1*b2*(a2*e1*a1*b1)*(e2*a2*a3*e2)^-1*(e1*a1*a2*e1)^-1;";

const char kSp1Pres[] = "gens L N; rels (L*N)^2*N^-3, N^6;";

const char kSp2Pres[] =
    "gens L N;\n"
    "rels N^6,\n"
    "     (L*N)^5,\n"
    "     (L*N^-1)^10,\n"
    "     (L*N^-1*L*N)^6,\n"
    "     L*(N^2*L*N^4)*L^-1*(N^2*L*N^4)^-1,\n"
    "     L*(N^3*L*N^3)*L^-1*(N^3*L*N^3)^-1,\n"
    "     L*(L*N^-1)^5*L^-1*(L*N^-1)^-5;";

const char kBrowderWord[] =
    "(b2*a2*e*a1*b1)^6*(a1*b1)^-6*(a2*b2)^-6";

GroupCase build_mcg1() {
  GroupCase gc;
  gc.family = Family::MCG;
  gc.genus = 1;
  gc.presentation = parse_presentation(kMcg1Pres);
  gc.matrices = {twist(1, {0}), twist(1, {1})};
  gc.basepoints = {QuadraticRefinement(1, {0, 0}),
                   QuadraticRefinement(1, {1, 1})};
  gc.labels = {{0, 1, 2}, {}};
  gc.printed_cycles = {{"(1,2)", "(1,3)"}, {}};
  gc.subgroup_words = {word_list({"a^-2", "b^-2", "a*b*a^-1"}), {}};
  gc.classes = {
      make_class("tau", std::nullopt, "a", std::nullopt, true, {}),
      make_class("x", 0, "a^-2", std::nullopt, true, {}),
      make_class("xAlt", 0, "b^-2", std::nullopt, false, {{1, "x"}}),
      make_class("y", 0, "a*b*a^-1", std::nullopt, true, {}),
      make_class("z", 1, "a", std::nullopt, true, {}),
  };
  return gc;
}

GroupCase build_mcg2() {
  GroupCase gc;
  gc.family = Family::MCG;
  gc.genus = 2;
  gc.presentation = parse_presentation(kMcg2Pres);
  gc.matrices = {twist(2, {0}), twist(2, {2}), twist(2, {1}), twist(2, {3}),
                 twist(2, {1, 3})};
  gc.basepoints = {QuadraticRefinement(2, {0, 0, 0, 0}),
                   QuadraticRefinement(2, {1, 0, 1, 1})};
  gc.labels = {{0, 1, 6, 2, 7, 8, 3, 5, 4, 9}, {2, 0, 1, 4, 3, 5}};
  gc.printed_cycles = {{"(1,7)(2,9)(4,8)", "(1,2)(3,5)(7,9)",
                        "(1,3)(2,5)(4,6)", "(1,4)(3,6)(7,8)",
                        "(1,6)(3,4)(9,10)"},
                       {"(2,3)", "(4,5)", "(1,2)", "(5,6)", "(3,4)"}};
  gc.subgroup_words = {
      word_list({"a1^-2", "a2^-2", "b1^-2", "b2^-2", "e^-2", "a1*b1*a1^-1",
                 "a1*e*a1^-1", "a2*b2*a2^-1", "a2*e*a2^-1", "b1*b2*e^-1"}),
      word_list({"a1", "a2", "b1^-2", "b2", "e"})};
  gc.conjugators = word_list({"b1", "b1*a1*e*a2", "a1*a2*e"});
  const std::string w = kBrowderWord;
  gc.classes = {
      make_class("sigmatau", std::nullopt, "a1", 10, false, {}),
      make_class("A", 0, "a1*b1*a1^-1*b1*b2*e^-1", std::nullopt, true, {}),
      make_class("B", 0, "(a1*b1*a1)^2*e*b2^-1*b1^-1", 2, false, {}),
      make_class("xsigma0", 0, "a1^-2", std::nullopt, false, {{4, "A"}}),
      make_class("ysigma0", 0, "a1*b1*a1^-1", std::nullopt, false,
                 {{3, "A"}, {1, "B"}}),
      make_class("zsigma1", 0, "(a1*a2*e)*a1*(a1*a2*e)^-1", std::nullopt,
                 false, {{3, "A"}, {1, "B"}}),
      make_class("bracket00", 0, w, std::nullopt, false, {{8, "A"}}),
      make_class("bracket11", 0, "(a1*a2*e)*" + w + "*(a1*a2*e)^-1",
                 std::nullopt, false, {{-72, "A"}}),
      make_class("C", 1, "a1", 80, false, {}),
      make_class("xsigma1", 1, "b1*a1^-2*b1^-1", std::nullopt, false,
                 {{28, "C"}}),
      make_class("ysigma1", 1, "b1*a1*b1*a1^-1*b1^-1", std::nullopt, false,
                 {{1, "C"}}),
      make_class("zsigma0", 1, "(b1*a1*e*a2)*a1*(b1*a1*e*a2)^-1", std::nullopt,
                 false, {{1, "C"}}),
      make_class("bracket01", 1, "b1*" + w + "*b1^-1", std::nullopt, false,
                 {{56, "C"}}),
  };
  return gc;
}

GroupCase build_mcg3(Family family) {
  GroupCase gc;
  gc.family = family;
  gc.genus = 3;
  gc.presentation = parse_presentation(kMcg3Pres);
  gc.matrices = {twist(3, {0}), twist(3, {2}), twist(3, {4}), twist(3, {1}),
                 twist(3, {3}), twist(3, {1, 3}), twist(3, {3, 5})};
  gc.basepoints = {QuadraticRefinement(3, {0, 0, 0, 0, 0, 0}),
                   QuadraticRefinement(3, {1, 1, 1, 1, 1, 1})};
  gc.labels = {{}, {}};
  gc.printed_cycles = {{}, {}};
  gc.subgroup_words = {
      word_list({"a1^-2", "a2^-2", "a3^-2", "b1^-2", "b2^-2", "e1^-2",
                 "e2^-2", "b1*b2*e1^-1", "b2*a2*b2^-1", "b1*a1*b1^-1",
                 "a2*e2*a2^-1", "e2*a3*e2^-1"}),
      word_list({"a1", "a2", "a3", "b1", "b2", "e1^-2", "e2^-2",
                 "e1*b1*e1^-1", "e1*b2*e1^-1", "e2*b2*e2^-1",
                 "(e1*a2*a1)*a3*(e1*a2*a1)^-1",
                 "(e1*a2*a1)*e2*(e1*a2*a1)^-1",
                 "(e1*a2*a1)*(e1*b2*b1)*(e1*a2*a1)^-1",
                 "(e2*a3*a2)*a1*(e2*a3*a2)^-1",
                 "(e2*a3*a2)*e1*(e2*a3*a2)^-1"})};
  if (family == Family::MCG) {
    gc.classes = {
        make_class("Asigma0", 0, "a1*b1*a1^-1", 4, false, {}),
        make_class("Bsigma0", 0, "(a1*b1*a1)^2*e1*b2^-1*b1^-1", 2, false,
                   {{2, "Asigma0"}}),
    };
  }
  return gc;
}

GroupCase build_sp1() {
  GroupCase gc;
  gc.family = Family::Sp;
  gc.genus = 1;
  gc.presentation = parse_presentation(kSp1Pres);
  gc.matrices = {SymplecticMatrix(1, {{1, 1}, {0, 1}}),
                 SymplecticMatrix(1, {{0, 1}, {-1, 1}})};
  gc.basepoints = {QuadraticRefinement(1, {0, 0}),
                   QuadraticRefinement(1, {1, 1})};
  gc.labels = {{0, 1, 2}, {}};
  gc.printed_cycles = {{"(1,2)", "(1,2,3)"}, {}};
  gc.subgroup_words = {word_list({"L^-2", "N*L^-1"}), {}};
  gc.classes = {
      make_class("t", std::nullopt, "L", 12, false, {}),
      make_class("mu", 0, "L^2", std::nullopt, true, {}),
      make_class("lambda", 0, "L^-1*N^-1", 4, false, {}),
      make_class("tprime", 1, "L", 12, false, {}),
  };
  return gc;
}

GroupCase build_sp2() {
  GroupCase gc;
  gc.family = Family::Sp;
  gc.genus = 2;
  gc.presentation = parse_presentation(kSp2Pres);
  gc.matrices = {SymplecticMatrix(2, {{1, 1, 0, 0},
                                      {0, 1, 0, 0},
                                      {0, 0, 1, 0},
                                      {0, 0, 0, 1}}),
                 SymplecticMatrix(2, {{0, 1, -1, 0},
                                      {-1, 0, 0, 0},
                                      {-1, 0, 0, 1},
                                      {0, 0, -1, 0}})};
  gc.basepoints = {QuadraticRefinement(2, {0, 0, 0, 0}),
                   QuadraticRefinement(2, {1, 1, 0, 0})};
  gc.labels = {{0, 3, 6, 5, 1, 2, 7, 4, 8, 9}, {3, 5, 1, 0, 2, 4}};
  gc.printed_cycles = {{"(1,2)(4,6)(5,8)", "(2,3,4,5,6,7)(8,9,10)"},
                       {"(3,4)", "(1,2,3,4,5,6)"}};
  gc.subgroup_words = {
      word_list({"L^-2", "N", "L*N*L*N^-1*L^-1", "L*N^-1*L*N*L^-1"}),
      word_list({"L", "N*L*N^-1", "N^-1*L*N", "N^2*L^-2*N^-2",
                 "N^3*L^-1*N^-2"})};
  gc.classes = {
      make_class("t", std::nullopt, "L", 2, false, {}),
      make_class("q1sigma0", 0, "N^3", 2, false, {}),
      make_class("lambdasigma0", 0, "L*N^-1*L*N*L^-1", 4, false, {}),
      make_class("musigma0", 0, "L^2", 1, false, {}),
      make_class("tprimesigma0", 1, "L", 4, false, {}),
  };
  return gc;
}

// ---------------------------------------------------------------------------
// shipped differential algebra specs

struct CdgaEntry {
  const char* name;
  const char* text;
};

const CdgaEntry kCdgaEntries[] = {
    {"thm-stab-1-step3",
     "char 2;\n"
     "trunc rank 12 deg 8;\n"
     "gen sigma rank 1 arf 1 deg 0;\n"
     "gen rho rank 2 arf 0 deg 1;\n"
     "diff rho = sigma^2;\n"},
    {"thm-stab-2-step3",
     "char 3;\n"
     "trunc rank 12 deg 8;\n"
     "gen sigma rank 1 arf 1 deg 0;\n"
     "gen rho rank 2 arf 0 deg 1;\n"
     "gen q0 rank 2 arf 0 deg 1;\n"
     "gen q1 rank 2 arf 0 deg 1;\n"
     "gen X rank 2 arf 0 deg 2;\n"
     "gen Z rank 3 arf 1 deg 2;\n"
     "diff rho = sigma^2;\n"
     "diff X = q1;\n"
     "diff Z = sigma*q0;\n"},
    {"thm-stab-2-step4",
     "char 3;\n"
     "trunc rank 12 deg 8;\n"
     "gen sigma rank 1 arf 1 deg 0;\n"
     "gen rho rank 2 arf 0 deg 1;\n"
     "gen q0 rank 2 arf 0 deg 1;\n"
     "gen Z rank 3 arf 1 deg 2;\n"
     "diff rho = sigma^2;\n"
     "diff Z = sigma*q0;\n"},
    {"thm-stab-3-step2",
     "char 2;\n"
     "trunc rank 12 deg 8;\n"
     "gen sigma rank 1 arf 1 deg 0;\n"
     "gen rho rank 2 arf 0 deg 1;\n"
     "gen q0 rank 2 arf 0 deg 1;\n"
     "gen q1 rank 2 arf 0 deg 1;\n"
     "gen X rank 2 arf 0 deg 2;\n"
     "gen Z rank 3 arf 1 deg 2;\n"
     "gen U rank 6 arf 0 deg 4;\n"
     "diff rho = sigma^2;\n"
     "diff X = q1;\n"
     "diff Z = sigma*q0;\n"
     "diff U = q0^3;\n"
     "quot rho^2;\n"},
    {"thm-stab-3-step3",
     "char 2;\n"
     "trunc rank 12 deg 8;\n"
     "gen sigma rank 1 arf 1 deg 0;\n"
     "gen q0 rank 2 arf 0 deg 1;\n"
     "gen Z rank 3 arf 1 deg 2;\n"
     "diff Z = sigma*q0;\n"
     "quot sigma^2;\n"
     "quot q0^3;\n"},
};

}  // namespace

std::string family_name(Family f) { return f == Family::MCG ? "mcg" : "sp"; }

std::optional<Family> parse_family(const std::string& text) {
  std::string low;
  for (char c : text)
    low.push_back(char(std::tolower(static_cast<unsigned char>(c))));
  if (low == "mcg") return Family::MCG;
  if (low == "sp") return Family::Sp;
  return std::nullopt;
}

std::string case_id(Family f, int genus) {
  return family_name(f) + "-g" + std::to_string(genus);
}

const SymplecticMatrix& GroupCase::matrix(const std::string& gen) const {
  for (size_t i = 0; i < presentation.generators.size(); ++i)
    if (presentation.generators[i] == gen) return matrices[i];
  throw UnknownGenerator(gen);
}

PermAction GroupCase::refinement_action(int arf_value) const {
  auto points = enumerate_refinements(genus, arf_value);
  int n = static_cast<int>(points.size());
  std::map<std::string, Permutation> images;
  for (size_t i = 0; i < presentation.generators.size(); ++i) {
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k)
      img[k] = canonical_index(act(points[k], matrices[i]));
    images.emplace(presentation.generators[i], Permutation(img));
  }
  return PermAction(presentation, images);
}

int GroupCase::basepoint_index(int arf_value) const {
  return canonical_index(basepoints.at(arf_value));
}

const NamedClass& GroupCase::named_class(const std::string& name) const {
  for (const auto& c : classes)
    if (c.name == name) return c;
  throw UnknownCase("no class named " + name + " in " +
                    case_id(family, genus));
}

const GroupCase& get_case(Family family, int genus) {
  static const std::map<std::pair<Family, int>, GroupCase> cases = [] {
    std::map<std::pair<Family, int>, GroupCase> m;
    auto add = [&m](GroupCase gc) {
      fill_sources(gc);
      validate_case(gc);
      m.emplace(std::make_pair(gc.family, gc.genus), std::move(gc));
    };
    add(build_mcg1());
    add(build_mcg2());
    add(build_mcg3(Family::MCG));
    add(build_sp1());
    add(build_sp2());
    add(build_mcg3(Family::Sp));
    return m;
  }();
  auto it = cases.find({family, genus});
  if (it == cases.end())
    throw UnknownCase("no catalog entry " + case_id(family, genus));
  return it->second;
}

std::vector<std::string> cdga_names() {
  std::vector<std::string> names;
  for (const auto& e : kCdgaEntries) names.emplace_back(e.name);
  return names;
}

const std::string& cdga_spec_text(const std::string& name) {
  static const std::map<std::string, std::string> texts = [] {
    std::map<std::string, std::string> m;
    for (const auto& e : kCdgaEntries) m.emplace(e.name, e.text);
    return m;
  }();
  auto it = texts.find(name);
  if (it == texts.end()) throw UnknownCase("no shipped spec named " + name);
  return it->second;
}

}  // namespace quadstab
