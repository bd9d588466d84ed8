#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quadstab/qforms.hpp"

namespace quadstab {

// A bigraded generator of a free graded-commutative algebra: an H-grade
// (rank, arf bit) plus a homological degree. Over odd characteristic and over
// the rationals, odd-degree generators square to zero; over F_2 every
// generator is polynomial.
struct CdgaGenerator {
  std::string name;
  HGrade h_grade;
  int degree = 0;

  friend bool operator==(const CdgaGenerator&, const CdgaGenerator&) = default;
};

struct Bidegree {
  int rank = 0;
  int arf = 0;
  int degree = 0;

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

// Exponent vector over the spec's generator list.
using Monomial = std::vector<int>;
// Linear combination with normalized coefficients (integers in [0, l) for
// characteristic l > 0, canonical rationals for characteristic 0); zero
// coefficients are never stored.
using Poly = std::map<Monomial, mpq_class>;

// A truncated free graded-commutative differential algebra over F_l (l prime)
// or Q (l = 0), with an optional monomial ideal quotient. Construction checks
// that the differential lowers degree by exactly 1, preserves the H-grade,
// squares to zero on every generator, and maps every quotient relation into
// the ideal.
class CdgaSpec {
 public:
  // differentials: (generator name, polynomial text); omitted generators have
  // zero differential. quotients: monomial texts like "rho^2".
  CdgaSpec(long long characteristic, int max_rank, int max_degree,
           std::vector<CdgaGenerator> generators,
           std::vector<std::pair<std::string, std::string>> differentials,
           std::vector<std::string> quotients = {});

  long long characteristic() const { return char_; }
  int max_rank() const { return max_rank_; }
  int max_degree() const { return max_degree_; }
  const std::vector<CdgaGenerator>& generators() const { return gens_; }
  const std::vector<Monomial>& relations() const { return relations_; }
  int generator_index(const std::string& name) const;  // UnknownGenerator
  const Poly& diff(int gen_index) const { return diffs_[gen_index]; }
  bool square_zero(int gen_index) const;
  int max_generator_rank() const;

  Bidegree monomial_bidegree(const Monomial& m) const;
  bool in_ideal(const Monomial& m) const;

  // Reduces a coefficient into the field: least nonnegative residue for
  // characteristic l > 0, canonical rational otherwise.
  mpq_class normalize(const mpq_class& c) const;

  // Polynomial grammar: sum of '+'/'-'-separated terms, each a '*'-separated
  // product of integer factors and name['^'exp] factors; "0" is the zero
  // polynomial. Reordering signs and square-zero collapses are applied.
  Poly parse_poly(const std::string& text) const;

 private:
  long long char_;
  int max_rank_;
  int max_degree_;
  std::vector<CdgaGenerator> gens_;
  std::map<std::string, int> index_;
  std::vector<Poly> diffs_;
  std::vector<Monomial> relations_;
  // construction inputs, kept so the characteristic and quotient can be varied
  std::vector<std::pair<std::string, std::string>> diff_texts_;
  std::vector<std::string> quotient_texts_;

  Poly parse_poly_impl(const std::string& text, bool project) const;

  friend CdgaSpec with_characteristic(const CdgaSpec& spec, long long ell);
  friend CdgaSpec quotient_spec(const CdgaSpec& spec,
                                const std::vector<std::string>& relations);
};

// Spec file grammar (documented here; see also data/cdga/*.cdga):
//   char 2; trunc rank 12 deg 8;
//   gen rho rank 2 arf 0 deg 1;
//   diff rho = s1^2 - s0^2;
//   quot rho^2;
// One `char` and one `trunc` statement, then any number of gen/diff/quot
// statements; every statement ends with ';'. Throws ParseError (1-based
// line/column) on syntax errors.
CdgaSpec parse_cdga_spec(const std::string& text);

// Same algebra with additional monomial relations. Throws IllFormedQuotient
// if the differential of some relation does not lie in the enlarged ideal.
CdgaSpec quotient_spec(const CdgaSpec& spec,
                       const std::vector<std::string>& relations);

// Same generators, differentials and quotients over another characteristic.
CdgaSpec with_characteristic(const CdgaSpec& spec, long long ell);

// All basis monomials of the exact bidegree, lexicographically sorted by
// exponent vector. Throws TruncationExceeded outside the truncation window.
std::vector<Monomial> enumerate_basis(const CdgaSpec& spec, const Bidegree& bd);

// Graded Leibniz extension of the generator differentials, projected to the
// quotient basis. Throws TruncationExceeded if the element reaches outside
// the truncation window.
Poly differential(const CdgaSpec& spec, const Poly& element);

// Graded-commutative product (Koszul signs; square-zero generators collapse).
Poly mul(const CdgaSpec& spec, const Poly& a, const Poly& b);
Poly add(const CdgaSpec& spec, const Poly& a, const Poly& b);
Poly scale(const CdgaSpec& spec, const mpq_class& c, const Poly& a);

// Homology dimensions for every reliable bidegree: rank at most
// max_rank - max_generator_rank, degree at most max_degree - 1 (chain spaces
// themselves are computed up to rank max_rank + 1 and degree max_degree + 1).
// Every reliable bidegree appears in `dims`, zeros included.
struct HomologyTable {
  std::map<Bidegree, int> dims;
  int reliable_rank = -1;    // largest reported rank
  int reliable_degree = -1;  // largest reported degree
};

HomologyTable homology_table(const CdgaSpec& spec);

// Verdict of "dim H = 0 whenever slope_den * degree <= slope_num * rank +
// intercept" over every bidegree the table reports; violations collects the
// offending bidegrees.
struct VanishingReport {
  bool verdict = true;
  std::vector<Bidegree> violations;
};

VanishingReport check_vanishing(const HomologyTable& table, long long slope_num,
                                long long slope_den, long long intercept);

}  // namespace quadstab
