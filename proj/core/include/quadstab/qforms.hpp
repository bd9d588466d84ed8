#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "quadstab/errors.hpp"

namespace quadstab {

// Grading monoid: the unit (rank 0) together with pairs (rank > 0, arf bit).
// Ranks add and arf bits add mod 2.
struct HGrade {
  int rank = 0;
  int arf = 0;

  HGrade() = default;
  HGrade(int rank_, int arf_) : rank(rank_), arf(rank_ > 0 ? (arf_ & 1) : 0) {
    if (rank_ < 0 || arf_ < 0 || arf_ > 1)
      throw InvalidArgument("bad HGrade");
  }

  friend HGrade operator+(const HGrade& a, const HGrade& b) {
    return HGrade(a.rank + b.rank, (a.arf + b.arf) & 1);
  }
  friend bool operator==(const HGrade&, const HGrade&) = default;
  friend auto operator<=>(const HGrade&, const HGrade&) = default;
};

// A quadratic refinement of the standard mod-2 symplectic form of genus g,
// stored by its values on the basis (q(e1), q(f1), ..., q(eg), q(fg)).
class QuadraticRefinement {
 public:
  QuadraticRefinement(int genus, std::vector<int> values);

  int genus() const { return genus_; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const QuadraticRefinement&, const QuadraticRefinement&) = default;
  friend auto operator<=>(const QuadraticRefinement&, const QuadraticRefinement&) = default;

 private:
  int genus_;
  std::vector<int> values_;  // bits, length 2*genus
};

int arf(const QuadraticRefinement& q);

// q on an arbitrary integer vector, expanded through the quadratic law.
int evaluate(const QuadraticRefinement& q, const std::vector<long long>& v);

// 2g x 2g integer matrix M with M^T * Omega * M = Omega (checked), where
// Omega is the block sum of g copies of [[0,1],[-1,0]] in the basis order
// (e1, f1, e2, f2, ...). Vectors are columns; matrices act on the left.
class SymplecticMatrix {
 public:
  SymplecticMatrix(int genus, std::vector<std::vector<long long>> entries);
  static SymplecticMatrix identity(int genus);

  int genus() const { return genus_; }
  int dim() const { return 2 * genus_; }
  long long entry(int i, int j) const { return m_.at(i).at(j); }
  std::vector<long long> column(int j) const;

  friend SymplecticMatrix operator*(const SymplecticMatrix& a,
                                    const SymplecticMatrix& b);
  SymplecticMatrix inverse() const;
  bool is_identity() const;

  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

 private:
  int genus_;
  std::vector<std::vector<long long>> m_;
};

// x^T * Omega * y.
long long symplectic_pairing(const std::vector<long long>& x,
                             const std::vector<long long>& y);

// Refinements pull back along matrices: act(q, M) = q o M, a right action.
QuadraticRefinement act(const QuadraticRefinement& q, const SymplecticMatrix& M);

// The transvection along c: x -> x + <c, x> c. Its matrix is symplectic for
// every integer c; for c = e1 (genus 1) it is [[1,1],[0,1]] and for c = f1 it
// is [[1,0],[-1,1]].
SymplecticMatrix transvection_matrix(const std::vector<long long>& c);

QuadraticRefinement direct_sum(const QuadraticRefinement& a,
                               const QuadraticRefinement& b);

// All refinements of genus g in lexicographic bit-vector order, optionally
// filtered by Arf value. Throws InvalidArgument above the bound.
std::vector<QuadraticRefinement> enumerate_refinements(
    int g, std::optional<int> arf_value = std::nullopt, int genus_bound = 6);

// Position of q in enumerate_refinements(g, arf(q)) — the canonical point
// index used by refinement actions.
int canonical_index(const QuadraticRefinement& q);

// "q_{b1,b2,...}" in basis order.
std::string print_refinement(const QuadraticRefinement& q);

}  // namespace quadstab
