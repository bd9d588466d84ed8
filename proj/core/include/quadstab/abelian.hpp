#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "quadstab/words.hpp"

namespace quadstab {

// Dense arbitrary-precision integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> entries;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(size_t(r) * c) {}
  static IntMatrix identity(int n);

  mpz_class& at(int i, int j) { return entries[size_t(i) * cols + j]; }
  const mpz_class& at(int i, int j) const { return entries[size_t(i) * cols + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Bareiss fraction-free determinant; requires a square matrix.
mpz_class determinant(const IntMatrix& a);

struct SmithResult {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix s;  // diagonal, nonnegative, divisibility chain
  IntMatrix v;  // cols x cols, unimodular
};

// U*A*V = S with S in Smith normal form. Pivoting picks the nonzero entry of
// least absolute value; the divisibility chain is restored by gcd fix-ups.
SmithResult smith_normal_form(const IntMatrix& a);

// A finitely generated abelian group presented as Z^gens / column lattice,
// with basis-change data mapping exponent vectors to canonical coordinates in
// Z/d_1 x ... x Z/d_k x Z^r (torsion entries first, then free entries).
class AbelianStructure {
 public:
  // relations: one row per generator, one column per relator.
  AbelianStructure(std::vector<std::string> generators, const IntMatrix& relations);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<mpz_class>& torsion() const { return torsion_; }
  int free_rank() const { return static_cast<int>(free_rows_.size()); }

  // Canonical coordinates: k torsion entries reduced into [0, d_i), then r
  // free entries. Throws UnknownGenerator for names outside the generator set.
  std::vector<mpz_class> image(const Word& w) const;
  std::vector<mpz_class> image_vector(const std::vector<mpz_class>& exponents) const;

 private:
  std::vector<std::string> generators_;
  std::map<std::string, int> index_;
  std::vector<mpz_class> torsion_;  // invariant factors, each >= 2, d_i | d_{i+1}
  std::vector<int> torsion_rows_;
  std::vector<int> free_rows_;
  IntMatrix u_;  // y = U x
};

struct InfiniteOrder {
  friend bool operator==(const InfiniteOrder&, const InfiniteOrder&) = default;
};
using ElementOrder = std::variant<mpz_class, InfiniteOrder>;

inline bool is_infinite(const ElementOrder& o) {
  return std::holds_alternative<InfiniteOrder>(o);
}

// Z^gens modulo the exponent-sum columns of the relators.
AbelianStructure abelianization(const Presentation& pres);

// Least n >= 1 with n * image(w) = 0, or InfiniteOrder when the image has a
// nonzero free part. Never reports 0.
ElementOrder element_order(const AbelianStructure& ab, const Word& w);

}  // namespace quadstab
