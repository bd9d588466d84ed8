#include "quadstab/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace quadstab {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw InvalidArgument("matrix shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const mpz_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        mpz_addmul(c.at(i, j).get_mpz_t(), aik.get_mpz_t(), b.at(k, j).get_mpz_t());
    }
  return c;
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows != a.cols) throw InvalidArgument("determinant needs a square matrix");
  int n = a.rows;
  if (n == 0) return 1;
  IntMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (int t = 0; t < n - 1; ++t) {
    if (m.at(t, t) == 0) {
      int p = -1;
      for (int i = t + 1; i < n; ++i)
        if (m.at(i, t) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(t, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i) {
      for (int j = t + 1; j < n; ++j) {
        mpz_class num = m.at(t, t) * m.at(i, j) - m.at(i, t) * m.at(t, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, t) = 0;
    }
    prev = m.at(t, t);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

// a -= q*b over a row or column stride
void submul_row(IntMatrix& m, int dst, int src, const mpz_class& q) {
  for (int j = 0; j < m.cols; ++j)
    mpz_submul(m.at(dst, j).get_mpz_t(), q.get_mpz_t(), m.at(src, j).get_mpz_t());
}

void submul_col(IntMatrix& m, int dst, int src, const mpz_class& q) {
  for (int i = 0; i < m.rows; ++i)
    mpz_submul(m.at(i, dst).get_mpz_t(), q.get_mpz_t(), m.at(i, src).get_mpz_t());
}

void add_row(IntMatrix& m, int dst, int src) {
  for (int j = 0; j < m.cols; ++j) m.at(dst, j) += m.at(src, j);
}

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

void negate_row(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
  SmithResult res{IntMatrix::identity(a.rows), a, IntMatrix::identity(a.cols)};
  IntMatrix& s = res.s;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  int n = std::min(a.rows, a.cols);

  for (int t = 0; t < n; ++t) {
    for (;;) {
      // least |entry| pivot in the trailing submatrix
      int pi = -1, pj = -1;
      for (int i = t; i < s.rows; ++i)
        for (int j = t; j < s.cols; ++j) {
          if (s.at(i, j) == 0) continue;
          if (pi < 0 ||
              mpz_cmpabs(s.at(i, j).get_mpz_t(), s.at(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        t = n;  // trailing submatrix is zero; done
        break;
      }
      swap_rows(s, t, pi);
      swap_rows(u, t, pi);
      swap_cols(s, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (int i = t + 1; i < s.rows; ++i) {
        if (s.at(i, t) == 0) continue;
        mpz_class q = s.at(i, t) / s.at(t, t);  // truncated
        if (q != 0) {
          submul_row(s, i, t, q);
          submul_row(u, i, t, q);
        }
        if (s.at(i, t) != 0) clean = false;  // remainder became a smaller entry
      }
      for (int j = t + 1; j < s.cols; ++j) {
        if (s.at(t, j) == 0) continue;
        mpz_class q = s.at(t, j) / s.at(t, t);
        if (q != 0) {
          submul_col(s, j, t, q);
          submul_col(v, j, t, q);
        }
        if (s.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // make the pivot divide everything that remains
      bool fixed = false;
      for (int i = t + 1; i < s.rows && !fixed; ++i)
        for (int j = t + 1; j < s.cols && !fixed; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            add_row(s, t, i);
            add_row(u, t, i);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (t >= n) break;
  }

  for (int t = 0; t < n; ++t)
    if (s.at(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  return res;
}

AbelianStructure::AbelianStructure(std::vector<std::string> generators,
                                   const IntMatrix& relations)
    : generators_(std::move(generators)) {
  int g = static_cast<int>(generators_.size());
  if (relations.rows != g)
    throw InvalidArgument("relation matrix needs one row per generator");
  for (int i = 0; i < g; ++i) {
    if (!index_.emplace(generators_[i], i).second)
      throw InvalidArgument("duplicate generator " + generators_[i]);
  }

  // The column lattice is unchanged by dropping zero and duplicate columns,
  // which mostly come from rewritten relators and would slow the SNF down.
  std::set<std::vector<mpz_class>> seen;
  std::vector<std::vector<mpz_class>> kept;
  for (int j = 0; j < relations.cols; ++j) {
    std::vector<mpz_class> col(g);
    bool zero = true;
    for (int i = 0; i < g; ++i) {
      col[i] = relations.at(i, j);
      if (col[i] != 0) zero = false;
    }
    if (!zero && seen.insert(col).second) kept.push_back(std::move(col));
  }
  IntMatrix reduced(g, static_cast<int>(kept.size()));
  for (int j = 0; j < reduced.cols; ++j)
    for (int i = 0; i < g; ++i) reduced.at(i, j) = kept[j][i];

  SmithResult snf = smith_normal_form(reduced);
  u_ = std::move(snf.u);
  int n = std::min(reduced.rows, reduced.cols);
  for (int i = 0; i < g; ++i) {
    mpz_class d = i < n ? snf.s.at(i, i) : mpz_class(0);
    if (d == 1) continue;  // trivial factor
    if (d == 0) {
      free_rows_.push_back(i);
    } else {
      torsion_.push_back(d);
      torsion_rows_.push_back(i);
    }
  }
}

std::vector<mpz_class> AbelianStructure::image_vector(
    const std::vector<mpz_class>& exponents) const {
  if (exponents.size() != generators_.size())
    throw InvalidArgument("exponent vector length mismatch");
  std::vector<mpz_class> out;
  out.reserve(torsion_rows_.size() + free_rows_.size());
  auto row_dot = [&](int row) {
    mpz_class y = 0;
    for (int j = 0; j < u_.cols; ++j)
      if (exponents[j] != 0)
        mpz_addmul(y.get_mpz_t(), u_.at(row, j).get_mpz_t(),
                   exponents[j].get_mpz_t());
    return y;
  };
  for (size_t k = 0; k < torsion_rows_.size(); ++k) {
    mpz_class y = row_dot(torsion_rows_[k]);
    mpz_class c;
    mpz_fdiv_r(c.get_mpz_t(), y.get_mpz_t(), torsion_[k].get_mpz_t());
    out.push_back(std::move(c));
  }
  for (int row : free_rows_) out.push_back(row_dot(row));
  return out;
}

std::vector<mpz_class> AbelianStructure::image(const Word& w) const {
  std::vector<mpz_class> x(generators_.size(), 0);
  for (const auto& s : w.syllables()) {
    auto it = index_.find(s.gen);
    if (it == index_.end()) throw UnknownGenerator(s.gen);
    x[it->second] += static_cast<long>(s.exp);
  }
  return image_vector(x);
}

AbelianStructure abelianization(const Presentation& pres) {
  int g = static_cast<int>(pres.generators.size());
  std::map<std::string, int> index;
  for (int i = 0; i < g; ++i) index[pres.generators[i]] = i;
  IntMatrix rel(g, static_cast<int>(pres.relators.size()));
  for (size_t j = 0; j < pres.relators.size(); ++j)
    for (const auto& s : pres.relators[j].syllables())
      rel.at(index.at(s.gen), static_cast<int>(j)) +=
          static_cast<long>(s.exp);
  return AbelianStructure(pres.generators, rel);
}

ElementOrder element_order(const AbelianStructure& ab, const Word& w) {
  std::vector<mpz_class> coords = ab.image(w);
  size_t k = ab.torsion().size();
  for (size_t i = k; i < coords.size(); ++i)
    if (coords[i] != 0) return InfiniteOrder{};
  mpz_class order = 1;
  for (size_t i = 0; i < k; ++i) {
    mpz_class d = ab.torsion()[i] / gcd(ab.torsion()[i], coords[i]);
    order = lcm(order, d);
  }
  return order;
}

}  // namespace quadstab
