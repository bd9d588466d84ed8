#include "quadstab/qforms.hpp"

#include <sstream>

namespace quadstab {

QuadraticRefinement::QuadraticRefinement(int genus, std::vector<int> values)
    : genus_(genus), values_(std::move(values)) {
  if (genus < 0 || values_.size() != static_cast<size_t>(2 * genus))
    throw InvalidArgument("refinement needs 2*genus basis values");
  for (int b : values_)
    if (b != 0 && b != 1) throw InvalidArgument("refinement values are bits");
}

int arf(const QuadraticRefinement& q) {
  int a = 0;
  for (int i = 0; i < q.genus(); ++i)
    a ^= q.values()[2 * i] & q.values()[2 * i + 1];
  return a;
}

int evaluate(const QuadraticRefinement& q, const std::vector<long long>& v) {
  if (v.size() != q.values().size())
    throw InvalidArgument("vector length does not match 2*genus");
  // q(sum c_i b_i) = sum c_i q(b_i) + sum_{i<j} c_i c_j <b_i, b_j>  (mod 2);
  // the only nonzero basis pairings are <e_k, f_k> = 1.
  long long acc = 0;
  for (size_t i = 0; i < v.size(); ++i) acc += v[i] * q.values()[i];
  for (int k = 0; k < q.genus(); ++k) acc += v[2 * k] * v[2 * k + 1];
  return static_cast<int>(((acc % 2) + 2) % 2);
}

SymplecticMatrix::SymplecticMatrix(int genus, std::vector<std::vector<long long>> entries)
    : genus_(genus), m_(std::move(entries)) {
  int n = 2 * genus_;
  if (genus_ <= 0 || m_.size() != static_cast<size_t>(n))
    throw InvalidArgument("symplectic matrix must be 2g x 2g with g >= 1");
  for (const auto& row : m_)
    if (row.size() != static_cast<size_t>(n))
      throw InvalidArgument("symplectic matrix must be square");
  // M^T Omega M = Omega, i.e. <M x, M y> = <x, y> on basis vectors.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long long want = 0;
      if (i / 2 == j / 2) want = (i % 2 == 0 && j % 2 == 1) ? 1 : (i % 2 == 1 && j % 2 == 0 ? -1 : 0);
      if (symplectic_pairing(column(i), column(j)) != want)
        throw InvalidArgument("matrix is not symplectic");
    }
  }
}

SymplecticMatrix SymplecticMatrix::identity(int genus) {
  int n = 2 * genus;
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return SymplecticMatrix(genus, std::move(m));
}

std::vector<long long> SymplecticMatrix::column(int j) const {
  std::vector<long long> c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = m_[i][j];
  return c;
}

SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  if (a.genus() != b.genus())
    throw InvalidArgument("genus mismatch in matrix product");
  int n = a.dim();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long aik = a.entry(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) m[i][j] += aik * b.entry(k, j);
    }
  return SymplecticMatrix(a.genus(), std::move(m));
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  // M^-1 = Omega^-1 M^T Omega for symplectic M; stays integral.
  int n = dim();
  auto omega = [&](int i, int j) -> long long {
    if (i / 2 != j / 2) return 0;
    if (i % 2 == 0 && j % 2 == 1) return 1;
    if (i % 2 == 1 && j % 2 == 0) return -1;
    return 0;
  };
  // Omega^-1 = -Omega = Omega^T.
  std::vector<std::vector<long long>> inv(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long s = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s += -omega(i, a) * m_[b][a] * omega(b, j);
      inv[i][j] = s;
    }
  return SymplecticMatrix(genus_, std::move(inv));
}

bool SymplecticMatrix::is_identity() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (m_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

long long symplectic_pairing(const std::vector<long long>& x,
                             const std::vector<long long>& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw InvalidArgument("pairing needs two vectors of equal even length");
  long long s = 0;
  for (size_t k = 0; k + 1 < x.size(); k += 2)
    s += x[k] * y[k + 1] - x[k + 1] * y[k];
  return s;
}

QuadraticRefinement act(const QuadraticRefinement& q, const SymplecticMatrix& M) {
  if (M.genus() != q.genus())
    throw InvalidArgument("genus mismatch between refinement and matrix");
  std::vector<int> vals(2 * q.genus());
  for (int k = 0; k < 2 * q.genus(); ++k) vals[k] = evaluate(q, M.column(k));
  return QuadraticRefinement(q.genus(), std::move(vals));
}

SymplecticMatrix transvection_matrix(const std::vector<long long>& c) {
  if (c.size() % 2 != 0 || c.empty())
    throw InvalidArgument("transvection vector must have length 2g");
  int n = static_cast<int>(c.size());
  // t_c(x) = x + <c, x> c, so column j is e_j + <c, e_j> c.
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int j = 0; j < n; ++j) {
    std::vector<long long> ej(n, 0);
    ej[j] = 1;
    long long coef = symplectic_pairing(c, ej);
    for (int i = 0; i < n; ++i) m[i][j] = (i == j ? 1 : 0) + coef * c[i];
  }
  return SymplecticMatrix(n / 2, std::move(m));
}

QuadraticRefinement direct_sum(const QuadraticRefinement& a,
                               const QuadraticRefinement& b) {
  std::vector<int> vals = a.values();
  vals.insert(vals.end(), b.values().begin(), b.values().end());
  return QuadraticRefinement(a.genus() + b.genus(), std::move(vals));
}

std::vector<QuadraticRefinement> enumerate_refinements(
    int g, std::optional<int> arf_value, int genus_bound) {
  if (g < 0 || g > genus_bound)
    throw InvalidArgument("genus exceeds the enumeration bound");
  std::vector<QuadraticRefinement> out;
  int n = 2 * g;
  for (long long bits = 0; bits < (1LL << n); ++bits) {
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = static_cast<int>((bits >> (n - 1 - i)) & 1);
    QuadraticRefinement q(g, std::move(vals));
    if (!arf_value || arf(q) == *arf_value) out.push_back(std::move(q));
  }
  return out;
}

int canonical_index(const QuadraticRefinement& q) {
  // Lexicographic rank of the bit vector within its Arf class.
  int idx = 0;
  int a = arf(q);
  int n = 2 * q.genus();
  for (long long bits = 0; bits < (1LL << n); ++bits) {
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = static_cast<int>((bits >> (n - 1 - i)) & 1);
    QuadraticRefinement r(q.genus(), std::move(vals));
    if (r == q) return idx;
    if (arf(r) == a) ++idx;
  }
  throw InvalidArgument("refinement not found in its class");  // unreachable
}

std::string print_refinement(const QuadraticRefinement& q) {
  std::ostringstream os;
  os << "q_{";
  for (size_t i = 0; i < q.values().size(); ++i) {
    if (i) os << ',';
    os << q.values()[i];
  }
  os << '}';
  return os.str();
}

}  // namespace quadstab
