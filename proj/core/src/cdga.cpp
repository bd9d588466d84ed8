#include "quadstab/cdga.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace quadstab {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Cursor(const std::string& text) : s(text) {}

  void advance() {
    if (s[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      advance();
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, col);
  }
  bool try_char(char c) {
    skip_ws();
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_char(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a name");
    std::string out;
    while (pos < s.size() &&
           std::isalnum(static_cast<unsigned char>(s[pos]))) {
      out += s[pos];
      advance();
    }
    return out;
  }
  long long integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      advance();
    }
    return v;
  }
  void keyword(const char* kw) {
    if (ident() != kw) fail(std::string("expected '") + kw + "'");
  }
  std::string until_semicolon() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && s[pos] != ';') advance();
    if (pos >= s.size()) fail("expected ';'");
    std::string out = s.substr(start, pos - start);
    advance();
    return out;
  }
};

}  // namespace

int CdgaSpec::generator_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownGenerator(name);
  return it->second;
}

bool CdgaSpec::square_zero(int gen_index) const {
  return char_ != 2 && gens_[gen_index].degree % 2 == 1;
}

int CdgaSpec::max_generator_rank() const {
  int m = 0;
  for (const auto& g : gens_) m = std::max(m, g.h_grade.rank);
  return m;
}

Bidegree CdgaSpec::monomial_bidegree(const Monomial& m) const {
  Bidegree bd;
  for (size_t i = 0; i < gens_.size(); ++i) {
    bd.rank += m[i] * gens_[i].h_grade.rank;
    bd.arf ^= (m[i] * gens_[i].h_grade.arf) & 1;
    bd.degree += m[i] * gens_[i].degree;
  }
  return bd;
}

bool CdgaSpec::in_ideal(const Monomial& m) const {
  for (const auto& rel : relations_) {
    bool divides = true;
    for (size_t i = 0; i < rel.size() && divides; ++i)
      if (m[i] < rel[i]) divides = false;
    if (divides) return true;
  }
  return false;
}

mpq_class CdgaSpec::normalize(const mpq_class& c) const {
  if (char_ == 0) {
    mpq_class r = c;
    r.canonicalize();
    return r;
  }
  mpz_class p(static_cast<long>(char_));
  mpz_class num = c.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = c.get_den() % p;
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw InvalidArgument("denominator not invertible in the field");
    num = (num * inv) % p;
  }
  return mpq_class(num);
}

namespace {

mpq_class field_inverse(const CdgaSpec& spec, const mpq_class& c) {
  if (c == 0) throw InvalidArgument("division by zero in the field");
  if (spec.characteristic() == 0) return 1 / c;
  mpz_class p(static_cast<long>(spec.characteristic()));
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), c.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
    throw InvalidArgument("value not invertible in the field");
  return mpq_class(inv);
}

void accumulate(const CdgaSpec& spec, Poly& out, const Monomial& m,
                const mpq_class& c) {
  auto it = out.find(m);
  if (it == out.end()) {
    mpq_class v = spec.normalize(c);
    if (v != 0) out.emplace(m, std::move(v));
    return;
  }
  it->second = spec.normalize(it->second + c);
  if (it->second == 0) out.erase(it);
}

// Product of two canonical-order monomials: Koszul sign from moving each
// odd-degree letter of b past the higher-indexed odd letters of a; zero when
// a square-zero generator ends up with exponent > 1.
bool mul_monomial(const CdgaSpec& spec, const Monomial& a, const Monomial& b,
                  int* sign, Monomial* out) {
  size_t n = a.size();
  out->assign(n, 0);
  long long crossings = 0;
  // suffix[j] = odd-degree letters of a at indices >= j
  std::vector<long long> suffix(n + 1, 0);
  for (size_t j = n; j-- > 0;) {
    suffix[j] = suffix[j + 1];
    if (spec.generators()[j].degree % 2 == 1) suffix[j] += a[j];
  }
  for (size_t j = 0; j < n; ++j) {
    int e = a[j] + b[j];
    if (e > 1 && spec.square_zero(static_cast<int>(j))) return false;
    (*out)[j] = e;
    if (b[j] > 0 && spec.generators()[j].degree % 2 == 1)
      crossings += static_cast<long long>(b[j]) * suffix[j + 1];
  }
  *sign = crossings % 2 == 0 ? 1 : -1;
  return true;
}

Poly mul_impl(const CdgaSpec& spec, const Poly& a, const Poly& b, bool project) {
  Poly out;
  Monomial m;
  int sign = 1;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (!mul_monomial(spec, ma, mb, &sign, &m)) continue;
      if (project && spec.in_ideal(m)) continue;
      accumulate(spec, out, m, ca * cb * sign);
    }
  return out;
}

Poly project_ideal(const CdgaSpec& spec, Poly p) {
  for (auto it = p.begin(); it != p.end();)
    it = spec.in_ideal(it->first) ? p.erase(it) : std::next(it);
  return p;
}

// Leibniz expansion in the free algebra (no ideal projection):
// d(g^e * tail) = e g^{e-1} d(g) tail + (-1)^{e deg(g)} g^e d(tail).
Poly diff_monomial_free(const CdgaSpec& spec, const Monomial& m) {
  size_t n = m.size();
  size_t i = 0;
  while (i < n && m[i] == 0) ++i;
  if (i == n) return {};
  int e = m[i];
  Monomial tail = m;
  tail[i] = 0;
  Poly out;
  if (!spec.diff(static_cast<int>(i)).empty()) {
    Monomial gpow(n, 0);
    gpow[i] = e - 1;
    Poly dhead = mul_impl(spec, Poly{{gpow, mpq_class(e)}},
                          spec.diff(static_cast<int>(i)), false);
    out = mul_impl(spec, dhead, Poly{{tail, mpq_class(1)}}, false);
  }
  Poly dtail = diff_monomial_free(spec, tail);
  if (!dtail.empty()) {
    Monomial head(n, 0);
    head[i] = e;
    Poly t = mul_impl(spec, Poly{{head, mpq_class(1)}}, dtail, false);
    long long s = static_cast<long long>(e) * spec.generators()[i].degree;
    for (const auto& [mm, cc] : t) accumulate(spec, out, mm, s % 2 ? -cc : cc);
  }
  return out;
}

Poly differential_unchecked(const CdgaSpec& spec, const Poly& element) {
  Poly out;
  for (const auto& [m, c] : element) {
    Poly dm = project_ideal(spec, diff_monomial_free(spec, m));
    for (const auto& [mm, cc] : dm) accumulate(spec, out, mm, c * cc);
  }
  return out;
}

void enumerate_rec(const CdgaSpec& spec, size_t i, int rank_left, int deg_left,
                   int arf_left, Monomial& current,
                   std::vector<Monomial>& out) {
  if (spec.in_ideal(current)) return;  // every extension is divisible too
  size_t n = spec.generators().size();
  if (i == n) {
    if (rank_left == 0 && deg_left == 0 && arf_left == 0)
      out.push_back(current);
    return;
  }
  const CdgaGenerator& g = spec.generators()[i];
  int cap = rank_left / g.h_grade.rank;  // rank >= 1 always
  if (g.degree > 0) cap = std::min(cap, deg_left / g.degree);
  if (spec.square_zero(static_cast<int>(i))) cap = std::min(cap, 1);
  for (int e = 0; e <= cap; ++e) {
    current[i] = e;
    enumerate_rec(spec, i + 1, rank_left - e * g.h_grade.rank,
                  deg_left - e * g.degree, arf_left ^ ((e * g.h_grade.arf) & 1),
                  current, out);
  }
  current[i] = 0;
}

std::vector<Monomial> enumerate_unchecked(const CdgaSpec& spec,
                                          const Bidegree& bd) {
  std::vector<Monomial> out;
  Monomial current(spec.generators().size(), 0);
  enumerate_rec(spec, 0, bd.rank, bd.degree, bd.arf, current, out);
  return out;
}

int matrix_rank(const CdgaSpec& spec, std::vector<std::vector<mpq_class>> m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  int rank = 0;
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    size_t piv = pr;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[pr], m[piv]);
    mpq_class inv = field_inverse(spec, m[pr][c]);
    for (size_t j = c; j < cols; ++j)
      m[pr][j] = spec.normalize(m[pr][j] * inv);
    for (size_t i = pr + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (size_t j = c; j < cols; ++j)
        m[i][j] = spec.normalize(m[i][j] - f * m[pr][j]);
    }
    ++pr;
    ++rank;
  }
  return rank;
}

}  // namespace

CdgaSpec::CdgaSpec(long long characteristic, int max_rank, int max_degree,
                   std::vector<CdgaGenerator> generators,
                   std::vector<std::pair<std::string, std::string>> differentials,
                   std::vector<std::string> quotients)
    : char_(characteristic),
      max_rank_(max_rank),
      max_degree_(max_degree),
      gens_(std::move(generators)),
      diff_texts_(std::move(differentials)),
      quotient_texts_(std::move(quotients)) {
  if (char_ != 0 && !is_prime(char_))
    throw InvalidArgument("characteristic must be 0 or a prime");
  if (max_rank_ < 1 || max_degree_ < 0)
    throw InvalidArgument("truncation bounds must have rank >= 1, deg >= 0");
  for (size_t i = 0; i < gens_.size(); ++i) {
    const CdgaGenerator& g = gens_[i];
    if (g.name.empty() || !std::isalpha(static_cast<unsigned char>(g.name[0])))
      throw InvalidArgument("bad generator name");
    if (g.h_grade.rank < 1)
      throw InvalidArgument("generator " + g.name + " needs rank >= 1");
    if (g.degree < 0)
      throw InvalidArgument("generator " + g.name + " needs degree >= 0");
    if (!index_.emplace(g.name, static_cast<int>(i)).second)
      throw InvalidArgument("duplicate generator " + g.name);
  }

  // Relations first (without projection): vacuous ones — already zero in the
  // free algebra, e.g. an odd square outside characteristic 2 — are dropped.
  for (const std::string& text : quotient_texts_) {
    Poly p = parse_poly_impl(text, false);
    if (p.empty()) continue;
    if (p.size() != 1 || p.begin()->second != normalize(1))
      throw InvalidArgument("quotient relation must be a single monomial: " + text);
    const Monomial& m = p.begin()->first;
    if (monomial_bidegree(m) == Bidegree{})
      throw InvalidArgument("quotient relation must be nonconstant: " + text);
    relations_.push_back(m);
  }

  diffs_.assign(gens_.size(), Poly{});
  std::vector<char> have(gens_.size(), 0);
  for (const auto& [name, text] : diff_texts_) {
    int i = generator_index(name);
    if (have[i]) throw InvalidArgument("duplicate differential for " + name);
    have[i] = 1;
    diffs_[i] = parse_poly_impl(text, true);
    for (const auto& [m, c] : diffs_[i]) {
      Bidegree bd = monomial_bidegree(m);
      if (bd.rank != gens_[i].h_grade.rank || bd.arf != gens_[i].h_grade.arf ||
          bd.degree != gens_[i].degree - 1)
        throw InvalidArgument(
            "differential of " + name +
            " must lower degree by exactly 1 and preserve the H-grade");
    }
  }

  // d of each relation must lie in the ideal, otherwise the induced
  // differential on the quotient is not defined.
  for (const Monomial& rel : relations_) {
    Poly d = diff_monomial_free(*this, rel);
    for (const auto& [m, c] : d)
      if (!in_ideal(m))
        throw IllFormedQuotient(
            "differential of a quotient relation leaves the ideal");
  }

  // d(d(g)) = 0 for every generator, by full expansion.
  for (size_t i = 0; i < gens_.size(); ++i)
    if (!differential_unchecked(*this, diffs_[i]).empty())
      throw InvalidArgument("differential does not square to zero on " +
                            gens_[i].name);
}

Poly CdgaSpec::parse_poly(const std::string& text) const {
  return parse_poly_impl(text, true);
}

Poly CdgaSpec::parse_poly_impl(const std::string& text, bool project) const {
  Cursor c(text);
  size_t n = gens_.size();
  if (c.eof()) c.fail("empty polynomial");
  Poly out;
  int sign = 1;
  if (c.try_char('-'))
    sign = -1;
  else
    (void)c.try_char('+');
  for (;;) {
    // term: '*'-separated integer and name['^'exp] factors
    Poly term{{Monomial(n, 0), mpq_class(1)}};
    mpq_class coeff = sign;
    for (;;) {
      c.skip_ws();
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff *= static_cast<long>(c.integer());
      } else {
        std::string name = c.ident();
        int idx = generator_index(name);
        long long exp = 1;
        if (c.try_char('^')) exp = c.integer();
        Monomial f(n, 0);
        f[idx] = static_cast<int>(exp);
        term = mul_impl(*this, term, Poly{{f, mpq_class(1)}}, project);
      }
      if (!c.try_char('*')) break;
    }
    for (const auto& [m, cc] : term) accumulate(*this, out, m, coeff * cc);
    if (c.eof()) break;
    if (c.try_char('+'))
      sign = 1;
    else if (c.try_char('-'))
      sign = -1;
    else
      c.fail("expected '+' or '-'");
  }
  return out;
}

CdgaSpec parse_cdga_spec(const std::string& text) {
  Cursor c(text);
  bool have_char = false, have_trunc = false;
  long long characteristic = 0;
  long long max_rank = 1, max_degree = 0;
  std::vector<CdgaGenerator> gens;
  std::vector<std::pair<std::string, std::string>> diffs;
  std::vector<std::string> quots;
  while (!c.eof()) {
    std::string stmt = c.ident();
    if (stmt == "char") {
      if (have_char) c.fail("duplicate char statement");
      have_char = true;
      characteristic = c.integer();
      c.expect(';');
    } else if (stmt == "trunc") {
      if (have_trunc) c.fail("duplicate trunc statement");
      have_trunc = true;
      c.keyword("rank");
      max_rank = c.integer();
      c.keyword("deg");
      max_degree = c.integer();
      c.expect(';');
    } else if (stmt == "gen") {
      std::string name = c.ident();
      c.keyword("rank");
      long long rank = c.integer();
      c.keyword("arf");
      long long arf_bit = c.integer();
      c.keyword("deg");
      long long deg = c.integer();
      c.expect(';');
      if (rank < 1) c.fail("generator rank must be >= 1");
      if (arf_bit != 0 && arf_bit != 1) c.fail("arf must be 0 or 1");
      gens.push_back({name, HGrade(static_cast<int>(rank), static_cast<int>(arf_bit)),
                      static_cast<int>(deg)});
    } else if (stmt == "diff") {
      std::string name = c.ident();
      c.expect('=');
      diffs.emplace_back(name, c.until_semicolon());
    } else if (stmt == "quot") {
      quots.push_back(c.until_semicolon());
    } else {
      c.fail("unknown statement '" + stmt + "'");
    }
  }
  if (!have_char) throw ParseError("missing char statement", c.line, c.col);
  if (!have_trunc) throw ParseError("missing trunc statement", c.line, c.col);
  return CdgaSpec(characteristic, static_cast<int>(max_rank),
                  static_cast<int>(max_degree), std::move(gens),
                  std::move(diffs), std::move(quots));
}

CdgaSpec quotient_spec(const CdgaSpec& spec,
                       const std::vector<std::string>& relations) {
  std::vector<std::string> quots = spec.quotient_texts_;
  quots.insert(quots.end(), relations.begin(), relations.end());
  return CdgaSpec(spec.char_, spec.max_rank_, spec.max_degree_, spec.gens_,
                  spec.diff_texts_, std::move(quots));
}

CdgaSpec with_characteristic(const CdgaSpec& spec, long long ell) {
  return CdgaSpec(ell, spec.max_rank_, spec.max_degree_, spec.gens_,
                  spec.diff_texts_, spec.quotient_texts_);
}

std::vector<Monomial> enumerate_basis(const CdgaSpec& spec, const Bidegree& bd) {
  if (bd.rank < 0 || bd.degree < 0 || (bd.arf != 0 && bd.arf != 1))
    throw InvalidArgument("bad bidegree");
  if (bd.rank > spec.max_rank() || bd.degree > spec.max_degree())
    throw TruncationExceeded("truncation exceeded");
  return enumerate_unchecked(spec, bd);
}

Poly differential(const CdgaSpec& spec, const Poly& element) {
  for (const auto& [m, c] : element) {
    Bidegree bd = spec.monomial_bidegree(m);
    if (bd.rank > spec.max_rank() || bd.degree > spec.max_degree())
      throw TruncationExceeded("truncation exceeded");
  }
  return differential_unchecked(spec, element);
}

Poly mul(const CdgaSpec& spec, const Poly& a, const Poly& b) {
  return mul_impl(spec, a, b, true);
}

Poly add(const CdgaSpec& spec, const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b) accumulate(spec, out, m, c);
  return out;
}

Poly scale(const CdgaSpec& spec, const mpq_class& c, const Poly& a) {
  Poly out;
  for (const auto& [m, cc] : a) accumulate(spec, out, m, c * cc);
  return out;
}

HomologyTable homology_table(const CdgaSpec& spec) {
  HomologyTable table;
  table.reliable_rank = spec.max_rank() - spec.max_generator_rank();
  table.reliable_degree = spec.max_degree() - 1;
  if (table.reliable_rank < 0 || table.reliable_degree < 0) return table;
  for (int a = 0; a < 2; ++a) {
    for (int r = 0; r <= table.reliable_rank; ++r) {
      int dmax = table.reliable_degree + 1;
      std::vector<std::vector<Monomial>> bases(dmax + 1);
      for (int d = 0; d <= dmax; ++d)
        bases[d] = enumerate_unchecked(spec, {r, a, d});
      // boundary ranks: dr[d] = rank of d : C_d -> C_{d-1}
      std::vector<int> dr(dmax + 2, 0);
      for (int d = 1; d <= dmax; ++d) {
        if (bases[d].empty() || bases[d - 1].empty()) continue;
        std::map<Monomial, int> where;
        for (size_t i = 0; i < bases[d - 1].size(); ++i)
          where[bases[d - 1][i]] = static_cast<int>(i);
        std::vector<std::vector<mpq_class>> m(
            bases[d - 1].size(), std::vector<mpq_class>(bases[d].size(), 0));
        for (size_t j = 0; j < bases[d].size(); ++j) {
          Poly dj = project_ideal(spec, diff_monomial_free(spec, bases[d][j]));
          for (const auto& [mono, coeff] : dj) {
            auto it = where.find(mono);
            if (it == where.end())
              throw std::logic_error("differential left its bidegree");
            m[it->second][j] = coeff;
          }
        }
        dr[d] = matrix_rank(spec, std::move(m));
      }
      for (int d = 0; d <= table.reliable_degree; ++d) {
        int dim = static_cast<int>(bases[d].size()) - dr[d] - dr[d + 1];
        if (dim < 0) throw std::logic_error("negative homology dimension");
        table.dims[{r, a, d}] = dim;
      }
    }
  }
  return table;
}

VanishingReport check_vanishing(const HomologyTable& table, long long slope_num,
                                long long slope_den, long long intercept) {
  if (slope_den < 1) throw InvalidArgument("slope denominator must be positive");
  VanishingReport report;
  for (const auto& [bd, dim] : table.dims) {
    if (slope_den * bd.degree <= slope_num * bd.rank + intercept && dim != 0) {
      report.verdict = false;
      report.violations.push_back(bd);
    }
  }
  return report;
}

}  // namespace quadstab
