#include <doctest.h>

#include <quadstab/catalog.hpp>
#include <quadstab/cdga.hpp>
#include <quadstab/errors.hpp>

#include <map>
#include <string>
#include <vector>

using namespace quadstab;

namespace {

using Expected = std::map<Bidegree, int>;

void bump(Expected& e, const HomologyTable& t, int rank, int arf_bit, int deg) {
  if (rank <= t.reliable_rank && deg <= t.reliable_degree)
    e[Bidegree{rank, rank > 0 ? (arf_bit & 1) : 0, deg}] += 1;
}

// Every reliable bidegree must carry exactly the expected dimension.
void check_table(const HomologyTable& t, const Expected& e) {
  for (const auto& [bd, dim] : t.dims) {
    auto it = e.find(bd);
    int want = it == e.end() ? 0 : it->second;
    if (dim != want) {
      CAPTURE(bd.rank);
      CAPTURE(bd.arf);
      CAPTURE(bd.degree);
      CHECK(dim == want);
      return;
    }
  }
  for (const auto& [bd, dim] : e) {
    CAPTURE(bd.rank);
    CHECK(t.dims.count(bd) == 1);  // expected entries lie in the window
  }
  CHECK(true);
}

// H({1, sigma} F_2[rho^2]): the shipped two-generator algebra over F_2.
Expected step1_f2_truth(const HomologyTable& t) {
  Expected e;
  for (int k = 0;; ++k) {
    if (4 * k > t.reliable_rank) break;
    bump(e, t, 4 * k, 0, 2 * k);
    bump(e, t, 4 * k + 1, 1, 2 * k);
  }
  return e;
}

// Corrected assembly of the kernel/image computation for the four-generator
// algebra (sigma, rho, q0, Z | d rho = sigma^2, d Z = sigma q0) over F_l:
//   F_l[Z^l]  +  sigma F_l[Z]  +  q0 F_l[Z]  +  sigma q0 {Z^i : l | i+1}.
Expected step4_truth(const HomologyTable& t, int ell) {
  Expected e;
  for (int k = 0; 3 * k <= t.reliable_rank + 3; ++k) {
    if (k % ell == 0) bump(e, t, 3 * k, k, 2 * k);            // Z^k
    bump(e, t, 1 + 3 * k, 1 + k, 2 * k);                      // sigma Z^k
    bump(e, t, 2 + 3 * k, k, 1 + 2 * k);                      // q0 Z^k
    if ((k + 1) % ell == 0) bump(e, t, 3 + 3 * k, 1 + k, 1 + 2 * k);
  }
  return e;
}

// H(F_2[sigma, q0, Z]/(sigma^2, q0^3), d Z = sigma q0): kernel monomials
// (k even, or a = 1, or b = 2) minus image monomials (sigma q0^{1,2} Z^even).
Expected step3_f2_truth(const HomologyTable& t) {
  Expected e;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int k = 0; a + 2 * b + 3 * k <= t.reliable_rank; ++k) {
        bool cycle = (k % 2 == 0) || a == 1 || b == 2;
        bool boundary = a == 1 && b >= 1 && k % 2 == 0;
        if (cycle && !boundary)
          bump(e, t, a + 2 * b + 3 * k, a + k, b + 2 * k);
      }
  return e;
}

}  // namespace

TEST_SUITE("cdga") {

TEST_CASE("shipped specs parse with the declared shapes") {
  for (const auto& name : cdga_names()) {
    CdgaSpec spec = parse_cdga_spec(cdga_spec_text(name));
    CHECK(spec.max_rank() == 12);
    CHECK(spec.max_degree() == 8);
    CHECK(!spec.generators().empty());
    CHECK(spec.generators()[0].name == "sigma");
    CHECK(spec.generators()[0].h_grade == HGrade{1, 1});
    CHECK(spec.generators()[0].degree == 0);
  }
  CHECK(parse_cdga_spec(cdga_spec_text("thm-stab-1-step3")).characteristic() ==
        2);
  CHECK(parse_cdga_spec(cdga_spec_text("thm-stab-2-step4")).characteristic() ==
        3);
}

TEST_CASE("differential squares to zero and satisfies leibniz") {
  for (const auto& name : cdga_names()) {
    CdgaSpec spec = parse_cdga_spec(cdga_spec_text(name));
    int n = static_cast<int>(spec.generators().size());
    for (int i = 0; i < n; ++i) {
      // d(d(g_i)) = 0
      CHECK(differential(spec, spec.diff(i)).empty());
      for (int j = 0; j < n; ++j) {
        const auto& gi = spec.generators()[i];
        const auto& gj = spec.generators()[j];
        if (gi.h_grade.rank + gj.h_grade.rank > spec.max_rank()) continue;
        Monomial mi(n, 0), mj(n, 0);
        mi[i] = 1;
        mj[j] = 1;
        Poly pi{{mi, 1}}, pj{{mj, 1}};
        Poly prod = mul(spec, pi, pj);
        Poly lhs = differential(spec, prod);
        int sign = gi.degree % 2 == 0 ? 1 : -1;
        Poly rhs = add(spec, mul(spec, spec.diff(i), pj),
                       scale(spec, sign, mul(spec, pi, spec.diff(j))));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("two-generator algebra over F2 and F3") {
  CdgaSpec f2 = parse_cdga_spec(cdga_spec_text("thm-stab-1-step3"));
  HomologyTable t2 = homology_table(f2);
  CHECK(t2.reliable_rank == 10);
  CHECK(t2.reliable_degree == 7);
  check_table(t2, step1_f2_truth(t2));

  HomologyTable t3 = homology_table(with_characteristic(f2, 3));
  Expected only_unit_and_sigma{{Bidegree{0, 0, 0}, 1}, {Bidegree{1, 1, 0}, 1}};
  check_table(t3, only_unit_and_sigma);
}

TEST_CASE("four-generator algebra over F3 and F5") {
  CdgaSpec f3 = parse_cdga_spec(cdga_spec_text("thm-stab-2-step4"));
  HomologyTable t3 = homology_table(f3);
  CHECK(t3.reliable_rank == 9);
  check_table(t3, step4_truth(t3, 3));

  HomologyTable t5 = homology_table(with_characteristic(f3, 5));
  check_table(t5, step4_truth(t5, 5));

  // closed vanishing bound at slope 2/3: fails over F3 at sigma q0 Z^2,
  // holds over F5 where that class is a boundary of Z^3 / 3
  VanishingReport v3 = check_vanishing(t3, 2, 3, -3);
  CHECK(!v3.verdict);
  CHECK(v3.violations == std::vector<Bidegree>{{9, 1, 5}});
  VanishingReport v5 = check_vanishing(t5, 2, 3, -3);
  CHECK(v5.verdict);
  CHECK(v5.violations.empty());
}

TEST_CASE("quotiented three-generator algebra over F2") {
  CdgaSpec spec = parse_cdga_spec(cdga_spec_text("thm-stab-3-step3"));
  HomologyTable t = homology_table(spec);
  CHECK(t.reliable_rank == 9);
  check_table(t, step3_f2_truth(t));

  // the closed 2/3 bound is violated by sigma q0 Z and sigma q0^2 Z
  VanishingReport v = check_vanishing(t, 2, 3, -3);
  CHECK(!v.verdict);
  CHECK(v.violations == std::vector<Bidegree>{{6, 0, 3}, {8, 0, 4}});
  // sigma q0^2 Z sits at 3*deg - 2*rank = -4, so only -5 clears the line
  VanishingReport v4 = check_vanishing(t, 2, 3, -4);
  CHECK(!v4.verdict);
  CHECK(v4.violations == std::vector<Bidegree>{{8, 0, 4}});
  CHECK(check_vanishing(t, 2, 3, -5).verdict);
}

TEST_CASE("rational and large-prime homology agree in the window") {
  CdgaSpec spec = parse_cdga_spec(cdga_spec_text("thm-stab-3-step3"));
  HomologyTable q = homology_table(with_characteristic(spec, 0));
  HomologyTable p = homology_table(with_characteristic(spec, 101));
  CHECK(q.dims == p.dims);

  // over Q the odd generator q0 squares to zero, so H = 1 + sigma Q[Z] +
  // q0 Q[Z]
  Expected e;
  bump(e, q, 0, 0, 0);
  for (int k = 0; 2 + 3 * k <= q.reliable_rank; ++k) {
    bump(e, q, 1 + 3 * k, 1 + k, 2 * k);
    bump(e, q, 2 + 3 * k, k, 1 + 2 * k);
  }
  check_table(q, e);
}

TEST_CASE("kuenneth factorization of the six-generator F3 algebra") {
  CdgaSpec whole = parse_cdga_spec(cdga_spec_text("thm-stab-2-step3"));
  HomologyTable t = homology_table(whole);

  // the (q1, X | dX = q1) factor: cycles X^k (3 | k) and q1 X^k survive,
  // boundaries are q1 X^k with 3 not dividing k+1, leaving
  // F_3[X^3] + q1 F_3{X^k : 3 | k+1}
  CdgaSpec fb = parse_cdga_spec(
      "char 3;\n"
      "trunc rank 12 deg 10;\n"
      "gen q1 rank 2 arf 0 deg 1;\n"
      "gen X rank 2 arf 0 deg 2;\n"
      "diff X = q1;\n");
  HomologyTable tb = homology_table(fb);
  Expected ebx;
  for (int k = 0; 2 * k <= tb.reliable_rank; ++k) {
    if (k % 3 == 0) bump(ebx, tb, 2 * k, 0, 2 * k);
    if ((k + 1) % 3 == 0) bump(ebx, tb, 2 + 2 * k, 0, 1 + 2 * k);
  }
  check_table(tb, ebx);

  // convolve the hand-checked factor tables and compare with the whole
  Expected ea = step4_truth(t, 3);
  Expected conv;
  for (const auto& [ba, da] : ea)
    for (const auto& [bb, db] : ebx) {
      Bidegree bd{ba.rank + bb.rank, (ba.arf + bb.arf) & 1,
                  ba.degree + bb.degree};
      if (bd.rank <= t.reliable_rank && bd.degree <= t.reliable_degree)
        conv[bd] += da * db;
    }
  check_table(t, conv);
}

TEST_CASE("kuenneth factorization of the seven-generator F2 algebra") {
  CdgaSpec whole = parse_cdga_spec(cdga_spec_text("thm-stab-3-step2"));
  HomologyTable t = homology_table(whole);

  // factor without (q1, X), truncated high enough to cover the whole window
  CdgaSpec fa = parse_cdga_spec(
      "char 2;\n"
      "trunc rank 16 deg 10;\n"
      "gen sigma rank 1 arf 1 deg 0;\n"
      "gen rho rank 2 arf 0 deg 1;\n"
      "gen q0 rank 2 arf 0 deg 1;\n"
      "gen Z rank 3 arf 1 deg 2;\n"
      "gen U rank 6 arf 0 deg 4;\n"
      "diff rho = sigma^2;\n"
      "diff Z = sigma*q0;\n"
      "diff U = q0^3;\n"
      "quot rho^2;\n");
  CdgaSpec fb = parse_cdga_spec(
      "char 2;\n"
      "trunc rank 12 deg 10;\n"
      "gen q1 rank 2 arf 0 deg 1;\n"
      "gen X rank 2 arf 0 deg 2;\n"
      "diff X = q1;\n");
  HomologyTable ta = homology_table(fa);
  HomologyTable tb = homology_table(fb);

  // the second factor is F_2[X^2] on the nose
  Expected ebx;
  for (int j = 0; 4 * j <= tb.reliable_rank && 4 * j <= tb.reliable_degree; ++j)
    bump(ebx, tb, 4 * j, 0, 4 * j);
  check_table(tb, ebx);

  Expected conv;
  for (const auto& [ba, da] : ta.dims) {
    if (!da) continue;
    for (const auto& [bb, db] : tb.dims) {
      if (!db) continue;
      Bidegree bd{ba.rank + bb.rank, (ba.arf + bb.arf) & 1,
                  ba.degree + bb.degree};
      if (bd.rank <= t.reliable_rank && bd.degree <= t.reliable_degree)
        conv[bd] += da * db;
    }
  }
  check_table(t, conv);
}

TEST_CASE("euler characteristic is preserved columnwise") {
  CdgaSpec spec = parse_cdga_spec(cdga_spec_text("thm-stab-3-step2"));
  HomologyTable t = homology_table(spec);
  for (int rank = 0; rank <= t.reliable_rank; ++rank) {
    for (int arf = 0; arf < (rank ? 2 : 1); ++arf) {
      // chain spaces of this column vanish above degree = rank
      if (rank > t.reliable_degree) continue;
      long long chain = 0, hom = 0;
      for (int d = 0; d <= rank; ++d) {
        int sign = d % 2 ? -1 : 1;
        chain += sign * static_cast<long long>(
                            enumerate_basis(spec, {rank, arf, d}).size());
        auto it = t.dims.find({rank, arf, d});
        hom += sign * (it == t.dims.end() ? 0 : it->second);
      }
      CAPTURE(rank);
      CAPTURE(arf);
      CHECK(chain == hom);
    }
  }
}

TEST_CASE("with_characteristic drops vacuous relations") {
  CdgaSpec spec = parse_cdga_spec(cdga_spec_text("thm-stab-3-step3"));
  REQUIRE(spec.relations().size() == 2);  // sigma^2 and q0^3
  // over an odd field the odd generator q0 already squares to zero
  CdgaSpec odd = with_characteristic(spec, 3);
  CHECK(odd.relations().size() == 1);
  CdgaSpec rational = with_characteristic(spec, 0);
  CHECK(rational.relations().size() == 1);
  CHECK(rational.characteristic() == 0);
  // round trip back to char 2 keeps what is left
  CHECK(with_characteristic(spec, 2).relations().size() == 2);
}

TEST_CASE("basis enumeration") {
  CdgaSpec spec = parse_cdga_spec(cdga_spec_text("thm-stab-3-step3"));
  CHECK(enumerate_basis(spec, {0, 0, 0}).size() == 1);
  CHECK(enumerate_basis(spec, {1, 1, 0}).size() == 1);
  CHECK(enumerate_basis(spec, {1, 0, 0}).empty());
  // rank 4, arf 0, degree 2: sigma*Z and q0^2
  CHECK(enumerate_basis(spec, {4, 0, 2}).size() == 2);
  CHECK_THROWS_AS(enumerate_basis(spec, {13, 0, 0}), TruncationExceeded);
  CHECK_THROWS_AS(enumerate_basis(spec, {5, 0, 9}), TruncationExceeded);
}

TEST_CASE("quotients must close under the differential") {
  CdgaSpec base = parse_cdga_spec(cdga_spec_text("thm-stab-1-step3"));
  // d(rho^2) = 2 rho sigma^2 = 0 over F2, so this quotient is legal
  CdgaSpec quot = quotient_spec(base, {"rho^2"});
  CHECK(quot.relations().size() == 1);
  // d(rho) = sigma^2 does not lie in (rho)
  CHECK_THROWS_AS(quotient_spec(base, {"rho"}), IllFormedQuotient);
}

TEST_CASE("spec parse errors") {
  CHECK_THROWS_AS(parse_cdga_spec("nonsense;"), ParseError);
  CHECK_THROWS_AS(parse_cdga_spec("char 2;\ntrunc rank 12 deg 8;\n"
                                  "gen s rank 1 arf 1 deg 0"),
                  ParseError);  // missing semicolon
  CHECK_THROWS_AS(
      parse_cdga_spec("char 2;\ntrunc rank 12 deg 8;\ndiff r = s^2;"),
      UnknownGenerator);
  try {
    parse_cdga_spec("char 2;\nbogus;\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("vanishing check semantics") {
  HomologyTable t;
  t.reliable_rank = 10;
  t.reliable_degree = 7;
  t.dims[{1, 0, 0}] = 1;
  t.dims[{6, 0, 3}] = 1;
  t.dims[{7, 0, 3}] = 0;  // zero dimension is never a violation

  // violation iff den*deg <= num*rank + intercept and dim != 0
  VanishingReport v = check_vanishing(t, 2, 3, -3);
  CHECK(!v.verdict);
  CHECK(v.violations == std::vector<Bidegree>{{6, 0, 3}});
  CHECK(check_vanishing(t, 2, 3, -4).verdict);

  VanishingReport w = check_vanishing(t, 1, 2, 0);
  CHECK(w.violations == std::vector<Bidegree>{{1, 0, 0}, {6, 0, 3}});

  HomologyTable empty;
  CHECK(check_vanishing(empty, 2, 3, 100).verdict);
}

}  // TEST_SUITE
