#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trideco/zoo.hpp"

using namespace trideco;

using QF = RationalField;

template <class F>
static void check_bundle(const Bundle<F>& z) {
  INFO(z.name);
  auto ar = verify_algebra(*z.alg);
  for (const auto& f : ar.failures) MESSAGE(f);
  CHECK(ar.pass);
  if (z.has_triangular) {
    auto tr = verify_triangular(z.td);
    for (const auto& f : tr.failures) MESSAGE(f);
    CHECK(tr.pass);
  }
}

TEST_CASE("truncated squares verify for all n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    auto z = truncated_square(QF{}, n);
    CHECK(z.alg->n == n * n);
    check_bundle(z);
  }
}

TEST_CASE("truncated square over F_p verifies") {
  check_bundle(truncated_square(PrimeField(3), 2));
}

TEST_CASE("pathological and degenerate fixtures") {
  check_bundle(pathological4(QF{}));
  auto d = degenerate_triple(QF{});
  CHECK(d.alg->n == 3);
  CHECK_FALSE(d.has_triangular);
  CHECK(verify_algebra(*d.alg).pass);
}

TEST_CASE("coinvariant skew algebras") {
  {
    QF field;
    auto z = coinvariant_skew(field, 2, Rational(-1));
    CHECK(z.alg->n == 4);
    check_bundle(z);
  }
  {
    CyclotomicField field(3);
    auto z = coinvariant_skew(field, 3, field.zeta());
    CHECK(z.alg->n == 9);
    check_bundle(z);
    // all proper standards are the characters themselves (A^- = K)
    for (const auto& lam : z.td.irr_t) {
      auto d = induce_from_borel(z.td, lam);
      CHECK(d.dim == 1);
    }
  }
}

TEST_CASE("restricted sl2 at p = 3: dimensions, grading, straightening") {
  auto z = restricted_sl2(3);
  CHECK(z.alg->n == 27);
  check_bundle(z);
  // top degree of A^+ is p - 1
  int top = 0;
  for (int d : z.alg->deg) top = std::max(top, d);
  CHECK(top == 2);
  // ef = fe + h
  PrimeField F3(3);
  auto idx = [](int a, int b, int c) { return (a * 3 + b) * 3 + c; };
  Vec<PrimeField> e = unit_vec(F3, 27, idx(0, 0, 1));
  Vec<PrimeField> f = unit_vec(F3, 27, idx(1, 0, 0));
  Vec<PrimeField> h = unit_vec(F3, 27, idx(0, 1, 0));
  Vec<PrimeField> ef = z.alg->multiply(e, f);
  Vec<PrimeField> fe = z.alg->multiply(f, e);
  Vec<PrimeField> expect = fe;
  for (int i = 0; i < 27; ++i) expect[i] += h[i];
  CHECK(ef == expect);
  // he = e(h+2)
  CHECK(z.alg->multiply(h, e) ==
        z.alg->multiply(e, [&] { Vec<PrimeField> v = h; v[0] += F3.from_int(2); return v; }()));
  // ambidexterity (paper's hyperalgebra claim at r = 1)
  CHECK(ambidexterity_check(z.td).ambidextrous);
  // pbw round trip: e*f has PBW coordinates f (x) ... : re-multiplication identity
  Vec<PrimeField> coords = pbw_coordinates(z.td, ef);
  Vec<PrimeField> back = zero_vec(F3, 27);
  for (std::size_t i = 0; i < z.td.am.size(); ++i)
    for (std::size_t j = 0; j < z.td.tt.size(); ++j)
      for (std::size_t k = 0; k < z.td.ap.size(); ++k) {
        auto c = coords[z.td.tensor_index(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k))];
        if (c.is_zero()) continue;
        vec_axpy(back, c,
                 z.alg->multiply(z.alg->multiply(z.td.am[i], z.td.tt[j]), z.td.ap[k]));
      }
  CHECK(back == ef);
}

TEST_CASE("restricted sl2 at p = 5 verifies") {
  auto z = restricted_sl2(5);
  CHECK(z.alg->n == 125);
  check_bundle(z);
  int top = 0;
  for (int d : z.alg->deg) top = std::max(top, d);
  CHECK(top == 4);
}

TEST_CASE("rrca for Z_2 and Z_3 verifies at zero and nonzero parameters") {
  for (int ell : {2, 3}) {
    CyclotomicField field(ell);
    std::vector<CycloElem> zero(ell - 1, field.zero());
    auto z0 = rrca_cyclic(ell, zero);
    CHECK(z0.alg->n == ell * ell * ell);
    check_bundle(z0);
    auto zg = rrca_cyclic(ell, rrca_parameters(ell, 0));
    check_bundle(zg);
    CHECK(ambidexterity_check(zg.td).ambidextrous);
    // top degree of the coinvariant part = l - 1 = |Ref(W)|
    int top = 0;
    for (int d : zg.alg->deg) top = std::max(top, d);
    CHECK(top == ell - 1);
    // dim Delta-bar(chi) = l for all chi
    for (const auto& lam : zg.td.irr_t) CHECK(induce_from_borel(zg.td, lam).dim == ell);
  }
}

TEST_CASE("rrca relation: yx = xy - 2 sum c_k w^k") {
  int ell = 3;
  auto c = rrca_parameters(ell, 0);
  auto z = rrca_cyclic(ell, c);
  CyclotomicField field(ell);
  int n = 27;
  auto idx = [ell](int a, int j, int b) { return (a * ell + j) * ell + b; };
  Vec<CyclotomicField> x = unit_vec(field, n, idx(1, 0, 0));
  Vec<CyclotomicField> y = unit_vec(field, n, idx(0, 0, 1));
  Vec<CyclotomicField> yx = z.alg->multiply(y, x);
  Vec<CyclotomicField> expect = unit_vec(field, n, idx(1, 0, 1));
  for (int k = 1; k < ell; ++k)
    expect[idx(0, k, 0)] -= field.from_int(2) * c[k - 1];
  CHECK(yx == expect);
  // w x w^-1 = zeta^-1 x
  Vec<CyclotomicField> w = unit_vec(field, n, idx(0, 1, 0));
  Vec<CyclotomicField> winv = unit_vec(field, n, idx(0, ell - 1, 0));
  Vec<CyclotomicField> conj = z.alg->multiply(z.alg->multiply(w, x), winv);
  Vec<CyclotomicField> zx = x;
  for (auto& v : zx) v *= field.zeta_pow(-1);
  CHECK(conj == zx);
}

TEST_CASE("small quantum sl2 at l = 3 (stretch goal): dim, verify, top degree") {
  auto z = small_quantum_sl2(3);
  CHECK(z.alg->n == 54);
  check_bundle(z);
  int top = 0;
  for (int d : z.alg->deg) top = std::max(top, d);
  CHECK(top == 2);  // l - 1, the regression target
  CHECK(z.td.irr_t.size() == 6);
  CHECK(ambidexterity_check(z.td).ambidextrous);
}
