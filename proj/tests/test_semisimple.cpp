#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trideco/hw_category.hpp"
#include "trideco/zoo.hpp"

using namespace trideco;

using QF = RationalField;

TEST_CASE("radical of K[x,y]/(x^2,y^2) is the augmentation ideal") {
  HwEngine<QF> eng(truncated_square(QF{}, 2), 0);
  const Subspace<QF>& rad = eng.radical();
  CHECK(rad.dim() == 3);
  for (int idx : {1, 2, 3}) CHECK(rad.contains(unit_vec(QF{}, 4, idx)));
  CHECK(nilpotency_index(eng.alg(), rad) == 3);  // rad^2 = <xy>, rad^3 = 0
}

TEST_CASE("incomplete simple lists are rejected") {
  auto z = restricted_sl2(3);
  HwEngine<PrimeField> eng(z, 0);
  std::vector<GradedModule<PrimeField>> partial = {eng.simple(0), eng.simple(1)};
  CHECK_THROWS_WITH_AS(jacobson_radical(eng.alg(), partial),
                       doctest::Contains("IncompleteSimples"), Error);
}

TEST_CASE("idempotent lifting: counts, exactness, degrees") {
  HwEngine<PrimeField> eng(restricted_sl2(3), 0);
  const auto& idems = eng.idempotents();
  CHECK(idems.size() == 6);  // 1 + 2 + 3 seats
  const auto& A = eng.alg();
  Vec<PrimeField> total = zero_vec(A.field, A.n);
  for (const auto& idem : idems) {
    CHECK(A.multiply(idem.e, idem.e) == idem.e);
    for (int i = 0; i < A.n; ++i) {
      if (idem.e[i].is_zero()) continue;
      CHECK(A.deg[i] == 0);
    }
    for (int i = 0; i < A.n; ++i) total[i] += idem.e[i];
  }
  CHECK(total == A.unit);
  for (std::size_t a = 0; a < idems.size(); ++a)
    for (std::size_t b = 0; b < idems.size(); ++b) {
      if (a == b) continue;
      CHECK(vec_is_zero(A.multiply(idems[a].e, idems[b].e)));
    }
}

TEST_CASE("local algebra has only the unit idempotent") {
  HwEngine<QF> eng(truncated_square(QF{}, 2), 0);
  const auto& idems = eng.idempotents();
  REQUIRE(idems.size() == 1);
  CHECK(idems[0].e == eng.alg().unit);
}

TEST_CASE("semisimple split T = K x K: coordinate idempotents") {
  QF field;
  GradedAlgebra<QF> T;
  T.field = field;
  T.n = 2;
  T.deg = {0, 0};
  T.sc.assign(2, std::vector<SparseVec<QF>>(2));
  T.sc[0][0] = {{0, Rational(1)}};
  T.sc[1][1] = {{1, Rational(1)}};
  T.unit = {Rational(1), Rational(1)};
  std::vector<GradedModule<QF>> simples;
  auto alg = std::make_shared<const GradedAlgebra<QF>>(T);
  for (int s = 0; s < 2; ++s) {
    GradedModule<QF> L;
    L.alg = alg;
    L.dim = 1;
    L.deg = {0};
    for (int j = 0; j < 2; ++j) {
      DenseMatrix<QF> m(field, 1, 1);
      if (j == s) m.at(0, 0) = Rational(1);
      L.act.push_back(m);
    }
    simples.push_back(L);
  }
  Subspace<QF> rad = jacobson_radical(*alg, simples);
  CHECK(rad.dim() == 0);
  auto idems = lift_idempotents(*alg, rad, simples);
  REQUIRE(idems.size() == 2);
  CHECK(idems[0].e == unit_vec(field, 2, 0));
  CHECK(idems[1].e == unit_vec(field, 2, 1));
}

TEST_CASE("center of the pathological algebra is span{1, xy}") {
  auto z = pathological4(QF{});
  auto gens = generating_indices(*z.alg);
  Subspace<QF> c = center(*z.alg, gens);
  CHECK(c.dim() == 2);
  CHECK(c.contains(z.alg->unit));
  CHECK(c.contains(unit_vec(QF{}, 4, 3)));
  CHECK_FALSE(c.contains(unit_vec(QF{}, 4, 1)));
}

TEST_CASE("commutative algebra: center is everything") {
  auto z = truncated_square(QF{}, 2);
  CHECK(center(*z.alg, generating_indices(*z.alg)).dim() == 4);
}

TEST_CASE("frobenius certificate for K[x,y]/(x^2,y^2): the hinted functional works") {
  auto z = truncated_square(QF{}, 2);
  bool symm = false;
  CHECK(verify_frobenius(*z.alg, z.frobenius_hint->second, 0, &symm));
  CHECK(symm);
  // and the Gram determinant route: submatrix checks via rank
  auto g = frobenius_gram(*z.alg, z.frobenius_hint->second);
  CHECK(rank(g) == 4);
}

TEST_CASE("frobenius search honors the degree support and fails definitively nowhere") {
  auto z = pathological4(QF{});
  for (int d : {-1, 0, 1}) {
    auto r = frobenius_search(*z.alg, d, 64, 7);
    CHECK_FALSE(r.has_value());  // no certificate at any degree (probabilistic negative)
  }
}

TEST_CASE("frobenius search over F_3 sl2 finds a symmetric certificate at degree 0") {
  auto z = restricted_sl2(3);
  auto r = frobenius_search(*z.alg, 0, 64, 11, {z.frobenius_hint->second});
  REQUIRE(r.has_value());
  CHECK(r->degree == 0);
  CHECK(r->symmetric);
}
