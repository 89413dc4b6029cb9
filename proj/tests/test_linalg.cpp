#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trideco/linalg.hpp"

using namespace trideco;

using QF = RationalField;

static DenseMatrix<QF> qmat(int rows, int cols, const std::vector<long>& entries) {
  DenseMatrix<QF> m(QF{}, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(entries[i * cols + j]);
  return m;
}

TEST_CASE("rref on trivial cases") {
  auto id = DenseMatrix<QF>::identity(QF{}, 2);
  auto rr = rref(id);
  CHECK(rr.rank == 2);
  CHECK(rr.reduced == id);

  DenseMatrix<QF> z(QF{}, 3, 4);
  auto rz = rref(z);
  CHECK(rz.rank == 0);
  CHECK(rz.reduced == z);
}

TEST_CASE("rref rank-1 example matches hand row-reduction") {
  // [[1,2],[2,4]] -> [[1,2],[0,0]], rank 1
  auto m = qmat(2, 2, {1, 2, 2, 4});
  auto rr = rref(m);
  CHECK(rr.rank == 1);
  CHECK(rr.reduced == qmat(2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref is idempotent and canonical on random matrices") {
  Rng rng(99);
  QF field;
  for (int trial = 0; trial < 25; ++trial) {
    int r = 1 + static_cast<int>(rng.below(5)), c = 1 + static_cast<int>(rng.below(5));
    DenseMatrix<QF> m(field, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = field.random(rng);
    auto r1 = rref(m);
    auto r2 = rref(r1.reduced);
    CHECK(r1.reduced == r2.reduced);
    CHECK(r1.rank == r2.rank);
    // equal row spans give equal rref: permute rows
    if (r >= 2) {
      DenseMatrix<QF> p = m;
      for (int j = 0; j < c; ++j) std::swap(p.at(0, j), p.at(r - 1, j));
      CHECK(rref(p).reduced == r1.reduced);
    }
  }
}

TEST_CASE("kernel basis: trivial cases") {
  auto id = DenseMatrix<QF>::identity(QF{}, 3);
  CHECK(kernel_basis(id).empty());
  DenseMatrix<QF> z(QF{}, 2, 3);
  CHECK(kernel_basis(z).size() == 3);
}

TEST_CASE("kernel of [[1,1]] over F_2 is the diagonal, by enumeration") {
  PrimeField F2(2);
  DenseMatrix<PrimeField> m(F2, 1, 2);
  m.at(0, 0) = F2.one();
  m.at(0, 1) = F2.one();
  auto kb = kernel_basis(m);
  REQUIRE(kb.size() == 1);
  // enumeration oracle over all 4 vectors
  std::vector<Vec<PrimeField>> in_kernel;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Vec<PrimeField> v = {F2.from_int(a), F2.from_int(b)};
      if (vec_is_zero(m.apply(v))) in_kernel.push_back(v);
    }
  CHECK(in_kernel.size() == 2);  // zero and (1,1)
  CHECK(kb[0] == std::vector<FpElem>{F2.one(), F2.one()});
}

TEST_CASE("kernel vectors satisfy m v = 0 and rank-nullity, randomized") {
  Rng rng(3);
  PrimeField F5(5);
  for (int trial = 0; trial < 30; ++trial) {
    int r = 1 + static_cast<int>(rng.below(5)), c = 1 + static_cast<int>(rng.below(6));
    DenseMatrix<PrimeField> m(F5, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = F5.random(rng);
    auto kb = kernel_basis(m);
    CHECK(static_cast<int>(kb.size()) == c - rank(m));
    for (const auto& v : kb) CHECK(vec_is_zero(m.apply(v)));
  }
}

TEST_CASE("solve_linear cases") {
  auto id = DenseMatrix<QF>::identity(QF{}, 2);
  Vec<QF> v = {Rational(3), Rational(-7)};
  CHECK(*solve_linear(id, v) == v);

  // inconsistent: [[1,2],[2,4]] x = (1,3); rank check oracle
  auto m = qmat(2, 2, {1, 2, 2, 4});
  Vec<QF> rhs = {Rational(1), Rational(3)};
  CHECK_FALSE(solve_linear(m, rhs).has_value());

  // scalar division: [[2]] x = (1) over Q
  auto s = qmat(1, 1, {2});
  Vec<QF> one = {Rational(1)};
  CHECK((*solve_linear(s, one))[0] == Rational(1, 2));
}

TEST_CASE("matrix inverse round-trip") {
  auto m = qmat(2, 2, {1, 2, 3, 4});
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv * m) == DenseMatrix<QF>::identity(QF{}, 2));
  CHECK_FALSE(inverse(qmat(2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("subspace canonical form decides equality") {
  QF field;
  Vec<QF> v1 = {Rational(1), Rational(1), Rational(0)};
  Vec<QF> v2 = {Rational(0), Rational(1), Rational(1)};
  Vec<QF> w = {Rational(1), Rational(2), Rational(1)};  // v1+v2
  auto s1 = Subspace<QF>::span(field, 3, {v1, v2});
  auto s2 = Subspace<QF>::span(field, 3, {w, v2});
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains(w));
  auto s3 = Subspace<QF>::span(field, 3, {v1});
  CHECK(s1 != s3);
  CHECK(s1.sum(s3) == s1);
  CHECK(s1.intersect(s3) == s3);
}

TEST_CASE("subspace intersection on a nontrivial example") {
  QF field;
  auto e1 = unit_vec(field, 3, 0), e2 = unit_vec(field, 3, 1), e3 = unit_vec(field, 3, 2);
  auto a = Subspace<QF>::span(field, 3, {e1, e2});
  auto b = Subspace<QF>::span(field, 3, {e2, e3});
  CHECK(a.intersect(b) == Subspace<QF>::span(field, 3, {e2}));
}
