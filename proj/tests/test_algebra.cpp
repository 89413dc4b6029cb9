#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trideco/zoo.hpp"

using namespace trideco;

using QF = RationalField;

TEST_CASE("truncated square verifies as a graded algebra") {
  auto z = truncated_square(QF{}, 2);
  auto rep = verify_algebra(*z.alg);
  CHECK(rep.pass);
  CHECK(z.alg->n == 4);
}

TEST_CASE("a broken structure table is reported") {
  auto z = truncated_square(QF{}, 2);
  GradedAlgebra<QF> bad = *z.alg;
  bad.sc[1][1] = {{0, Rational(1)}};  // x*x = 1 lands in the wrong degree
  auto rep = verify_algebra(bad);
  CHECK_FALSE(rep.pass);
  bool saw_grading = false, saw_assoc = false;
  for (const auto& f : rep.failures) {
    if (f.find("grading") != std::string::npos) saw_grading = true;
    if (f.find("associativity") != std::string::npos) saw_assoc = true;
  }
  CHECK(saw_grading);
  CHECK(saw_assoc);
}

TEST_CASE("opposite algebra: products reverse, degrees flip, involution") {
  auto z = pathological4(QF{});
  const auto& A = *z.alg;
  auto op = opposite_algebra(A);
  CHECK(verify_algebra(op).pass);
  // in A: x*y = xy, y*x = 0; in A^op the products swap
  Vec<QF> x = unit_vec(QF{}, 4, 1), y = unit_vec(QF{}, 4, 2);
  CHECK(A.multiply(x, y) == unit_vec(QF{}, 4, 3));
  CHECK(vec_is_zero(A.multiply(y, x)));
  CHECK(vec_is_zero(op.multiply(x, y)));
  CHECK(op.multiply(y, x) == unit_vec(QF{}, 4, 3));
  for (int i = 0; i < 4; ++i) CHECK(op.deg[i] == -A.deg[i]);
  // (A^op)^op = A bit-exactly
  auto opop = opposite_algebra(op);
  CHECK(opop.deg == A.deg);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(opop.sc[i][j] == A.sc[i][j]);
}

TEST_CASE("multiply: unit, nilpotents, and the pathological relation") {
  auto z = truncated_square(QF{}, 2);
  const auto& A = *z.alg;
  Vec<QF> x = unit_vec(QF{}, 4, 2);  // x^1 y^0 at index 1*2+0
  CHECK(A.multiply(A.unit, x) == x);
  CHECK(vec_is_zero(A.multiply(x, x)));
}

TEST_CASE("subalgebra closure in K[x,y]/(x^2,y^2)") {
  auto z = truncated_square(QF{}, 2);
  const auto& A = *z.alg;
  auto idx = [](int a, int b) { return a * 2 + b; };
  Vec<QF> x = unit_vec(QF{}, 4, idx(1, 0));
  Vec<QF> y = unit_vec(QF{}, 4, idx(0, 1));
  auto just_unit = subalgebra_closure(A, {});
  CHECK(just_unit.dim() == 1);
  CHECK(just_unit.contains(A.unit));
  auto with_x = subalgebra_closure(A, {x});
  CHECK(with_x.dim() == 2);
  CHECK(with_x.contains(x));
  auto everything = subalgebra_closure(A, {x, y});
  CHECK(everything.dim() == 4);
}

TEST_CASE("two-sided ideals") {
  auto z = truncated_square(QF{}, 2);
  const auto& A = *z.alg;
  auto idx = [](int a, int b) { return a * 2 + b; };
  CHECK(two_sided_ideal(A, {}).dim() == 0);
  CHECK(two_sided_ideal(A, {A.unit}).dim() == 4);
  auto aug = two_sided_ideal(A, {unit_vec(QF{}, 4, idx(1, 0)), unit_vec(QF{}, 4, idx(0, 1))});
  CHECK(aug.dim() == 3);
  CHECK(aug.contains(unit_vec(QF{}, 4, idx(1, 1))));
  CHECK_FALSE(aug.contains(A.unit));
}

TEST_CASE("quotient algebra by the augmentation ideal is K") {
  auto z = truncated_square(QF{}, 2);
  const auto& A = *z.alg;
  auto aug = two_sided_ideal(A, {unit_vec(QF{}, 4, 2), unit_vec(QF{}, 4, 1)});
  auto Q = quotient_algebra(A, aug);
  CHECK(Q.n == 1);
  CHECK(verify_algebra(Q).pass);
}

TEST_CASE("subalgebra extraction keeps products and unit") {
  auto z = truncated_square(QF{}, 3);
  const auto& A = *z.alg;
  std::vector<Vec<QF>> basis;
  for (int b = 0; b < 3; ++b) basis.push_back(unit_vec(QF{}, 9, b));  // y^b
  auto S = subalgebra_on_basis(A, basis);
  CHECK(S.n == 3);
  CHECK(verify_algebra(S).pass);
  CHECK(S.deg == std::vector<int>{0, 1, 2});
}

TEST_CASE("generating indices generate") {
  auto z = truncated_square(QF{}, 2);
  auto gens = generating_indices(*z.alg);
  std::vector<Vec<QF>> gv;
  for (int g : gens) gv.push_back(unit_vec(QF{}, 4, g));
  CHECK(subalgebra_closure(*z.alg, gv).dim() == 4);
}
