#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trideco/hw_category.hpp"
#include "trideco/zoo.hpp"

using namespace trideco;

using QF = RationalField;

// K[x]/(x^n) as a standalone connected algebra with deg x = sign.
static std::shared_ptr<const GradedAlgebra<QF>> truncated_line(int n, int sign) {
  GradedAlgebra<QF> A;
  A.field = QF{};
  A.n = n;
  A.deg.resize(n);
  for (int i = 0; i < n; ++i) A.deg[i] = sign * i;
  A.sc.assign(n, std::vector<SparseVec<QF>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) A.sc[i][j] = {{i + j, Rational(1)}};
  A.unit = unit_vec(QF{}, n, 0);
  return std::make_shared<const GradedAlgebra<QF>>(A);
}

TEST_CASE("hand resolution oracle: K[x]/(x^2) with deg x = -1") {
  auto R = truncated_line(2, -1);
  auto res = minimal_free_resolution(R, trivial_module(R), 6);
  CHECK(verify_resolution(R, trivial_module(R), res).pass);
  // periodic Betti 1 per step at internal degrees 0, -1, -2, ...
  for (int m = 0; m <= 6; ++m) {
    REQUIRE(res.betti.count(m));
    CHECK(res.betti.at(m) == std::map<int, long>{{-m, 1}});
  }
}

TEST_CASE("hand resolution oracle: K[y]/(y^3) with deg y = +1") {
  auto R = truncated_line(3, +1);
  auto res = minimal_free_resolution(R, trivial_module(R), 6);
  CHECK(verify_resolution(R, trivial_module(R), res).pass);
  // alternating generator degrees 0, 1, 3, 4, 6, 7, ...
  std::vector<int> expect = {0, 1, 3, 4, 6, 7, 9};
  for (int m = 0; m <= 6; ++m) {
    REQUIRE(res.betti.count(m));
    CHECK(res.betti.at(m) == std::map<int, long>{{expect[m], 1}});
  }
}

TEST_CASE("semisimple side: resolution of the trivial module has length 0") {
  auto R = truncated_line(1, +1);
  auto res = minimal_free_resolution(R, trivial_module(R), 4);
  CHECK(res.steps.size() == 1);
  CHECK(res.betti.at(0) == std::map<int, long>{{0, 1}});
  CHECK(res.betti.size() == 1);
}

TEST_CASE("tate character: base cases") {
  CIPresentation ci{{1}, {2}};
  CHECK(tate_character(ci, 0, 0) == 1);
  CHECK(tate_character(ci, 0, 1) == 0);
  // m = 1: one generator per x_i at its degree
  CHECK(tate_character(ci, 1, 1) == 1);
  CHECK(tate_character(ci, 1, 2) == 0);
  // m = 2: Sym^1 V at the relation degree
  CHECK(tate_character(ci, 2, 2) == 1);
  CHECK(tate_character(ci, 2, 3) == 0);
}

TEST_CASE("tate character equals Betti numbers for the truncated squares, m <= 6") {
  for (int n : {2, 3}) {
    CAPTURE(n);
    CIPresentation ci{{1}, {n}};
    auto Rp = truncated_line(n, +1);
    auto resp = minimal_free_resolution(Rp, trivial_module(Rp), 6);
    for (int m = 0; m <= 6; ++m) {
      std::map<int, long> row = resp.betti.count(m) ? resp.betti.at(m) : std::map<int, long>{};
      for (int i = 0; i <= 6 * n + 1; ++i) {
        long betti = row.count(i) ? row.at(i) : 0;
        CHECK(tate_character(ci, m, i) == betti);
      }
    }
    // A^- side: compare after the documented global sign flip
    auto Rm = truncated_line(n, -1);
    auto resm = minimal_free_resolution(Rm, trivial_module(Rm), 6);
    for (int m = 0; m <= 6; ++m) {
      std::map<int, long> row = resm.betti.count(m) ? resm.betti.at(m) : std::map<int, long>{};
      for (const auto& [i, c] : row) CHECK(tate_character(ci, m, -i) == c);
    }
  }
}

TEST_CASE("degrees criterion on the three paper-derived patterns") {
  CHECK(degrees_kl_criterion({{1}, {2}}) == KLVerdict::kYes);
  CHECK(degrees_kl_criterion({{1}, {3}}) == KLVerdict::kNo);
  CHECK(degrees_kl_criterion({{1, 3}, {1, 2}}) == KLVerdict::kIndeterminate);
}

TEST_CASE("koszul check: yes for x^2, no for x^3, yes for the square-zero plane") {
  CHECK(koszul_up_to(truncated_line(2, +1), 5));
  CHECK_FALSE(koszul_up_to(truncated_line(3, +1), 5));
  // commutative K[x,y]/(x^2,y^2) with both generators in degree one
  GradedAlgebra<QF> A;
  A.field = QF{};
  A.n = 4;
  A.deg = {0, 1, 1, 2};
  A.sc.assign(4, std::vector<SparseVec<QF>>(4));
  auto set = [&](int i, int j, int k) { A.sc[i][j] = {{k, Rational(1)}}; };
  for (int i = 0; i < 4; ++i) { set(0, i, i); set(i, 0, i); }
  set(1, 2, 3);
  set(2, 1, 3);
  A.sc[1][1] = {};
  A.sc[2][2] = {};
  A.sc[1][3] = {}; A.sc[3][1] = {}; A.sc[2][3] = {}; A.sc[3][2] = {}; A.sc[3][3] = {};
  A.unit = unit_vec(QF{}, 4, 0);
  auto R = std::make_shared<const GradedAlgebra<QF>>(A);
  CHECK(verify_algebra(*R).pass);
  CHECK(koszul_up_to(R, 4));
}

TEST_CASE("kl parity: holds to depth 6 for n = 2, fails with a witness for n = 3") {
  HwEngine<QF> eng2(truncated_square(QF{}, 2), 0);
  auto rep2 = eng2.kl_parity_check(6);
  CHECK(rep2.holds);
  CHECK(rep2.depth == 6);

  HwEngine<QF> eng3(truncated_square(QF{}, 3), 0);
  auto rep3 = eng3.kl_parity_check(6);
  CHECK_FALSE(rep3.holds);
  CHECK(rep3.violation.find("Ext^2") != std::string::npos);
}

TEST_CASE("kl parity on rigid-simple algebras reduces to the trivial-module check") {
  // for the truncated square the simple is rigid: the per-simple Betti route
  // must coincide with the trivial module's resolution
  HwEngine<QF> eng(truncated_square(QF{}, 2), 0);
  auto R = truncated_line(2, -1);
  auto res_triv = minimal_free_resolution(R, trivial_module(R), 5);
  GradedModule<QF> lres = eng.restrict_to(eng.simple(0), R, eng.td().am);
  auto res_l = minimal_free_resolution(R, lres, 5);
  CHECK(res_triv.betti == res_l.betti);
}

TEST_CASE("resolution over the full algebra via projective covers") {
  HwEngine<QF> eng(truncated_square(QF{}, 2), 0);
  auto res = eng.projective_resolution(eng.simple(0), 3);
  REQUIRE(res.modules.size() >= 4);
  // each F_m is A[shift]^{b_m}: dims 4 * (m+1) for the Koszul-like pattern
  CHECK(res.modules[0].dim == 4);
  CHECK(res.modules[1].dim == 8);
  CHECK(res.modules[2].dim == 12);
  // complex property
  for (std::size_t m = 0; m + 1 < res.modules.size(); ++m)
    CHECK((res.differentials[m] * res.differentials[m + 1]).is_zero());
}
