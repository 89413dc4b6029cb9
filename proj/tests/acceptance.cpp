// Acceptance suite: one pass/fail line per criterion, exact tolerances.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "trideco/report.hpp"
#include "trideco/specfile.hpp"
#include "trideco/zoo.hpp"

#include "oracles.hpp"

using namespace trideco;

namespace {

int failures = 0;

struct Criterion {
  std::string name;
  std::vector<std::string> problems;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Criterion(std::string n) : name(std::move(n)) {}
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void finish() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (problems.empty()) {
      std::cout << "PASS  " << name << "  (" << ms << " ms)\n";
    } else {
      ++failures;
      std::cout << "FAIL  " << name << "  (" << ms << " ms)\n";
      for (const auto& p : problems) std::cout << "      - " << p << "\n";
    }
  }
};

void run(const std::string& name, const std::function<void(Criterion&)>& body) {
  Criterion c(name);
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  c.finish();
}

LaurentPoly one_plus_t_sigma() {
  // sigma = -1, frozen from the brute-force composition-series oracle
  return LaurentPoly(1) + LaurentPoly::term(1, -1);
}

// ---------------------------------------------------------------------------

void criterion_1_truncated_square(Criterion& c) {
  HwEngine<RationalField> eng(truncated_square(RationalField{}, 2), 0);
  c.require(verify_triangular(eng.td()).pass, "verifyTriangular");
  // freeze sigma from the oracle, then compare the matrices
  auto oracle = tests::composition_series_oracle(eng, eng.proper_standard(0));
  CompositionData expect = {{{0, 0}, 1}, {{0, -1}, 1}};
  c.require(oracle == expect, "oracle composition series of Delta-bar");
  const auto& m = eng.matrices();
  c.require(m.c_l[0][0] == LaurentPoly(1), "C_L = [1]");
  c.require(m.d_delta[0][0] == one_plus_t_sigma(), "D_Delta = [1 + t^-1]");
  c.require(m.c_delta[0][0] == one_plus_t_sigma(), "C_Delta = [1 + t^-1]");
  c.require(m.relation_ok && m.inverse_ok, "C_Delta = D_Delta C_L and the Q(t) inverse");
  const auto& si = eng.self_injectivity();
  c.require(si.verdict == SelfInjVerdict::kYes, "self-injective");
  c.require(si.nu[0] == LabeledShift{0, 0}, "trivial Nakayama permutation");
  const auto& t = eng.tilting();
  c.require(eng.is_isomorphic(t.tilting[0], eng.projective(0)).kind == IsoVerdict::Kind::kYes,
            "T(lambda) = P(lambda) up to shift");
  auto reg = regular_module(eng.bundle().alg);
  c.require(eng.is_isomorphic(eng.projective(0), reg, false).kind == IsoVerdict::Kind::kYes,
            "P(lambda) = A");
}

void criterion_2_pathological(Criterion& c) {
  HwEngine<RationalField> eng(pathological4(RationalField{}), 0);
  auto amb = ambidexterity_check(eng.td());
  c.require(!amb.ambidextrous, "ambidexterity is false");
  c.require(amb.witness == "a+[1] (x) t[0] (x) a-[1]", "witness is y (x) 1 (x) x");
  Subspace<RationalField> socl = left_socle(eng.alg(), eng.radical());
  std::multiset<int> dl, dr;
  for (int r = 0; r < socl.dim(); ++r) dl.insert(eng.alg().deg[socl.pivots()[r]]);
  c.require(dl == std::multiset<int>({-1, 0}), "Soc(_AA) has basis degrees of <x, xy>");
  c.require(socl.contains(unit_vec(RationalField{}, 4, 1)) &&
                socl.contains(unit_vec(RationalField{}, 4, 3)),
            "Soc(_AA) = <x, xy>");
  auto op = opposite_algebra(eng.alg());
  Subspace<RationalField> socr = left_socle(op, eng.radical());
  for (int r = 0; r < socr.dim(); ++r) dr.insert(-op.deg[socr.pivots()[r]]);
  c.require(dr == std::multiset<int>({1, 0}), "Soc(A_A) has basis degrees of <y, xy>");
  c.require(socr.contains(unit_vec(RationalField{}, 4, 2)) &&
                socr.contains(unit_vec(RationalField{}, 4, 3)),
            "Soc(A_A) = <y, xy>");
  const auto& si = eng.self_injectivity();
  c.require(si.verdict == SelfInjVerdict::kNo, "selfInjectivityCheck is a definitive No");
  c.require(si.proj_injective_labels.empty(), "tilting set reported empty");
}

template <class F>
void sl2_checks(Criterion& c, int p, HwEngine<F>& eng) {
  std::string tag = "p=" + std::to_string(p) + ": ";
  c.require(eng.num_labels() == p, tag + "p simples");
  for (int s = 0; s < p; ++s)
    c.require(eng.simple(s).dim == s + 1, tag + "dim L(" + std::to_string(s) + ") = lambda + 1");
  // D_Delta matches the brute-force composition series, entry by entry
  const auto& m = eng.matrices();
  for (int s = 0; s < p; ++s) {
    CompositionData cd = tests::composition_series_oracle(eng, eng.proper_standard(s));
    for (int mu = 0; mu < p; ++mu) {
      LaurentPoly expect;
      for (const auto& [ls, count] : cd)
        if (ls.label == mu) expect.add_term(ls.shift, count);
      c.require(m.d_delta[s][mu] == expect, tag + "D_Delta row vs oracle at (" +
                                                std::to_string(s) + "," + std::to_string(mu) + ")");
    }
  }
  c.require(m.relation_ok, tag + "C_Delta = D_Delta C_L exactly");
  c.require(m.inverse_ok, tag + "D_Delta = C_Delta C_L^{-1} over Q(t)");
  c.require(eng.bgg_check(), tag + "BGG");
  auto frob = eng.frobenius();
  c.require(frob && frob->degree == 0 && frob->symmetric,
            tag + "symmetric Frobenius certificate at d = 0");
  const auto& si = eng.self_injectivity();
  c.require(si.verdict == SelfInjVerdict::kYes, tag + "self-injective");
  for (int s = 0; s < p; ++s)
    c.require(si.nu[s] == LabeledShift{s, 0}, tag + "trivial nu");
  int top = 0;
  for (int d : eng.alg().deg) top = std::max(top, d);
  c.require(top == p - 1, tag + "top degree of A^+ equals p - 1");
  const auto& t = eng.tilting();
  for (int lam = 0; lam < p; ++lam) {
    int expect_label = ((-lam - 2) % p + p) % p;
    int expect_shift = (p - 1) - lam;
    c.require(t.h[lam] == LabeledShift{expect_label, expect_shift},
              tag + "h(" + std::to_string(lam) + ") = (-lambda-2 mod p, (p-1)-lambda)");
  }
  c.require(t.consistent, tag + "tilting permutations consistent");
}

void criterion_3_sl2_p3(Criterion& c) {
  HwEngine<PrimeField> eng(restricted_sl2(3), 0);
  sl2_checks(c, 3, eng);
  // exhaustive simplicity oracle at dims <= 3
  for (int s = 0; s < 3; ++s)
    c.require(tests::simple_by_enumeration(eng.simple(s), eng.gens()),
              "L(" + std::to_string(s) + ") simple by exhaustive submodule search");
}

void criterion_3_sl2_p5_stress(Criterion& c) {
  HwEngine<PrimeField> eng(restricted_sl2(5), 0);
  sl2_checks(c, 5, eng);
}

void criterion_4_rrca(Criterion& c) {
  for (int ell : {2, 3}) {
    std::string tag = "l=" + std::to_string(ell) + ": ";
    CyclotomicField field(ell);
    // c = 0
    {
      std::vector<CycloElem> zero(ell - 1, field.zero());
      HwEngine<CyclotomicField> eng(rrca_cyclic(ell, zero), 0);
      c.require(verify_triangular(eng.td()).pass, tag + "verifyTriangular at c = 0");
      c.require(ambidexterity_check(eng.td()).ambidextrous, tag + "ambidextrous at c = 0");
      int top = 0;
      for (int d : eng.alg().deg) top = std::max(top, d);
      c.require(top == ell - 1, tag + "top degree of the coinvariant part = |Ref(W)|");
      c.require(eng.bgg_check(), tag + "BGG at c = 0");
      c.require(eng.brauer_reciprocity_check().pass, tag + "Brauer reciprocity at c = 0");
    }
    // certified-generic c
    bool certified = false;
    for (int attempt = 0; attempt < 5 && !certified; ++attempt) {
      HwEngine<CyclotomicField> eng(rrca_cyclic(ell, rrca_parameters(ell, attempt)), 0);
      auto fam = eng.families();
      std::set<int> blocks(fam.begin(), fam.end());
      if (static_cast<int>(blocks.size()) != ell) continue;  // perturb deterministically
      certified = true;
      c.require(verify_triangular(eng.td()).pass, tag + "verifyTriangular at generic c");
      c.require(ambidexterity_check(eng.td()).ambidextrous, tag + "ambidextrous at generic c");
      c.require(eng.bgg_check(), tag + "BGG at generic c");
      c.require(eng.brauer_reciprocity_check().pass, tag + "Brauer reciprocity at generic c");
      // every block has one simple; dim Z_a = dim E- * dim E+ = (dim lambda)^2
      for (int s = 0; s < eng.num_labels(); ++s) {
        const auto& bd = eng.blocks();
        const auto& ca = bd.central_idems[bd.block_of[s]];
        std::vector<Vec<CyclotomicField>> za;
        for (const auto& zv : eng.center_subspace().basis())
          za.push_back(eng.alg().multiply(ca, zv));
        int dim_za = Subspace<CyclotomicField>::span(field, eng.alg().n, za).dim();
        int dim_em = hom_dim(eng.proper_standard(s), eng.proper_standard(s), 0, eng.gens());
        for (int n = 1; n <= ell; ++n) {
          dim_em += hom_dim(eng.proper_standard(s), eng.proper_standard(s), n, eng.gens());
          dim_em += hom_dim(eng.proper_standard(s), eng.proper_standard(s), -n, eng.gens());
        }
        int dim_ep = hom_dim(eng.proper_costandard(s), eng.proper_costandard(s), 0, eng.gens());
        for (int n = 1; n <= ell; ++n) {
          dim_ep += hom_dim(eng.proper_costandard(s), eng.proper_costandard(s), n, eng.gens());
          dim_ep += hom_dim(eng.proper_costandard(s), eng.proper_costandard(s), -n, eng.gens());
        }
        int dim_lambda = eng.td().irr_t[s].dim;
        c.require(dim_za == dim_em * dim_ep,
                  tag + "dim Z_a = dim E^- * dim E^+ in block of " + eng.label(s));
        c.require(dim_za == dim_lambda * dim_lambda, tag + "dim Z_a = (dim lambda)^2");
      }
    }
    c.require(certified, tag + "a certified-generic parameter was found");
  }
}

void criterion_5_kl_suite(Criterion& c) {
  HwEngine<RationalField> eng2(truncated_square(RationalField{}, 2), 0);
  auto r2 = eng2.kl_parity_check(6);
  c.require(r2.holds && r2.depth == 6, "klParityCheck holds to depth 6 for n = 2");
  HwEngine<RationalField> eng3(truncated_square(RationalField{}, 3), 0);
  auto r3 = eng3.kl_parity_check(6);
  c.require(!r3.holds, "klParityCheck fails for n = 3");
  c.require(r3.violation.find("Ext^") != std::string::npos &&
                r3.violation.find("internal degree") != std::string::npos,
            "violation carries an explicit (m, degree) witness");
  // tate character vs resolution Betti numbers, both truncated squares, m <= 6
  for (int n : {2, 3}) {
    CIPresentation ci{{1}, {n}};
    auto z = truncated_square(RationalField{}, n);
    auto aplus = std::make_shared<const GradedAlgebra<RationalField>>(
        subalgebra_on_basis(*z.alg, z.td.ap));
    auto betti = trivial_betti(aplus, 6);
    bool match = true;
    for (int m = 0; m <= 6; ++m) {
      auto row = betti.count(m) ? betti.at(m) : std::map<int, long>{};
      for (int i = 0; i <= 6 * n + 1; ++i) {
        long b = row.count(i) ? row.at(i) : 0;
        if (tate_character(ci, m, i) != b) match = false;
      }
    }
    c.require(match, "tateCharacter = Betti for truncatedSquare(" + std::to_string(n) + ")");
  }
  c.require(degrees_kl_criterion({{1}, {2}}) == KLVerdict::kYes, "degrees criterion: yes pattern");
  c.require(degrees_kl_criterion({{1}, {3}}) == KLVerdict::kNo, "degrees criterion: no pattern");
  c.require(degrees_kl_criterion({{1, 3}, {1, 2}}) == KLVerdict::kIndeterminate,
            "degrees criterion: indeterminate pattern");
}

// Property suite (criterion 6) over one bundle.
template <class F>
void property_suite(Criterion& c, Bundle<F> bundle, const std::string& tag) {
  HwEngine<F> eng(std::move(bundle), 0);
  int nl = eng.num_labels();
  // (a) dim Hom(Delta, nabla-bar) = delta and Ext^1 = 0
  for (int s = 0; s < nl; ++s)
    for (int mu = 0; mu < nl; ++mu) {
      int h = hom_dim(eng.proper_standard(s), eng.proper_costandard(mu), 0, eng.gens());
      c.require(h == (s == mu ? 1 : 0), tag + " (a) hom delta condition");
      auto ext = eng.ext_dims(eng.proper_standard(s), eng.proper_costandard(mu), 1);
      c.require(ext[1].is_zero(), tag + " (a) Ext^1(Delta, nabla-bar) = 0");
    }
  // (b) highest weight of Delta-bar(s) is s with graded multiplicity 1
  const auto& m = eng.matrices();
  for (int s = 0; s < nl; ++s)
    for (int mu = 0; mu < nl; ++mu) {
      const LaurentPoly& p = m.d_delta[s][mu];
      if (mu == s) {
        c.require(p.coeff(0) == 1, tag + " (b) diagonal top coefficient 1");
        c.require(p.max_exp() == 0 || p.is_zero() == false, tag + " (b) top term at t^0");
      }
      if (!p.is_zero())
        c.require(p.max_exp() <= 0 && (mu == s || p.max_exp() < 0),
                  tag + " (b) strictly lower terms off the diagonal");
    }
  // (c) Soc nabla-bar(s) = L(s)
  for (int s = 0; s < nl; ++s) {
    Subspace<F> soc = socle_subspace(eng.proper_costandard(s), eng.radical_basis());
    auto [socmod, incl] = submodule(eng.proper_costandard(s), soc);
    c.require(eng.is_isomorphic(socmod, eng.simple(s), false).kind == IsoVerdict::Kind::kYes,
              tag + " (c) Soc nabla-bar = L");
  }
  // (d) C_L invertible over Q(t)
  c.require(laurent_matrix_inverse(m.c_l).has_value(), tag + " (d) C_L invertible over Q(t)");
  // (e) graded Brauer reciprocity (documented bar-involution convention)
  c.require(eng.brauer_reciprocity_check().pass, tag + " (e) Brauer reciprocity");
  // (f) duality functor checks, when tau and a degree-0 certificate exist
  if (eng.bundle().tau) {
    auto dual_rep = eng.verify_duality();
    c.require(dual_rep.pass, tag + " (f) duality functor checks" +
                                 (dual_rep.failures.empty() ? "" : ": " + dual_rep.failures[0]));
  }
  // (g) semisimplicity check agrees with Rad(A) = 0
  c.require(eng.semisimplicity_check() == (eng.radical().dim() == 0),
            tag + " (g) semisimplicity agrees with the radical");
  // (h) D_Delta at t = 1 equals the ungraded recomputation via the oracle
  for (int s = 0; s < nl; ++s) {
    CompositionData cd = tests::composition_series_oracle(eng, eng.proper_standard(s));
    std::map<int, long> ungraded;
    for (const auto& [ls, count] : cd) ungraded[ls.label] += count;
    for (int mu = 0; mu < nl; ++mu) {
      long expect = ungraded.count(mu) ? ungraded.at(mu) : 0;
      c.require(m.d_delta[s][mu].eval_at_one() == expect, tag + " (h) t = 1 specialization");
    }
  }
}

void criterion_6_property_suites(Criterion& c) {
  property_suite(c, truncated_square(RationalField{}, 2), "truncated_square(2)");
  property_suite(c, truncated_square(RationalField{}, 3), "truncated_square(3)");
  property_suite(c, pathological4(RationalField{}), "pathological4");
  property_suite(c, coinvariant_skew(RationalField{}, 2, Rational(-1)), "coinvariant_skew(2)");
  {
    CyclotomicField f3(3);
    property_suite(c, coinvariant_skew(f3, 3, f3.zeta()), "coinvariant_skew(3)");
  }
  property_suite(c, restricted_sl2(3), "restricted_sl2(3)");
  {
    CyclotomicField f2(2);
    property_suite(c, rrca_cyclic(2, std::vector<CycloElem>(1, f2.zero())), "rrca(2, c=0)");
    property_suite(c, rrca_cyclic(2, rrca_parameters(2, 0)), "rrca(2, generic)");
    property_suite(c, rrca_cyclic(3, std::vector<CycloElem>(2, CyclotomicField(3).zero())),
                   "rrca(3, c=0)");
    property_suite(c, rrca_cyclic(3, rrca_parameters(3, 0)), "rrca(3, generic)");
  }
}

void criterion_7_infrastructure(Criterion& c) {
  // field axioms, randomized and seeded
  auto axioms = [&](auto field, std::uint64_t seed, int rounds, const std::string& tag) {
    Rng rng(seed);
    auto one = field.one();
    for (int i = 0; i < rounds; ++i) {
      auto a = field.random(rng), b = field.random(rng), x = field.random(rng);
      c.require((a + b) * x == a * x + b * x, tag + " distributivity");
      c.require((a * b) * x == a * (b * x), tag + " associativity");
      if (!a.is_zero()) c.require((a * a.inverse()) == one, tag + " inverses");
    }
  };
  axioms(RationalField{}, 11, 60, "Q");
  axioms(PrimeField(5), 12, 60, "F_5");
  axioms(CyclotomicField(5), 13, 25, "Q(zeta_5)");
  // linear algebra properties, seeded
  {
    Rng rng(21);
    PrimeField F7(7);
    for (int t = 0; t < 30; ++t) {
      int r = 1 + static_cast<int>(rng.below(5)), co = 1 + static_cast<int>(rng.below(5));
      DenseMatrix<PrimeField> mm(F7, r, co);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < co; ++j) mm.at(i, j) = F7.random(rng);
      auto rr = rref(mm);
      c.require(rref(rr.reduced).reduced == rr.reduced, "rref idempotent");
      auto kb = kernel_basis(mm);
      c.require(static_cast<int>(kb.size()) == co - rr.rank, "rank-nullity");
      for (const auto& v : kb)
        c.require(vec_is_zero(mm.apply(v)), "kernel vectors are annihilated");
    }
  }
  // determinism: full reports byte-identical for a fixed seed
  {
    PipelineOptions opt;
    opt.seed = 3;
    HwEngine<PrimeField> e1(restricted_sl2(3), 3);
    HwEngine<PrimeField> e2(restricted_sl2(3), 3);
    c.require(full_report(e1, opt).dump() == full_report(e2, opt).dump(),
              "byte-identical reports for a fixed seed");
  }
  // pbw round-trip on every basis element of every bundle
  auto roundtrip = [&](const auto& z, const std::string& tag) {
    const auto& td = z.td;
    const auto& A = *z.alg;
    for (int k = 0; k < A.n; ++k) {
      auto e = unit_vec(A.field, A.n, k);
      auto coords = pbw_coordinates(td, e);
      auto back = zero_vec(A.field, A.n);
      for (std::size_t i = 0; i < td.am.size(); ++i)
        for (std::size_t j = 0; j < td.tt.size(); ++j)
          for (std::size_t l = 0; l < td.ap.size(); ++l) {
            const auto& coeff =
                coords[td.tensor_index(static_cast<int>(i), static_cast<int>(j), static_cast<int>(l))];
            if (coeff.is_zero()) continue;
            vec_axpy(back, coeff,
                     A.multiply(A.multiply(td.am[i], td.tt[j]), td.ap[l]));
          }
      if (!(back == e)) {
        c.require(false, tag + " pbw round-trip at basis " + std::to_string(k));
        return;
      }
    }
  };
  roundtrip(truncated_square(RationalField{}, 2), "truncated_square(2)");
  roundtrip(truncated_square(RationalField{}, 3), "truncated_square(3)");
  roundtrip(pathological4(RationalField{}), "pathological4");
  roundtrip(coinvariant_skew(RationalField{}, 2, Rational(-1)), "coinvariant_skew(2)");
  {
    CyclotomicField f3(3);
    roundtrip(coinvariant_skew(f3, 3, f3.zeta()), "coinvariant_skew(3)");
  }
  roundtrip(restricted_sl2(3), "restricted_sl2(3)");
  roundtrip(rrca_cyclic(2, rrca_parameters(2, 0)), "rrca(2)");
  roundtrip(rrca_cyclic(3, rrca_parameters(3, 0)), "rrca(3)");
}

}  // namespace

int main() {
  run("criterion-1 truncated square n=2", criterion_1_truncated_square);
  run("criterion-2 pathological 4-dim algebra", criterion_2_pathological);
  run("criterion-3 restricted sl2, p=3", criterion_3_sl2_p3);
  run("criterion-4 rrca for Z_2 and Z_3", criterion_4_rrca);
  run("criterion-5 KL suite", criterion_5_kl_suite);
  run("criterion-6 property suites across the zoo", criterion_6_property_suites);
  run("criterion-7 infrastructure", criterion_7_infrastructure);
  run("criterion-3 stress tier: restricted sl2, p=5", criterion_3_sl2_p5_stress);
  if (failures == 0)
    std::cout << "acceptance: all criteria pass\n";
  else
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return failures == 0 ? 0 : 1;
}
