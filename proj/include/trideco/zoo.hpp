// Constructors for the example algebras, each materializing full structure
// constants through an exact straightening engine.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trideco/bundle.hpp"

namespace trideco {

namespace zoo_detail {

// Assemble an algebra from a basis-product rule given as sparse results.
template <class F>
GradedAlgebra<F> from_rule(const F& field, int n, std::vector<int> deg, int unit_index,
                           const std::function<SparseVec<F>(int, int)>& rule,
                           std::vector<std::string> names = {}) {
  GradedAlgebra<F> A;
  A.field = field;
  A.n = n;
  A.deg = std::move(deg);
  A.sc.assign(n, std::vector<SparseVec<F>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A.sc[i][j] = rule(i, j);
  A.unit = unit_vec(field, n, unit_index);
  A.basis_names = std::move(names);
  return A;
}

template <class F>
TModule<F> one_dim_rep(const F& field, const std::vector<typename F::Elem>& scalars) {
  TModule<F> m;
  m.dim = 1;
  m.deg = {0};
  for (const auto& s : scalars) {
    DenseMatrix<F> a(field, 1, 1);
    a.at(0, 0) = s;
    m.act.push_back(std::move(a));
  }
  return m;
}

}  // namespace zoo_detail

// K[x,y]/(x^n, y^n) with deg x = -1, deg y = +1; triangular with T = K.
template <class F>
Bundle<F> truncated_square(const F& field, int n) {
  if (n < 2) throw input_error("truncated_square needs n >= 2");
  int dim = n * n;
  auto idx = [n](int a, int b) { return a * n + b; };  // x^a y^b
  std::vector<int> deg(dim);
  std::vector<std::string> names(dim);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      deg[idx(a, b)] = b - a;
      names[idx(a, b)] = "x^" + std::to_string(a) + "y^" + std::to_string(b);
    }
  auto rule = [&, n](int i, int j) -> SparseVec<F> {
    int a = i / n, b = i % n, c = j / n, d = j % n;
    if (a + c >= n || b + d >= n) return {};
    return {{idx(a + c, b + d), field.one()}};
  };
  Bundle<F> z;
  z.name = "truncated_square(" + std::to_string(n) + ")";
  z.alg = std::make_shared<const GradedAlgebra<F>>(
      zoo_detail::from_rule<F>(field, dim, deg, 0, rule, names));
  std::vector<Vec<F>> am, tt, ap;
  for (int a = 0; a < n; ++a) am.push_back(unit_vec(field, dim, idx(a, 0)));
  tt.push_back(unit_vec(field, dim, 0));
  for (int b = 0; b < n; ++b) ap.push_back(unit_vec(field, dim, idx(0, b)));
  std::vector<TModule<F>> irr = {zoo_detail::one_dim_rep(field, {field.one()})};
  z.td = build_triangular(z.alg, am, tt, ap, irr, true, {"1"});
  z.has_triangular = true;
  DenseMatrix<F> tau(field, dim, dim);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) tau.at(idx(b, a), idx(a, b)) = field.one();
  z.tau = tau;
  z.frobenius_hint = {0, unit_vec(field, dim, idx(n - 1, n - 1))};
  z.ci_plus = CIPresentation{{1}, {n}};
  return z;
}

// K<x,y>/(x^2, yx, y^2): triangular but not ambidextrous, not self-injective.
template <class F>
Bundle<F> pathological4(const F& field) {
  // basis 1, x, y, xy
  std::vector<int> deg = {0, -1, 1, 0};
  auto rule = [&](int i, int j) -> SparseVec<F> {
    if (i == 0) return {{j, field.one()}};
    if (j == 0) return {{i, field.one()}};
    if (i == 1 && j == 2) return {{3, field.one()}};  // x*y = xy
    return {};
  };
  Bundle<F> z;
  z.name = "pathological4";
  z.alg = std::make_shared<const GradedAlgebra<F>>(
      zoo_detail::from_rule<F>(field, 4, deg, 0, rule, {"1", "x", "y", "xy"}));
  std::vector<Vec<F>> am = {unit_vec(field, 4, 0), unit_vec(field, 4, 1)};
  std::vector<Vec<F>> tt = {unit_vec(field, 4, 0)};
  std::vector<Vec<F>> ap = {unit_vec(field, 4, 0), unit_vec(field, 4, 2)};
  std::vector<TModule<F>> irr = {zoo_detail::one_dim_rep(field, {field.one()})};
  z.td = build_triangular(z.alg, am, tt, ap, irr, true, {"1"});
  z.has_triangular = true;
  return z;
}

// Commutative K[x,y]/(x^2, yx, y^2): a verify-negative fixture with no
// triangular section at all.
template <class F>
Bundle<F> degenerate_triple(const F& field) {
  std::vector<int> deg = {0, -1, 1};
  auto rule = [&](int i, int j) -> SparseVec<F> {
    if (i == 0) return {{j, field.one()}};
    if (j == 0) return {{i, field.one()}};
    return {};
  };
  Bundle<F> z;
  z.name = "degenerate_triple";
  z.alg = std::make_shared<const GradedAlgebra<F>>(
      zoo_detail::from_rule<F>(field, 3, deg, 0, rule, {"1", "x", "y"}));
  return z;
}

// K[x]/(x^m) â‹Š Z_m with w x w^-1 = zeta x; A^- = K, T = KW, A^+ the coinvariants.
template <class F>
Bundle<F> coinvariant_skew(const F& field, int m, const typename F::Elem& zeta) {
  if (m < 2) throw input_error("coinvariant_skew needs m >= 2");
  // sanity on the supplied root of unity
  typename F::Elem pw = field.one();
  for (int k = 0; k < m; ++k) {
    pw = pw * zeta;
    if (k + 1 < m && pw.is_one()) throw input_error("zeta is not a primitive m-th root");
  }
  if (!pw.is_one()) throw input_error("zeta^m != 1");
  int dim = m * m;
  auto idx = [m](int a, int k) { return a * m + k; };  // x^a w^k
  std::vector<int> deg(dim);
  std::vector<std::string> names(dim);
  for (int a = 0; a < m; ++a)
    for (int k = 0; k < m; ++k) {
      deg[idx(a, k)] = a;
      names[idx(a, k)] = "x^" + std::to_string(a) + "w^" + std::to_string(k);
    }
  std::vector<typename F::Elem> zp(m, field.one());
  for (int k = 1; k < m; ++k) zp[k] = zp[k - 1] * zeta;
  auto rule = [&, m](int i, int j) -> SparseVec<F> {
    int a = i / m, jj = i % m, b = j / m, k = j % m;
    if (a + b >= m) return {};
    // (x^a w^j)(x^b w^k) = zeta^{j b} x^{a+b} w^{j+k}
    return {{idx(a + b, (jj + k) % m), zp[(jj * b) % m]}};
  };
  Bundle<F> z;
  z.name = "coinvariant_skew(" + std::to_string(m) + ")";
  z.alg = std::make_shared<const GradedAlgebra<F>>(
      zoo_detail::from_rule<F>(field, dim, deg, 0, rule, names));
  std::vector<Vec<F>> am = {unit_vec(field, dim, 0)};
  std::vector<Vec<F>> tt, ap;
  for (int k = 0; k < m; ++k) tt.push_back(unit_vec(field, dim, idx(0, k)));
  for (int a = 0; a < m; ++a) ap.push_back(unit_vec(field, dim, idx(a, 0)));
  std::vector<TModule<F>> irr;
  std::vector<std::string> labels;
  for (int chi = 0; chi < m; ++chi) {
    std::vector<typename F::Elem> scal;
    for (int k = 0; k < m; ++k) scal.push_back(zp[(chi * k) % m]);
    irr.push_back(zoo_detail::one_dim_rep(field, scal));
    labels.push_back("chi" + std::to_string(chi));
  }
  z.td = build_triangular(z.alg, am, tt, ap, irr, true, labels);
  z.has_triangular = true;
  z.ci_plus = CIPresentation{{1}, {m}};
  return z;
}

// ---------------------------------------------------------------------------
// Restricted enveloping algebra of sl2 over F_p
// ---------------------------------------------------------------------------

// PBW monomials f^a h^b e^c with ef = fe + h, he = e(h+2), hf = f(h-2),
// e^p = f^p = 0, h^p = h.  Products are straightened by left multiplication
// with the generators.
inline Bundle<PrimeField> restricted_sl2(std::int64_t p) {
  if (p < 3) throw input_error("restricted_sl2 needs an odd prime");
  PrimeField field(p);
  int n = static_cast<int>(p * p * p);
  auto idx = [p](int a, int b, int c) { return static_cast<int>((a * p + b) * p + c); };
  using Elt = std::map<int, FpElem>;  // index -> coefficient
  auto add = [&](Elt& e, int i, FpElem v) {
    if (v.is_zero()) return;
    auto it = e.emplace(i, field.zero()).first;
    it->second += v;
    if (it->second.is_zero()) e.erase(it);
  };
  // binomial table mod p for exponents < p
  std::vector<std::vector<FpElem>> binom(p, std::vector<FpElem>(p, field.zero()));
  for (int i = 0; i < p; ++i) {
    binom[i][0] = field.one();
    for (int j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : field.zero());
  }
  auto lmul_f = [&](const Elt& e) {
    Elt r;
    for (const auto& [i, v] : e) {
      int a = i / static_cast<int>(p * p);
      if (a + 1 < p) add(r, i + static_cast<int>(p * p), v);
    }
    return r;
  };
  auto lmul_h = [&](const Elt& e) {
    Elt r;
    for (const auto& [i, v] : e) {
      int a = i / static_cast<int>(p * p), b = (i / static_cast<int>(p)) % static_cast<int>(p),
          c = i % static_cast<int>(p);
      int b1 = (b + 1 == p) ? 1 : b + 1;  // h^p = h
      add(r, idx(a, b1, c), v);
      add(r, i, v * field.from_int(-2L * a));
    }
    return r;
  };
  auto lmul_e = [&](const Elt& e) {
    Elt r;
    for (const auto& [i, v] : e) {
      int a = i / static_cast<int>(p * p), b = (i / static_cast<int>(p)) % static_cast<int>(p),
          c = i % static_cast<int>(p);
      // f^a (h-2)^b e^{c+1}
      if (c + 1 < p) {
        FpElem m2 = field.from_int(-2);
        FpElem pw = field.one();
        // (h-2)^b = sum_j binom(b,j) h^j (-2)^{b-j}
        for (int j = b; j >= 0; --j) {
          add(r, idx(a, j, c + 1), v * binom[b][j] * pw);
          pw = pw * m2;
        }
      }
      // + a f^{a-1} (h - a + 1) h^b e^c
      if (a > 0) {
        FpElem av = v * field.from_int(a);
        int b1 = (b + 1 == p) ? 1 : b + 1;
        add(r, idx(a - 1, b1, c), av);
        add(r, idx(a - 1, b, c), av * field.from_int(1 - a));
      }
    }
    return r;
  };
  auto rule = [&](int i, int j) -> SparseVec<PrimeField> {
    int a = i / static_cast<int>(p * p), b = (i / static_cast<int>(p)) % static_cast<int>(p),
        c = i % static_cast<int>(p);
    Elt cur = {{j, field.one()}};
    for (int t = 0; t < c; ++t) cur = lmul_e(cur);
    for (int t = 0; t < b; ++t) cur = lmul_h(cur);
    for (int t = 0; t < a; ++t) cur = lmul_f(cur);
    SparseVec<PrimeField> out(cur.begin(), cur.end());
    return out;
  };
  std::vector<int> deg(n);
  std::vector<std::string> names(n);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        deg[idx(a, b, c)] = c - a;
        names[idx(a, b, c)] =
            "f^" + std::to_string(a) + "h^" + std::to_string(b) + "e^" + std::to_string(c);
      }
  Bundle<PrimeField> z;
  z.name = "restricted_sl2(" + std::to_string(p) + ")";
  z.alg = std::make_shared<const GradedAlgebra<PrimeField>>(
      zoo_detail::from_rule<PrimeField>(field, n, deg, 0, rule, names));
  std::vector<Vec<PrimeField>> am, tt, ap;
  for (int a = 0; a < p; ++a) am.push_back(unit_vec(field, n, idx(a, 0, 0)));
  for (int b = 0; b < p; ++b) tt.push_back(unit_vec(field, n, idx(0, b, 0)));
  for (int c = 0; c < p; ++c) ap.push_back(unit_vec(field, n, idx(0, 0, c)));
  std::vector<TModule<PrimeField>> irr;
  std::vector<std::string> labels;
  for (int lam = 0; lam < p; ++lam) {
    std::vector<FpElem> scal;
    FpElem pw = field.one();
    for (int b = 0; b < p; ++b) {
      scal.push_back(pw);
      pw = pw * field.from_int(lam);
    }
    irr.push_back(zoo_detail::one_dim_rep(field, scal));
    labels.push_back(std::to_string(lam));
  }
  z.td = build_triangular(z.alg, am, tt, ap, irr, true, labels);
  z.has_triangular = true;
  DenseMatrix<PrimeField> tau(field, n, n);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) tau.at(idx(c, b, a), idx(a, b, c)) = field.one();
  z.tau = tau;
  z.frobenius_hint = {0, unit_vec(field, n, idx(static_cast<int>(p - 1), static_cast<int>(p - 1),
                                                static_cast<int>(p - 1)))};
  z.ci_plus = CIPresentation{{1}, {static_cast<int>(p)}};
  return z;
}

// ---------------------------------------------------------------------------
// Restricted rational Cherednik algebra of Z_l at t = 0
// ---------------------------------------------------------------------------

// PBW monomials x^a w^j y^b over Q(zeta_l), with w x w^-1 = zeta^-1 x,
// w y w^-1 = zeta y, and y x = x y - 2 sum_k c_k w^k.
inline Bundle<CyclotomicField> rrca_cyclic(int ell, const std::vector<CycloElem>& cpar) {
  if (ell < 2) throw input_error("rrca_cyclic needs l >= 2");
  if (static_cast<int>(cpar.size()) != ell - 1)
    throw input_error("rrca_cyclic needs l-1 reflection parameters");
  CyclotomicField field(ell);
  int n = ell * ell * ell;
  auto idx = [ell](int a, int j, int b) { return (a * ell + j) * ell + b; };
  using Elt = std::map<int, CycloElem>;
  auto add = [&](Elt& e, int i, const CycloElem& v) {
    if (v.is_zero()) return;
    auto it = e.emplace(i, field.zero()).first;
    it->second += v;
    if (it->second.is_zero()) e.erase(it);
  };
  std::vector<CycloElem> zp(2 * ell);
  for (int k = 0; k < 2 * ell; ++k) zp[k] = field.zeta_pow(k);
  auto lmul_x = [&](const Elt& e) {
    Elt r;
    for (const auto& [i, v] : e) {
      int a = i / (ell * ell);
      if (a + 1 < ell) add(r, i + ell * ell, v);
    }
    return r;
  };
  auto lmul_w = [&](const Elt& e) {
    Elt r;
    for (const auto& [i, v] : e) {
      int a = i / (ell * ell), j = (i / ell) % ell, b = i % ell;
      add(r, idx(a, (j + 1) % ell, b), v * field.zeta_pow(-a));
    }
    return r;
  };
  std::function<Elt(const Elt&)> lmul_y = [&](const Elt& e) -> Elt {
    Elt r;
    for (const auto& [i, v] : e) {
      int a = i / (ell * ell), j = (i / ell) % ell, b = i % ell;
      if (a == 0) {
        if (b + 1 < ell) add(r, idx(0, j, b + 1), v * field.zeta_pow(-j));
        continue;
      }
      // y x^a = x (y x^{a-1}) - 2 sum_k c_k zeta^{-k(a-1)} x^{a-1} w^k
      Elt inner = lmul_y({{idx(a - 1, j, b), v}});
      for (const auto& [ii, vv] : lmul_x(inner)) add(r, ii, vv);
      for (int k = 1; k < ell; ++k) {
        CycloElem coeff = v * cpar[k - 1] * field.zeta_pow(-k * (a - 1)) * field.from_int(-2);
        add(r, idx(a - 1, (j + k) % ell, b), coeff);
      }
    }
    return r;
  };
  auto rule = [&](int i, int j) -> SparseVec<CyclotomicField> {
    int a = i / (ell * ell), jj = (i / ell) % ell, b = i % ell;
    Elt cur = {{j, field.one()}};
    for (int t = 0; t < b; ++t) cur = lmul_y(cur);
    for (int t = 0; t < jj; ++t) cur = lmul_w(cur);
    for (int t = 0; t < a; ++t) cur = lmul_x(cur);
    return SparseVec<CyclotomicField>(cur.begin(), cur.end());
  };
  std::vector<int> deg(n);
  std::vector<std::string> names(n);
  for (int a = 0; a < ell; ++a)
    for (int j = 0; j < ell; ++j)
      for (int b = 0; b < ell; ++b) {
        deg[idx(a, j, b)] = b - a;
        names[idx(a, j, b)] =
            "x^" + std::to_string(a) + "w^" + std::to_string(j) + "y^" + std::to_string(b);
      }
  Bundle<CyclotomicField> z;
  z.name = "rrca_cyclic(" + std::to_string(ell) + ")";
  z.alg = std::make_shared<const GradedAlgebra<CyclotomicField>>(
      zoo_detail::from_rule<CyclotomicField>(field, n, deg, 0, rule, names));
  std::vector<Vec<CyclotomicField>> am, tt, ap;
  for (int a = 0; a < ell; ++a) am.push_back(unit_vec(field, n, idx(a, 0, 0)));
  for (int j = 0; j < ell; ++j) tt.push_back(unit_vec(field, n, idx(0, j, 0)));
  for (int b = 0; b < ell; ++b) ap.push_back(unit_vec(field, n, idx(0, 0, b)));
  std::vector<TModule<CyclotomicField>> irr;
  std::vector<std::string> labels;
  for (int chi = 0; chi < ell; ++chi) {
    std::vector<CycloElem> scal;
    for (int k = 0; k < ell; ++k) scal.push_back(field.zeta_pow(chi * k));
    irr.push_back(zoo_detail::one_dim_rep(field, scal));
    labels.push_back("chi" + std::to_string(chi));
  }
  z.td = build_triangular(z.alg, am, tt, ap, irr, true, labels);
  z.has_triangular = true;
  if (ell == 2) {
    DenseMatrix<CyclotomicField> tau(field, n, n);
    for (int a = 0; a < ell; ++a)
      for (int j = 0; j < ell; ++j)
        for (int b = 0; b < ell; ++b)
          tau.at(idx(b, (ell - j) % ell, a), idx(a, j, b)) = field.one();
    z.tau = tau;
  }
  z.ci_plus = CIPresentation{{1}, {ell}};
  return z;
}

// Deterministic parameter ladders for the "certified generic" search.
inline std::vector<CycloElem> rrca_parameters(int ell, int attempt) {
  CyclotomicField field(ell);
  std::vector<CycloElem> c;
  for (int k = 1; k < ell; ++k) c.push_back(field.from_int(k * (attempt + 1) + attempt));
  return c;
}

// ---------------------------------------------------------------------------
// Lusztig's small quantum sl2 at a primitive l-th root of unity (l odd)
// ---------------------------------------------------------------------------

// PBW monomials F^a K^b E^c over Q(zeta_{2l}) with q = zeta_{2l}^2, relations
// K E = q^2 E K, E F - F E = (K - K^-1)/(q - q^-1), E^l = F^l = 0, K^{2l} = 1.
inline Bundle<CyclotomicField> small_quantum_sl2(int ell) {
  if (ell < 3 || ell % 2 == 0) throw input_error("small_quantum_sl2 needs odd l >= 3");
  CyclotomicField field(2 * ell);
  int nk = 2 * ell;
  int n = ell * nk * ell;
  auto idx = [ell, nk](int a, int b, int c) { return (a * nk + b) * ell + c; };
  auto q_pow = [&](long k) { return field.zeta_pow(2 * k); };  // q = zeta^2
  CycloElem qden = q_pow(1) - q_pow(-1);
  CycloElem qden_inv = qden.inverse();
  using Elt = std::map<int, CycloElem>;
  auto add = [&](Elt& e, int i, const CycloElem& v) {
    if (v.is_zero()) return;
    auto it = e.emplace(i, field.zero()).first;
    it->second += v;
    if (it->second.is_zero()) e.erase(it);
  };
  auto lmul_f = [&](const Elt& e) {
    Elt r;
    for (const auto& [i, v] : e) {
      int a = i / (nk * ell);
      if (a + 1 < ell) add(r, i + nk * ell, v);
    }
    return r;
  };
  auto lmul_k = [&](const Elt& e) {
    Elt r;
    for (const auto& [i, v] : e) {
      int a = i / (nk * ell), b = (i / ell) % nk, c = i % ell;
      add(r, idx(a, (b + 1) % nk, c), v * q_pow(-2L * a));
    }
    return r;
  };
  auto lmul_e = [&](const Elt& e) {
    Elt r;
    for (const auto& [i, v] : e) {
      int a = i / (nk * ell), b = (i / ell) % nk, c = i % ell;
      // F^a (E K^b) E^c = q^{-2b} F^a K^b E^{c+1}
      if (c + 1 < ell) add(r, idx(a, b, c + 1), v * q_pow(-2L * b));
      if (a > 0) {
        // [a]_q F^{a-1} (q^{-(a-1)} K - q^{a-1} K^{-1}) / (q - q^{-1}) K^b E^c
        CycloElem bracket = (q_pow(a) - q_pow(-a)) * qden_inv;
        CycloElem f = v * bracket * qden_inv;
        add(r, idx(a - 1, (b + 1) % nk, c), f * q_pow(-(a - 1)));
        add(r, idx(a - 1, (b - 1 + nk) % nk, c), -(f * q_pow(a - 1)));
      }
    }
    return r;
  };
  auto rule = [&](int i, int j) -> SparseVec<CyclotomicField> {
    int a = i / (nk * ell), b = (i / ell) % nk, c = i % ell;
    Elt cur = {{j, field.one()}};
    for (int t = 0; t < c; ++t) cur = lmul_e(cur);
    for (int t = 0; t < b; ++t) cur = lmul_k(cur);
    for (int t = 0; t < a; ++t) cur = lmul_f(cur);
    return SparseVec<CyclotomicField>(cur.begin(), cur.end());
  };
  std::vector<int> deg(n);
  std::vector<std::string> names(n);
  for (int a = 0; a < ell; ++a)
    for (int b = 0; b < nk; ++b)
      for (int c = 0; c < ell; ++c) {
        deg[idx(a, b, c)] = c - a;
        names[idx(a, b, c)] =
            "F^" + std::to_string(a) + "K^" + std::to_string(b) + "E^" + std::to_string(c);
      }
  Bundle<CyclotomicField> z;
  z.name = "small_quantum_sl2(" + std::to_string(ell) + ")";
  z.alg = std::make_shared<const GradedAlgebra<CyclotomicField>>(
      zoo_detail::from_rule<CyclotomicField>(field, n, deg, 0, rule, names));
  std::vector<Vec<CyclotomicField>> am, tt, ap;
  for (int a = 0; a < ell; ++a) am.push_back(unit_vec(field, n, idx(a, 0, 0)));
  for (int b = 0; b < nk; ++b) tt.push_back(unit_vec(field, n, idx(0, b, 0)));
  for (int c = 0; c < ell; ++c) ap.push_back(unit_vec(field, n, idx(0, 0, c)));
  std::vector<TModule<CyclotomicField>> irr;
  std::vector<std::string> labels;
  for (int m = 0; m < nk; ++m) {
    std::vector<CycloElem> scal;
    for (int b = 0; b < nk; ++b) scal.push_back(field.zeta_pow(static_cast<long>(m) * b));
    irr.push_back(zoo_detail::one_dim_rep(field, scal));
    labels.push_back(std::to_string(m));
  }
  z.td = build_triangular(z.alg, am, tt, ap, irr, true, labels);
  z.has_triangular = true;
  DenseMatrix<CyclotomicField> tau(field, n, n);
  for (int a = 0; a < ell; ++a)
    for (int b = 0; b < nk; ++b)
      for (int c = 0; c < ell; ++c) tau.at(idx(c, b, a), idx(a, b, c)) = field.one();
  z.tau = tau;
  return z;
}

}  // namespace trideco
