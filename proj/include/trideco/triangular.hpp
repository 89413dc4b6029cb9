// Triangular decompositions (A^-, T, A^+): verification, PBW transport,
// Borel subalgebras, braiding, induction, and graded characters.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trideco/laurent.hpp"
#include "trideco/semisimple.hpp"

namespace trideco {

// A T-module presented by one action matrix per stored T-basis vector.
template <class F>
struct TModule {
  int dim = 0;
  std::vector<int> deg;
  std::vector<DenseMatrix<F>> act;
};

template <class F>
struct TriangularDecomp {
  std::shared_ptr<const GradedAlgebra<F>> alg;
  std::vector<Vec<F>> am, tt, ap;  // ordered homogeneous bases of A^-, T, A^+
  std::vector<TModule<F>> irr_t;   // declared simple T-modules, degree zero
  std::vector<std::string> labels;
  bool semisimple_t = true;

  // derived data
  std::vector<int> am_deg, ap_deg;
  int am_unit = -1, ap_unit = -1;  // positions of the unit vectors
  bool dims_match = false;         // |am|*|tt|*|ap| == dim A
  bool pbw_ok = false;
  DenseMatrix<F> pbw, pbw_inv;
  DenseMatrix<F> t_mat;            // columns = tt in ambient coordinates
  std::vector<int> gens;           // generating indices of alg
  // straightening of b_k * am_i through the PBW basis, A^+ part projected to T
  std::vector<std::vector<std::vector<std::tuple<int, int, typename F::Elem>>>> verma_table;

  int tensor_index(int i, int j, int k) const {
    return (i * static_cast<int>(tt.size()) + j) * static_cast<int>(ap.size()) + k;
  }
  std::string label(int s) const {
    return labels.empty() ? std::to_string(s) : labels[s];
  }
  int num_labels() const { return static_cast<int>(irr_t.size()); }

  Vec<F> t_coordinates(const Vec<F>& v) const {
    auto sol = solve_linear(t_mat, v);
    if (!sol) throw input_error("element does not lie in T");
    return *sol;
  }
};

namespace detail {

template <class F>
std::optional<int> homogeneous_degree(const GradedAlgebra<F>& A, const Vec<F>& v) {
  std::optional<int> d;
  for (int i = 0; i < A.n; ++i) {
    if (v[i].is_zero()) continue;
    if (!d) d = A.deg[i];
    else if (*d != A.deg[i]) return std::nullopt;
  }
  return d ? d : std::optional<int>(0);
}

}  // namespace detail

template <class F>
TriangularDecomp<F> build_triangular(std::shared_ptr<const GradedAlgebra<F>> alg,
                                     std::vector<Vec<F>> am, std::vector<Vec<F>> tt,
                                     std::vector<Vec<F>> ap, std::vector<TModule<F>> irr_t,
                                     bool semisimple_t, std::vector<std::string> labels = {}) {
  TriangularDecomp<F> td;
  td.alg = std::move(alg);
  const auto& A = *td.alg;
  td.am = std::move(am);
  td.tt = std::move(tt);
  td.ap = std::move(ap);
  td.irr_t = std::move(irr_t);
  td.labels = std::move(labels);
  td.semisimple_t = semisimple_t;

  auto degrees_of = [&](const std::vector<Vec<F>>& basis, const char* which) {
    std::vector<int> degs;
    for (const auto& v : basis) {
      auto d = detail::homogeneous_degree(A, v);
      if (!d) throw input_error(std::string(which) + " basis vector is not homogeneous");
      degs.push_back(*d);
    }
    return degs;
  };
  td.am_deg = degrees_of(td.am, "A^-");
  td.ap_deg = degrees_of(td.ap, "A^+");

  auto normalize_unit = [&](std::vector<Vec<F>>& basis, const std::vector<int>& degs) {
    int unit_idx = -1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (degs[i] != 0) continue;
      if (unit_idx >= 0) return -1;  // degree-zero part too big
      unit_idx = static_cast<int>(i);
    }
    if (unit_idx < 0) return -1;
    // must be a scalar multiple of 1
    typename F::Elem scale = A.field.zero();
    for (int c = 0; c < A.n; ++c) {
      if (basis[unit_idx][c].is_zero()) continue;
      if (A.unit[c].is_zero()) return -1;
      scale = basis[unit_idx][c] / A.unit[c];
      break;
    }
    Vec<F> test = A.unit;
    for (auto& x : test) x *= scale;
    if (test != basis[unit_idx]) return -1;
    basis[unit_idx] = A.unit;
    return unit_idx;
  };
  td.am_unit = normalize_unit(td.am, td.am_deg);
  td.ap_unit = normalize_unit(td.ap, td.ap_deg);

  td.t_mat = DenseMatrix<F>(A.field, A.n, static_cast<int>(td.tt.size()));
  for (std::size_t j = 0; j < td.tt.size(); ++j)
    for (int i = 0; i < A.n; ++i) td.t_mat.at(i, static_cast<int>(j)) = td.tt[j][i];

  td.dims_match = static_cast<long>(td.am.size()) * static_cast<long>(td.tt.size()) *
                      static_cast<long>(td.ap.size()) ==
                  static_cast<long>(A.n);
  if (td.dims_match) {
    td.pbw = DenseMatrix<F>(A.field, A.n, A.n);
    for (std::size_t i = 0; i < td.am.size(); ++i)
      for (std::size_t j = 0; j < td.tt.size(); ++j) {
        Vec<F> left = A.multiply(td.am[i], td.tt[j]);
        for (std::size_t k = 0; k < td.ap.size(); ++k) {
          Vec<F> prod = A.multiply(left, td.ap[k]);
          int col = td.tensor_index(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
          for (int r = 0; r < A.n; ++r) td.pbw.at(r, col) = prod[r];
        }
      }
    auto inv = inverse(td.pbw);
    if (inv) {
      td.pbw_inv = std::move(*inv);
      td.pbw_ok = true;
    }
  }
  td.gens = generating_indices(A);

  if (td.pbw_ok && td.am_unit >= 0 && td.ap_unit >= 0) {
    int na = static_cast<int>(td.am.size());
    int nt = static_cast<int>(td.tt.size());
    td.verma_table.assign(A.n, std::vector<std::vector<std::tuple<int, int, typename F::Elem>>>(na));
    for (int k = 0; k < A.n; ++k) {
      Vec<F> bk = unit_vec(A.field, A.n, k);
      for (int i = 0; i < na; ++i) {
        Vec<F> coords = td.pbw_inv.apply(A.multiply(bk, td.am[i]));
        auto& cell = td.verma_table[k][i];
        for (int i2 = 0; i2 < na; ++i2)
          for (int j2 = 0; j2 < nt; ++j2) {
            const auto& c = coords[td.tensor_index(i2, j2, td.ap_unit)];
            if (!c.is_zero()) cell.emplace_back(i2, j2, c);
          }
      }
    }
  }
  return td;
}

// T as a graded algebra of its own (concentrated in degree zero).
template <class F>
std::shared_ptr<const GradedAlgebra<F>> t_algebra(const TriangularDecomp<F>& td) {
  return std::make_shared<const GradedAlgebra<F>>(subalgebra_on_basis(*td.alg, td.tt));
}

template <class F>
GradedModule<F> t_module_as_graded(const TModule<F>& m,
                                   std::shared_ptr<const GradedAlgebra<F>> talg) {
  GradedModule<F> M;
  M.alg = std::move(talg);
  M.dim = m.dim;
  M.deg = m.deg;
  M.act = m.act;
  return M;
}

// Checks Defn items (a)-(e): PBW bijectivity, supports, connectedness of the
// degree-zero parts, A^{+/-} T = T A^{+/-}, and splitness of the supplied
// irreducibles (Burnside: the action generates the full matrix algebra).
template <class F>
CheckReport verify_triangular(const TriangularDecomp<F>& td) {
  CheckReport rep;
  const auto& A = *td.alg;
  const F& field = A.field;

  if (!td.dims_match)
    rep.fail("(a) fails by dimension: |A^-| * |T| * |A^+| = " +
             std::to_string(td.am.size() * td.tt.size() * td.ap.size()) + " != dim A = " +
             std::to_string(A.n));
  else if (!td.pbw_ok)
    rep.fail("(a) multiplication map A^- (x) T (x) A^+ -> A is not bijective");

  for (std::size_t j = 0; j < td.tt.size(); ++j) {
    auto d = detail::homogeneous_degree(A, td.tt[j]);
    if (!d || *d != 0) rep.fail("(b) T is not concentrated in degree zero");
  }
  for (int d : td.ap_deg)
    if (d < 0) rep.fail("(b) Supp A^+ contains a negative degree");
  for (int d : td.am_deg)
    if (d > 0) rep.fail("(b) Supp A^- contains a positive degree");

  if (td.am_unit < 0) rep.fail("(c) A^-_0 != K");
  if (td.ap_unit < 0) rep.fail("(c) A^+_0 != K");
  if (!Subspace<F>::span(field, A.n, td.tt).contains(A.unit)) rep.fail("T does not contain 1");

  auto closed = [&](const std::vector<Vec<F>>& basis, const char* name) {
    Subspace<F> sp = Subspace<F>::span(field, A.n, basis);
    if (sp.dim() != static_cast<int>(basis.size()))
      rep.fail(std::string(name) + " basis is linearly dependent");
    for (const auto& u : basis)
      for (const auto& v : basis)
        if (!sp.contains(A.multiply(u, v))) {
          rep.fail(std::string(name) + " is not multiplicatively closed");
          return;
        }
  };
  closed(td.am, "A^-");
  closed(td.tt, "T");
  closed(td.ap, "A^+");

  // (d) A^+ T = T A^+ and A^- T = T A^- as subspaces (canonical-form equality)
  auto product_span = [&](const std::vector<Vec<F>>& xs, const std::vector<Vec<F>>& ys) {
    std::vector<Vec<F>> prods;
    for (const auto& x : xs)
      for (const auto& y : ys) prods.push_back(A.multiply(x, y));
    return Subspace<F>::span(field, A.n, prods);
  };
  if (product_span(td.ap, td.tt) != product_span(td.tt, td.ap))
    rep.fail("(d) A^+ T != T A^+ as subspaces");
  if (product_span(td.am, td.tt) != product_span(td.tt, td.am))
    rep.fail("(d) A^- T != T A^-");

  // (e) splitness of T on the supplied irreducibles
  GradedAlgebra<F> T;
  bool have_t = false;
  try {
    T = subalgebra_on_basis(A, td.tt);
    have_t = true;
  } catch (const Error& e) {
    rep.fail(std::string("T is not a subalgebra: ") + e.what());
  }
  long dim_sq_sum = 0;
  for (std::size_t s = 0; s < td.irr_t.size(); ++s) {
    const auto& lam = td.irr_t[s];
    dim_sq_sum += static_cast<long>(lam.dim) * lam.dim;
    if (static_cast<int>(lam.act.size()) != static_cast<int>(td.tt.size())) {
      rep.fail("irr_T[" + td.label(static_cast<int>(s)) + "] action list has wrong length");
      continue;
    }
    for (int d : lam.deg)
      if (d != 0) rep.fail("irr_T[" + td.label(static_cast<int>(s)) + "] is not in degree zero");
    if (have_t) {
      // module axioms over T
      Vec<F> tunit = td.t_coordinates(A.unit);
      DenseMatrix<F> u(field, lam.dim, lam.dim);
      for (std::size_t j = 0; j < td.tt.size(); ++j)
        if (!tunit[j].is_zero()) u = u + lam.act[j].scaled(tunit[j]);
      if (u != DenseMatrix<F>::identity(field, lam.dim))
        rep.fail("irr_T[" + td.label(static_cast<int>(s)) + "]: unit does not act as identity");
      for (int i = 0; i < T.n; ++i)
        for (int j = 0; j < T.n; ++j) {
          DenseMatrix<F> lhs = lam.act[i] * lam.act[j];
          DenseMatrix<F> rhs(field, lam.dim, lam.dim);
          for (const auto& [k, c] : T.sc[i][j]) rhs = rhs + lam.act[k].scaled(c);
          if (lhs != rhs) {
            rep.fail("irr_T[" + td.label(static_cast<int>(s)) + "] violates T structure constants");
            i = T.n; break;
          }
        }
    }
    // absolute irreducibility by Burnside: span of products of the action = d^2
    std::vector<Vec<F>> mats;
    auto flatten = [&](const DenseMatrix<F>& m) {
      Vec<F> v(static_cast<std::size_t>(lam.dim) * lam.dim, field.zero());
      for (int i = 0; i < lam.dim; ++i)
        for (int j = 0; j < lam.dim; ++j) v[i * lam.dim + j] = m.at(i, j);
      return v;
    };
    std::vector<DenseMatrix<F>> reps = {DenseMatrix<F>::identity(field, lam.dim)};
    for (const auto& a : lam.act) reps.push_back(a);
    Subspace<F> sp(field, lam.dim * lam.dim);
    for (;;) {
      std::vector<Vec<F>> vs;
      for (const auto& m : reps) vs.push_back(flatten(m));
      Subspace<F> grown = Subspace<F>::span(field, lam.dim * lam.dim, vs);
      if (grown.dim() == sp.dim()) break;
      sp = grown;
      std::vector<DenseMatrix<F>> next = reps;
      for (const auto& a : lam.act)
        for (const auto& m : reps) next.push_back(a * m);
      reps = std::move(next);
    }
    if (sp.dim() != lam.dim * lam.dim)
      rep.fail("irr_T[" + td.label(static_cast<int>(s)) +
               "] is not absolutely simple (Burnside span " + std::to_string(sp.dim()) + " < " +
               std::to_string(lam.dim * lam.dim) + ")");
  }
  // pairwise non-isomorphic: no nonzero intertwiner
  for (std::size_t a = 0; a < td.irr_t.size(); ++a)
    for (std::size_t b = a + 1; b < td.irr_t.size(); ++b) {
      const auto& la = td.irr_t[a];
      const auto& lb = td.irr_t[b];
      if (la.dim != lb.dim) continue;
      std::vector<Vec<F>> rows;
      for (std::size_t j = 0; j < td.tt.size(); ++j)
        for (int r = 0; r < lb.dim; ++r)
          for (int c = 0; c < la.dim; ++c) {
            Vec<F> row(static_cast<std::size_t>(lb.dim) * la.dim, field.zero());
            for (int m = 0; m < la.dim; ++m) row[r * la.dim + m] += la.act[j].at(m, c);
            for (int m = 0; m < lb.dim; ++m) row[m * la.dim + c] -= lb.act[j].at(r, m);
            rows.push_back(std::move(row));
          }
      DenseMatrix<F> sys(field, static_cast<int>(rows.size()), lb.dim * la.dim);
      for (std::size_t i = 0; i < rows.size(); ++i) sys.set_row(static_cast<int>(i), rows[i]);
      if (!kernel_basis(sys).empty())
        rep.fail("irr_T[" + td.label(static_cast<int>(a)) + "] and irr_T[" +
                 td.label(static_cast<int>(b)) + "] are isomorphic");
    }
  if (td.semisimple_t) {
    if (dim_sq_sum != static_cast<long>(td.tt.size()))
      rep.fail("irr_T incomplete for semisimple T: sum of dims^2 = " + std::to_string(dim_sq_sum) +
               " != dim T = " + std::to_string(td.tt.size()));
  } else {
    rep.notes.push_back("T not declared semisimple: completeness of irr_T assumed");
  }
  return rep;
}

// Unique a = sum a^-_i t_j a^+_k coordinates on the tensor basis.
template <class F>
Vec<F> pbw_coordinates(const TriangularDecomp<F>& td, const Vec<F>& a) {
  if (!td.pbw_ok) throw input_error("pbw coordinates need a verified decomposition");
  return td.pbw_inv.apply(a);
}

template <class F>
struct AmbidexterityResult {
  bool ambidextrous = false;
  std::string witness;  // a kernel vector of the reversed multiplication, if any
};

// Is A^+ (x) T (x) A^- -> A also bijective?
template <class F>
AmbidexterityResult<F> ambidexterity_check(const TriangularDecomp<F>& td) {
  const auto& A = *td.alg;
  DenseMatrix<F> rev(A.field, A.n, A.n);
  int nt = static_cast<int>(td.tt.size()), na = static_cast<int>(td.am.size());
  for (std::size_t k = 0; k < td.ap.size(); ++k)
    for (std::size_t j = 0; j < td.tt.size(); ++j) {
      Vec<F> left = A.multiply(td.ap[k], td.tt[j]);
      for (std::size_t i = 0; i < td.am.size(); ++i) {
        int col = (static_cast<int>(k) * nt + static_cast<int>(j)) * na + static_cast<int>(i);
        Vec<F> prod = A.multiply(left, td.am[i]);
        for (int r = 0; r < A.n; ++r) rev.at(r, col) = prod[r];
      }
    }
  AmbidexterityResult<F> res;
  auto ker = kernel_basis(rev);
  if (ker.empty()) {
    res.ambidextrous = true;
    return res;
  }
  std::string w;
  const auto& v = ker[0];
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx].is_zero()) continue;
    int i = static_cast<int>(idx) % na;
    int j = (static_cast<int>(idx) / na) % nt;
    int k = static_cast<int>(idx) / (na * nt);
    if (!w.empty()) w += " + ";
    std::string coeff = A.field.print(v[idx]);
    if (coeff != "1") w += coeff + "*";
    w += "a+[" + std::to_string(k) + "] (x) t[" + std::to_string(j) + "] (x) a-[" +
         std::to_string(i) + "]";
  }
  res.witness = w;
  return res;
}

template <class F>
struct BorelData {
  int sign = -1;                    // -1 or +1
  std::vector<Vec<F>> basis;        // products a_i t_j, i-major, ambient coordinates
  std::vector<int> basis_deg;
  std::vector<Vec<F>> j_ideal;      // augmentation ideal basis
  DenseMatrix<F> onto_t;            // |T| x dim B: the projection B ->> T
  DenseMatrix<F> basis_mat;         // ambient x dim B, for coordinate solves
};

template <class F>
BorelData<F> borel(const TriangularDecomp<F>& td, int sign) {
  const auto& A = *td.alg;
  const auto& side = sign < 0 ? td.am : td.ap;
  const auto& side_deg = sign < 0 ? td.am_deg : td.ap_deg;
  int unit_pos = sign < 0 ? td.am_unit : td.ap_unit;
  if (unit_pos < 0) throw input_error("borel needs a normalized decomposition");
  BorelData<F> b;
  b.sign = sign;
  int nt = static_cast<int>(td.tt.size());
  for (std::size_t i = 0; i < side.size(); ++i)
    for (int j = 0; j < nt; ++j) {
      Vec<F> prod = A.multiply(side[i], td.tt[j]);
      b.basis.push_back(prod);
      b.basis_deg.push_back(side_deg[i]);
      if (side_deg[i] != 0) b.j_ideal.push_back(prod);
    }
  int dim_b = static_cast<int>(b.basis.size());
  Subspace<F> sp = Subspace<F>::span(A.field, A.n, b.basis);
  if (sp.dim() != dim_b) throw property_error("Borel products are linearly dependent");
  b.onto_t = DenseMatrix<F>(A.field, nt, dim_b);
  for (std::size_t i = 0; i < side.size(); ++i)
    for (int j = 0; j < nt; ++j)
      if (static_cast<int>(i) == unit_pos) b.onto_t.at(j, static_cast<int>(i) * nt + j) = A.field.one();
  b.basis_mat = DenseMatrix<F>(A.field, A.n, dim_b);
  for (int c = 0; c < dim_b; ++c)
    for (int r = 0; r < A.n; ++r) b.basis_mat.at(r, c) = b.basis[c][r];
  return b;
}

// R^{sign}(t (x) a) as a |side| x |T| coefficient matrix over the basis
// a_i (x) t_j of A^{sign} (x) T.
template <class F>
DenseMatrix<F> braiding(const TriangularDecomp<F>& td, const BorelData<F>& b, const Vec<F>& t_elt,
                        const Vec<F>& a_elt) {
  const auto& A = *td.alg;
  Vec<F> prod = A.multiply(t_elt, a_elt);
  auto sol = solve_linear(b.basis_mat, prod);
  if (!sol) throw property_error("t*a does not lie in the Borel subalgebra");
  int nt = static_cast<int>(td.tt.size());
  int ns = static_cast<int>(b.basis.size()) / nt;
  DenseMatrix<F> r(A.field, ns, nt);
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < nt; ++j) r.at(i, j) = (*sol)[i * nt + j];
  return r;
}

// Opposite decomposition ((A^+)^op, T^op, (A^-)^op) over A^op, with the dual
// irreducibles in matching label order.
template <class F>
TriangularDecomp<F> opposite_triangular(const TriangularDecomp<F>& td,
                                        std::shared_ptr<const GradedAlgebra<F>> op_alg) {
  std::vector<TModule<F>> duals;
  for (const auto& lam : td.irr_t) {
    TModule<F> d;
    d.dim = lam.dim;
    d.deg = lam.deg;
    for (const auto& m : lam.act) d.act.push_back(m.transpose());
    duals.push_back(std::move(d));
  }
  std::vector<std::string> labels;
  for (int s = 0; s < td.num_labels(); ++s) labels.push_back(td.label(s) + "*");
  return build_triangular<F>(std::move(op_alg), td.ap, td.tt, td.am, std::move(duals),
                             td.semisimple_t, std::move(labels));
}

// ---------------------------------------------------------------------------
// Induction: the proper standard module A (x)_{B^+} Inf(M)
// ---------------------------------------------------------------------------

template <class F>
GradedModule<F> induce_from_borel(const TriangularDecomp<F>& td, const TModule<F>& M) {
  if (td.verma_table.empty()) throw input_error("induction needs a verified decomposition");
  const auto& A = *td.alg;
  int na = static_cast<int>(td.am.size());
  GradedModule<F> V;
  V.alg = td.alg;
  V.dim = na * M.dim;
  V.deg.resize(V.dim);
  for (int i = 0; i < na; ++i)
    for (int v = 0; v < M.dim; ++v) V.deg[i * M.dim + v] = td.am_deg[i] + M.deg[v];
  V.act.reserve(A.n);
  for (int k = 0; k < A.n; ++k) {
    DenseMatrix<F> m(A.field, V.dim, V.dim);
    for (int i = 0; i < na; ++i)
      for (const auto& [i2, j2, c] : td.verma_table[k][i]) {
        const DenseMatrix<F>& t_act = M.act[j2];
        for (int r = 0; r < M.dim; ++r)
          for (int s = 0; s < M.dim; ++s)
            if (!t_act.at(r, s).is_zero()) m.at(i2 * M.dim + r, i * M.dim + s) += c * t_act.at(r, s);
      }
    V.act.push_back(std::move(m));
  }
  return V;
}

// ---------------------------------------------------------------------------
// Graded characters against irr_T
// ---------------------------------------------------------------------------

using Character = std::vector<LaurentPoly>;  // one Laurent polynomial per label

inline bool character_equal(const Character& a, const Character& b) { return a == b; }

inline Character character_shift(const Character& c, int n) {
  Character r;
  r.reserve(c.size());
  for (const auto& p : c) r.push_back(p.shifted(n));
  return r;
}

// Multiplicity of each irr_T member in a T-module slice, by intertwiner solve
// (equals the composition multiplicity for semisimple T; for general T the
// caller passes projective covers instead of the simples).
template <class F>
std::vector<int> t_multiplicities(const TriangularDecomp<F>& td,
                                  const std::vector<DenseMatrix<F>>& slice_act, int slice_dim,
                                  const std::vector<TModule<F>>& probes) {
  const F& field = td.alg->field;
  std::vector<int> mult;
  for (const auto& lam : probes) {
    // X: slice_dim x lam.dim with slice_act[j] X = X lam.act[j]
    std::vector<Vec<F>> rows;
    for (std::size_t j = 0; j < td.tt.size(); ++j)
      for (int r = 0; r < slice_dim; ++r)
        for (int c = 0; c < lam.dim; ++c) {
          Vec<F> row(static_cast<std::size_t>(slice_dim) * lam.dim, field.zero());
          bool nz = false;
          for (int m = 0; m < slice_dim; ++m)
            if (!slice_act[j].at(r, m).is_zero()) { row[m * lam.dim + c] += slice_act[j].at(r, m); nz = true; }
          for (int m = 0; m < lam.dim; ++m)
            if (!lam.act[j].at(m, c).is_zero()) { row[r * lam.dim + m] -= lam.act[j].at(m, c); nz = true; }
          if (nz) rows.push_back(std::move(row));
        }
    DenseMatrix<F> sys(field, static_cast<int>(rows.size()),
                       static_cast<int>(static_cast<std::size_t>(slice_dim) * lam.dim));
    for (std::size_t i = 0; i < rows.size(); ++i) sys.set_row(static_cast<int>(i), rows[i]);
    mult.push_back(slice_dim == 0 ? 0 : static_cast<int>(kernel_basis(sys).size()));
  }
  return mult;
}

// chi(M): for each degree slice, T-module multiplicities as Laurent coefficients.
template <class F>
Character graded_character(const TriangularDecomp<F>& td, const GradedModule<F>& M,
                           const std::vector<TModule<F>>* probes = nullptr) {
  const F& field = td.alg->field;
  std::vector<DenseMatrix<F>> t_act;
  for (const auto& t : td.tt) t_act.push_back(M.act_of(t));
  Character chi(td.irr_t.size());
  for (int d : M.support()) {
    std::vector<int> idx;
    for (int i = 0; i < M.dim; ++i)
      if (M.deg[i] == d) idx.push_back(i);
    std::vector<DenseMatrix<F>> slice;
    for (const auto& m : t_act) {
      DenseMatrix<F> s(field, static_cast<int>(idx.size()), static_cast<int>(idx.size()));
      for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) s.at(static_cast<int>(r), static_cast<int>(c)) = m.at(idx[r], idx[c]);
      slice.push_back(std::move(s));
    }
    std::vector<int> mult =
        t_multiplicities(td, slice, static_cast<int>(idx.size()), probes ? *probes : td.irr_t);
    long covered = 0;
    for (std::size_t s = 0; s < mult.size(); ++s) {
      chi[s].add_term(d, mult[s]);
      covered += static_cast<long>(mult[s]) * td.irr_t[s].dim;
    }
    if (covered != static_cast<long>(idx.size()))
      throw property_error("NonIntegralMultiplicity: T-multiplicities do not exhaust a slice");
  }
  return chi;
}

template <class F>
LaurentPoly graded_dimension(const GradedModule<F>& M) {
  LaurentPoly p;
  for (int d : M.deg) p.add_term(d, 1);
  return p;
}

}  // namespace trideco
