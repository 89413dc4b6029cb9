// Graded modules over a graded algebra and their linear algebra.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trideco/algebra.hpp"

namespace trideco {

// Small unital generating set of the basis, used to shrink intertwiner systems.
template <class F>
std::vector<int> generating_indices(const GradedAlgebra<F>& A) {
  std::vector<int> gens;
  Subspace<F> cur = Subspace<F>::span(A.field, A.n, {A.unit});
  std::vector<Vec<F>> members = {A.unit};  // spanning vectors kept in raw form
  for (int i = 0; i < A.n && cur.dim() < A.n; ++i) {
    Vec<F> e = unit_vec(A.field, A.n, i);
    if (cur.contains(e)) continue;
    gens.push_back(i);
    std::vector<Vec<F>> fresh = {e};
    cur = cur.sum(Subspace<F>::span(A.field, A.n, {e}));
    members.push_back(std::move(e));
    while (!fresh.empty() && cur.dim() < A.n) {
      std::vector<Vec<F>> added;
      std::size_t known = members.size();
      for (const auto& v : fresh)
        for (std::size_t t = 0; t < known; ++t)
          for (Vec<F> w : {A.multiply(members[t], v), A.multiply(v, members[t])}) {
            if (cur.contains(w)) continue;
            cur = cur.sum(Subspace<F>::span(A.field, A.n, {w}));
            added.push_back(w);
            members.push_back(std::move(w));
          }
      fresh = std::move(added);
    }
  }
  return gens;
}

template <class F>
struct GradedModule {
  using Elem = typename F::Elem;

  std::shared_ptr<const GradedAlgebra<F>> alg;
  int dim = 0;
  std::vector<int> deg;                // degree per basis vector
  std::vector<DenseMatrix<F>> act;     // one matrix per algebra basis element

  const F& field() const { return alg->field; }

  DenseMatrix<F> act_of(const Vec<F>& a) const {
    DenseMatrix<F> m(field(), dim, dim);
    for (int k = 0; k < alg->n; ++k)
      if (!a[k].is_zero()) m = m + act[k].scaled(a[k]);
    return m;
  }

  std::vector<int> support() const {
    std::vector<int> s = deg;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }
  int max_degree() const {
    int m = deg.empty() ? 0 : deg[0];
    for (int d : deg) m = std::max(m, d);
    return m;
  }
  std::map<int, int> graded_dimension() const {
    std::map<int, int> g;
    for (int d : deg) g[d]++;
    return g;
  }

  GradedModule shifted(int n) const {
    GradedModule r = *this;
    for (auto& d : r.deg) d += n;
    return r;
  }
};

template <class F>
GradedModule<F> regular_module(std::shared_ptr<const GradedAlgebra<F>> alg) {
  GradedModule<F> M;
  M.alg = alg;
  M.dim = alg->n;
  M.deg = alg->deg;
  M.act.reserve(alg->n);
  for (int k = 0; k < alg->n; ++k) {
    DenseMatrix<F> m(alg->field, alg->n, alg->n);
    for (int j = 0; j < alg->n; ++j)
      for (const auto& [i, c] : alg->sc[k][j]) m.at(i, j) += c;
    M.act.push_back(std::move(m));
  }
  return M;
}

template <class F>
CheckReport verify_module(const GradedModule<F>& M) {
  CheckReport rep;
  const auto& A = *M.alg;
  if (M.act_of(A.unit) != DenseMatrix<F>::identity(A.field, M.dim))
    rep.fail("unit does not act as identity");
  for (int k = 0; k < A.n; ++k)
    for (int r = 0; r < M.dim; ++r)
      for (int c = 0; c < M.dim; ++c)
        if (!M.act[k].at(r, c).is_zero() && M.deg[r] != M.deg[c] + A.deg[k]) {
          rep.fail("action of " + A.basis_name(k) + " breaks the grading at (" +
                   std::to_string(r) + "," + std::to_string(c) + ")");
        }
  for (int i = 0; i < A.n && rep.failures.size() < 64; ++i)
    for (int j = 0; j < A.n; ++j) {
      DenseMatrix<F> lhs = M.act[i] * M.act[j];
      DenseMatrix<F> rhs(A.field, M.dim, M.dim);
      for (const auto& [k, c] : A.sc[i][j]) rhs = rhs + M.act[k].scaled(c);
      if (lhs != rhs) {
        rep.fail("structure constants fail on pair (" + A.basis_name(i) + "," +
                 A.basis_name(j) + ")");
        break;
      }
    }
  return rep;
}

template <class F>
GradedModule<F> direct_sum(const GradedModule<F>& M, const GradedModule<F>& N) {
  GradedModule<F> S;
  S.alg = M.alg;
  S.dim = M.dim + N.dim;
  S.deg = M.deg;
  S.deg.insert(S.deg.end(), N.deg.begin(), N.deg.end());
  for (int k = 0; k < M.alg->n; ++k) {
    DenseMatrix<F> m(M.field(), S.dim, S.dim);
    for (int i = 0; i < M.dim; ++i)
      for (int j = 0; j < M.dim; ++j) m.at(i, j) = M.act[k].at(i, j);
    for (int i = 0; i < N.dim; ++i)
      for (int j = 0; j < N.dim; ++j) m.at(M.dim + i, M.dim + j) = N.act[k].at(i, j);
    S.act.push_back(std::move(m));
  }
  return S;
}

// Submodule on the (graded) subspace W; returns the module plus the inclusion
// matrix mapping its basis into M's coordinates.
template <class F>
std::pair<GradedModule<F>, DenseMatrix<F>> submodule(const GradedModule<F>& M,
                                                     const Subspace<F>& W) {
  const F& field = M.field();
  GradedModule<F> S;
  S.alg = M.alg;
  S.dim = W.dim();
  S.deg.resize(S.dim);
  for (int r = 0; r < W.dim(); ++r) S.deg[r] = M.deg[W.pivots()[r]];
  DenseMatrix<F> incl(field, M.dim, S.dim);
  for (int j = 0; j < S.dim; ++j)
    for (int i = 0; i < M.dim; ++i) incl.at(i, j) = W.basis()[j][i];
  for (int k = 0; k < M.alg->n; ++k) {
    DenseMatrix<F> m(field, S.dim, S.dim);
    for (int j = 0; j < S.dim; ++j) {
      auto [coords, inside] = W.reduce(M.act[k].apply(W.basis()[j]));
      if (!inside) throw internal_error("submodule: subspace is not action-stable");
      for (int i = 0; i < S.dim; ++i) m.at(i, j) = coords[i];
    }
    S.act.push_back(std::move(m));
  }
  return {std::move(S), std::move(incl)};
}

// Quotient M / W with basis the ambient coordinates away from W's pivots;
// returns the module plus the projection matrix.
template <class F>
std::pair<GradedModule<F>, DenseMatrix<F>> quotient_module(const GradedModule<F>& M,
                                                           const Subspace<F>& W) {
  const F& field = M.field();
  std::vector<bool> is_pivot(M.dim, false);
  for (int p : W.pivots()) is_pivot[p] = true;
  std::vector<int> keep;
  for (int i = 0; i < M.dim; ++i)
    if (!is_pivot[i]) keep.push_back(i);
  auto project = [&](Vec<F> v) {
    for (int r = 0; r < W.dim(); ++r) {
      const auto& c = v[W.pivots()[r]];
      if (c.is_zero()) continue;
      auto f = c;
      for (int j = 0; j < M.dim; ++j) v[j] -= f * W.basis()[r][j];
    }
    Vec<F> out(keep.size(), field.zero());
    for (std::size_t t = 0; t < keep.size(); ++t) out[t] = v[keep[t]];
    return out;
  };
  GradedModule<F> Q;
  Q.alg = M.alg;
  Q.dim = static_cast<int>(keep.size());
  Q.deg.resize(Q.dim);
  for (std::size_t t = 0; t < keep.size(); ++t) Q.deg[t] = M.deg[keep[t]];
  DenseMatrix<F> proj(field, Q.dim, M.dim);
  for (int j = 0; j < M.dim; ++j) {
    Vec<F> p = project(unit_vec(field, M.dim, j));
    for (int i = 0; i < Q.dim; ++i) proj.at(i, j) = p[i];
  }
  for (int k = 0; k < M.alg->n; ++k) {
    DenseMatrix<F> m(field, Q.dim, Q.dim);
    for (int j = 0; j < Q.dim; ++j) {
      Vec<F> img = project(M.act[k].apply(unit_vec(field, M.dim, keep[j])));
      for (int i = 0; i < Q.dim; ++i) m.at(i, j) = img[i];
    }
    Q.act.push_back(std::move(m));
  }
  return {std::move(Q), std::move(proj)};
}

template <class F>
struct ModuleMap {
  const GradedModule<F>* source = nullptr;
  const GradedModule<F>* target = nullptr;
  int shift = 0;                // a map M -> N[shift]
  DenseMatrix<F> matrix;        // target.dim x source.dim
};

// Basis of Hom_{G(A)}(M, N[shift]); such a map sends M_j into N_{j-shift}.
// Intertwining is checked on a generating set of the algebra.
template <class F>
std::vector<DenseMatrix<F>> hom_space(const GradedModule<F>& M, const GradedModule<F>& N,
                                      int shift, const std::vector<int>& gens) {
  const F& field = M.field();
  std::vector<std::pair<int, int>> slots;
  std::vector<std::vector<int>> slot_at(N.dim, std::vector<int>(M.dim, -1));
  for (int r = 0; r < N.dim; ++r)
    for (int c = 0; c < M.dim; ++c)
      if (N.deg[r] == M.deg[c] - shift) {
        slot_at[r][c] = static_cast<int>(slots.size());
        slots.emplace_back(r, c);
      }
  if (slots.empty()) return {};
  std::vector<Vec<F>> eq_rows;
  for (int g : gens) {
    const DenseMatrix<F>& a = M.act[g];
    const DenseMatrix<F>& b = N.act[g];
    // (X a - b X)(r, c) = 0
    for (int r = 0; r < N.dim; ++r)
      for (int c = 0; c < M.dim; ++c) {
        Vec<F> row(slots.size(), field.zero());
        bool nonzero = false;
        for (int m = 0; m < M.dim; ++m) {
          int s = slot_at[r][m];
          if (s >= 0 && !a.at(m, c).is_zero()) { row[s] += a.at(m, c); nonzero = true; }
        }
        for (int m = 0; m < N.dim; ++m) {
          int s = slot_at[m][c];
          if (s >= 0 && !b.at(r, m).is_zero()) { row[s] -= b.at(r, m); nonzero = true; }
        }
        if (nonzero) eq_rows.push_back(std::move(row));
      }
  }
  DenseMatrix<F> sys(field, static_cast<int>(eq_rows.size()), static_cast<int>(slots.size()));
  for (std::size_t i = 0; i < eq_rows.size(); ++i) sys.set_row(static_cast<int>(i), eq_rows[i]);
  std::vector<DenseMatrix<F>> basis;
  for (const auto& k : kernel_basis(sys)) {
    DenseMatrix<F> X(field, N.dim, M.dim);
    for (std::size_t s = 0; s < slots.size(); ++s) X.at(slots[s].first, slots[s].second) = k[s];
    basis.push_back(std::move(X));
  }
  return basis;
}

template <class F>
int hom_dim(const GradedModule<F>& M, const GradedModule<F>& N, int shift,
            const std::vector<int>& gens) {
  return static_cast<int>(hom_space(M, N, shift, gens).size());
}

// Rad M = Rad(A).M as a subspace of M.
template <class F>
Subspace<F> radical_subspace(const GradedModule<F>& M, const std::vector<Vec<F>>& rad_basis) {
  std::vector<Vec<F>> vecs;
  for (const auto& r : rad_basis) {
    DenseMatrix<F> m = M.act_of(r);
    for (int j = 0; j < M.dim; ++j) vecs.push_back(m.col(j));
  }
  return Subspace<F>::span(M.field(), M.dim, vecs);
}

// Soc M = {m : Rad(A).m = 0}.
template <class F>
Subspace<F> socle_subspace(const GradedModule<F>& M, const std::vector<Vec<F>>& rad_basis) {
  const F& field = M.field();
  if (rad_basis.empty()) return Subspace<F>::full(field, M.dim);
  DenseMatrix<F> stacked(field, static_cast<int>(rad_basis.size()) * M.dim, M.dim);
  int row = 0;
  for (const auto& r : rad_basis) {
    DenseMatrix<F> m = M.act_of(r);
    for (int i = 0; i < M.dim; ++i, ++row)
      for (int j = 0; j < M.dim; ++j) stacked.at(row, j) = m.at(i, j);
  }
  return Subspace<F>::span(field, M.dim, kernel_basis(stacked));
}

// Largest submodule of M contained in the subspace W: the fixpoint of
// W <- {w in W : g.w in W for all generators g}.
template <class F>
Subspace<F> largest_submodule_inside(const GradedModule<F>& M, Subspace<F> W,
                                     const std::vector<int>& gens) {
  const F& field = M.field();
  for (;;) {
    if (W.dim() == 0) return W;
    // Solve for combinations x with g.(sum x_j w_j) in W for all generators g.
    std::vector<Vec<F>> eq;
    for (int g : gens) {
      std::vector<Vec<F>> residues;
      for (int j = 0; j < W.dim(); ++j) {
        Vec<F> img = M.act[g].apply(W.basis()[j]);
        // residue after reducing modulo W
        for (int r = 0; r < W.dim(); ++r) {
          const auto& c = img[W.pivots()[r]];
          if (c.is_zero()) continue;
          auto f = c;
          for (int t = 0; t < M.dim; ++t) img[t] -= f * W.basis()[r][t];
        }
        residues.push_back(std::move(img));
      }
      for (int coord = 0; coord < M.dim; ++coord) {
        Vec<F> row(W.dim(), field.zero());
        bool nonzero = false;
        for (int j = 0; j < W.dim(); ++j)
          if (!residues[j][coord].is_zero()) { row[j] = residues[j][coord]; nonzero = true; }
        if (nonzero) eq.push_back(std::move(row));
      }
    }
    if (eq.empty()) return W;  // already a submodule
    DenseMatrix<F> m(field, static_cast<int>(eq.size()), W.dim());
    for (std::size_t i = 0; i < eq.size(); ++i) m.set_row(static_cast<int>(i), eq[i]);
    auto ker = kernel_basis(m);
    std::vector<Vec<F>> new_basis;
    for (const auto& k : ker) {
      Vec<F> v = zero_vec(field, M.dim);
      for (int j = 0; j < W.dim(); ++j) vec_axpy(v, k[j], W.basis()[j]);
      new_basis.push_back(std::move(v));
    }
    Subspace<F> next = Subspace<F>::span(field, M.dim, new_basis);
    if (next.dim() == W.dim()) return W;
    W = std::move(next);
  }
}

// Standard duality: left module over A^op on the dual basis, same degrees.
template <class F>
GradedModule<F> dual_module(const GradedModule<F>& M,
                            std::shared_ptr<const GradedAlgebra<F>> op_alg) {
  GradedModule<F> D;
  D.alg = std::move(op_alg);
  D.dim = M.dim;
  D.deg = M.deg;
  D.act.reserve(M.act.size());
  for (const auto& m : M.act) D.act.push_back(m.transpose());
  return D;
}

// Twist by a graded automorphism sigma of A: a * m := sigma(a) m.
template <class F>
GradedModule<F> twist_module(const GradedModule<F>& M, const DenseMatrix<F>& sigma) {
  GradedModule<F> T = M;
  for (int j = 0; j < M.alg->n; ++j) {
    DenseMatrix<F> m(M.field(), M.dim, M.dim);
    for (int i = 0; i < M.alg->n; ++i)
      if (!sigma.at(i, j).is_zero()) m = m + M.act[i].scaled(sigma.at(i, j));
    T.act[j] = std::move(m);
  }
  return T;
}

// D(M) = twist of the dual by an anti-automorphism tau of A; an A-module again.
template <class F>
GradedModule<F> duality_twist(const GradedModule<F>& M, const DenseMatrix<F>& tau) {
  GradedModule<F> D;
  D.alg = M.alg;
  D.dim = M.dim;
  D.deg = M.deg;
  D.act.reserve(M.alg->n);
  for (int j = 0; j < M.alg->n; ++j) {
    DenseMatrix<F> m(M.field(), M.dim, M.dim);
    for (int i = 0; i < M.alg->n; ++i)
      if (!tau.at(i, j).is_zero()) m = m + M.act[i].transpose().scaled(tau.at(i, j));
    D.act.push_back(std::move(m));
  }
  return D;
}

// Searches hom_space(M, N, shift) for an invertible element. Exact Yes; a miss
// is inconclusive and the caller decides how to interpret it.
template <class F>
std::optional<DenseMatrix<F>> find_invertible_hom(const GradedModule<F>& M,
                                                  const GradedModule<F>& N, int shift,
                                                  const std::vector<int>& gens, Rng& rng,
                                                  int tries) {
  if (M.dim != N.dim) return std::nullopt;
  auto basis = hom_space(M, N, shift, gens);
  if (basis.empty()) return std::nullopt;
  const F& field = M.field();
  for (const auto& X : basis)
    if (rank(X) == M.dim) return X;
  for (int t = 0; t < tries; ++t) {
    DenseMatrix<F> X(field, N.dim, M.dim);
    for (const auto& B : basis) X = X + B.scaled(field.random(rng));
    if (rank(X) == M.dim) return X;
  }
  return std::nullopt;
}

enum class HomSearch { kFound, kNone, kUnknown };

// Like find_invertible_hom, but with bounded exact refutation: exhaustive
// enumeration over small prime fields, and a determinant grid over infinite
// fields (det of a combination has per-variable degree <= dim, so vanishing on
// a (dim+1)^k product grid forces it to vanish identically).
template <class F>
std::pair<HomSearch, std::optional<DenseMatrix<F>>> find_invertible_hom_or_refute(
    const GradedModule<F>& M, const GradedModule<F>& N, int shift, const std::vector<int>& gens,
    Rng& rng, int tries) {
  if (M.dim != N.dim) return {HomSearch::kNone, std::nullopt};
  auto basis = hom_space(M, N, shift, gens);
  if (basis.empty()) return {M.dim == 0 ? HomSearch::kFound : HomSearch::kNone,
                             M.dim == 0 ? std::optional<DenseMatrix<F>>(DenseMatrix<F>(M.field(), 0, 0))
                                        : std::nullopt};
  const F& field = M.field();
  std::size_t k = basis.size();
  auto combo = [&](const Vec<F>& coeffs) {
    DenseMatrix<F> X(field, N.dim, M.dim);
    for (std::size_t b = 0; b < k; ++b) X = X + basis[b].scaled(coeffs[b]);
    return X;
  };
  auto grid_refute = [&](const std::vector<typename F::Elem>& points) -> std::pair<HomSearch, std::optional<DenseMatrix<F>>> {
    std::vector<std::size_t> odo(k, 0);
    for (;;) {
      Vec<F> coeffs(k, field.zero());
      for (std::size_t b = 0; b < k; ++b) coeffs[b] = points[odo[b]];
      DenseMatrix<F> X = combo(coeffs);
      if (rank(X) == M.dim) return {HomSearch::kFound, X};
      std::size_t pos = 0;
      while (pos < k && ++odo[pos] == points.size()) odo[pos++] = 0;
      if (pos == k) break;
    }
    return {HomSearch::kNone, std::nullopt};
  };
  if constexpr (F::finite) {
    double total = 1;
    for (std::size_t b = 0; b < k; ++b) total *= static_cast<double>(field.p);
    if (total <= 65536.0) return grid_refute(field.all_elements());
  } else {
    double total = 1;
    for (std::size_t b = 0; b < k; ++b) total *= static_cast<double>(M.dim + 1);
    if (total <= 65536.0) {
      std::vector<typename F::Elem> pts;
      for (int v = 0; v <= M.dim; ++v) pts.push_back(field.from_int(v));
      return grid_refute(pts);
    }
  }
  if (auto X = find_invertible_hom(M, N, shift, gens, rng, tries))
    return {HomSearch::kFound, *X};
  return {HomSearch::kUnknown, std::nullopt};
}

}  // namespace trideco
