// Finite-dimensional graded algebras by structure constants.
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "trideco/linalg.hpp"

namespace trideco {

template <class F>
using SparseVec = std::vector<std::pair<int, typename F::Elem>>;

template <class F>
Vec<F> sparse_to_dense(const F& field, int n, const SparseVec<F>& s) {
  Vec<F> v(n, field.zero());
  for (const auto& [i, c] : s) v[i] += c;
  return v;
}

template <class F>
SparseVec<F> dense_to_sparse(const Vec<F>& v) {
  SparseVec<F> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

struct CheckReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void fail(const std::string& msg) {
    pass = false;
    if (failures.size() < 64) failures.push_back(msg);
  }
};

template <class F>
struct GradedAlgebra {
  using Elem = typename F::Elem;

  F field;
  int n = 0;
  std::vector<int> deg;                       // degree per basis index
  std::vector<std::vector<SparseVec<F>>> sc;  // sc[i][j] = basis_i * basis_j
  Vec<F> unit;                                // coordinates of 1
  std::vector<std::string> basis_names;       // optional, for reports

  const SparseVec<F>& product(int i, int j) const { return sc[i][j]; }

  std::string basis_name(int i) const {
    return basis_names.empty() ? "b" + std::to_string(i) : basis_names[i];
  }

  Vec<F> multiply(const Vec<F>& a, const Vec<F>& b) const {
    Vec<F> r(n, field.zero());
    for (int i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[j].is_zero()) continue;
        Elem f = a[i] * b[j];
        for (const auto& [k, c] : sc[i][j]) r[k] += f * c;
      }
    }
    return r;
  }

  // Matrix of x -> a*x in the algebra basis.
  DenseMatrix<F> left_mult_matrix(const Vec<F>& a) const {
    DenseMatrix<F> m(field, n, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& [k, c] : sc[i][j]) m.at(k, j) += a[i] * c;
      }
    }
    return m;
  }

  DenseMatrix<F> right_mult_matrix(const Vec<F>& a) const {
    DenseMatrix<F> m(field, n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (a[j].is_zero()) continue;
        for (const auto& [k, c] : sc[i][j]) m.at(k, i) += a[j] * c;
      }
    }
    return m;
  }

  std::vector<int> degree_support() const {
    std::vector<int> degs = deg;
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    return degs;
  }

  Subspace<F> homogeneous_component(int d) const {
    std::vector<Vec<F>> vecs;
    for (int i = 0; i < n; ++i)
      if (deg[i] == d) vecs.push_back(unit_vec(field, n, i));
    return Subspace<F>::span(field, n, vecs);
  }
};

// Checks associativity, the two-sided unit, and grading compatibility.
template <class F>
CheckReport verify_algebra(const GradedAlgebra<F>& A) {
  CheckReport rep;
  if (static_cast<int>(A.deg.size()) != A.n || static_cast<int>(A.sc.size()) != A.n ||
      static_cast<int>(A.unit.size()) != A.n) {
    rep.fail("dimension fields are inconsistent");
    return rep;
  }
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j)
      for (const auto& [k, c] : A.sc[i][j])
        if (!c.is_zero() && A.deg[k] != A.deg[i] + A.deg[j]) {
          rep.fail("grading: " + A.basis_name(i) + "*" + A.basis_name(j) + " hits degree " +
                   std::to_string(A.deg[k]) + " != " + std::to_string(A.deg[i] + A.deg[j]));
        }
  for (int i = 0; i < A.n; ++i) {
    Vec<F> b = unit_vec(A.field, A.n, i);
    if (A.multiply(A.unit, b) != b) rep.fail("unit fails on the left of " + A.basis_name(i));
    if (A.multiply(b, A.unit) != b) rep.fail("unit fails on the right of " + A.basis_name(i));
  }
  // associativity on all triples, accumulated through the sparse tables
  Vec<F> scratch = zero_vec(A.field, A.n);
  std::vector<int> touched;
  auto accumulate = [&](const SparseVec<F>& outer, auto&& inner_row, int sign) {
    for (const auto& [l, c] : outer)
      for (const auto& [k2, c2] : inner_row(l)) {
        if (scratch[k2].is_zero()) touched.push_back(k2);
        if (sign > 0) scratch[k2] += c * c2;
        else scratch[k2] -= c * c2;
      }
  };
  for (int i = 0; i < A.n && rep.failures.size() < 64; ++i) {
    for (int j = 0; j < A.n; ++j) {
      for (int k = 0; k < A.n; ++k) {
        accumulate(A.sc[i][j], [&](int l) -> const SparseVec<F>& { return A.sc[l][k]; }, +1);
        accumulate(A.sc[j][k], [&](int m) -> const SparseVec<F>& { return A.sc[i][m]; }, -1);
        bool ok = true;
        for (int t : touched) {
          if (!scratch[t].is_zero()) ok = false;
          scratch[t] = A.field.zero();
        }
        touched.clear();
        if (!ok) {
          rep.fail("associativity fails on triple (" + A.basis_name(i) + "," + A.basis_name(j) +
                   "," + A.basis_name(k) + ")");
          break;
        }
      }
    }
  }
  return rep;
}

// Same basis, reversed grading, reversed products.
template <class F>
GradedAlgebra<F> opposite_algebra(const GradedAlgebra<F>& A) {
  GradedAlgebra<F> op;
  op.field = A.field;
  op.n = A.n;
  op.deg.resize(A.n);
  for (int i = 0; i < A.n; ++i) op.deg[i] = -A.deg[i];
  op.sc.assign(A.n, std::vector<SparseVec<F>>(A.n));
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) op.sc[i][j] = A.sc[j][i];
  op.unit = A.unit;
  op.basis_names = A.basis_names;
  return op;
}

// Smallest unital subspace containing the generators and closed under products.
template <class F>
Subspace<F> subalgebra_closure(const GradedAlgebra<F>& A, const std::vector<Vec<F>>& generators) {
  std::vector<Vec<F>> span_vecs = {A.unit};
  span_vecs.insert(span_vecs.end(), generators.begin(), generators.end());
  Subspace<F> cur = Subspace<F>::span(A.field, A.n, span_vecs);
  for (;;) {
    std::vector<Vec<F>> next = cur.basis();
    for (const auto& u : cur.basis())
      for (const auto& v : cur.basis()) next.push_back(A.multiply(u, v));
    Subspace<F> grown = Subspace<F>::span(A.field, A.n, next);
    if (grown.dim() == cur.dim()) return cur;
    cur = std::move(grown);
  }
}

// Two-sided ideal generated by the given elements.
template <class F>
Subspace<F> two_sided_ideal(const GradedAlgebra<F>& A, const std::vector<Vec<F>>& generators) {
  Subspace<F> cur = Subspace<F>::span(A.field, A.n, generators);
  for (;;) {
    std::vector<Vec<F>> next = cur.basis();
    for (const auto& v : cur.basis()) {
      for (int i = 0; i < A.n; ++i) {
        Vec<F> b = unit_vec(A.field, A.n, i);
        next.push_back(A.multiply(b, v));
        next.push_back(A.multiply(v, b));
      }
    }
    Subspace<F> grown = Subspace<F>::span(A.field, A.n, next);
    if (grown.dim() == cur.dim()) return cur;
    cur = std::move(grown);
  }
}

// The subspace (with its stored basis order) as an algebra of its own.
// The basis must be multiplicatively closed and contain the unit.
template <class F>
GradedAlgebra<F> subalgebra_on_basis(const GradedAlgebra<F>& A, const std::vector<Vec<F>>& basis) {
  Subspace<F> sp = Subspace<F>::span(A.field, A.n, basis);
  if (sp.dim() != static_cast<int>(basis.size()))
    throw input_error("subalgebra basis is linearly dependent");
  DenseMatrix<F> bm(A.field, A.n, sp.dim());
  for (int j = 0; j < sp.dim(); ++j)
    for (int i = 0; i < A.n; ++i) bm.at(i, j) = basis[j][i];
  auto coords = [&](const Vec<F>& v) {
    auto sol = solve_linear(bm, v);
    if (!sol) throw input_error("subalgebra basis is not multiplicatively closed");
    return *sol;
  };
  GradedAlgebra<F> S;
  S.field = A.field;
  S.n = sp.dim();
  S.deg.resize(S.n);
  for (int j = 0; j < S.n; ++j) {
    int d = 0;
    bool seen = false;
    for (int i = 0; i < A.n; ++i) {
      if (basis[j][i].is_zero()) continue;
      if (!seen) { d = A.deg[i]; seen = true; }
      else if (A.deg[i] != d) throw input_error("subalgebra basis vector is not homogeneous");
    }
    S.deg[j] = d;
  }
  S.sc.assign(S.n, std::vector<SparseVec<F>>(S.n));
  for (int i = 0; i < S.n; ++i)
    for (int j = 0; j < S.n; ++j)
      S.sc[i][j] = dense_to_sparse<F>(coords(A.multiply(basis[i], basis[j])));
  S.unit = coords(A.unit);
  return S;
}

// Quotient by a two-sided graded ideal; basis = ambient coordinates missing
// from the ideal's pivot set.
template <class F>
GradedAlgebra<F> quotient_algebra(const GradedAlgebra<F>& A, const Subspace<F>& ideal) {
  std::vector<bool> is_pivot(A.n, false);
  for (int p : ideal.pivots()) is_pivot[p] = true;
  std::vector<int> keep;
  for (int i = 0; i < A.n; ++i)
    if (!is_pivot[i]) keep.push_back(i);
  auto coords_mod = [&](Vec<F> v) {
    // reduce v modulo the ideal, then read off the kept coordinates
    for (int r = 0; r < ideal.dim(); ++r) {
      const auto& row = ideal.basis()[r];
      const auto& c = v[ideal.pivots()[r]];
      if (c.is_zero()) continue;
      auto f = c;
      for (int j = 0; j < A.n; ++j) v[j] -= f * row[j];
    }
    Vec<F> out(keep.size(), A.field.zero());
    for (std::size_t t = 0; t < keep.size(); ++t) out[t] = v[keep[t]];
    return out;
  };
  GradedAlgebra<F> Q;
  Q.field = A.field;
  Q.n = static_cast<int>(keep.size());
  Q.deg.resize(Q.n);
  for (std::size_t t = 0; t < keep.size(); ++t) Q.deg[t] = A.deg[keep[t]];
  Q.sc.assign(Q.n, std::vector<SparseVec<F>>(Q.n));
  for (int i = 0; i < Q.n; ++i)
    for (int j = 0; j < Q.n; ++j) {
      Vec<F> prod = sparse_to_dense(A.field, A.n, A.sc[keep[i]][keep[j]]);
      Q.sc[i][j] = dense_to_sparse<F>(coords_mod(std::move(prod)));
    }
  Q.unit = coords_mod(A.unit);
  return Q;
}

}  // namespace trideco
