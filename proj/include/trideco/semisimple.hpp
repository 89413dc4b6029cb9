// Radical, idempotent lifting, center/blocks, and Frobenius certificates.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trideco/modules.hpp"

namespace trideco {

// Module on the smallest action-stable subspace containing `vectors`, acting
// by algebra multiplication in ambient coordinates (left ideals and friends).
template <class F>
GradedModule<F> module_on_left_invariant_span(std::shared_ptr<const GradedAlgebra<F>> alg,
                                              const std::vector<Vec<F>>& vectors,
                                              const std::vector<int>& gens,
                                              std::vector<Vec<F>>* ambient_basis = nullptr) {
  const auto& A = *alg;
  Subspace<F> sp = Subspace<F>::span(A.field, A.n, vectors);
  for (;;) {  // close under the left action, defensive for non-stable input
    std::vector<Vec<F>> next = sp.basis();
    bool grew = false;
    for (const auto& v : sp.basis())
      for (int g : gens) {
        Vec<F> w = A.multiply(unit_vec(A.field, A.n, g), v);
        if (!sp.contains(w)) { next.push_back(std::move(w)); grew = true; }
      }
    if (!grew) break;
    sp = Subspace<F>::span(A.field, A.n, next);
  }
  if (ambient_basis) *ambient_basis = sp.basis();
  GradedModule<F> M;
  M.alg = alg;
  M.dim = sp.dim();
  M.deg.resize(M.dim);
  for (int r = 0; r < M.dim; ++r) M.deg[r] = A.deg[sp.pivots()[r]];
  for (int k = 0; k < A.n; ++k) {
    DenseMatrix<F> m(A.field, M.dim, M.dim);
    Vec<F> bk = unit_vec(A.field, A.n, k);
    for (int j = 0; j < M.dim; ++j) {
      auto [coords, inside] = sp.reduce(A.multiply(bk, sp.basis()[j]));
      if (!inside) throw internal_error("left-invariant span failed to close");
      for (int i = 0; i < M.dim; ++i) m.at(i, j) = coords[i];
    }
    M.act.push_back(std::move(m));
  }
  return M;
}

// Jacobson radical as the joint annihilator of a complete list of simples.
template <class F>
Subspace<F> jacobson_radical(const GradedAlgebra<F>& A,
                             const std::vector<GradedModule<F>>& simples) {
  long total_rows = 0;
  for (const auto& L : simples) total_rows += static_cast<long>(L.dim) * L.dim;
  DenseMatrix<F> sys(A.field, static_cast<int>(total_rows), A.n);
  int row = 0;
  for (const auto& L : simples)
    for (int i = 0; i < L.dim; ++i)
      for (int j = 0; j < L.dim; ++j, ++row)
        for (int k = 0; k < A.n; ++k) sys.at(row, k) = L.act[k].at(i, j);
  Subspace<F> rad = Subspace<F>::span(A.field, A.n, kernel_basis(sys));
  long simple_sq = 0;
  for (const auto& L : simples) simple_sq += static_cast<long>(L.dim) * L.dim;
  if (A.n - rad.dim() != simple_sq)
    throw input_error("IncompleteSimples: dim A/Rad = " + std::to_string(A.n - rad.dim()) +
                      " but sum of (dim L)^2 = " + std::to_string(simple_sq));
  // a missing simple leaves its block's identity inside the annihilator, so
  // nilpotency is the decisive completeness witness
  Subspace<F> power = rad;
  for (int k = 0; power.dim() > 0; ++k) {
    if (k > A.n)
      throw input_error("IncompleteSimples: the joint annihilator is not nilpotent");
    std::vector<Vec<F>> prods;
    for (const auto& u : power.basis())
      for (const auto& v : rad.basis()) prods.push_back(A.multiply(u, v));
    power = Subspace<F>::span(A.field, A.n, prods);
  }
  return rad;
}

// Nilpotency index of the span of `basis` (smallest k with J^k = 0).
template <class F>
int nilpotency_index(const GradedAlgebra<F>& A, const Subspace<F>& J) {
  Subspace<F> cur = J;
  int k = 1;
  while (cur.dim() > 0) {
    if (k > A.n + 1) throw property_error("ideal is not nilpotent");
    std::vector<Vec<F>> prods;
    for (const auto& u : cur.basis())
      for (const auto& v : J.basis()) prods.push_back(A.multiply(u, v));
    cur = Subspace<F>::span(A.field, A.n, prods);
    ++k;
  }
  return k;
}

template <class F>
CheckReport verify_radical(const GradedAlgebra<F>& A, const Subspace<F>& rad,
                           const std::vector<GradedModule<F>>& simples) {
  CheckReport rep;
  for (const auto& v : rad.basis()) {
    bool homog = true;
    int d = 0; bool seen = false;
    for (int i = 0; i < A.n; ++i) {
      if (v[i].is_zero()) continue;
      if (!seen) { d = A.deg[i]; seen = true; }
      else if (A.deg[i] != d) homog = false;
    }
    if (!homog) rep.fail("radical basis vector is not homogeneous");
  }
  for (std::size_t s = 0; s < simples.size(); ++s)
    for (const auto& v : rad.basis())
      if (!simples[s].act_of(v).is_zero())
        rep.fail("radical does not annihilate simple #" + std::to_string(s));
  nilpotency_index(A, rad);  // throws if not nilpotent
  return rep;
}

template <class F>
struct Idempotent {
  Vec<F> e;
  int simple_label;   // index into the simple list
  int seat;           // which basis vector of L the matrix unit sits on
  int seat_degree;    // its degree; seat_degree == 0 gives P(label) with no shift
};

// Lift a complete orthogonal family of primitive degree-zero idempotents from
// A/Rad, one per (simple, basis seat). The correction e <- 3e^2 - 2e^3 is
// characteristic-free; starting points are degree-zero preimages of the
// diagonal matrix units acting on the homogeneous bases of the simples.
template <class F>
std::vector<Idempotent<F>> lift_idempotents(const GradedAlgebra<F>& A, const Subspace<F>& rad,
                                            const std::vector<GradedModule<F>>& simples) {
  const F& field = A.field;
  std::vector<int> deg0;
  for (int i = 0; i < A.n; ++i)
    if (A.deg[i] == 0) deg0.push_back(i);

  // joint representation on degree-zero elements
  long cols = static_cast<long>(deg0.size());
  long rows = 0;
  for (const auto& L : simples) rows += static_cast<long>(L.dim) * L.dim;
  DenseMatrix<F> phi(field, static_cast<int>(rows), static_cast<int>(cols));
  int row = 0;
  for (const auto& L : simples)
    for (int i = 0; i < L.dim; ++i)
      for (int j = 0; j < L.dim; ++j, ++row)
        for (std::size_t c = 0; c < deg0.size(); ++c) phi.at(row, static_cast<int>(c)) = L.act[deg0[c]].at(i, j);

  int max_newton = 2;
  for (int k = nilpotency_index(A, rad); (1 << max_newton) < k + 2;) ++max_newton;
  max_newton += 2;

  std::vector<Idempotent<F>> out;
  Vec<F> accepted = zero_vec(field, A.n);  // running sum f
  int row_base = 0;
  for (std::size_t s = 0; s < simples.size(); ++s) {
    const auto& L = simples[s];
    for (int seat = 0; seat < L.dim; ++seat) {
      Vec<F> target(static_cast<std::size_t>(rows), field.zero());
      target[row_base + seat * L.dim + seat] = field.one();
      auto sol = solve_linear(phi, target);
      if (!sol) throw internal_error("no degree-zero preimage for a matrix unit");
      Vec<F> u = zero_vec(field, A.n);
      for (std::size_t c = 0; c < deg0.size(); ++c) u[deg0[c]] = (*sol)[c];
      // orthogonalize against the accepted family: u <- (1-f) u (1-f)
      Vec<F> one_minus_f = A.unit;
      for (int i = 0; i < A.n; ++i) one_minus_f[i] -= accepted[i];
      u = A.multiply(A.multiply(one_minus_f, u), one_minus_f);
      // Newton iteration
      bool converged = false;
      for (int it = 0; it < max_newton; ++it) {
        Vec<F> u2 = A.multiply(u, u);
        if (u2 == u) { converged = true; break; }
        Vec<F> u3 = A.multiply(u2, u);
        for (int i = 0; i < A.n; ++i) u[i] = field.from_int(3) * u2[i] - field.from_int(2) * u3[i];
      }
      if (!converged && A.multiply(u, u) != u)
        throw internal_error("LiftDivergence: idempotent iteration failed to stabilize");
      for (int i = 0; i < A.n; ++i) accepted[i] += u[i];
      out.push_back({std::move(u), static_cast<int>(s), seat, L.deg[seat]});
    }
    row_base += L.dim * L.dim;
  }
  if (accepted != A.unit) throw internal_error("lifted idempotents do not sum to the unit");
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = 0; b < out.size(); ++b) {
      if (a == b) continue;
      if (!vec_is_zero(A.multiply(out[a].e, out[b].e)))
        throw internal_error("lifted idempotents are not orthogonal");
    }
  return out;
}

// Center as the commutant of a generating set.
template <class F>
Subspace<F> center(const GradedAlgebra<F>& A, const std::vector<int>& gens) {
  if (gens.empty()) return Subspace<F>::full(A.field, A.n);
  DenseMatrix<F> sys(A.field, static_cast<int>(gens.size()) * A.n, A.n);
  int row_base = 0;
  for (int g : gens) {
    Vec<F> bg = unit_vec(A.field, A.n, g);
    DenseMatrix<F> diff = A.left_mult_matrix(bg) - A.right_mult_matrix(bg);
    for (int i = 0; i < A.n; ++i)
      for (int j = 0; j < A.n; ++j) sys.at(row_base + i, j) = diff.at(i, j);
    row_base += A.n;
  }
  return Subspace<F>::span(A.field, A.n, kernel_basis(sys));
}

// The scalar by which a central element acts on an absolutely simple module.
template <class F>
typename F::Elem central_character(const GradedModule<F>& L, const Vec<F>& z) {
  DenseMatrix<F> m = L.act_of(z);
  typename F::Elem scalar = m.at(0, 0);
  if (m != DenseMatrix<F>::identity(L.field(), L.dim).scaled(scalar))
    throw internal_error("central element does not act by a scalar on a simple");
  return scalar;
}

template <class F>
struct BlockData {
  std::vector<int> block_of;          // simple index -> block id
  std::vector<Vec<F>> central_idems;  // one primitive central idempotent per block
};

// Blocks from central characters, with lifted primitive central idempotents.
template <class F>
BlockData<F> block_decomposition(const GradedAlgebra<F>& A, const Subspace<F>& zcenter,
                                 const std::vector<GradedModule<F>>& simples) {
  const F& field = A.field;
  std::size_t nl = simples.size();
  // central character table: rows = center basis, cols = simples
  std::vector<std::vector<typename F::Elem>> omega(zcenter.dim());
  for (int b = 0; b < zcenter.dim(); ++b) {
    omega[b].reserve(nl);
    for (const auto& L : simples) omega[b].push_back(central_character(L, zcenter.basis()[b]));
  }
  BlockData<F> out;
  out.block_of.assign(nl, -1);
  std::vector<std::size_t> reps;
  for (std::size_t s = 0; s < nl; ++s) {
    for (std::size_t r = 0; r < reps.size(); ++r) {
      bool same = true;
      for (int b = 0; b < zcenter.dim(); ++b)
        if (omega[b][s] != omega[b][reps[r]]) { same = false; break; }
      if (same) { out.block_of[s] = static_cast<int>(r); break; }
    }
    if (out.block_of[s] < 0) {
      out.block_of[s] = static_cast<int>(reps.size());
      reps.push_back(s);
    }
  }
  // lift one central idempotent per block: solve omega(x) = indicator, then Newton
  for (std::size_t blk = 0; blk < reps.size(); ++blk) {
    DenseMatrix<F> sys(field, static_cast<int>(nl), zcenter.dim());
    for (std::size_t s = 0; s < nl; ++s)
      for (int b = 0; b < zcenter.dim(); ++b) sys.at(static_cast<int>(s), b) = omega[b][s];
    Vec<F> rhs(nl, field.zero());
    for (std::size_t s = 0; s < nl; ++s)
      if (out.block_of[s] == static_cast<int>(blk)) rhs[s] = field.one();
    auto sol = solve_linear(sys, rhs);
    if (!sol) throw internal_error("central character system is inconsistent");
    Vec<F> z = zero_vec(field, A.n);
    for (int b = 0; b < zcenter.dim(); ++b) vec_axpy(z, (*sol)[b], zcenter.basis()[b]);
    for (int it = 0; it < 2 * A.n + 4; ++it) {
      Vec<F> z2 = A.multiply(z, z);
      if (z2 == z) break;
      Vec<F> z3 = A.multiply(z2, z);
      for (int i = 0; i < A.n; ++i) z[i] = field.from_int(3) * z2[i] - field.from_int(2) * z3[i];
    }
    if (A.multiply(z, z) != z) throw internal_error("central idempotent lift diverged");
    out.central_idems.push_back(std::move(z));
  }
  // the family must sum to 1
  Vec<F> total = zero_vec(field, A.n);
  for (const auto& c : out.central_idems)
    for (int i = 0; i < A.n; ++i) total[i] += c[i];
  if (total != A.unit) throw internal_error("central idempotents do not sum to the unit");
  return out;
}

// ---------------------------------------------------------------------------
// Frobenius certificates
// ---------------------------------------------------------------------------

template <class F>
struct FrobeniusForm {
  Vec<F> phi;       // functional on the dual basis; supported in one degree
  int degree = 0;
  bool symmetric = false;
};

template <class F>
DenseMatrix<F> frobenius_gram(const GradedAlgebra<F>& A, const Vec<F>& phi) {
  DenseMatrix<F> g(A.field, A.n, A.n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j)
      for (const auto& [k, c] : A.sc[i][j]) g.at(i, j) += c * phi[k];
  return g;
}

// Nondegeneracy of (a,b) -> phi(ab); graded support makes the per-degree-pair
// blocks the only nonzero ones, so a single rank computation covers them all.
template <class F>
bool verify_frobenius(const GradedAlgebra<F>& A, const Vec<F>& phi, int d, bool* symmetric_out) {
  for (int i = 0; i < A.n; ++i)
    if (!phi[i].is_zero() && A.deg[i] != d) return false;
  DenseMatrix<F> g = frobenius_gram(A, phi);
  if (rank(g) != A.n) return false;
  if (symmetric_out) *symmetric_out = (g == g.transpose());
  return true;
}

template <class F>
std::optional<FrobeniusForm<F>> frobenius_search(const GradedAlgebra<F>& A, int d, int trials,
                                                 std::uint64_t seed,
                                                 const std::vector<Vec<F>>& hints = {}) {
  const F& field = A.field;
  std::vector<int> supp;
  for (int i = 0; i < A.n; ++i)
    if (A.deg[i] == d) supp.push_back(i);
  if (supp.empty()) return std::nullopt;

  auto attempt = [&](const Vec<F>& phi) -> std::optional<FrobeniusForm<F>> {
    bool symm = false;
    if (verify_frobenius(A, phi, d, &symm)) return FrobeniusForm<F>{phi, d, symm};
    return std::nullopt;
  };

  for (const auto& h : hints)
    if (auto r = attempt(h)) return r;

  // the symmetric subspace { phi : phi(ab) = phi(ba) for all basis pairs }
  std::vector<Vec<F>> sym_rows;
  for (int i = 0; i < A.n; ++i)
    for (int j = i + 1; j < A.n; ++j) {
      Vec<F> row(supp.size(), field.zero());
      bool nonzero = false;
      for (const auto& [k, c] : A.sc[i][j])
        for (std::size_t t = 0; t < supp.size(); ++t)
          if (k == supp[t]) { row[t] += c; nonzero = true; }
      for (const auto& [k, c] : A.sc[j][i])
        for (std::size_t t = 0; t < supp.size(); ++t)
          if (k == supp[t]) { row[t] -= c; nonzero = true; }
      if (nonzero) sym_rows.push_back(std::move(row));
    }
  DenseMatrix<F> sym_sys(field, static_cast<int>(sym_rows.size()), static_cast<int>(supp.size()));
  for (std::size_t r = 0; r < sym_rows.size(); ++r) sym_sys.set_row(static_cast<int>(r), sym_rows[r]);
  auto sym_basis = kernel_basis(sym_sys);

  Rng rng(seed);
  auto lift = [&](const Vec<F>& coords) {
    Vec<F> phi = zero_vec(field, A.n);
    for (std::size_t t = 0; t < supp.size(); ++t) phi[supp[t]] = coords[t];
    return phi;
  };
  for (int t = 0; t < trials && !sym_basis.empty(); ++t) {
    Vec<F> coords(supp.size(), field.zero());
    for (const auto& b : sym_basis) vec_axpy(coords, field.random(rng), b);
    if (auto r = attempt(lift(coords))) return r;
  }
  for (int t : supp)
    if (auto r = attempt(unit_vec(field, A.n, t))) return r;
  for (int t = 0; t < trials; ++t) {
    Vec<F> phi = zero_vec(field, A.n);
    for (int i : supp) phi[i] = field.random(rng);
    if (auto r = attempt(phi)) return r;
  }
  return std::nullopt;
}

// Left socle of the regular module: {a : Rad(A) a = 0}.
template <class F>
Subspace<F> left_socle(const GradedAlgebra<F>& A, const Subspace<F>& rad) {
  if (rad.dim() == 0) return Subspace<F>::full(A.field, A.n);
  DenseMatrix<F> sys(A.field, rad.dim() * A.n, A.n);
  int row_base = 0;
  for (const auto& r : rad.basis()) {
    DenseMatrix<F> lm = A.left_mult_matrix(r);
    for (int i = 0; i < A.n; ++i)
      for (int j = 0; j < A.n; ++j) sys.at(row_base + i, j) = lm.at(i, j);
    row_base += A.n;
  }
  return Subspace<F>::span(A.field, A.n, kernel_basis(sys));
}

}  // namespace trideco
