// Dense exact linear algebra over a field descriptor F, plus canonical subspaces.
#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "trideco/errors.hpp"
#include "trideco/fields.hpp"

namespace trideco {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
class DenseMatrix {
 public:
  using Elem = typename F::Elem;

  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(F field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, field_.zero()) {
    if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
  }

  static DenseMatrix identity(const F& field, int n) {
    DenseMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Elem& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  Vec<F> row(int r) const {
    Vec<F> v(cols_, field_.zero());
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
  }
  Vec<F> col(int c) const {
    Vec<F> v(rows_, field_.zero());
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
  }
  void set_row(int r, const Vec<F>& v) {
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
  }

  bool is_zero() const {
    for (const auto& x : a_) if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

  DenseMatrix operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
    DenseMatrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Elem& x = at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          if (o.at(k, j).is_zero()) continue;
          r.at(i, j) += x * o.at(k, j);
        }
      }
    return r;
  }

  DenseMatrix operator+(const DenseMatrix& o) const {
    DenseMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }
  DenseMatrix operator-(const DenseMatrix& o) const {
    DenseMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }
  DenseMatrix scaled(const Elem& s) const {
    DenseMatrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
  }

  Vec<F> apply(const Vec<F>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw internal_error("matrix apply shape mismatch");
    Vec<F> r(rows_, field_.zero());
    for (int i = 0; i < rows_; ++i)
      for (int c = 0; c < cols_; ++c)
        if (!at(i, c).is_zero() && !v[c].is_zero()) r[i] += at(i, c) * v[c];
    return r;
  }

  DenseMatrix transpose() const {
    DenseMatrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

 private:
  F field_;
  int rows_, cols_;
  std::vector<Elem> a_;
};

template <class F>
struct RrefResult {
  DenseMatrix<F> reduced;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Reduced row echelon form, in place Gauss–Jordan with exact pivots.
template <class F>
RrefResult<F> rref(DenseMatrix<F> m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    auto inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      auto f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots), r};
}

template <class F>
int rank(const DenseMatrix<F>& m) {
  return rref(m).rank;
}

// Canonical basis of the right null space {v : m v = 0}.
template <class F>
std::vector<Vec<F>> kernel_basis(const DenseMatrix<F>& m) {
  auto rr = rref(m);
  const F& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec<F> v(m.cols(), field.zero());
    v[c] = field.one();
    for (int r = 0; r < rr.rank; ++r) v[rr.pivot_cols[r]] = -rr.reduced.at(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One exact solution of m x = rhs, or nullopt when inconsistent.
template <class F>
std::optional<Vec<F>> solve_linear(const DenseMatrix<F>& m, const Vec<F>& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw internal_error("solve shape mismatch");
  const F& field = m.field();
  DenseMatrix<F> aug(field, m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  auto rr = rref(std::move(aug));
  for (int c : rr.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  Vec<F> x(m.cols(), field.zero());
  for (int r = 0; r < rr.rank; ++r) x[rr.pivot_cols[r]] = rr.reduced.at(r, m.cols());
  return x;
}

template <class F>
std::optional<DenseMatrix<F>> inverse(const DenseMatrix<F>& m) {
  if (m.rows() != m.cols()) throw internal_error("inverse of non-square matrix");
  const F& field = m.field();
  int n = m.rows();
  DenseMatrix<F> aug(field, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = field.one();
  }
  auto rr = rref(std::move(aug));
  if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1) return std::nullopt;
  DenseMatrix<F> inv(field, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = rr.reduced.at(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Subspaces in canonical (reduced echelon) form; equal subspaces compare equal.
// ---------------------------------------------------------------------------

template <class F>
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  Subspace(F field, int ambient) : field_(std::move(field)), ambient_(ambient) {}

  static Subspace span(const F& field, int ambient, const std::vector<Vec<F>>& vectors) {
    DenseMatrix<F> m(field, static_cast<int>(vectors.size()), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) m.set_row(static_cast<int>(i), vectors[i]);
    auto rr = rref(std::move(m));
    Subspace s(field, ambient);
    s.pivots_ = rr.pivot_cols;
    for (int r = 0; r < rr.rank; ++r) s.rows_.push_back(rr.reduced.row(r));
    return s;
  }

  static Subspace full(const F& field, int ambient) {
    std::vector<Vec<F>> rows;
    for (int i = 0; i < ambient; ++i) {
      Vec<F> v(ambient, field.zero());
      v[i] = field.one();
      rows.push_back(std::move(v));
    }
    return span(field, ambient, rows);
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec<F>>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const F& field() const { return field_; }

  bool contains(const Vec<F>& v) const { return reduce(v).second; }

  // Returns (coordinates in the stored basis, whether v lies in the subspace).
  std::pair<Vec<F>, bool> reduce(Vec<F> v) const {
    Vec<F> coords(rows_.size(), field_.zero());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& c = v[pivots_[r]];
      if (c.is_zero()) continue;
      coords[r] = c;
      auto f = c;
      for (int j = 0; j < ambient_; ++j) v[j] -= f * rows_[r][j];
    }
    bool inside = true;
    for (const auto& x : v) if (!x.is_zero()) { inside = false; break; }
    return {std::move(coords), inside};
  }

  Subspace sum(const Subspace& o) const {
    std::vector<Vec<F>> all = rows_;
    all.insert(all.end(), o.rows_.begin(), o.rows_.end());
    return span(field_, ambient_, all);
  }

  // Intersection via the kernel of the stacked coordinate map.
  Subspace intersect(const Subspace& o) const {
    if (dim() == 0 || o.dim() == 0) return Subspace(field_, ambient_);
    DenseMatrix<F> m(field_, ambient_, dim() + o.dim());
    for (int j = 0; j < dim(); ++j)
      for (int i = 0; i < ambient_; ++i) m.at(i, j) = rows_[j][i];
    for (int j = 0; j < o.dim(); ++j)
      for (int i = 0; i < ambient_; ++i) m.at(i, dim() + j) = -o.rows_[j][i];
    std::vector<Vec<F>> vectors;
    for (const auto& k : kernel_basis(m)) {
      Vec<F> v(ambient_, field_.zero());
      for (int j = 0; j < dim(); ++j)
        for (int i = 0; i < ambient_; ++i) v[i] += k[j] * rows_[j][i];
      vectors.push_back(std::move(v));
    }
    return span(field_, ambient_, vectors);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  F field_;
  int ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<int> pivots_;
};

// Vector helpers shared across modules.
template <class F>
Vec<F> zero_vec(const F& field, int n) {
  return Vec<F>(n, field.zero());
}

template <class F>
Vec<F> unit_vec(const F& field, int n, int i) {
  Vec<F> v(n, field.zero());
  v[i] = field.one();
  return v;
}

template <class E>
bool vec_is_zero(const std::vector<E>& v) {
  for (const auto& x : v) if (!x.is_zero()) return false;
  return true;
}

template <class E>
void vec_axpy(std::vector<E>& acc, const E& s, const std::vector<E>& v) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) acc[i] += s * v[i];
}

}  // namespace trideco
