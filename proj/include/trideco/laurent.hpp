// Z[t,t^-1], Q[t], Q(t), and matrices over them; C_L inversion happens here.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trideco/errors.hpp"
#include "trideco/fields.hpp"

namespace trideco {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::int64_t constant) {
    if (constant != 0) c_[0] = constant;
  }
  static LaurentPoly term(std::int64_t coeff, int expo) {
    LaurentPoly p;
    if (coeff != 0) p.c_[expo] = coeff;
    return p;
  }
  static LaurentPoly one() { return LaurentPoly(1); }

  const std::map<int, std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_.count(0) && c_.at(0) == 1; }
  std::int64_t coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? 0 : it->second;
  }
  int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
  int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

  void add_term(int e, std::int64_t v) {
    if (v == 0) return;
    auto it = c_.emplace(e, 0).first;
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_[e] = -v;
    return r;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    for (auto& [e, v] : b.c_) a.add_term(e, v);
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    for (auto& [e, v] : b.c_) a.add_term(e, -v);
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [e1, v1] : a.c_)
      for (auto& [e2, v2] : b.c_) r.add_term(e1 + e2, v1 * v2);
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // multiplication by t^n (the shift [n])
  LaurentPoly shifted(int n) const {
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_[e + n] = v;
    return r;
  }
  // t -> t^-1
  LaurentPoly bar() const {
    LaurentPoly r;
    for (auto& [e, v] : c_) r.c_[-e] = v;
    return r;
  }
  std::int64_t eval_at_one() const {
    std::int64_t s = 0;
    for (auto& [e, v] : c_) s += v;
    return s;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, v] : c_) {
      std::int64_t a = v;
      if (first) {
        if (a < 0) { out << "-"; a = -a; }
        first = false;
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      if (e == 0) out << a;
      else {
        if (a != 1) out << a << "*";
        out << "t";
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }

 private:
  std::map<int, std::int64_t> c_;
};

// ---------------------------------------------------------------------------
// Dense polynomials over Q and the fraction field Q(t)
// ---------------------------------------------------------------------------

class QtPoly {
 public:
  QtPoly() = default;
  explicit QtPoly(Rational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit QtPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static QtPoly t_power(int k) {
    std::vector<Rational> c(k + 1);
    c[k] = Rational(1);
    return QtPoly(std::move(c));
  }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }

  friend QtPoly operator+(const QtPoly& a, const QtPoly& b) {
    std::vector<Rational> r = a.c_;
    if (r.size() < b.c_.size()) r.resize(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return QtPoly(std::move(r));
  }
  friend QtPoly operator-(const QtPoly& a, const QtPoly& b) {
    std::vector<Rational> r = a.c_;
    if (r.size() < b.c_.size()) r.resize(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return QtPoly(std::move(r));
  }
  friend QtPoly operator*(const QtPoly& a, const QtPoly& b) {
    if (a.is_zero() || b.is_zero()) return QtPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return QtPoly(std::move(r));
  }
  friend bool operator==(const QtPoly& a, const QtPoly& b) { return a.c_ == b.c_; }

  std::pair<QtPoly, QtPoly> divmod(const QtPoly& d) const {
    if (d.is_zero()) throw internal_error("Q[t] division by zero");
    std::vector<Rational> rem = c_, q;
    while (rem.size() >= d.c_.size() && !rem.empty()) {
      Rational f = rem.back() / d.c_.back();
      std::size_t shift = rem.size() - d.c_.size();
      if (q.size() < shift + 1) q.resize(shift + 1);
      q[shift] = f;
      for (std::size_t i = 0; i < d.c_.size(); ++i) rem[shift + i] -= f * d.c_[i];
      while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
    return {QtPoly(std::move(q)), QtPoly(std::move(rem))};
  }

  QtPoly monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> r = c_;
    Rational inv = c_.back().inverse();
    for (auto& x : r) x *= inv;
    return QtPoly(std::move(r));
  }

  static QtPoly gcd(QtPoly a, QtPoly b) {
    while (!b.is_zero()) {
      QtPoly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Reduced fractions over Q[t]; denominator monic and coprime to the numerator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(QtPoly(Rational(1))) {}
  RationalFunction(QtPoly num, QtPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw internal_error("rational function with zero denominator");
    reduce();
  }
  static RationalFunction from_laurent(const LaurentPoly& p) {
    int m = std::min(0, p.min_exp());
    std::vector<Rational> num(p.max_exp() - m + 1);
    for (auto& [e, v] : p.coeffs()) num[e - m] = Rational(static_cast<long>(v));
    return RationalFunction(QtPoly(std::move(num)), QtPoly::t_power(-m));
  }

  const QtPoly& num() const { return num_; }
  const QtPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw internal_error("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction operator-() const { return RationalFunction(QtPoly() - num_, den_); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw internal_error("inverse of zero rational function");
    return RationalFunction(den_, num_);
  }

  // A reduced fraction is a Laurent polynomial iff its denominator is t^k.
  std::optional<LaurentPoly> as_laurent() const {
    const auto& d = den_.coeffs();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (!d[i].is_zero()) return std::nullopt;
    int k = den_.degree();
    LaurentPoly r;
    for (std::size_t i = 0; i < num_.coeffs().size(); ++i) {
      const Rational& c = num_.coeffs()[i];
      if (c.is_zero()) continue;
      if (!c.is_integer()) return std::nullopt;
      r.add_term(static_cast<int>(i) - k, c.raw().get_num().get_si());
    }
    return r;
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = QtPoly(Rational(1));
      return;
    }
    QtPoly g = QtPoly::gcd(num_, den_);
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
    Rational lead = den_.lead();
    if (!lead.is_one()) {
      Rational inv = lead.inverse();
      std::vector<Rational> n = num_.coeffs(), d = den_.coeffs();
      for (auto& x : n) x *= inv;
      for (auto& x : d) x *= inv;
      num_ = QtPoly(std::move(n));
      den_ = QtPoly(std::move(d));
    }
  }
  QtPoly num_, den_;
};

// ---------------------------------------------------------------------------
// Matrices over Z[t,t^-1] and Q(t)
// ---------------------------------------------------------------------------

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;
using RatFunMatrix = std::vector<std::vector<RationalFunction>>;

inline RatFunMatrix to_ratfun(const LaurentMatrix& m) {
  RatFunMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& p : m[i]) r[i].push_back(RationalFunction::from_laurent(p));
  return r;
}

// Exact inverse over Q(t); nullopt when the determinant vanishes identically.
inline std::optional<RatFunMatrix> laurent_matrix_inverse(const LaurentMatrix& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw input_error("laurent matrix inverse needs a square matrix");
  RatFunMatrix a = to_ratfun(m);
  RatFunMatrix inv(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = RationalFunction::from_laurent(LaurentPoly(1));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = n;
    for (std::size_t r = c; r < n; ++r)
      if (!a[r][c].is_zero()) { pr = r; break; }
    if (pr == n) return std::nullopt;
    std::swap(a[pr], a[c]);
    std::swap(inv[pr], inv[c]);
    RationalFunction piv = a[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = a[c][j] * piv;
      inv[c][j] = inv[c][j] * piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      RationalFunction f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = a[r][j] - f * a[c][j];
        inv[r][j] = inv[r][j] - f * inv[c][j];
      }
    }
  }
  return inv;
}

inline RatFunMatrix ratfun_product(const LaurentMatrix& a, const RatFunMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  RatFunMatrix r(n, std::vector<RationalFunction>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      RationalFunction f = RationalFunction::from_laurent(a[i][l]);
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) r[i][j] = r[i][j] + f * b[l][j];
    }
  return r;
}

inline LaurentMatrix laurent_product(const LaurentMatrix& a, const LaurentMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  LaurentMatrix r(n, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][l] * b[l][j];
  return r;
}

}  // namespace trideco
