// Exact scalar tower: Q (GMP-backed), F_p, and Q(zeta_n) = Q[z]/Phi_n(z).
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trideco/errors.hpp"

namespace trideco {

// Deterministic xorshift64* generator; std distributions are not portable.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed = 0) : state(seed * 0x9e3779b97f4a7c15ULL + 1) {}
  std::uint64_t next() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545f4914f6cdd1dULL;
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  std::int64_t in_band(std::int64_t band) {
    return static_cast<std::int64_t>(below(2 * band + 1)) - band;
  }
};

// ---------------------------------------------------------------------------
// Rational numbers
// ---------------------------------------------------------------------------

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long num) : q_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw input_error("rational with zero denominator");
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  const mpq_class& raw() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw internal_error("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  Rational inverse() const {
    if (is_zero()) throw internal_error("inverse of zero");
    return Rational(mpq_class(1 / q_));
  }

  std::string str() const { return q_.get_str(); }

  static Rational parse(const std::string& s) {
    std::string t;
    for (char c : s) if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw input_error("empty rational literal");
    try {
      mpq_class q(t, 10);
      q.canonicalize();
      return Rational(q);
    } catch (const std::invalid_argument&) {
      throw input_error("bad rational literal: " + s);
    }
  }

 private:
  mpq_class q_;
};

struct RationalField {
  using Elem = Rational;
  Elem zero() const { return Rational(); }
  Elem one() const { return Rational(1); }
  Elem from_int(long n) const { return Rational(n); }
  Elem parse(const std::string& s) const { return Rational::parse(s); }
  std::string print(const Elem& x) const { return x.str(); }
  // Small numerators/denominators keep intermediate swell down.
  Elem random(Rng& rng) const {
    long num = rng.in_band(9);
    long den = 1 + static_cast<long>(rng.below(4));
    return Rational(num, den);
  }
  std::string name() const { return "Q"; }
  static constexpr bool finite = false;
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

class FpElem {
 public:
  FpElem() : v_(0), p_(0) {}
  FpElem(std::int64_t v, std::int64_t p) : v_(((v % p) + p) % p), p_(p) {}

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  FpElem operator-() const { return FpElem(p_ - v_, p_); }
  friend FpElem operator+(const FpElem& a, const FpElem& b) {
    a.check(b);
    return FpElem(a.v_ + b.v_, a.p_);
  }
  friend FpElem operator-(const FpElem& a, const FpElem& b) {
    a.check(b);
    return FpElem(a.v_ - b.v_ + a.p_, a.p_);
  }
  friend FpElem operator*(const FpElem& a, const FpElem& b) {
    a.check(b);
    return FpElem(a.v_ * b.v_, a.p_);
  }
  friend FpElem operator/(const FpElem& a, const FpElem& b) { return a * b.inverse(); }
  FpElem& operator+=(const FpElem& o) { return *this = *this + o; }
  FpElem& operator-=(const FpElem& o) { return *this = *this - o; }
  FpElem& operator*=(const FpElem& o) { return *this = *this * o; }
  friend bool operator==(const FpElem& a, const FpElem& b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }
  friend bool operator!=(const FpElem& a, const FpElem& b) { return !(a == b); }

  FpElem inverse() const {
    if (v_ == 0) throw internal_error("inverse of zero in F_p");
    // extended Euclid
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return FpElem(x0, p_);
  }

 private:
  void check(const FpElem& o) const {
    if (p_ != o.p_) throw internal_error("mixed prime fields");
  }
  std::int64_t v_, p_;
};

struct PrimeField {
  std::int64_t p = 0;
  using Elem = FpElem;
  PrimeField() = default;
  explicit PrimeField(std::int64_t prime) : p(prime) {
    if (p < 2) throw input_error("prime field modulus must be >= 2");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw input_error("F_p modulus is not prime: " + std::to_string(p));
  }
  Elem zero() const { return FpElem(0, p); }
  Elem one() const { return FpElem(1, p); }
  Elem from_int(long n) const { return FpElem(n, p); }
  Elem parse(const std::string& s) const {
    try {
      mpz_class z(s, 10);
      mpz_class r = z % p;
      return FpElem(r.get_si(), p);
    } catch (const std::invalid_argument&) {
      throw input_error("bad F_p literal: " + s);
    }
  }
  std::string print(const Elem& x) const { return std::to_string(x.value()); }
  Elem random(Rng& rng) const { return FpElem(static_cast<std::int64_t>(rng.below(p)), p); }
  std::string name() const { return "Fp:" + std::to_string(p); }
  static constexpr bool finite = true;
  std::vector<Elem> all_elements() const {
    std::vector<Elem> out;
    for (std::int64_t v = 0; v < p; ++v) out.emplace_back(v, p);
    return out;
  }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

// ---------------------------------------------------------------------------
// Cyclotomic fields Q[z] / Phi_n(z)
// ---------------------------------------------------------------------------

namespace detail {

// Dense polynomials over Q, used only for cyclotomic bookkeeping.
using QPoly = std::vector<Rational>;

inline void qp_trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qp_trim(r);
  return r;
}

inline QPoly qp_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qp_trim(a);
  return a;
}

// Division with remainder; divisor need not be monic.
inline std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
  if (b.empty()) throw internal_error("polynomial division by zero");
  QPoly q;
  qp_trim(a);
  if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    qp_trim(a);
  }
  return {q, a};
}

struct CycloContext {
  std::int64_t n;
  QPoly phi;  // monic, degree = euler_phi(n)

  static const std::shared_ptr<const CycloContext>& get(std::int64_t n) {
    static std::map<std::int64_t, std::shared_ptr<const CycloContext>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<CycloContext>();
    ctx->n = n;
    ctx->phi = cyclotomic_poly(n);
    return cache.emplace(n, std::move(ctx)).first->second;
  }

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  static QPoly cyclotomic_poly(std::int64_t n) {
    if (n < 1) throw input_error("cyclotomic index must be positive");
    QPoly num(n + 1);
    num[0] = Rational(-1);
    num[n] = Rational(1);
    for (std::int64_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      auto [q, r] = qp_divmod(num, cyclotomic_poly(d));
      if (!r.empty()) throw internal_error("cyclotomic division left a remainder");
      num = q;
    }
    return num;
  }
};

}  // namespace detail

class CycloElem {
 public:
  CycloElem() = default;
  CycloElem(std::shared_ptr<const detail::CycloContext> ctx, detail::QPoly c)
      : ctx_(std::move(ctx)), c_(std::move(c)) {
    reduce();
  }

  const detail::QPoly& coeffs() const { return c_; }
  const std::shared_ptr<const detail::CycloContext>& ctx() const { return ctx_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  CycloElem operator-() const {
    detail::QPoly r = c_;
    for (auto& x : r) x = -x;
    return CycloElem(ctx_, std::move(r));
  }
  friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    a.check(b);
    detail::QPoly r = a.c_;
    if (r.size() < b.c_.size()) r.resize(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return CycloElem(a.ctx_ ? a.ctx_ : b.ctx_, std::move(r));
  }
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b) { return a + (-b); }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    a.check(b);
    return CycloElem(a.ctx_ ? a.ctx_ : b.ctx_, detail::qp_mul(a.c_, b.c_));
  }
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }
  CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
  CycloElem& operator-=(const CycloElem& o) { return *this = *this - o; }
  CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }
  friend bool operator==(const CycloElem& a, const CycloElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  // Inverse by extended gcd with Phi_n, which is coprime to any nonzero
  // representative of degree < deg Phi_n.
  CycloElem inverse() const {
    if (is_zero()) throw internal_error("inverse of zero in cyclotomic field");
    detail::QPoly r0 = ctx_->phi, r1 = c_;
    detail::QPoly s0 = {}, s1 = {Rational(1)};
    while (!r1.empty()) {
      auto [q, r2] = detail::qp_divmod(r0, r1);
      detail::QPoly s2 = detail::qp_sub(s0, detail::qp_mul(q, s1));
      r0 = std::move(r1); r1 = std::move(r2);
      s0 = std::move(s1); s1 = std::move(s2);
    }
    if (r0.size() != 1) throw internal_error("cyclotomic gcd is not a unit");
    Rational lead = r0[0];
    for (auto& x : s0) x /= lead;
    return CycloElem(ctx_, std::move(s0));
  }

 private:
  void check(const CycloElem& o) const {
    if (ctx_ && o.ctx_ && ctx_->n != o.ctx_->n) throw internal_error("mixed cyclotomic fields");
  }
  void reduce() {
    detail::qp_trim(c_);
    if (ctx_ && c_.size() >= ctx_->phi.size()) c_ = detail::qp_divmod(c_, ctx_->phi).second;
  }
  std::shared_ptr<const detail::CycloContext> ctx_;
  detail::QPoly c_;
};

struct CyclotomicField {
  std::shared_ptr<const detail::CycloContext> ctx;
  using Elem = CycloElem;
  CyclotomicField() = default;
  explicit CyclotomicField(std::int64_t n) : ctx(detail::CycloContext::get(n)) {}

  std::int64_t order() const { return ctx->n; }
  Elem zero() const { return CycloElem(ctx, {}); }
  Elem one() const { return CycloElem(ctx, {Rational(1)}); }
  Elem from_int(long v) const { return CycloElem(ctx, {Rational(v)}); }
  // Primitive n-th root of unity z (reduced mod Phi_n).
  Elem zeta() const {
    detail::QPoly z(2);
    z[1] = Rational(1);
    return CycloElem(ctx, std::move(z));
  }
  Elem zeta_pow(std::int64_t k) const {
    std::int64_t n = ctx->n;
    k = ((k % n) + n) % n;
    detail::QPoly z(k + 1);
    z[k] = Rational(1);
    return CycloElem(ctx, std::move(z));
  }

  // Accepts polynomials in z over Q, e.g. "z^2+1", "-2/3*z + 1", "3".
  Elem parse(const std::string& s) const;
  std::string print(const Elem& x) const;

  Elem random(Rng& rng) const {
    std::size_t deg = ctx->phi.size() - 1;
    detail::QPoly c(deg);
    for (auto& x : c) x = Rational(rng.in_band(9), 1 + static_cast<long>(rng.below(3)));
    return CycloElem(ctx, std::move(c));
  }
  std::string name() const { return "Cyclotomic:" + std::to_string(ctx->n); }
  static constexpr bool finite = false;
  friend bool operator==(const CyclotomicField& a, const CyclotomicField& b) {
    return a.ctx->n == b.ctx->n;
  }
};

inline CyclotomicField::Elem CyclotomicField::parse(const std::string& s) const {
  // term := [sign] coeff ['*' ] ['z' ['^' k]] ; terms joined by +/-.
  detail::QPoly acc;
  std::string t;
  for (char c : s) if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw input_error("empty cyclotomic literal");
  std::size_t i = 0;
  while (i < t.size()) {
    int sign = 1;
    while (i < t.size() && (t[i] == '+' || t[i] == '-')) {
      if (t[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= t.size()) throw input_error("dangling sign in cyclotomic literal: " + s);
    std::string num;
    while (i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '/')) num += t[i++];
    if (i < t.size() && t[i] == '*') ++i;
    long long expo = 0;
    if (i < t.size() && t[i] == 'z') {
      ++i;
      expo = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        std::string e;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) e += t[i++];
        if (e.empty()) throw input_error("missing exponent in cyclotomic literal: " + s);
        expo = std::stoll(e);
      }
    }
    Rational coeff = num.empty() ? Rational(1) : Rational::parse(num);
    if (sign < 0) coeff = -coeff;
    if (acc.size() < static_cast<std::size_t>(expo + 1)) acc.resize(expo + 1);
    acc[expo] += coeff;
  }
  return CycloElem(ctx, std::move(acc));
}

inline std::string CyclotomicField::print(const Elem& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = x.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    Rational a = c[k];
    bool neg = a < Rational(0);
    if (first) {
      if (neg) { out << "-"; a = -a; }
      first = false;
    } else {
      out << (neg ? " - " : " + ");
      if (neg) a = -a;
    }
    if (k == 0) {
      out << a.str();
    } else {
      if (!a.is_one()) out << a.str() << "*";
      out << "z";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace trideco
