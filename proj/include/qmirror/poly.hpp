#pragma once

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qmirror {

// Dense univariate polynomial over a field K. K must provide default
// construction (zero), construction from long, +,-,*,/ and ==.
// Invariant: no trailing zero coefficients; the zero polynomial is empty.
template <class K>
class Poly {
 public:
  Poly() = default;
  Poly(const K& c) { c_.push_back(c); trim(); }
  Poly(std::initializer_list<K> cs) : c_(cs) { trim(); }
  explicit Poly(std::vector<K> cs) : c_(std::move(cs)) { trim(); }

  static Poly monomial(int e, const K& coef = K(1)) {
    std::vector<K> c(e + 1, K(0));
    c[e] = coef;
    return Poly(std::move(c));
  }

  // degree of the zero polynomial is -1
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
    return c_[i];
  }
  const std::vector<K>& coeffs() const { return c_; }

  K lead() const {
    if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero");
    return c_.back();
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

  Poly scaled(const K& s) const {
    Poly out = *this;
    for (auto& c : out.c_) c = c * s;
    out.trim();
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  K eval(const K& x) const {
    K out(0);
    for (int i = deg(); i >= 0; --i) out = out * x + c_[i];
    return out;
  }

  Poly derivative() const {
    if (deg() < 1) return Poly();
    std::vector<K> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<long>(i));
    return Poly(std::move(c));
  }

  // Euclidean division: returns (quotient, remainder) with deg rem < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly rem = a;
    std::vector<K> q;
    if (rem.deg() >= b.deg()) q.assign(rem.deg() - b.deg() + 1, K(0));
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
      int shift = rem.deg() - b.deg();
      K f = rem.lead() / b.lead();
      q[shift] = f;
      rem = rem - (b * monomial(shift, f));
    }
    return {Poly(std::move(q)), rem};
  }

  friend Poly operator/(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
    return q;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(K(1) / lead());
  }

  // P(x + p), expanded exactly.
  Poly shifted(const K& p) const {
    Poly out;
    Poly x_plus_p{p, K(1)};
    for (int i = deg(); i >= 0; --i) out = out * x_plus_p + Poly(c_[i]);
    return out;
  }

  // x^deg * P(s/x): coefficient i of the result is c_[deg-i] * s^(deg-i).
  // With s = 1 this is plain coefficient reversal.
  Poly reversed_scaled(const K& s) const {
    if (is_zero()) return *this;
    int d = deg();
    std::vector<K> c(d + 1);
    K sp(1);
    for (int i = 0; i <= d; ++i) {
      c[d - i] = c_[i] * sp;
      sp = sp * s;
    }
    return Poly(std::move(c));
  }

  Poly pow(int e) const {
    if (e < 0) throw std::domain_error("Poly: negative exponent");
    Poly out(K(1)), base = *this;
    while (e > 0) {
      if (e & 1) out = out * base;
      base = base * base;
      e >>= 1;
    }
    return out;
  }

  // smallest i with nonzero coefficient; -1 for the zero polynomial
  int valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == K(0))) return static_cast<int>(i);
    return -1;
  }

  // divide by x^k exactly
  Poly shift_down(int k) const {
    if (is_zero()) return *this;
    if (valuation() < k) throw std::domain_error("Poly: inexact monomial shift");
    return Poly(std::vector<K>(c_.begin() + k, c_.end()));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }
  std::vector<K> c_;
};

// Monic gcd via the Euclidean algorithm. Each remainder is renormalized to
// monic: over nested fields the raw remainder sequence picks up a common
// scalar factor per step whose size grows geometrically.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    b = b.monic();
    a = divmod(a, b).second;
    std::swap(a, b);
  }
  return a.monic();
}

// Extended Euclid: returns (g, u, v) monic g with u*a + v*b = g.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_xgcd(Poly<K> a, Poly<K> b) {
  Poly<K> u0(K(1)), v0, u1, v1(K(1));
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = b;
    b = r;
    Poly<K> u2 = u0 - q * u1, v2 = v0 - q * v1;
    u0 = u1;
    v0 = v1;
    u1 = u2;
    v1 = v2;
  }
  if (a.is_zero()) return {a, u0, v0};
  K lc = a.lead();
  return {a.monic(), u0.scaled(K(1) / lc), v0.scaled(K(1) / lc)};
}

// First `count` coefficients of a(t)/b(t) as power series; b[0] must be
// invertible.
template <class K>
std::vector<K> series_divide(const std::vector<K>& a, const std::vector<K>& b,
                             int count) {
  if (b.empty() || b[0] == K(0))
    throw std::domain_error("series_divide: divisor has zero constant term");
  std::vector<K> c(count, K(0));
  for (int i = 0; i < count; ++i) {
    K acc = i < static_cast<int>(a.size()) ? a[i] : K(0);
    for (int j = 1; j <= i && j < static_cast<int>(b.size()); ++j)
      acc = acc - c[i - j] * b[j];
    c[i] = acc / b[0];
  }
  return c;
}

}  // namespace qmirror
