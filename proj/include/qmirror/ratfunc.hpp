#pragma once

#include <stdexcept>
#include <utility>

#include "qmirror/poly.hpp"

namespace qmirror {

// Finite Laurent expansion around a point: sum of c[i] * t^(lo + i) for
// 0 <= i < c.size(), where t is the local coordinate. Coefficients above
// `hi` were not computed and cannot be queried.
template <class K>
struct LaurentExpansion {
  int lo = 0;
  int hi = -1;
  std::vector<K> c;

  K coeff(int e) const {
    if (e > hi) throw std::logic_error("LaurentExpansion: coefficient not computed");
    if (e < lo) return K(0);
    return c[e - lo];
  }
};

// Reduced rational function over a field K. Invariants: den is monic,
// gcd(num, den) = 1, den != 0. Zero is 0/1.
template <class K>
class RatFunc {
 public:
  RatFunc() : num_(), den_(K(1)) {}
  RatFunc(const K& c) : num_(c), den_(K(1)) {}
  RatFunc(long c) : num_(K(c)), den_(K(1)) {}
  RatFunc(const Poly<K>& p) : num_(p), den_(K(1)) {}
  RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
  }

  static RatFunc variable() { return RatFunc(Poly<K>::monomial(1)); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.deg() <= 0 && den_.deg() == 0; }

  // constant term as a field element; only valid when is_constant()
  K constant() const {
    if (!is_constant()) throw std::domain_error("RatFunc: not a constant");
    return num_.coeff(0);
  }

  RatFunc operator-() const { return RatFunc(-num_, den_, no_reduce_tag{}); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  // canonical form makes structural equality semantic equality
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  K eval(const K& x) const {
    K d = den_.eval(x);
    if (d == K(0)) throw std::domain_error("RatFunc: evaluation at a pole");
    return num_.eval(x) / d;
  }

  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(),
                   den_ * den_);
  }

  // order of vanishing at x = p; negative at a pole; for the zero function
  // returns a large sentinel
  int valuation_at(const K& p) const {
    if (is_zero()) return 1 << 20;
    return root_multiplicity(num_, p) - root_multiplicity(den_, p);
  }

  int pole_order_at(const K& p) const {
    int v = valuation_at(p);
    return v < 0 ? -v : 0;
  }

  // Laurent expansion at x = p + t up to t^hi inclusive.
  LaurentExpansion<K> laurent_at(const K& p, int hi) const {
    LaurentExpansion<K> out;
    if (is_zero()) {
      out.lo = hi + 1;
      out.hi = hi;
      return out;
    }
    Poly<K> n = num_.shifted(p), d = den_.shifted(p);
    int vn = n.valuation(), vd = d.valuation();
    n = n.shift_down(vn);
    d = d.shift_down(vd);
    out.lo = vn - vd;
    out.hi = hi;
    int count = hi - out.lo + 1;
    if (count <= 0) {
      out.lo = hi + 1;
      out.c.clear();
      return out;
    }
    out.c = series_divide(n.coeffs(), d.coeffs(), count);
    return out;
  }

  K residue_at(const K& p) const {
    if (valuation_at(p) >= 0) return K(0);
    return laurent_at(p, -1).coeff(-1);
  }

  // f(s/x) as a rational function of x; s must be nonzero.
  RatFunc substitute_scaled_reciprocal(const K& s) const {
    if (s == K(0))
      throw std::domain_error("RatFunc: reciprocal substitution needs s != 0");
    if (is_zero()) return RatFunc();
    int dn = num_.deg(), dd = den_.deg();
    Poly<K> rn = num_.reversed_scaled(s), rd = den_.reversed_scaled(s);
    RatFunc out(rn, rd);
    int shift = dd - dn;
    if (shift >= 0)
      out = out * RatFunc(Poly<K>::monomial(shift));
    else
      out = out / RatFunc(Poly<K>::monomial(-shift));
    return out;
  }

  // Residue at infinity: the negative of the residue at 0 of x^-2 * f(1/x).
  K residue_at_infinity() const {
    if (is_zero()) return K(0);
    RatFunc g = substitute_scaled_reciprocal(K(1));
    g = g / RatFunc(Poly<K>::monomial(2));
    return -g.residue_at(K(0));
  }

 private:
  struct no_reduce_tag {};
  RatFunc(Poly<K> num, Poly<K> den, no_reduce_tag)
      : num_(std::move(num)), den_(std::move(den)) {}

  static int root_multiplicity(const Poly<K>& p, const K& r) {
    int m = 0;
    Poly<K> cur = p;
    Poly<K> lin{-r, K(1)};
    while (!cur.is_zero()) {
      auto [q, rem] = divmod(cur, lin);
      if (!rem.is_zero()) break;
      ++m;
      cur = q;
    }
    return m;
  }

  void reduce() {
    if (num_.is_zero()) {
      den_ = Poly<K>(K(1));
      return;
    }
    Poly<K> g = poly_gcd(num_, den_);
    if (g.deg() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    K lc = den_.lead();
    if (!(lc == K(1))) {
      num_ = num_.scaled(K(1) / lc);
      den_ = den_.scaled(K(1) / lc);
    }
  }

  Poly<K> num_, den_;
};

}  // namespace qmirror
