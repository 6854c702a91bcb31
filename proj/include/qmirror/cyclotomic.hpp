#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmirror/poly.hpp"
#include "qmirror/rational.hpp"

namespace qmirror {

// Element of the m-th cyclotomic field Q(zeta_m) = Q[z]/Phi_m(z), held as a
// rational polynomial in zeta of degree < deg Phi_m. Index 0 marks a plain
// rational scalar which promotes to any field it meets; mixing two distinct
// nonzero indices throws.
class Cyclo {
 public:
  Cyclo() : m_(0), c_{Rat(0)} {}
  Cyclo(long v) : m_(0), c_{Rat(v)} {}
  Cyclo(int v) : m_(0), c_{Rat(v)} {}
  Cyclo(const Rat& v) : m_(0), c_{v} {}

  // zeta_m, a primitive m-th root of unity
  static Cyclo root_of_unity(int m) {
    if (m < 1) throw std::domain_error("Cyclo: index must be positive");
    Cyclo z;
    z.m_ = m;
    z.c_.assign(field_degree(m), Rat(0));
    Poly<Rat> zeta = Poly<Rat>::monomial(1);
    zeta = reduce_mod(zeta, m);
    for (int i = 0; i <= zeta.deg(); ++i) z.c_[i] = zeta.coeff(i);
    return z;
  }

  int index() const { return m_; }

  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }

  Rat rational_value() const {
    if (!is_rational())
      throw std::domain_error("Cyclo: value has an irrational component");
    return c_[0];
  }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  Cyclo operator-() const {
    Cyclo out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
  }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = promote(a, b);
    for (size_t i = 0; i < y.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = promote(a, b);
    Poly<Rat> p = x.as_poly() * y.as_poly();
    return from_poly(reduce_mod(p, x.m_), x.m_);
  }

  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }

  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }

  // Phi_m is irreducible over Q, so every nonzero element is invertible.
  Cyclo inv() const {
    if (is_zero()) throw std::domain_error("Cyclo: inverse of zero");
    if (m_ == 0 || field_degree(m_) == 1) {
      Cyclo out = *this;
      out.c_[0] = c_[0].inv();
      return out;
    }
    auto [g, u, v] = poly_xgcd(as_poly(), minimal_poly(m_));
    (void)v;
    if (g.deg() != 0)
      throw std::logic_error("Cyclo: minimal polynomial not coprime to element");
    Poly<Rat> inv_poly = u.scaled(g.coeff(0).inv());
    return from_poly(reduce_mod(inv_poly, m_), m_);
  }

  Cyclo pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyclo base = *this, out(1);
    while (e > 0) {
      if (e & 1) out = out * base;
      base = base * base;
      e >>= 1;
    }
    return out;
  }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = promote(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  std::string str() const {
    std::string out = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ", ";
      out += c_[i].str();
    }
    out += "] (zeta_" + std::to_string(m_) + ")";
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclo& v) {
    return os << v.str();
  }

  static const Poly<Rat>& minimal_poly(int m) {
    static std::map<int, Poly<Rat>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // Phi_m = (z^m - 1) / prod of Phi_d over proper divisors d of m
    Poly<Rat> num = Poly<Rat>::monomial(m) - Poly<Rat>(Rat(1));
    for (int d = 1; d < m; ++d)
      if (m % d == 0) num = num / minimal_poly(d);
    return cache.emplace(m, num).first->second;
  }

  static int field_degree(int m) { return minimal_poly(m).deg(); }

 private:
  Poly<Rat> as_poly() const { return Poly<Rat>(c_); }

  static Poly<Rat> reduce_mod(const Poly<Rat>& p, int m) {
    if (m == 0) return p;  // index 0 is a plain rational, nothing to reduce
    return divmod(p, minimal_poly(m)).second;
  }

  static Cyclo from_poly(const Poly<Rat>& p, int m) {
    Cyclo out;
    out.m_ = m;
    out.c_.assign(m == 0 ? 1 : field_degree(m), Rat(0));
    for (int i = 0; i <= p.deg(); ++i) out.c_[i] = p.coeff(i);
    return out;
  }

  static std::pair<Cyclo, Cyclo> promote(const Cyclo& a, const Cyclo& b) {
    if (a.m_ == b.m_) return {a, b};
    if (a.m_ == 0) return {promote_to(a, b.m_), b};
    if (b.m_ == 0) return {a, promote_to(b, a.m_)};
    throw std::logic_error("Cyclo: mixing distinct cyclotomic fields");
  }

  static Cyclo promote_to(const Cyclo& a, int m) {
    Cyclo out;
    out.m_ = m;
    out.c_.assign(field_degree(m), Rat(0));
    out.c_[0] = a.c_[0];
    return out;
  }

  int m_;
  std::vector<Rat> c_;
};

}  // namespace qmirror
