#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qmirror/rational.hpp"

namespace qmirror {

// Power series in q truncated at a fixed order: coefficients for q^0..q^N.
// All arithmetic demands matching truncation orders; this catches silent
// precision loss at the call site.
template <class C>
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(int order) : c_(order + 1, C(0)) {
    if (order < 0) throw std::domain_error("QSeries: negative order");
  }
  explicit QSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::domain_error("QSeries: empty coefficient list");
  }

  static QSeries constant(const C& v, int order) {
    QSeries s(order);
    s.c_[0] = v;
    return s;
  }
  static QSeries monomial(int e, const C& v, int order) {
    QSeries s(order);
    if (e < 0 || e > order) throw std::domain_error("QSeries: monomial exponent");
    s.c_[e] = v;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const C& coeff(int k) const {
    if (k < 0 || k > order()) throw std::logic_error("QSeries: coefficient out of range");
    return c_[k];
  }
  void set_coeff(int k, const C& v) { c_.at(k) = v; }
  const std::vector<C>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!(c == C(0))) return false;
    return true;
  }

  QSeries operator-() const {
    QSeries out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    check_orders(a, b);
    QSeries out = a;
    for (int i = 0; i <= a.order(); ++i) out.c_[i] = out.c_[i] + b.c_[i];
    return out;
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    check_orders(a, b);
    QSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.c_[i] == C(0)) continue;
      for (int j = 0; i + j <= a.order(); ++j)
        out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
    }
    return out;
  }

  friend QSeries operator/(const QSeries& a, const QSeries& b) {
    check_orders(a, b);
    if (b.c_[0] == C(0))
      throw std::domain_error("QSeries: division needs invertible constant term");
    QSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      C acc = a.c_[i];
      for (int j = 1; j <= i; ++j) acc = acc - out.c_[i - j] * b.c_[j];
      out.c_[i] = acc / b.c_[0];
    }
    return out;
  }

  QSeries scaled(const C& s) const {
    QSeries out = *this;
    for (auto& c : out.c_) c = c * s;
    return out;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  // q d/dq: multiplies the k-th coefficient by k.
  QSeries q_ddq() const {
    QSeries out = *this;
    for (int k = 0; k <= order(); ++k) out.c_[k] = out.c_[k] * C(static_cast<long>(k));
    return out;
  }

  // Inverse of q d/dq with zero constant of integration; requires zero
  // constant term.
  QSeries integrate_du_u() const {
    if (!(c_[0] == C(0)))
      throw std::domain_error("QSeries: integrand must have zero constant term");
    QSeries out = *this;
    for (int k = 1; k <= order(); ++k) out.c_[k] = out.c_[k] / C(static_cast<long>(k));
    return out;
  }

  // exp of a series with zero constant term, via k e_k = sum j a_j e_{k-j}.
  QSeries exp_series() const {
    if (!(c_[0] == C(0)))
      throw std::domain_error("QSeries: exp needs zero constant term");
    QSeries out(order());
    out.c_[0] = C(1);
    for (int k = 1; k <= order(); ++k) {
      C acc(0);
      for (int j = 1; j <= k; ++j)
        acc = acc + c_[j] * C(static_cast<long>(j)) * out.c_[k - j];
      out.c_[k] = acc / C(static_cast<long>(k));
    }
    return out;
  }

  // log of a series with constant term 1.
  QSeries log_series() const {
    if (!(c_[0] == C(1)))
      throw std::domain_error("QSeries: log needs constant term 1");
    QSeries g = q_ddq() / *this;
    return g.integrate_du_u();
  }

  // f^r for rational r, constant term 1.
  QSeries pow_rational(const Rat& r) const {
    QSeries lg = log_series();
    return lg.scaled_by_rat(r).exp_series();
  }

  QSeries scaled_by_rat(const Rat& r) const;

  // Map coefficients through fn, producing a series over another ring.
  template <class D, class Fn>
  QSeries<D> map(Fn&& fn) const {
    std::vector<D> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(fn(v));
    return QSeries<D>(std::move(c));
  }

 private:
  static void check_orders(const QSeries& a, const QSeries& b) {
    if (a.order() != b.order())
      throw std::logic_error("QSeries: truncation order mismatch");
  }
  std::vector<C> c_;
};

template <class C>
QSeries<C> QSeries<C>::scaled_by_rat(const Rat& r) const {
  return scaled(C(r));
}
template <>
inline QSeries<Rat> QSeries<Rat>::scaled_by_rat(const Rat& r) const {
  return scaled(r);
}

// Solve G(y) = 0 for a series y with given constant term y0, lifting one
// q-order per step. The probe at order k exploits
// [G(y + q^k) - G(y)]_k = [G'(y)]_0 for k >= 1, so G stays a black box.
// Requires [G'(y)]_0 invertible; verifies G(y) = 0 before returning.
template <class C, class Fn>
QSeries<C> newton_solve(Fn&& G, const C& y0, int order) {
  QSeries<C> y = QSeries<C>::constant(y0, order);
  C slope(0);
  bool have_slope = false;
  for (int k = 1; k <= order; ++k) {
    QSeries<C> r = G(y);
    if (r.coeff(k) == C(0)) continue;
    if (!have_slope) {
      QSeries<C> probe = y + QSeries<C>::monomial(k, C(1), order);
      slope = (G(probe) - r).coeff(k);
      if (slope == C(0))
        throw std::domain_error("newton_solve: singular linearization");
      have_slope = true;
    }
    y = y + QSeries<C>::monomial(k, -(r.coeff(k) / slope), order);
  }
  if (!G(y).is_zero())
    throw std::logic_error("newton_solve: residual does not vanish");
  return y;
}

}  // namespace qmirror
