#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "qmirror/cyclotomic.hpp"
#include "qmirror/model.hpp"
#include "qmirror/poly.hpp"
#include "qmirror/qseries.hpp"
#include "qmirror/ratfunc.hpp"
#include "qmirror/rational.hpp"

namespace qmirror {

// Weight configurations. Restriction to the origin is realized two ways:
//  - a ray alpha_i = eps * c_i over Q(eps), for identities that hold along
//    every ray with distinct nonzero entries;
//  - a root-of-unity configuration alpha_i = s * zeta_n^(i-1+shift) over
//    Q(zeta_n), on which every elementary symmetric function sigma_1..
//    sigma_{n-1} vanishes. Quantities whose off-origin corrections lie in
//    the ideal generated by those sigmas are exact there.
using EpsRat = RatFunc<Rat>;

std::vector<EpsRat> epsilon_ray(const std::vector<Rat>& c);
std::vector<Cyclo> root_of_unity_ray(int n, const Rat& scale, int shift);

// Value of a ray-restricted quantity at the ray origin.
Rat ray_limit(const EpsRat& v);  // evaluation at eps = 0; throws on a pole
Rat ray_limit(const Cyclo& v);   // asserts the value is rational

template <class K>
QSeries<Rat> ray_limit_series(const QSeries<K>& s) {
  return s.template map<Rat>([](const K& c) { return ray_limit(c); });
}

template <class K>
K elementary_symmetric(const std::vector<K>& xs, int r) {
  // e_r via the staircase recurrence
  if (r < 0 || r > static_cast<int>(xs.size()))
    throw std::domain_error("elementary_symmetric: index out of range");
  std::vector<K> e(r + 1, K(0));
  e[0] = K(1);
  for (size_t i = 0; i < xs.size(); ++i)
    for (int j = std::min<int>(r, static_cast<int>(i) + 1); j >= 1; --j)
      e[j] = e[j] + e[j - 1] * xs[i];
  return e[r];
}

// r-th elementary symmetric polynomial of the shifted values {y - alpha_k}
template <class K>
K stilde(const std::vector<K>& alpha, int r, const K& y) {
  std::vector<K> shifted;
  shifted.reserve(alpha.size());
  for (const K& a : alpha) shifted.push_back(y - a);
  return elementary_symmetric(shifted, r);
}

template <class K>
K vertex_weight(const std::vector<K>& alpha, int i) {
  K out(1);
  for (size_t k = 0; k < alpha.size(); ++k)
    if (static_cast<int>(k) != i) out = out * (alpha[i] - alpha[k]);
  return out;
}

template <class K>
K c_coeff(const Model& m, const std::vector<K>& alpha, int i) {
  K out(0);
  for (size_t k = 0; k < alpha.size(); ++k)
    if (static_cast<int>(k) != i) out = out + K(1) / (alpha[k] - alpha[i]);
  for (long ak : m.a) out = out + K(1) / (K(ak) * alpha[i]);
  return out;
}

// The functional equation: stilde_n(Y) - q a^a Y^n - stilde_n(alpha_i),
// evaluated on a series Y. stilde_n(y) is the full product prod(y - alpha_k).
template <class K>
QSeries<K> functional_residual(const Model& m, const std::vector<K>& alpha,
                               int i, const QSeries<K>& y) {
  int order = y.order();
  QSeries<K> prod = QSeries<K>::constant(K(1), order);
  for (const K& a : alpha) prod = prod * (y - QSeries<K>::constant(a, order));
  QSeries<K> yn = QSeries<K>::constant(K(1), order);
  for (int t = 0; t < m.n; ++t) yn = yn * y;
  QSeries<K> rhs =
      QSeries<K>::monomial(1, K(m.a_to_a()), order) * yn +
      QSeries<K>::constant(stilde(alpha, m.n, alpha[i]), order);
  return prod - rhs;
}

// Branch of the functional equation through alpha_i.
template <class K>
QSeries<K> solve_L(const Model& m, const std::vector<K>& alpha, int i,
                   int order) {
  auto G = [&](const QSeries<K>& y) {
    return functional_residual(m, alpha, i, y);
  };
  return newton_solve(G, alpha[i], order);
}

// xi with q d(xi)/dq = L - alpha_i and xi(0) = 0.
template <class K>
QSeries<K> xi_from_L(const QSeries<K>& l, const K& alpha_i) {
  return (l - QSeries<K>::constant(alpha_i, l.order())).integrate_du_u();
}

// q^d coefficient of the vertex series, a rational function of hbar:
//   prod_k prod_{l=1..a_k d}(a_k alpha_i + l hbar)
//   / prod_{l=1..d}[ prod_k(alpha_i - alpha_k + l hbar) - prod_k(alpha_i - alpha_k) ]
// The subtracted product vanishes (the k = i factor is zero), so each
// denominator factor vanishes simply at hbar = 0: a pole of order d.
template <class K>
RatFunc<K> ydot_coeff(const Model& m, const std::vector<K>& alpha, int i,
                      int d) {
  Poly<K> num(K(1));
  for (long ak : m.a)
    for (long l = 1; l <= ak * d; ++l)
      num = num * Poly<K>{K(ak) * alpha[i], K(l)};
  K at_zero(1);
  for (size_t k = 0; k < alpha.size(); ++k) at_zero = at_zero * (alpha[i] - alpha[k]);
  Poly<K> den(K(1));
  for (long l = 1; l <= d; ++l) {
    Poly<K> factor(K(1));
    for (size_t k = 0; k < alpha.size(); ++k)
      factor = factor * Poly<K>{alpha[i] - alpha[k], K(l)};
    den = den * (factor - Poly<K>(at_zero));
  }
  return RatFunc<K>(num, den);
}

template <class K>
QSeries<RatFunc<K>> ydot_series(const Model& m, const std::vector<K>& alpha,
                                int i, int order) {
  QSeries<RatFunc<K>> out(order);
  for (int d = 0; d <= order; ++d) out.set_coeff(d, ydot_coeff(m, alpha, i, d));
  return out;
}

// Expansion e^{-xi/hbar} Ydot = sum_m Phi^(m) hbar^m. The product has no
// principal part at hbar = 0 in any q-order; that cancellation is asserted,
// not assumed.
template <class K>
struct PhiExpansion {
  std::vector<QSeries<K>> phi;  // phi[m]: q-series of the hbar^m coefficients
};

template <class K>
PhiExpansion<K> phi_expansion(const Model& m, const std::vector<K>& alpha,
                              int i, int order, int m_max) {
  QSeries<K> xi = xi_from_L(solve_L(m, alpha, i, order), alpha[i]);
  using HRat = RatFunc<K>;
  Poly<K> hvar = Poly<K>::monomial(1);
  QSeries<HRat> arg(order);
  for (int d = 1; d <= order; ++d)
    arg.set_coeff(d, HRat(Poly<K>(-xi.coeff(d)), hvar));
  QSeries<HRat> t = arg.exp_series() * ydot_series(m, alpha, i, order);

  PhiExpansion<K> out;
  out.phi.assign(m_max + 1, QSeries<K>(order));
  for (int d = 0; d <= order; ++d) {
    const HRat& td = t.coeff(d);
    if (td.pole_order_at(K(0)) > 0)
      throw std::logic_error(
          "phi_expansion: principal part survives at q-order " +
          std::to_string(d));
    auto taylor = td.laurent_at(K(0), m_max);
    for (int mm = 0; mm <= m_max; ++mm)
      out.phi[mm].set_coeff(d, taylor.coeff(mm));
  }
  return out;
}

// ---- residue-sum kernels over a fixed weight configuration ----

// Literal endpoint sum: sum_j alpha_j^m / prod_{k != j}(alpha_j - alpha_k)^{d+1}.
template <class K>
K power_kernel_endpoint_sum(const std::vector<K>& alpha, int d, int m) {
  K out(0);
  for (size_t j = 0; j < alpha.size(); ++j) {
    K num = alpha[j];
    K power(1);
    for (int t = 0; t < m; ++t) power = power * num;
    K vw = vertex_weight(alpha, static_cast<int>(j));
    K den(1);
    for (int t = 0; t <= d; ++t) den = den * vw;
    out = out + power / den;
  }
  return out;
}

// Residue of num / prod_k(z - alpha_k)^p at alpha_j via a local Taylor
// expansion: shift to the pole, divide by the nonvanishing cofactor, read
// the coefficient of (z - alpha_j)^{p-1}. Pure polynomial arithmetic.
template <class K>
K pole_residue(const Poly<K>& num, const std::vector<K>& alpha, int j, int p) {
  Poly<K> cof(K(1));
  for (size_t k = 0; k < alpha.size(); ++k)
    if (static_cast<int>(k) != j) cof = cof * Poly<K>{-alpha[k], K(1)}.pow(p);
  auto taylor = series_divide(num.shifted(alpha[j]).coeffs(),
                              cof.shifted(alpha[j]).coeffs(), p);
  return taylor[p - 1];
}

// Minus the residue at infinity of num / den for monic polynomial den: the
// z^{deg den - 1} coefficient of num mod den.
template <class K>
K finite_residue_total(const Poly<K>& num, const Poly<K>& den) {
  return divmod(num, den).second.coeff(den.deg() - 1) / den.lead();
}

// Full residue sum of the symmetrized kernel
//   sum_i (z - alpha_i)^d z^m / prod_k(z - alpha_k)^{d+1}      (d >= 1)
//   z^m / prod_k(z - alpha_k)                                  (d = 0)
// over all finite poles; equals minus the residue at infinity, and that
// equality is asserted through an independent route.
template <class K>
K power_kernel_residue_sum(const std::vector<K>& alpha, int d, int m) {
  Poly<K> den(K(1));
  for (const K& a : alpha) den = den * Poly<K>{-a, K(1)}.pow(d + 1);
  Poly<K> num;
  if (d == 0) {
    num = Poly<K>::monomial(m);
  } else {
    for (const K& a : alpha)
      num = num + Poly<K>{-a, K(1)}.pow(d) * Poly<K>::monomial(m);
  }
  K out(0);
  for (size_t j = 0; j < alpha.size(); ++j)
    out = out + pole_residue(num, alpha, static_cast<int>(j), d + 1);
  if (!(out == finite_residue_total(num, den)))
    throw std::logic_error("power_kernel_residue_sum: residues do not close");
  return out;
}

// f(z, alpha) = sum of terms coef * sigma_{sym_index} * alpha-monomial * z^t,
// an element of the ideal <sigma_1..sigma_{n-1}> inside Q[alpha][z] as long
// as every sym_index is between 1 and n-1.
struct IdealTerm {
  Rat coef;
  int sym_index = 1;
  std::vector<int> alpha_exps;  // may be shorter than n; missing = 0
  int z_exp = 0;
};
using IdealPolySpec = std::vector<IdealTerm>;

template <class K>
Poly<K> instantiate_f(const IdealPolySpec& spec, const std::vector<K>& alpha) {
  Poly<K> out;
  for (const IdealTerm& t : spec) {
    K c = K(t.coef) * elementary_symmetric(alpha, t.sym_index);
    for (size_t i = 0; i < t.alpha_exps.size(); ++i)
      for (int e = 0; e < t.alpha_exps[i]; ++e) c = c * alpha[i];
    out = out + Poly<K>::monomial(t.z_exp, c);
  }
  return out;
}

template <class K>
K ideal_kernel_endpoint_sum(const std::vector<K>& alpha, const Poly<K>& f,
                            int m) {
  K out(0);
  for (size_t j = 0; j < alpha.size(); ++j) {
    K vw = vertex_weight(alpha, static_cast<int>(j));
    K den(1);
    for (int t = 0; t <= m; ++t) den = den * vw;
    out = out + f.eval(alpha[j]) / den;
  }
  return out;
}

template <class K>
K ideal_kernel_residue_sum(const std::vector<K>& alpha, const Poly<K>& f,
                           int m) {
  Poly<K> den(K(1));
  for (const K& a : alpha) den = den * Poly<K>{-a, K(1)}.pow(m + 1);
  Poly<K> num;
  if (m == 0) {
    num = f;
  } else {
    for (const K& a : alpha) num = num + Poly<K>{-a, K(1)}.pow(m) * f;
  }
  K out(0);
  for (size_t j = 0; j < alpha.size(); ++j)
    out = out + pole_residue(num, alpha, static_cast<int>(j), m + 1);
  if (!(out == finite_residue_total(num, den)))
    throw std::logic_error("ideal_kernel_residue_sum: residues do not close");
  return out;
}

}  // namespace qmirror
