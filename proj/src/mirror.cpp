#include "qmirror/mirror.hpp"

#include <stdexcept>

namespace qmirror {

namespace {

// w -> alpha / h, coefficientwise
std::vector<HRat> restrict_tower_coeffs(const WSeries& s, const Rat& alpha) {
  std::vector<HRat> out;
  out.reserve(s.order() + 1);
  for (int d = 0; d <= s.order(); ++d)
    out.push_back(s.coeff(d).substitute_scaled_reciprocal(alpha));
  return out;
}

}  // namespace

BiSeries build_bilinear(const HyperStack& st, const Rat& alpha) {
  const Model& m = st.model;
  int n = m.n, l = m.codim();
  int depth = n - 1 + l;
  if (static_cast<int>(st.m_fdot.size()) <= depth ||
      static_cast<int>(st.m_fddot.size()) <= depth)
    throw std::invalid_argument("build_bilinear: stack depth too small");
  int order = st.m_fdot[0].order();

  // the w = 0 shadow of the M-shift identity, cheap and load-bearing
  for (int p = 0; p + l <= depth; ++p)
    if (!(st.iddot[p + l] == st.idot[p]))
      throw std::logic_error("build_bilinear: I-series shift identity failed");

  auto normalized = [&](const std::vector<WSeries>& tower,
                        const std::vector<QSeries<Rat>>& i_series, int s) {
    return restrict_tower_coeffs(tower[s] / embed_w(i_series[s]), alpha);
  };

  BiSeries out;
  out.terms.assign(order + 1, {});
  auto add_product = [&](const std::vector<HRat>& x, const std::vector<HRat>& y) {
    for (int d = 0; d <= order; ++d)
      for (int d1 = 0; d1 <= d; ++d1)
        out.terms[d].push_back({x[d1], y[d - d1]});
  };

  for (int p = 0; p <= n - 1 - l; ++p)
    add_product(normalized(st.m_fdot, st.idot, p),
                normalized(st.m_fddot, st.iddot, n - 1 - p));
  for (int p = 1; p <= l; ++p)
    add_product(normalized(st.m_fddot, st.iddot, n - 1 + p),
                normalized(st.m_fdot, st.idot, n - p));
  return out;
}

Rat iterated_pair_residue(const HRat& f, const HRat& g) {
  if (f.is_zero() || g.is_zero()) return Rat(0);
  int pg = g.pole_order_at(Rat(0));
  auto gl = g.laurent_at(Rat(0), 0);
  auto fl = f.laurent_at(Rat(0), pg + 1);
  Rat out(0);
  Rat sign(1);
  for (int t = 0; t <= pg; ++t) {
    out += sign * gl.coeff(-t) * fl.coeff(t + 1);
    sign = -sign;
  }
  return out;
}

QSeries<Rat> double_residue_series(const Model& m, int order, const Rat& alpha) {
  if (alpha.is_zero())
    throw std::invalid_argument("double_residue_series: alpha must be nonzero");
  int depth = m.n - 1 + m.codim();
  HyperStack st = build_stack(m, order, depth);
  BiSeries bb = build_bilinear(st, alpha);

  // e^{-mu alpha / h}, per q-order a polynomial in 1/h of degree <= order
  QSeries<Rat> mu = series_mu(m, order);
  QSeries<HRat> earg(order);
  Poly<Rat> hvar = Poly<Rat>::monomial(1);
  for (int d = 1; d <= order; ++d)
    earg.set_coeff(d, HRat(Poly<Rat>(-(mu.coeff(d) * alpha)), hvar));
  QSeries<HRat> e = earg.exp_series();

  QSeries<Rat> out(order);
  for (int d = 0; d <= order; ++d) {
    Rat acc(0);
    // distribute the two exponential factors over the separable terms
    for (int de = 0; de <= d; ++de)
      for (int df = 0; de + df <= d; ++df)
        for (const BiTerm& t : bb.terms[d - de - df])
          acc += iterated_pair_residue(e.coeff(de) * t.f, e.coeff(df) * t.g);
    out.set_coeff(d, acc);
  }
  return out;
}

QSeries<Rat> series_A(const Model& m, int order) {
  int n = m.n, l = m.codim();
  QSeries<Rat> mu = series_mu(m, order);
  QSeries<Rat> lg = series_log1m(m, order);
  QSeries<Rat> out =
      mu.scaled(Rat(n, 24) * (Rat(n - 1) - Rat(2) * m.sum_inv_a())) -
      lg.scaled(Rat(3 * (n - 1 - l) * (n - 1 - l) + (n - 2), 24));
  if (n - 2 - l >= 0) {
    HyperStack st = build_stack(m, order, n - 2 - l);
    for (int p = 0; p <= n - 2 - l; ++p)
      out = out - st.idot[p].log_series().scaled(binomial(n - p - l, 2));
  }
  return out;
}

QSeries<Rat> a_block(const Model& m, int order) {
  return series_A(m, order).q_ddq().scaled(Rat(1, 2));
}

QSeries<Rat> a_block_residue_route(const Model& m, int order, const Rat& alpha) {
  QSeries<Rat> lhs = double_residue_series(m, order, alpha);
  return (series_L(m, order) * lhs).scaled(alpha * Rat(1, 2));
}

QSeries<Rat> b_block_closed(const Model& m, int order) {
  int n = m.n, l = m.codim();
  QSeries<Rat> mu = series_mu(m, order);
  QSeries<Rat> logl = series_L(m, order).log_series();
  Rat mu_weight = Rat(n) * m.sum_inv_a() - binomial(n, 2);
  return (mu.scaled(mu_weight) - logl.scaled(Rat(static_cast<long>(n) * (l + 1), 2)))
      .scaled(Rat(1, 24));
}

QSeries<Rat> b_block_direct(const Model& m, int order, const Rat& scale,
                            int shift) {
  return b_block_direct_on(m, order, root_of_unity_ray(m.n, scale, shift));
}

QSeries<Rat> series_G10(const Model& m, int order) {
  return series_A(m, order).scaled(Rat(1, 2)) + b_block_closed(m, order);
}

QSeries<Rat> series_rhs_total(const Model& m, int order) {
  return a_block(m, order) + b_block_closed(m, order).q_ddq();
}

}  // namespace qmirror
