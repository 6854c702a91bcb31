#include "qmirror/hypergeom.hpp"

#include <stdexcept>

namespace qmirror {

namespace {

Poly<Rat> linear(const Rat& c1, const Rat& c0) { return Poly<Rat>{c0, c1}; }

// prod_k prod_{r=r0..a_k d - 1 + r0}(a_k w + r) with r0 = 1 or 0
Poly<Rat> upper_product(const Model& m, long d, long r0) {
  Poly<Rat> out(Rat(1));
  for (long ak : m.a)
    for (long r = r0; r <= ak * d - 1 + r0; ++r)
      out = out * linear(Rat(ak), Rat(r));
  return out;
}

Poly<Rat> pow_shift(long r, int n) {
  // (w + r)^n
  return linear(Rat(1), Rat(r)).pow(n);
}

WSeries assemble(const Model& m, int order, bool dotted_denominator,
                 long numerator_r0) {
  WSeries out(order);
  for (int d = 0; d <= order; ++d) {
    Poly<Rat> num = upper_product(m, d, numerator_r0);
    Poly<Rat> den(Rat(1));
    for (long r = 1; r <= d; ++r) {
      Poly<Rat> f = pow_shift(r, m.n);
      if (dotted_denominator) f = f - Poly<Rat>::monomial(m.n);
      den = den * f;
    }
    out.set_coeff(d, WRat(num, den));
  }
  return out;
}

}  // namespace

WSeries series_F(const Model& m, int order) { return assemble(m, order, false, 1); }
WSeries series_Fdot(const Model& m, int order) { return assemble(m, order, true, 1); }
WSeries series_Fddot(const Model& m, int order) { return assemble(m, order, true, 0); }

bool in_class_P(const WSeries& h) {
  if (!(h.coeff(0) == WRat(1))) return false;
  for (int d = 0; d <= h.order(); ++d)
    if (h.coeff(d).pole_order_at(Rat(0)) > 0) return false;
  return true;
}

WSeries op_D(const WSeries& h) {
  WSeries out = h;
  WRat w = WRat::variable();
  for (int d = 1; d <= h.order(); ++d)
    out.set_coeff(d, h.coeff(d) * (WRat(1) + WRat(Rat(d)) / w));
  return out;
}

QSeries<Rat> eval_w0(const WSeries& h) {
  return h.map<Rat>([](const WRat& c) { return c.eval(Rat(0)); });
}

WSeries embed_w(const QSeries<Rat>& s) {
  return s.map<WRat>([](const Rat& c) { return WRat(c); });
}

WSeries op_M(const WSeries& h) {
  if (!in_class_P(h)) throw std::domain_error("op_M: input outside class P");
  WSeries g = h / embed_w(eval_w0(h));
  // (H/H(0,q))(0,q) = 1, so the q^d coefficient of g vanishes at w=0 for
  // d >= 1 and (q/w) d/dq keeps every coefficient regular there.
  for (int d = 1; d <= g.order(); ++d)
    if (!(g.coeff(d).eval(Rat(0)) == Rat(0)))
      throw std::logic_error("op_M: normalization lost the w=0 anchor");
  WSeries out = op_D(g);
  if (!in_class_P(out)) throw std::logic_error("op_M: output left class P");
  return out;
}

std::vector<WSeries> power_tower(const WSeries& h, int depth) {
  std::vector<WSeries> t;
  t.reserve(depth + 1);
  t.push_back(h);
  for (int s = 1; s <= depth; ++s) t.push_back(op_M(t.back()));
  return t;
}

HyperStack build_stack(const Model& m, int order, int depth) {
  HyperStack st;
  st.model = m;
  st.m_fdot = power_tower(series_Fdot(m, order), depth);
  st.m_fddot = power_tower(series_Fddot(m, order), depth);
  for (const auto& t : st.m_fdot) st.idot.push_back(eval_w0(t));
  for (const auto& t : st.m_fddot) st.iddot.push_back(eval_w0(t));
  return st;
}

std::vector<WSeries> normalized_tower(const WSeries& h,
                                      const std::vector<QSeries<Rat>>& i_series,
                                      int depth) {
  if (static_cast<int>(i_series.size()) < depth + 1)
    throw std::invalid_argument("normalized_tower: not enough I series");
  std::vector<WSeries> t;
  t.reserve(depth + 1);
  t.push_back(h / embed_w(i_series[0]));
  for (int s = 1; s <= depth; ++s)
    t.push_back(op_D(t.back()) / embed_w(i_series[s]));
  return t;
}

QSeries<Rat> series_L(const Model& m, int order) {
  QSeries<Rat> base = QSeries<Rat>::constant(Rat(1), order);
  if (order >= 1) base.set_coeff(1, -m.a_to_a());
  return base.pow_rational(Rat(-1, m.n));
}

QSeries<Rat> series_mu(const Model& m, int order) {
  QSeries<Rat> l = series_L(m, order);
  return (l - QSeries<Rat>::constant(Rat(1), order)).integrate_du_u();
}

QSeries<Rat> series_log1m(const Model& m, int order) {
  QSeries<Rat> base = QSeries<Rat>::constant(Rat(1), order);
  if (order >= 1) base.set_coeff(1, -m.a_to_a());
  return base.log_series();
}

}  // namespace qmirror
