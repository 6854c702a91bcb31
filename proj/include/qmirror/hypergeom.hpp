#pragma once

#include <vector>

#include "qmirror/model.hpp"
#include "qmirror/poly.hpp"
#include "qmirror/qseries.hpp"
#include "qmirror/ratfunc.hpp"
#include "qmirror/rational.hpp"

namespace qmirror {

// Coefficients of the hypergeometric q-series are rational functions of w.
using WRat = RatFunc<Rat>;
using WSeries = QSeries<WRat>;

// The three basic series. Coefficient of q^d:
//   F:      prod_k prod_{r=1..a_k d}(a_k w + r)  /  prod_{r=1..d}(w+r)^n
//   Fdot:   same numerator                       /  prod_{r=1..d}((w+r)^n - w^n)
//   Fddot:  prod_k prod_{r=0..a_k d-1}(a_k w + r)/  prod_{r=1..d}((w+r)^n - w^n)
WSeries series_F(const Model& m, int order);
WSeries series_Fdot(const Model& m, int order);
WSeries series_Fddot(const Model& m, int order);

// Membership predicate: constant q-term 1 and every coefficient regular at
// w = 0.
bool in_class_P(const WSeries& h);

// D H = H + (q/w) dH/dq, acting per coefficient as H_d -> (1 + d/w) H_d.
WSeries op_D(const WSeries& h);

// M H = D(H / H(0,q)). Input must satisfy in_class_P; the output is checked
// to satisfy it again.
WSeries op_M(const WSeries& h);

// [H, M H, M^2 H, ..., M^depth H]
std::vector<WSeries> power_tower(const WSeries& h, int depth);

// Evaluation at w = 0, coefficientwise.
QSeries<Rat> eval_w0(const WSeries& h);

// Lift a rational q-series into constant-in-w coefficients.
WSeries embed_w(const QSeries<Rat>& s);

// M-power towers of Fdot and Fddot together with their w = 0 evaluations
// I_s = (M^s F)(0, q).
struct HyperStack {
  Model model;
  std::vector<WSeries> m_fdot;
  std::vector<WSeries> m_fddot;
  std::vector<QSeries<Rat>> idot;
  std::vector<QSeries<Rat>> iddot;
};
HyperStack build_stack(const Model& m, int order, int depth);

// Alternative normalization route: T[0] = H / I[0],
// T[s] = (1/I[s]) D T[s-1]. Coincides with M^s H / I[s] when I[s] is the
// w = 0 evaluation of M^s H; computed independently as a cross-check.
std::vector<WSeries> normalized_tower(const WSeries& h,
                                      const std::vector<QSeries<Rat>>& i_series,
                                      int depth);

// L = (1 - a^a q)^(-1/n) and its potential mu with q d(mu)/dq = L - 1.
QSeries<Rat> series_L(const Model& m, int order);
QSeries<Rat> series_mu(const Model& m, int order);
QSeries<Rat> series_log1m(const Model& m, int order);  // log(1 - a^a q)

}  // namespace qmirror
