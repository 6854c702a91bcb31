// Hypergeometric q-series layer: direct-summation and Taylor oracles for the
// I-series, the D and M operators with their domain guards, the tower-shift
// identity between the two series families, and the algebraic L series.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "qmirror/hypergeom.hpp"

using namespace qmirror;

namespace {

Model quintic() {
  Model m;
  m.n = 5;
  m.a = {5};
  return m;
}

Rat fact(long k) {
  Rat out(1);
  for (long j = 2; j <= k; ++j) out = out * Rat(j);
  return out;
}

}  // namespace

TEST_CASE("leading I-series against direct summation") {
  Model m = quintic();
  HyperStack st = build_stack(m, 4, 0);
  for (int d = 0; d <= 4; ++d)
    CHECK(st.idot[0].coeff(d) == fact(5 * d) / fact(d).pow(5));
  CHECK(st.idot[0].coeff(2) == Rat(113400));

  Model m22;
  m22.n = 4;
  m22.a = {2, 2};
  HyperStack st22 = build_stack(m22, 3, 0);
  for (int d = 0; d <= 3; ++d)
    CHECK(st22.idot[0].coeff(d) == fact(2 * d) * fact(2 * d) / fact(d).pow(4));
}

TEST_CASE("deeper I-series against a Taylor oracle") {
  // w-Taylor coefficients of the q^1 term of the dotted series:
  // prod_{r=1..5}(5w+r) / ((w+1)^5 - w^5) = t0 + t1 w + t2 w^2 + ...
  Poly<Rat> num(Rat(1));
  for (long r = 1; r <= 5; ++r) num = num * Poly<Rat>{Rat(r), Rat(5)};
  Poly<Rat> den = Poly<Rat>{Rat(1), Rat(1)}.pow(5) - Poly<Rat>::monomial(5);
  auto t = series_divide(num.coeffs(), den.coeffs(), 3);
  CHECK(t[0] == Rat(120));
  CHECK(t[1] == Rat(770));
  CHECK(t[2] == Rat(575));

  // One M application strips the constant term and tilts by (1 + 1/w), so
  // the q^1 value at w = 0 becomes t1; the second application adds t2.
  Model m = quintic();
  HyperStack st = build_stack(m, 1, 2);
  CHECK(st.idot[1].coeff(1) == t[1]);
  CHECK(st.idot[2].coeff(1) == t[1] + t[2]);
  CHECK(st.idot[2].coeff(1) == Rat(1345));
}

TEST_CASE("operator D on the monomial q") {
  WSeries h = WSeries::monomial(1, WRat(1), 2);
  WSeries d = op_D(h);
  WRat w = WRat::variable();
  CHECK(d.coeff(0) == WRat(0));
  CHECK(d.coeff(1) == WRat(1) + WRat(1) / w);
  CHECK(d.coeff(2) == WRat(0));
}

TEST_CASE("class membership and the M guard") {
  Model m = quintic();
  WSeries fdot = series_Fdot(m, 2);
  CHECK(in_class_P(fdot));
  CHECK(in_class_P(series_Fddot(m, 2)));
  CHECK(in_class_P(op_M(fdot)));
  CHECK(!in_class_P(op_D(fdot)));  // D alone introduces 1/w

  WSeries bad = WSeries::constant(WRat(1), 1);
  bad.set_coeff(1, WRat(Poly<Rat>(Rat(1)), Poly<Rat>::monomial(1)));
  CHECK(!in_class_P(bad));
  CHECK_THROWS_AS(op_M(bad), std::domain_error);
}

TEST_CASE("plain and dotted series agree at w = 0") {
  Model m = quintic();
  CHECK(eval_w0(series_F(m, 3)) == eval_w0(series_Fdot(m, 3)));
  Model m33;
  m33.n = 6;
  m33.a = {3, 3};
  CHECK(eval_w0(series_F(m33, 2)) == eval_w0(series_Fdot(m33, 2)));
}

TEST_CASE("tower shift between the two families") {
  Model m;
  m.n = 4;
  m.a = {2, 2};
  int order = 2, pmax = 2;
  HyperStack st = build_stack(m, order, pmax + m.codim());
  for (int p = 0; p <= pmax; ++p) {
    CHECK(st.m_fdot[p] == st.m_fddot[p + m.codim()]);
    CHECK(st.iddot[p + m.codim()] == st.idot[p]);
  }
  // The undotted start of the second family is the constant series 1.
  CHECK(st.iddot[0] == QSeries<Rat>::constant(Rat(1), order));
}

TEST_CASE("independent normalization route") {
  Model m = quintic();
  int order = 2, depth = 3;
  HyperStack st = build_stack(m, order, depth);
  auto tower = normalized_tower(series_Fdot(m, order), st.idot, depth);
  for (int s = 0; s <= depth; ++s)
    CHECK(tower[s] == st.m_fdot[s] / embed_w(st.idot[s]));
}

TEST_CASE("algebraic L series and its potential") {
  Model m2;
  m2.n = 2;
  m2.a = {2};
  QSeries<Rat> l2 = series_L(m2, 3);
  CHECK(l2.coeff(0) == Rat(1));
  CHECK(l2.coeff(1) == Rat(2));
  CHECK(l2.coeff(2) == Rat(6));
  CHECK(l2.coeff(3) == Rat(20));

  Model m = quintic();
  QSeries<Rat> l = series_L(m, 2);
  CHECK(l.coeff(1) == Rat(625));
  QSeries<Rat> ln = l;
  for (int t = 1; t < 5; ++t) ln = ln * l;
  QSeries<Rat> base = QSeries<Rat>::constant(Rat(1), 2) +
                      QSeries<Rat>::monomial(1, Rat(-3125), 2);
  CHECK(ln * base == QSeries<Rat>::constant(Rat(1), 2));

  QSeries<Rat> mu = series_mu(m, 2);
  CHECK(mu.coeff(0) == Rat(0));
  CHECK(mu.coeff(1) == Rat(625));
  CHECK(mu.q_ddq() == l - QSeries<Rat>::constant(Rat(1), 2));

  QSeries<Rat> lg = series_log1m(m, 2);
  CHECK(lg.coeff(0) == Rat(0));
  CHECK(lg.coeff(1) == Rat(-3125));
  CHECK(lg.coeff(2) == Rat(-3125) * Rat(3125) / Rat(2));
}
