// Truncated power series in q: ring operations with strict truncation-order
// matching, exp/log, rational powers, the q d/dq derivation and its inverse,
// and the Newton solver for implicit equations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "qmirror/qseries.hpp"
#include "qmirror/rational.hpp"

using qmirror::QSeries;
using qmirror::Rat;
using qmirror::binomial;
using qmirror::newton_solve;

using S = QSeries<Rat>;

namespace {
S one_plus_q(int order) {
  S f = S::constant(Rat(1), order);
  f.set_coeff(1, Rat(1));
  return f;
}
}  // namespace

TEST_CASE("ring operations") {
  S f = one_plus_q(3);
  S sq = f * f;
  CHECK(sq.coeff(0) == Rat(1));
  CHECK(sq.coeff(1) == Rat(2));
  CHECK(sq.coeff(2) == Rat(1));
  CHECK(sq.coeff(3) == Rat(0));
  CHECK(sq / f == f);
  CHECK((f - f).is_zero());
  CHECK(f + f == f.scaled(Rat(2)));
  CHECK(f.scaled_by_rat(Rat(1, 2)) == f.scaled(Rat(1, 2)));
}

TEST_CASE("order mismatch is a hard error") {
  S a(2), b(3);
  CHECK_THROWS_AS(a + b, std::logic_error);
  CHECK_THROWS_AS(a * b, std::logic_error);
  CHECK_THROWS_AS(a.coeff(5), std::logic_error);
}

TEST_CASE("division requires invertible constant term") {
  S f = S::monomial(1, Rat(1), 3);
  CHECK_THROWS_AS(one_plus_q(3) / f, std::domain_error);
}

TEST_CASE("exp and log invert each other") {
  S f = S::monomial(1, Rat(1), 5) + S::monomial(2, Rat(2), 5) +
        S::monomial(4, Rat(-3, 7), 5);
  CHECK(f.exp_series().log_series() == f);
  S g = one_plus_q(5) + S::monomial(3, Rat(5, 2), 5);
  CHECK(g.log_series().exp_series() == g);
  // exp(q) has coefficients 1/k!.
  S e = S::monomial(1, Rat(1), 4).exp_series();
  CHECK(e.coeff(3) == Rat(1, 6));
  CHECK(e.coeff(4) == Rat(1, 24));
  CHECK_THROWS_AS(one_plus_q(2).exp_series(), std::domain_error);
  CHECK_THROWS_AS(S::monomial(1, Rat(1), 2).log_series(), std::domain_error);
}

TEST_CASE("rational powers against central binomials") {
  // (1-4q)^(-1/2) = sum_d binomial(2d,d) q^d.
  S base = S::constant(Rat(1), 5) + S::monomial(1, Rat(-4), 5);
  S c = base.pow_rational(Rat(-1, 2));
  for (int d = 0; d <= 5; ++d) CHECK(c.coeff(d) == binomial(2 * d, d));
  // Power laws: f^(1/2) squared returns f.
  S f = one_plus_q(4) + S::monomial(2, Rat(3), 4);
  S r = f.pow_rational(Rat(1, 2));
  CHECK(r * r == f);
  CHECK(f.pow_rational(Rat(-2)) * f * f == S::constant(Rat(1), 4));
}

TEST_CASE("derivation and its inverse") {
  S f = S::monomial(1, Rat(2), 4) + S::monomial(3, Rat(-5), 4);
  S d = f.q_ddq();
  CHECK(d.coeff(1) == Rat(2));
  CHECK(d.coeff(3) == Rat(-15));
  CHECK(d.integrate_du_u() == f);
  CHECK_THROWS_AS(one_plus_q(2).integrate_du_u(), std::domain_error);
  // Leibniz rule.
  S g = one_plus_q(4);
  CHECK((f * g).q_ddq() == f.q_ddq() * g + f * g.q_ddq());
}

TEST_CASE("newton solver") {
  int order = 6;
  S target = one_plus_q(order);
  auto G = [&](const S& y) { return y * y - target; };
  S y = newton_solve(G, Rat(1), order);
  CHECK(y == target.pow_rational(Rat(1, 2)));
  CHECK(y.coeff(1) == Rat(1, 2));
  CHECK(y.coeff(2) == Rat(-1, 8));
  // The other branch, selected by the seed value.
  S ym = newton_solve(G, Rat(-1), order);
  CHECK(ym == y.scaled(Rat(-1)));
  // Singular linearization: G'(y0) = 0.
  auto Gs = [&](const S& y) { return y * y - S::monomial(1, Rat(1), 2); };
  CHECK_THROWS_AS(newton_solve(Gs, Rat(0), 2), std::domain_error);
  // Cubic with a non-polynomial right side.
  S rhs = target.pow_rational(Rat(1, 3));
  auto Gc = [&](const S& y) { return y * y * y - target; };
  CHECK(newton_solve(Gc, Rat(1), order) == rhs);
}
