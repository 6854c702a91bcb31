#pragma once

#include <vector>

#include "qmirror/equivariant.hpp"
#include "qmirror/hypergeom.hpp"
#include "qmirror/model.hpp"
#include "qmirror/qseries.hpp"
#include "qmirror/ratfunc.hpp"
#include "qmirror/rational.hpp"

namespace qmirror {

// Rational functions of a single residue variable.
using HRat = RatFunc<Rat>;

// Sum of separable products f(h1) g(h2), held per q-order; the prefactor
// 1/(h1 h2 (h1 + h2)) is implicit and supplied by the residue routine.
struct BiTerm {
  HRat f, g;
};
struct BiSeries {
  std::vector<std::vector<BiTerm>> terms;  // index = q-order
  int order() const { return static_cast<int>(terms.size()) - 1; }
};

// The bilinear hypergeometric kernel with both w-variables restricted by
// w_j = alpha / h_j:
//   sum_{p=0..n-1-l} [M^p Fdot / Idot_p](h1-side) [M^{n-1-p} Fddot / Iddot_{n-1-p}](h2-side)
// + sum_{p=1..l}    [M^{n-1+p} Fddot / Iddot_{n-1+p}](h1-side) [M^{n-p} Fdot / Idot_{n-p}](h2-side)
// The stack must be built to depth n-1+l. The identity
// Iddot_{p+l} = Idot_p is verified on the stack as a precondition.
BiSeries build_bilinear(const HyperStack& st, const Rat& alpha);

// Iterated residue, inner at h2 = 0 then outer at h1 = 0, of
// f(h1) g(h2) / (h1 h2 (h1 + h2)), expanding 1/(h1+h2) = sum (-h2)^t/h1^{t+1}.
Rat iterated_pair_residue(const HRat& f, const HRat& g);

// The double residue of e^{-mu alpha (1/h1 + 1/h2)} / (h1 h2 (h1+h2)) times
// the bilinear kernel, as a q-series.
QSeries<Rat> double_residue_series(const Model& m, int order, const Rat& alpha);

// Aary block: (n/24)(n-1-2 sum 1/a_r) mu - [(3(n-1-l)^2 + n-2)/24] log(1-a^a q)
//             - sum_{p=0}^{n-2-l} C(n-p-l, 2) log Idot_p
QSeries<Rat> series_A(const Model& m, int order);

// Half derivative of the A block, and the same value recovered through the
// double-residue pipeline as (1/2) alpha L(q) times the residue series.
QSeries<Rat> a_block(const Model& m, int order);
QSeries<Rat> a_block_residue_route(const Model& m, int order, const Rat& alpha);

// B block, closed form:
// (1/24)[(sum_k n/a_k - C(n,2)) mu - (n(l+1)/2) log L].
QSeries<Rat> b_block_closed(const Model& m, int order);

// B block, direct route: (1/24) sum_i (c_i xi_i - log Phi0_i) evaluated on a
// weight configuration where the value is exact, then read off as rational.
template <class K>
QSeries<Rat> b_block_direct_on(const Model& m, int order,
                               const std::vector<K>& alpha) {
  QSeries<K> total(order);
  for (int i = 0; i < m.n; ++i) {
    QSeries<K> xi = xi_from_L(solve_L(m, alpha, i, order), alpha[i]);
    QSeries<K> phi0 = phi_expansion(m, alpha, i, order, 0).phi[0];
    total = total + xi.scaled(c_coeff(m, alpha, i)) - phi0.log_series();
  }
  return ray_limit_series(total).scaled_by_rat(Rat(1, 24));
}
QSeries<Rat> b_block_direct(const Model& m, int order, const Rat& scale,
                            int shift);

// Genus-one series and its q-derivative identity partner.
QSeries<Rat> series_G10(const Model& m, int order);
QSeries<Rat> series_rhs_total(const Model& m, int order);

}  // namespace qmirror
