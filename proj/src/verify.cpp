#include "qmirror/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "qmirror/cyclotomic.hpp"
#include "qmirror/equivariant.hpp"
#include "qmirror/hypergeom.hpp"
#include "qmirror/mirror.hpp"

namespace qmirror {

namespace {

// Runs one check body, converting exceptions into failures. The body either
// returns a failure detail ("" for pass) or throws.
CheckResult run_check(const std::string& name, const std::string& ref,
                      const std::function<std::string()>& body) {
  CheckResult r{name, ref, false, ""};
  try {
    r.detail = body();
    r.pass = r.detail.empty();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

std::string series_str(const QSeries<Rat>& s) {
  std::string out = "[";
  for (int k = 0; k <= s.order(); ++k) {
    if (k) out += ", ";
    out += s.coeff(k).str();
  }
  return out + "]";
}

std::string dir_str(const std::vector<Rat>& c) {
  std::string out = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += c[i].str();
  }
  return out + ")";
}

// the two root-of-unity configurations used wherever a value is only exact
// on sigma-null weights
std::vector<std::vector<Cyclo>> standard_null_rays(int n) {
  return {root_of_unity_ray(n, Rat(1), 0), root_of_unity_ray(n, Rat(2), 1)};
}

}  // namespace

std::string first_mismatch(const QSeries<Rat>& lhs, const QSeries<Rat>& rhs) {
  if (lhs.order() != rhs.order()) return "truncation orders differ";
  for (int k = 0; k <= lhs.order(); ++k)
    if (lhs.coeff(k) != rhs.coeff(k))
      return "first mismatch at q^" + std::to_string(k) + ": lhs=" +
             lhs.coeff(k).str() + " rhs=" + rhs.coeff(k).str();
  return "";
}

std::vector<std::vector<Rat>> default_directions(int n, std::uint64_t seed) {
  std::vector<std::vector<Rat>> dirs;
  std::vector<Rat> ladder;
  for (int i = 1; i <= n; ++i) ladder.push_back(Rat(i));
  dirs.push_back(ladder);

  std::mt19937_64 rng(seed);
  std::vector<Rat> random_dir;
  std::set<Rat> seen;
  while (static_cast<int>(random_dir.size()) < n) {
    long v = draw(rng, -12, 12);
    Rat r(v);
    if (r.is_zero() || seen.count(r)) continue;
    seen.insert(r);
    random_dir.push_back(r);
  }
  dirs.push_back(random_dir);
  return dirs;
}

std::vector<CheckResult> suite_hyper(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  const Model& m = cfg.model;
  int order = cfg.order;
  int l = m.codim();
  int pmax = std::min(3, m.n - 1);
  int depth = pmax + l;

  HyperStack st = build_stack(m, order, depth);

  out.push_back(run_check("i-series-direct-sum", "hypergeometric-evaluation", [&] {
    QSeries<Rat> oracle(order);
    for (int d = 0; d <= order; ++d) {
      Rat num(1);
      for (long ak : m.a)
        for (long r = 1; r <= ak * d; ++r) num *= Rat(r);
      Rat den(1);
      for (long r = 1; r <= d; ++r) den *= Rat(r).pow(m.n);
      oracle.set_coeff(d, num / den);
    }
    return first_mismatch(st.idot[0], oracle);
  }));

  out.push_back(run_check("plain-vs-dotted-at-w0", "hypergeometric-evaluation", [&] {
    QSeries<Rat> f0 = eval_w0(series_F(m, order));
    return first_mismatch(f0, st.idot[0]);
  }));

  out.push_back(run_check("m-shift", "hypergeometric-shift", [&] {
    for (int p = 0; p <= pmax; ++p)
      if (!(st.m_fdot[p] == st.m_fddot[p + l]))
        return "shift identity fails at power " + std::to_string(p);
    return std::string();
  }));

  out.push_back(run_check("i-series-shift", "hypergeometric-shift", [&] {
    for (int p = 0; p + l <= depth; ++p) {
      std::string d = first_mismatch(st.iddot[p + l], st.idot[p]);
      if (!d.empty()) return "power " + std::to_string(p) + ": " + d;
    }
    return std::string();
  }));

  out.push_back(run_check("class-p-closure", "operator-domain", [&] {
    for (const auto& t : st.m_fdot)
      if (!in_class_P(t)) return std::string("dotted tower left the class");
    for (const auto& t : st.m_fddot)
      if (!in_class_P(t)) return std::string("double-dotted tower left the class");
    return std::string();
  }));

  out.push_back(run_check("normalized-tower-route", "operator-normalization", [&] {
    auto alt = normalized_tower(st.m_fdot[0], st.idot, depth);
    for (int s = 0; s <= depth; ++s)
      if (!(alt[s] == st.m_fdot[s] / embed_w(st.idot[s])))
        return "routes differ at power " + std::to_string(s);
    return std::string();
  }));

  return out;
}

std::vector<CheckResult> suite_equivariant(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  const Model& m = cfg.model;
  int order = cfg.order;
  int n = m.n;

  for (const auto& dir : cfg.directions) {
    std::string tag = " dir=" + dir_str(dir);

    out.push_back(run_check("functional-equation-residual" + tag,
                            "fixed-point-branch-solve", [&] {
      auto alpha = epsilon_ray(dir);
      for (int i = 0; i < n; ++i) {
        auto l = solve_L(m, alpha, i, order);
        if (!functional_residual(m, alpha, i, l).is_zero())
          return "residual survives at branch " + std::to_string(i);
      }
      return std::string();
    }));

    out.push_back(run_check("weighted-c-sum" + tag, "linking-coefficients", [&] {
      auto alpha = epsilon_ray(dir);
      EpsRat acc(0);
      for (int i = 0; i < n; ++i) acc += c_coeff(m, alpha, i) * alpha[i];
      Rat expected = Rat(n) * m.sum_inv_a() - binomial(n, 2);
      if (!(acc == EpsRat(expected)))
        return std::string("weighted sum of linking coefficients is not ") +
               expected.str();
      return std::string();
    }));

    out.push_back(run_check("vertex-weight-discriminant" + tag,
                            "fixed-point-weights", [&] {
      auto alpha = epsilon_ray(dir);
      EpsRat prod(1);
      for (int i = 0; i < n; ++i) prod *= vertex_weight(alpha, i);
      EpsRat disc(1);
      for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
          disc *= (alpha[i] - alpha[k]) * (alpha[i] - alpha[k]);
      int swaps = (n * (n - 1) / 2) % 2;
      if (!(prod == (swaps ? -disc : disc)))
        return std::string("sign or magnitude off");
      return std::string();
    }));

    out.push_back(run_check("regular-part-expansion" + tag,
                            "oscillating-factor-expansion", [&] {
      auto alpha = epsilon_ray(dir);
      for (int i = 0; i < n; ++i)
        phi_expansion(m, alpha, i, order, 0);  // throws if a principal part survives
      return std::string();
    }));
  }

  int cfg_index = 0;
  for (const auto& alpha : standard_null_rays(n)) {
    std::string tag = " null-ray=" + std::to_string(cfg_index++);
    QSeries<Rat> lser = series_L(m, order);
    QSeries<Rat> mu = series_mu(m, order);

    out.push_back(run_check("branch-proportionality" + tag,
                            "balanced-weight-solve", [&] {
      for (int i = 0; i < n; ++i) {
        auto li = solve_L(m, alpha, i, order);
        auto expect = lser.map<Cyclo>([&](const Rat& c) {
          return Cyclo(c) * alpha[i];
        });
        if (!(li == expect)) return "branch " + std::to_string(i) + " deviates";
        auto xi = xi_from_L(li, alpha[i]);
        auto xi_expect = mu.map<Cyclo>([&](const Rat& c) {
          return Cyclo(c) * alpha[i];
        });
        if (!(xi == xi_expect))
          return "potential at branch " + std::to_string(i) + " deviates";
      }
      return std::string();
    }));

    out.push_back(run_check("regular-part-leading-power" + tag,
                            "oscillating-factor-expansion", [&] {
      QSeries<Rat> expect =
          lser.pow_rational(Rat(m.codim() + 1, 2));
      for (int i = 0; i < n; ++i) {
        auto phi0 = phi_expansion(m, alpha, i, order, 0).phi[0];
        std::string d = first_mismatch(ray_limit_series(phi0), expect);
        if (!d.empty()) return "branch " + std::to_string(i) + ": " + d;
      }
      return std::string();
    }));

    out.push_back(run_check("pairing-residue-sum" + tag, "weight-sum-limits", [&] {
      QSeries<Cyclo> acc(order);
      for (int i = 0; i < n; ++i) {
        auto xi = xi_from_L(solve_L(m, alpha, i, order), alpha[i]);
        for (int k = 0; k < n; ++k)
          if (k != i)
            acc = acc + xi.scaled(Cyclo(1) / (alpha[k] - alpha[i]));
      }
      QSeries<Rat> expect = mu.scaled(-binomial(n, 2));
      return first_mismatch(ray_limit_series(acc), expect);
    }));

    out.push_back(run_check("euler-residue-sum" + tag, "weight-sum-limits", [&] {
      QSeries<Cyclo> acc(order);
      for (int i = 0; i < n; ++i) {
        auto xi = xi_from_L(solve_L(m, alpha, i, order), alpha[i]);
        for (long ak : m.a)
          acc = acc + xi.scaled(Cyclo(1) / (Cyclo(ak) * alpha[i]));
      }
      QSeries<Rat> expect = mu.scaled(Rat(n) * m.sum_inv_a());
      return first_mismatch(ray_limit_series(acc), expect);
    }));
  }

  return out;
}

namespace {

// random reduced rational function with poles in a small integer window
RatFunc<Rat> random_ratfunc(std::mt19937_64& rng) {
  std::set<long> pole_set;
  int npoles = static_cast<int>(draw(rng, 1, 4));
  while (static_cast<int>(pole_set.size()) < npoles)
    pole_set.insert(draw(rng, -8, 8));
  Poly<Rat> den(Rat(1));
  int den_deg = 0;
  for (long p : pole_set) {
    int mult = static_cast<int>(draw(rng, 1, 3));
    den = den * Poly<Rat>{Rat(-p), Rat(1)}.pow(mult);
    den_deg += mult;
  }
  int num_deg = static_cast<int>(draw(rng, 0, den_deg + 2));
  std::vector<Rat> nc(num_deg + 1);
  for (auto& c : nc) c = Rat(draw(rng, -9, 9), draw(rng, 1, 9));
  Poly<Rat> num(nc);
  if (num.is_zero()) num = Poly<Rat>(Rat(1));
  return RatFunc<Rat>(num, den);
}

std::vector<IdealPolySpec> ideal_generators(int n) {
  // five generator shapes inside <sigma_1..sigma_{n-1}> Q[alpha][z]
  std::vector<IdealPolySpec> fs;
  fs.push_back({{Rat(1), 1, {}, 1}});                         // sigma_1 z
  fs.push_back({{Rat(1), 2, {}, 3}});                         // sigma_2 z^3
  fs.push_back({{Rat(1), n - 1, {}, n}});                     // sigma_{n-1} z^n
  fs.push_back({{Rat(1), 1, {2}, 2}});                        // sigma_1 alpha_1^2 z^2
  fs.push_back({{Rat(1), 1, {}, 2}, {Rat(-3), 2, {}, 1}});    // sigma_1 z^2 - 3 sigma_2 z
  return fs;
}

}  // namespace

std::vector<CheckResult> suite_residue(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  int n = cfg.model.n;

  out.push_back(run_check("global-residue-theorem", "residue-calculus", [&] {
    std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    for (int trial = 0; trial < 100; ++trial) {
      RatFunc<Rat> f = random_ratfunc(rng);
      Rat total = f.residue_at_infinity();
      std::set<Rat> roots;
      // poles are integers in [-8, 8] by construction
      for (long p = -8; p <= 8; ++p)
        if (f.pole_order_at(Rat(p)) > 0) total += f.residue_at(Rat(p));
      if (!total.is_zero())
        return "trial " + std::to_string(trial) + ": residues sum to " + total.str();
    }
    return std::string();
  }));

  for (const auto& dir : cfg.directions) {
    std::string tag = " dir=" + dir_str(dir);
    if (static_cast<int>(dir.size()) != n) continue;

    out.push_back(run_check("power-kernel-battery" + tag, "weight-sum-limits", [&] {
      auto alpha = epsilon_ray(dir);
      for (int d = 0; d <= 2; ++d)
        for (int mm = 0; mm <= 2; ++mm) {
          if (mm == (n - 1) * (d + 1)) continue;
          Rat v = ray_limit(power_kernel_residue_sum(alpha, d, mm));
          if (!v.is_zero())
            return "(d=" + std::to_string(d) + ",m=" + std::to_string(mm) +
                   ") limit " + v.str();
          if (d == 0) {
            Rat lit = ray_limit(power_kernel_endpoint_sum(alpha, d, mm));
            if (!lit.is_zero())
              return "(d=0,m=" + std::to_string(mm) + ") endpoint limit " +
                     lit.str();
          }
        }
      return std::string();
    }));

    out.push_back(run_check("ideal-kernel-battery" + tag, "weight-sum-limits", [&] {
      auto alpha = epsilon_ray(dir);
      auto fs = ideal_generators(n);
      for (size_t fi = 0; fi < fs.size(); ++fi) {
        Poly<EpsRat> f = instantiate_f(fs[fi], alpha);
        for (int mm = 0; mm <= 2; ++mm) {
          Rat v = ray_limit(ideal_kernel_residue_sum(alpha, f, mm));
          if (!v.is_zero())
            return "f#" + std::to_string(fi) + " m=" + std::to_string(mm) +
                   " limit " + v.str();
        }
        Rat lit = ray_limit(ideal_kernel_endpoint_sum(alpha, f, 0));
        if (!lit.is_zero())
          return "f#" + std::to_string(fi) + " m=0 endpoint limit " + lit.str();
      }
      return std::string();
    }));
  }

  out.push_back(run_check("power-kernel-control", "weight-sum-limits", [&] {
    // m = (n-1)(d+1) with d = 0 must give exactly 1, not 0
    auto alpha = epsilon_ray(cfg.directions.at(0));
    Rat v = ray_limit(power_kernel_endpoint_sum(alpha, 0, n - 1));
    if (v != Rat(1)) return "control value " + v.str();
    return std::string();
  }));

  out.push_back(run_check("ideal-kernel-control", "weight-sum-limits", [&] {
    // z^{n-1} is outside the ideal; the limit is 1, showing the batteries
    // can distinguish
    auto alpha = epsilon_ray(cfg.directions.at(0));
    Poly<EpsRat> f = Poly<EpsRat>::monomial(n - 1);
    Rat v = ray_limit(ideal_kernel_endpoint_sum(alpha, f, 0));
    if (v != Rat(1)) return "control value " + v.str();
    return std::string();
  }));

  out.push_back(run_check("null-ray-endpoint-values", "weight-sum-limits", [&] {
    // On a root-of-unity configuration the endpoint sum telescopes to
    // n^{-d} when n divides m - (n-1)(d+1) and to 0 otherwise.
    auto alpha = root_of_unity_ray(n, Rat(1), 0);
    for (int d = 0; d <= 2; ++d)
      for (int mm = 0; mm <= 2; ++mm) {
        Cyclo v = power_kernel_endpoint_sum(alpha, d, mm);
        bool wraps = ((mm - (n - 1) * (d + 1)) % n) == 0;
        Cyclo expect = wraps ? Cyclo(Rat(n).pow(-d)) : Cyclo(0);
        if (!(v == expect))
          return "(d=" + std::to_string(d) + ",m=" + std::to_string(mm) +
                 ") value " + v.str();
      }
    return std::string();
  }));

  return out;
}

std::vector<CheckResult> suite_mirror(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  const Model& m = cfg.model;
  int order = cfg.order;

  QSeries<Rat> a_full = series_A(m, order);
  QSeries<Rat> qd_a = a_full.q_ddq();
  QSeries<Rat> lser = series_L(m, order);

  for (long av = 1; av <= 2; ++av) {
    out.push_back(run_check("loop-residue-identity alpha=" + std::to_string(av),
                            "double-residue-loop", [&] {
      QSeries<Rat> lhs = double_residue_series(m, order, Rat(av));
      QSeries<Rat> scaled = (lser * lhs).scaled(Rat(av));
      return first_mismatch(scaled, qd_a);
    }));
  }

  out.push_back(run_check("a-block-route-consistency", "double-residue-loop", [&] {
    return first_mismatch(a_block(m, order), a_block_residue_route(m, order, Rat(1)));
  }));

  {
    CheckResult r = run_check("b-block-dual-route", "vertex-contribution-total", [&] {
      QSeries<Rat> closed = b_block_closed(m, order);
      for (int variant = 0; variant < 2; ++variant) {
        QSeries<Rat> direct = variant == 0 ? b_block_direct(m, order, Rat(1), 0)
                                           : b_block_direct(m, order, Rat(2), 1);
        std::string d = first_mismatch(direct, closed);
        if (!d.empty()) return "variant " + std::to_string(variant) + ": " + d;
      }
      return std::string();
    });
    if (m.codim() > 1) {
      Rat once = Rat(m.n) * m.sum_inv_a() - binomial(m.n, 2);
      Rat per_k = Rat(m.n) * m.sum_inv_a() - Rat(m.codim()) * binomial(m.n, 2);
      std::string note = "pair weight counted once: " + once.str() +
                         "; per-factor alternative: " + per_k.str();
      r.detail = r.detail.empty() ? note : r.detail + "; " + note;
    }
    out.push_back(r);
  }

  out.push_back(run_check("zero-constant-terms", "genus-one-normalization", [&] {
    if (!a_full.coeff(0).is_zero()) return std::string("loop block starts at q^0");
    if (!series_G10(m, order).coeff(0).is_zero())
      return std::string("genus-one series starts at q^0");
    return std::string();
  }));

  out.push_back(run_check("derivative-loop", "genus-one-total", [&] {
    return first_mismatch(series_G10(m, order).q_ddq(), series_rhs_total(m, order));
  }));

  out.push_back(run_check("derivative-loop-independent-routes", "genus-one-total", [&] {
    QSeries<Rat> rhs = a_block_residue_route(m, order, Rat(1)) +
                       b_block_direct(m, order, Rat(1), 0).q_ddq();
    return first_mismatch(series_G10(m, order).q_ddq(), rhs);
  }));

  if (m.codim() > 1) {
    out.push_back(run_check("degree-permutation-invariance", "model-symmetry", [&] {
      std::vector<long> rev(m.a.rbegin(), m.a.rend());
      Model perm(m.n, rev);
      return first_mismatch(series_G10(m, order), series_G10(perm, order));
    }));
  }

  if (m.n == 5 && m.a == std::vector<long>{5} && order >= 1) {
    out.push_back(run_check("quintic-checkpoints", "genus-one-total", [&] {
      if (!a_full.coeff(1).is_zero())
        return "loop block q^1 = " + a_full.coeff(1).str();
      Rat g1 = series_G10(m, order).coeff(1);
      if (g1 != Rat(-4375, 12)) return "genus-one q^1 = " + g1.str();
      return std::string();
    }));
  }

  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite,
                                   const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> v) {
    for (auto& c : v) out.push_back(std::move(c));
  };
  if (suite == "hyper" || suite == "all") append(suite_hyper(cfg));
  if (suite == "equivariant" || suite == "all") append(suite_equivariant(cfg));
  if (suite == "residue" || suite == "all") append(suite_residue(cfg));
  if (suite == "mirror" || suite == "all") append(suite_mirror(cfg));
  if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

}  // namespace qmirror
