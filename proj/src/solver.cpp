#include "pld/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pld/golden.hpp"

namespace pld {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGoldenTol = 1e-9;
constexpr int kGoldenMaxIter = 300;
constexpr int kScanPoints = 512;   // LF post-filter fallback resolution
constexpr int kInitScanSteps = 16;  // feasible-box prescan per axis
constexpr double kEdgeNudge = 1e-9;

PowerSplit full_split(const LinkScenario& scn, double p_m) {
  return {p_m, scn.p_total - p_m};
}

bool point_feasible(const LinkScenario& scn, double d_k, double p_m) {
  return check_feasible(scn, full_split(scn, p_m), d_k).feasible;
}

double true_r_d(const LinkScenario& scn, double d_k, double p_m) {
  return metrics(error_profile(scn, full_split(scn, p_m), d_k)).r_d;
}

// Minimize f over [lo, hi] subject to full feasibility at the returned point.
// The interval already encodes the monotone constraints; only eps_lf can cut
// into it, so a dense scan fallback runs when the unconstrained minimizer
// violates it.
template <typename F, typename Feas>
double minimize_with_lf_filter(F&& f, Feas&& feasible_at, double lo, double hi) {
  if (hi - lo < 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (!feasible_at(mid)) throw EmptyFeasibleInterval();
    return mid;
  }
  const double x = golden_section_min(f, lo, hi, kGoldenTol, kGoldenMaxIter);
  if (feasible_at(x)) return x;

  const double step = (hi - lo) / kScanPoints;
  int best_i = -1;
  double best_v = kInf;
  for (int i = 0; i <= kScanPoints; ++i) {
    const double xi = lo + i * step;
    if (!feasible_at(xi)) continue;
    const double v = f(xi);
    if (v < best_v) {
      best_v = v;
      best_i = i;
    }
  }
  if (best_i < 0) throw EmptyFeasibleInterval();
  const double xs = lo + best_i * step;
  const double a = std::max(lo, xs - step);
  const double b = std::min(hi, xs + step);
  const double xr = golden_section_min(f, a, b, kGoldenTol, kGoldenMaxIter);
  return feasible_at(xr) && f(xr) <= best_v ? xr : xs;
}

}  // namespace

Surrogate build_surrogate(const LinkScenario& scn, double local_d_k, double local_p_m) {
  const Metrics m = metrics(error_profile(scn, full_split(scn, local_p_m), local_d_k));
  if (!(m.r_d > 0.0)) {
    throw std::domain_error("build_surrogate: R_d vanishes at the local point");
  }
  const ErrorProfile p = error_profile(scn, full_split(scn, local_p_m), local_d_k);
  Surrogate s;
  s.local_d_k = local_d_k;
  s.local_p_m = local_p_m;
  s.lambda1 = (1.0 - p.eps_eve_m) / m.r_b;
  s.lambda2 = p.eps_eve_k / m.r_b;
  return s;
}

double surrogate_value(const LinkScenario& scn, const Surrogate& s, double d_k, double p_m) {
  const ErrorProfile p = error_profile(scn, full_split(scn, p_m), d_k);
  const double r_b = 1.0 - (1.0 - p.eps_bob_m) * p.eps_bob_k;
  const double eve_m_ok = 1.0 - p.eps_eve_m;
  if (!(r_b > 0.0) || !(eve_m_ok > 0.0) || !(p.eps_eve_k > 0.0)) return kInf;
  const double sum = 1.0 / r_b + s.lambda1 / eve_m_ok + s.lambda2 / p.eps_eve_k;
  return sum * sum * sum / (27.0 * s.lambda1 * s.lambda2);
}

Interval feasible_dk_interval(const LinkScenario& scn, double p_m) {
  Interval iv;
  if (p_m < 0.0 || p_m > scn.p_total) return iv;
  const double p_k = scn.p_total - p_m;
  if (!(p_k > 0.0) || !(p_m > 0.0)) return iv;  // a zero-power component is always erased

  const Thresholds& th = scn.thresholds;
  const double dm = static_cast<double>(scn.d_m);
  // Message constraints do not involve d_k; they gate the whole slice.
  if (fbl_error(sinr_message_fullpower(scn, scn.z_bob, p_m), {scn.n, dm}) >
      th.eps_bob_m + kFeasSlack)
    return iv;
  if (fbl_error(sinr_message_fullpower(scn, scn.z_eve, p_m), {scn.n, dm}) >
      th.eps_eve_m + kFeasSlack)
    return iv;

  const double g_bob_k = sinr_key_fullpower(scn, scn.z_bob, p_m);
  const double g_eve_k = sinr_key_fullpower(scn, scn.z_eve, p_m);
  const double nd = static_cast<double>(scn.n);

  // eps_bob_k <= th (increasing in d_k) gives the upper end.
  double hi = nd;
  if (fbl_error(g_bob_k, {scn.n, 0.0}) > th.eps_bob_k + kFeasSlack) return iv;
  InvertResult ub = invert_info_bits(g_bob_k, scn.n, th.eps_bob_k);
  if (ub.reachable) hi = std::max(0.0, ub.value - kEdgeNudge);

  // eps_eve_k >= th (increasing in d_k) gives the lower end.
  double lo = 0.0;
  if (fbl_error(g_eve_k, {scn.n, nd}) < th.eps_eve_k - kFeasSlack) return iv;
  if (fbl_error(g_eve_k, {scn.n, 0.0}) < th.eps_eve_k - kFeasSlack) {
    InvertResult lb = invert_info_bits(g_eve_k, scn.n, th.eps_eve_k);
    lo = std::min(nd, lb.value + kEdgeNudge);
  }

  if (lo > hi) return iv;
  iv.lo = lo;
  iv.hi = hi;
  iv.empty = false;
  return iv;
}

Interval feasible_pm_interval(const LinkScenario& scn, double d_k) {
  Interval iv;
  if (d_k < 0.0 || d_k > static_cast<double>(scn.n)) return iv;
  const Thresholds& th = scn.thresholds;
  const double p_total = scn.p_total;
  const BlockSpec msg{scn.n, static_cast<double>(scn.d_m)};
  const BlockSpec key{scn.n, d_k};

  // Both components need strictly positive power.
  double lo = kEdgeNudge * p_total;
  double hi = (1.0 - kEdgeNudge) * p_total;

  // Message SINR threshold: gamma_m(p_m) = z p_m / (z (P - p_m) + sigma2) is
  // increasing in p_m, so eps_m <= th lower-bounds p_m.
  auto msg_lower_bound = [&](double z, double eps_th) -> std::optional<double> {
    InvertResult g = invert_snr(msg, eps_th);
    if (!g.reachable && g.value > 1.0) return std::nullopt;  // unreachable even at huge snr
    if (!g.reachable) return 0.0;  // satisfied on the whole axis
    return g.value * (z * p_total + scn.sigma2) / (z * (1.0 + g.value));
  };
  auto lb_bob = msg_lower_bound(scn.z_bob, th.eps_bob_m);
  auto lb_eve = msg_lower_bound(scn.z_eve, th.eps_eve_m);
  if (!lb_bob || !lb_eve) return iv;
  lo = std::max({lo, *lb_bob + kEdgeNudge, *lb_eve + kEdgeNudge});

  // Key SINR: gamma_k(p_m) = z (P - p_m) / sigma2 is decreasing in p_m.
  // eps_bob_k <= th needs gamma_bob_k >= g*, so p_m <= P - g* sigma2 / z_bob.
  {
    InvertResult g = invert_snr(key, th.eps_bob_k);
    if (!g.reachable && g.value > 1.0) return iv;
    if (g.reachable) hi = std::min(hi, p_total - g.value * scn.sigma2 / scn.z_bob - kEdgeNudge);
  }
  // eps_eve_k >= th needs gamma_eve_k <= g*, so p_m >= P - g* sigma2 / z_eve.
  {
    InvertResult g = invert_snr(key, th.eps_eve_k);
    if (!g.reachable && g.value <= 1.0) return iv;  // sup eps below threshold
    if (g.reachable) lo = std::max(lo, p_total - g.value * scn.sigma2 / scn.z_eve + kEdgeNudge);
  }

  if (lo > hi) return iv;
  iv.lo = lo;
  iv.hi = hi;
  iv.empty = false;
  return iv;
}

double solve_sp1(const LinkScenario& scn, const Surrogate& s, double p_m_fixed) {
  const Interval iv = feasible_dk_interval(scn, p_m_fixed);
  if (iv.empty) throw EmptyFeasibleInterval();
  return minimize_with_lf_filter(
      [&](double d) { return surrogate_value(scn, s, d, p_m_fixed); },
      [&](double d) { return point_feasible(scn, d, p_m_fixed); }, iv.lo, iv.hi);
}

double solve_sp2(const LinkScenario& scn, const Surrogate& s, double d_k_fixed) {
  const Interval iv = feasible_pm_interval(scn, d_k_fixed);
  if (iv.empty) throw EmptyFeasibleInterval();
  return minimize_with_lf_filter(
      [&](double p) { return surrogate_value(scn, s, d_k_fixed, p); },
      [&](double p) { return point_feasible(scn, d_k_fixed, p); }, iv.lo, iv.hi);
}

namespace {

struct InitPoint {
  double d_k;
  double p_m;
  bool found;
};

// Midpoint of the bounding box of the feasible prescan cells; falls back to
// the feasible cell nearest to that midpoint.
InitPoint prescan_init(const LinkScenario& scn) {
  const double nd = static_cast<double>(scn.n);
  double d_lo = kInf, d_hi = -kInf, p_lo = kInf, p_hi = -kInf;
  std::vector<std::pair<double, double>> feas;
  for (int i = 0; i < kInitScanSteps; ++i) {
    const double p_m = scn.p_total * (i + 0.5) / kInitScanSteps;
    for (int j = 0; j < kInitScanSteps; ++j) {
      const double d_k = nd * (j + 0.5) / kInitScanSteps;
      if (!point_feasible(scn, d_k, p_m)) continue;
      feas.emplace_back(d_k, p_m);
      d_lo = std::min(d_lo, d_k);
      d_hi = std::max(d_hi, d_k);
      p_lo = std::min(p_lo, p_m);
      p_hi = std::max(p_hi, p_m);
    }
  }
  if (feas.empty()) return {0.0, 0.0, false};
  const double d_mid = 0.5 * (d_lo + d_hi);
  const double p_mid = 0.5 * (p_lo + p_hi);
  if (point_feasible(scn, d_mid, p_mid)) return {d_mid, p_mid, true};
  double best = kInf;
  std::pair<double, double> pick = feas.front();
  for (const auto& [d, p] : feas) {
    const double dd = (d - d_mid) / nd;
    const double dp = (p - p_mid) / scn.p_total;
    const double dist = dd * dd + dp * dp;
    if (dist < best) {
      best = dist;
      pick = {d, p};
    }
  }
  return {pick.first, pick.second, true};
}

}  // namespace

SolverResult mm_bcd(const LinkScenario& scn, const SolverConfig& cfg) {
  validate(scn);
  SolverResult res;

  double d_k, p_m;
  if (cfg.init_d_k && cfg.init_p_m) {
    d_k = *cfg.init_d_k;
    p_m = *cfg.init_p_m;
    if (!point_feasible(scn, d_k, p_m)) {
      res.message = "infeasible start";
      return res;
    }
  } else {
    const InitPoint init = prescan_init(scn);
    if (!init.found) {
      res.message = "no feasible point found by prescan";
      return res;
    }
    d_k = init.d_k;
    p_m = init.p_m;
  }

  double prev_outer = kInf;
  double val = kInf;
  bool outer_met = false;
  bool inner_capped = false;
  int q = 0;
  try {
    for (q = 1; q <= cfg.max_outer; ++q) {
      const Surrogate s = build_surrogate(scn, d_k, p_m);
      double prev_inner = kInf;
      bool inner_met = false;
      for (int t = 1; t <= cfg.max_inner; ++t) {
        if (cfg.pm_update_first) {
          p_m = solve_sp2(scn, s, d_k);
          d_k = solve_sp1(scn, s, p_m);
        } else {
          d_k = solve_sp1(scn, s, p_m);
          p_m = solve_sp2(scn, s, d_k);
        }
        val = surrogate_value(scn, s, d_k, p_m);
        const Metrics m = metrics(error_profile(scn, full_split(scn, p_m), d_k));
        res.trace.push_back({q, t, d_k, p_m, val, m.r_d, m.eps_lf});
        if (std::isfinite(prev_inner) &&
            std::abs(val - prev_inner) <= cfg.mu_bcd * std::abs(prev_inner)) {
          inner_met = true;
          break;
        }
        prev_inner = val;
      }
      if (!inner_met) inner_capped = true;
      if (std::isfinite(prev_outer) &&
          std::abs(val - prev_outer) <= cfg.mu_mm * std::abs(prev_outer)) {
        outer_met = true;
        break;
      }
      prev_outer = val;
    }
  } catch (const EmptyFeasibleInterval&) {
    res.message = "feasible set vanished during iteration";
    return res;
  }
  res.outer_iterations = std::min(q, cfg.max_outer);

  // Integer rounding: compare the true objective at the integer neighbors,
  // keeping p_m fixed; ties break toward the smaller key length.
  const double nd = static_cast<double>(scn.n);
  const int fl = static_cast<int>(std::floor(std::clamp(d_k, 0.0, nd)));
  const int ce = static_cast<int>(std::ceil(std::clamp(d_k, 0.0, nd)));
  int best_d = -1;
  double best_rd = -kInf;
  for (int cand : {fl, ce}) {
    if (cand == best_d) continue;
    if (!point_feasible(scn, cand, p_m)) continue;
    const double rd = true_r_d(scn, cand, p_m);
    if (rd > best_rd) {
      best_rd = rd;
      best_d = cand;
    }
  }
  if (best_d < 0) {
    for (int cand = 0; cand <= scn.n; ++cand) {
      if (!point_feasible(scn, cand, p_m)) continue;
      const double rd = true_r_d(scn, cand, p_m);
      if (rd > best_rd) {
        best_rd = rd;
        best_d = cand;
      }
    }
  }
  if (best_d < 0) {
    res.message = "no feasible integer key length at the solver fixed point";
    return res;
  }

  double p_star = p_m;
  if (cfg.polish_after_rounding) {
    const Interval iv = feasible_pm_interval(scn, best_d);
    if (!iv.empty) {
      const double p_ref = golden_section_max(
          [&](double p) { return true_r_d(scn, best_d, p); }, iv.lo, iv.hi, kGoldenTol,
          kGoldenMaxIter);
      if (point_feasible(scn, best_d, p_ref) &&
          true_r_d(scn, best_d, p_ref) >= best_rd) {
        p_star = p_ref;
      }
    }
  }

  const Metrics m = metrics(error_profile(scn, full_split(scn, p_star), best_d));
  res.d_k_star = best_d;
  res.p_m_star = p_star;
  res.p_k_star = scn.p_total - p_star;
  res.r_d = m.r_d;
  res.eps_lf = m.eps_lf;
  res.status = (outer_met && !inner_capped) ? SolverStatus::kConverged
                                            : SolverStatus::kIterationCap;
  return res;
}

}  // namespace pld
