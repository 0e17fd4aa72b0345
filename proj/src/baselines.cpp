#include "pld/baselines.hpp"

#include <cmath>
#include <limits>

#include "pld/golden.hpp"

namespace pld {
namespace {

constexpr int kScanPoints = 2048;

double keyless_error(const LinkScenario& scn, double gain, double p_m, int d_m) {
  const double snr = gain * p_m / scn.sigma2;
  if (snr <= 0.0) return 1.0;
  return fbl_error(snr, {scn.n, static_cast<double>(d_m)});
}

bool message_thresholds_ok(const LinkScenario& scn, double p_m, int d_m) {
  return keyless_error(scn, scn.z_bob, p_m, d_m) <= scn.thresholds.eps_bob_m + kFeasSlack &&
         keyless_error(scn, scn.z_eve, p_m, d_m) <= scn.thresholds.eps_eve_m + kFeasSlack;
}

}  // namespace

double baseline_eps_lf(const LinkScenario& scn, double p_m, int d_m) {
  const double eps_bob = keyless_error(scn, scn.z_bob, p_m, d_m);
  const double eps_eve = keyless_error(scn, scn.z_eve, p_m, d_m);
  return 1.0 - (1.0 - eps_bob) * eps_eve;
}

BaselineResult baseline_power(const LinkScenario& scn, bool apply_thresholds) {
  validate(scn);
  const int d_m = scn.d_m;
  // Coarse scan keeps the smallest argmin on plateaus, then a golden pass
  // tightens the bracket to 1e-6 * p_total.
  double best_p = 0.0;
  double best_lf = std::numeric_limits<double>::infinity();
  const double step = scn.p_total / kScanPoints;
  for (int i = 0; i <= kScanPoints; ++i) {
    const double p = i * step;
    if (apply_thresholds && !message_thresholds_ok(scn, p, d_m)) continue;
    const double lf = baseline_eps_lf(scn, p, d_m);
    if (lf < best_lf) {
      best_lf = lf;
      best_p = p;
    }
  }
  const double lo = std::max(0.0, best_p - step);
  const double hi = std::min(scn.p_total, best_p + step);
  const double tol = 1e-6 * scn.p_total / (hi - lo);
  const double p_ref =
      golden_section_min([&](double p) { return baseline_eps_lf(scn, p, d_m); }, lo, hi, tol);
  if ((!apply_thresholds || message_thresholds_ok(scn, p_ref, d_m)) &&
      baseline_eps_lf(scn, p_ref, d_m) < best_lf) {
    best_p = p_ref;
    best_lf = baseline_eps_lf(scn, p_ref, d_m);
  }
  return {best_p, d_m, best_lf};
}

BaselineResult baseline_rate(const LinkScenario& scn, bool apply_thresholds) {
  validate(scn);
  const double p_m = scn.p_total;
  const int d_lo = std::min(16, scn.n);
  int best_d = d_lo;
  double best_lf = std::numeric_limits<double>::infinity();
  for (int d = d_lo; d <= scn.n; ++d) {
    if (apply_thresholds && !message_thresholds_ok(scn, p_m, d)) continue;
    const double lf = baseline_eps_lf(scn, p_m, d);
    if (lf < best_lf) {
      best_lf = lf;
      best_d = d;
    }
  }
  return {p_m, best_d, best_lf};
}

}  // namespace pld
