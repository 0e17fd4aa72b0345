#include "pld/link.hpp"

#include <cmath>
#include <stdexcept>

namespace pld {
namespace {

double component_error(double snr, int n, double d) {
  if (snr <= 0.0) return 1.0;  // absent component is always erased
  return fbl_error(snr, {n, d});
}

}  // namespace

std::vector<std::string> validate(const LinkScenario& scn) {
  if (!(scn.z_bob > 0.0) || !(scn.z_eve > 0.0)) {
    throw std::invalid_argument("scenario: channel gains must be positive");
  }
  if (!(scn.sigma2 > 0.0) || !(scn.p_total > 0.0)) {
    throw std::invalid_argument("scenario: noise and power budget must be positive");
  }
  if (scn.n < 1 || scn.d_m < 1 || scn.d_m > scn.n) {
    throw std::invalid_argument("scenario: need 0 < d_m <= n");
  }
  const Thresholds& th = scn.thresholds;
  for (double t : {th.eps_bob_m, th.eps_eve_m, th.eps_bob_k, th.eps_eve_k, th.eps_lf}) {
    if (!(t > 0.0 && t < 1.0)) {
      throw std::invalid_argument("scenario: thresholds must lie in (0, 1)");
    }
  }
  std::vector<std::string> warnings;
  // The full-power optimality argument needs 2*eps_bob_k^th < 1 < 2*eps_eve_k^th;
  // equality at 0.5 is the paper's own default and is accepted with a warning.
  if (th.eps_bob_k >= 0.5) {
    warnings.push_back("threshold eps_bob_k >= 0.5: full-power optimality not guaranteed");
  }
  if (th.eps_eve_k <= 0.5) {
    warnings.push_back("threshold eps_eve_k <= 0.5: full-power optimality not guaranteed");
  }
  if (scn.z_eve >= scn.z_bob) {
    warnings.push_back("z_eve >= z_bob: eavesdropper channel is not degraded");
  }
  return warnings;
}

std::vector<std::string> validate(const LinkScenario& scn, const PowerSplit& split) {
  if (!(split.p_m >= 0.0) || !(split.p_k >= 0.0)) {
    throw std::invalid_argument("split: powers must be nonnegative");
  }
  if (split.p_m + split.p_k > scn.p_total + kFeasSlack) {
    throw std::invalid_argument("split: exceeds power budget");
  }
  std::vector<std::string> warnings;
  if (!(split.p_m > split.p_k)) {
    warnings.push_back("primary-component rule p_m > p_k violated");
  }
  return warnings;
}

ErrorProfile error_profile(const LinkScenario& scn, const PowerSplit& split, double d_k) {
  if (!(d_k >= 0.0) || d_k > static_cast<double>(scn.n)) {
    throw std::invalid_argument("error_profile: d_k outside [0, n]");
  }
  const double dm = static_cast<double>(scn.d_m);
  ErrorProfile p;
  p.eps_bob_m = component_error(sinr_message(scn.z_bob, split, scn.sigma2), scn.n, dm);
  p.eps_eve_m = component_error(sinr_message(scn.z_eve, split, scn.sigma2), scn.n, dm);
  p.eps_bob_k = component_error(sinr_key(scn.z_bob, split, scn.sigma2), scn.n, d_k);
  p.eps_eve_k = component_error(sinr_key(scn.z_eve, split, scn.sigma2), scn.n, d_k);
  return p;
}

Metrics metrics(const ErrorProfile& p) noexcept {
  Metrics m;
  m.eps_bob = 1.0 - (1.0 - p.eps_bob_m) * (1.0 - p.eps_bob_k);
  m.eps_eve = 1.0 - (1.0 - p.eps_eve_m) * (1.0 - p.eps_eve_k);
  m.eps_lf = 1.0 - (1.0 - m.eps_bob) * m.eps_eve;
  m.r_b = 1.0 - (1.0 - p.eps_bob_m) * p.eps_bob_k;
  m.r_d = m.r_b * (1.0 - p.eps_eve_m) * p.eps_eve_k;
  return m;
}

FeasibilityReport check_feasible(const LinkScenario& scn, const PowerSplit& split, double d_k) {
  FeasibilityReport r;
  r.power_nonneg = split.p_m >= -kFeasSlack && split.p_k >= -kFeasSlack;
  r.power_budget = split.p_m + split.p_k <= scn.p_total + kFeasSlack;
  r.dk_range = d_k >= -kFeasSlack && d_k <= static_cast<double>(scn.n) + kFeasSlack;

  const PowerSplit clamped{std::max(split.p_m, 0.0), std::max(split.p_k, 0.0)};
  const double dk_clamped = std::min(std::max(d_k, 0.0), static_cast<double>(scn.n));
  r.profile = error_profile(scn, clamped, dk_clamped);
  r.m = metrics(r.profile);

  const Thresholds& th = scn.thresholds;
  r.bob_m = r.profile.eps_bob_m <= th.eps_bob_m + kFeasSlack;
  r.eve_m = r.profile.eps_eve_m <= th.eps_eve_m + kFeasSlack;
  r.bob_k = r.profile.eps_bob_k <= th.eps_bob_k + kFeasSlack;
  r.eve_k = r.profile.eps_eve_k >= th.eps_eve_k - kFeasSlack;
  r.lfp = r.m.eps_lf <= th.eps_lf + kFeasSlack;
  r.feasible = r.power_nonneg && r.power_budget && r.dk_range && r.bob_m && r.eve_m &&
               r.bob_k && r.eve_k && r.lfp;
  return r;
}

double sinr_message_fullpower(const LinkScenario& scn, double gain, double p_m) noexcept {
  return sinr_message(gain, {p_m, scn.p_total - p_m}, scn.sigma2);
}

double sinr_key_fullpower(const LinkScenario& scn, double gain, double p_m) noexcept {
  return sinr_key(gain, {p_m, scn.p_total - p_m}, scn.sigma2);
}

double dsinr_message_dpm(const LinkScenario& scn, double gain, double p_m) noexcept {
  const double denom = gain * (scn.p_total - p_m) + scn.sigma2;
  return gain * (gain * scn.p_total + scn.sigma2) / (denom * denom);
}

double deps_message_dpm(const LinkScenario& scn, double gain, double p_m) {
  const double snr = sinr_message_fullpower(scn, gain, p_m);
  return fbl_error_dsnr(snr, {scn.n, static_cast<double>(scn.d_m)}) *
         dsinr_message_dpm(scn, gain, p_m);
}

double deps_key_dpm(const LinkScenario& scn, double gain, double p_m, double d_k) {
  const double snr = sinr_key_fullpower(scn, gain, p_m);
  return fbl_error_dsnr(snr, {scn.n, d_k}) * dsinr_key_dpm(scn, gain);
}

}  // namespace pld
