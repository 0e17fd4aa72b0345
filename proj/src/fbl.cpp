#include "pld/fbl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pld {
namespace {

constexpr double kBisectTol = 1e-9;
constexpr int kBisectMaxIter = 200;

void require_domain(double snr, const BlockSpec& spec) {
  if (!(snr > 0.0) || !std::isfinite(snr)) {
    throw std::domain_error("fbl: snr must be positive and finite");
  }
  if (!spec.valid()) {
    throw std::domain_error("fbl: invalid block spec");
  }
}

}  // namespace

double fbl_omega(double snr, const BlockSpec& spec) {
  require_domain(snr, spec);
  const double n = static_cast<double>(spec.n);
  const double v = dispersion(snr);
  // Natural-log form of the Q-argument: the ln 2 factor is applied once.
  return std::sqrt(n / v) * (std::log1p(snr) - (spec.d / n) * kLn2);
}

double fbl_error(double snr, const BlockSpec& spec) {
  return q_func(fbl_omega(snr, spec));
}

double fbl_error_dsnr(double snr, const BlockSpec& spec) {
  const double omega = fbl_omega(snr, spec);
  const double n = static_cast<double>(spec.n);
  const double v = dispersion(snr);
  const double onep = 1.0 + snr;
  const double dv = 2.0 / (onep * onep * onep);
  const double cap_ln = std::log1p(snr) - (spec.d / n) * kLn2;
  // d(omega)/d(snr) with omega = sqrt(n) * cap_ln * v^{-1/2}.
  const double domega = std::sqrt(n) * (1.0 / (onep * std::sqrt(v)) -
                                        0.5 * cap_ln * dv / (v * std::sqrt(v)));
  return -normal_pdf(omega) * domega;
}

double fbl_error_dbits(double snr, const BlockSpec& spec) {
  const double omega = fbl_omega(snr, spec);
  const double n = static_cast<double>(spec.n);
  const double v = dispersion(snr);
  return normal_pdf(omega) * kLn2 / std::sqrt(n * v);
}

InvertResult invert_info_bits(double snr, int n, double eps_target) {
  if (!(eps_target > 0.0 && eps_target < 1.0)) {
    throw std::domain_error("invert_info_bits: eps_target must lie in (0, 1)");
  }
  const double nd = static_cast<double>(n);
  const double eps_lo = fbl_error(snr, {n, 0.0});
  const double eps_hi = fbl_error(snr, {n, nd});
  if (eps_target <= eps_lo) return {0.0, false};
  if (eps_target >= eps_hi) return {nd, false};
  double lo = 0.0, hi = nd;
  for (int i = 0; i < kBisectMaxIter && hi - lo > kBisectTol; ++i) {
    const double mid = 0.5 * (lo + hi);
    (fbl_error(snr, {n, mid}) < eps_target ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), true};
}

InvertResult invert_snr(const BlockSpec& spec, double eps_target) {
  if (!(eps_target > 0.0 && eps_target < 1.0)) {
    throw std::domain_error("invert_snr: eps_target must lie in (0, 1)");
  }
  // fbl_error is strictly decreasing in snr.
  double lo = 1e-12;
  if (fbl_error(lo, spec) <= eps_target) return {lo, false};
  double hi = 1.0;
  while (fbl_error(hi, spec) > eps_target) {
    hi *= 2.0;
    if (hi > 1e15) return {hi, false};
  }
  for (int i = 0; i < kBisectMaxIter && hi - lo > kBisectTol; ++i) {
    const double mid = 0.5 * (lo + hi);
    (fbl_error(mid, spec) > eps_target ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), true};
}

}  // namespace pld
