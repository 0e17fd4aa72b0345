#pragma once

#include <cmath>

namespace pld {

inline constexpr double kLn2 = 0.69314718055994530942;
inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;

/// Gaussian tail probability Q(x) = P(N(0,1) > x).
inline double q_func(double x) noexcept { return 0.5 * std::erfc(x * kInvSqrt2); }

/// Standard normal density.
inline double normal_pdf(double x) noexcept {
  return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

/// Inverse of q_func on (0, 1). Throws std::domain_error outside the open
/// interval. Accurate to a few ulp (rational seed + two Halley refinements).
double q_inv(double p);

/// Shannon capacity log2(1 + snr) in bits per channel use.
inline double capacity(double snr) noexcept { return std::log1p(snr) / kLn2; }

// Channel dispersion 1 - (1+snr)^-2, written as snr(2+snr)/(1+snr)^2 to avoid
// cancellation near zero.
inline double dispersion(double snr) noexcept {
  const double onep = 1.0 + snr;
  return snr * (2.0 + snr) / (onep * onep);
}

inline double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double v) noexcept { return 10.0 * std::log10(v); }

}  // namespace pld
