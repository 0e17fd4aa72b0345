#pragma once

#include "pld/math.hpp"

namespace pld {

// One coded packet: n channel uses carrying d information bits. d is kept
// real-valued so the solver can relax the integer key length; integer
// semantics appear only at solver output.
struct BlockSpec {
  int n;     // blocklength, >= 1
  double d;  // information bits, 0 <= d <= n

  bool valid() const noexcept { return n >= 1 && d >= 0.0 && d <= static_cast<double>(n); }
};

/// Argument of the Q-function in the normal approximation:
/// omega = sqrt(n / V(snr)) * (ln(1+snr) - (d/n) ln 2).
double fbl_omega(double snr, const BlockSpec& spec);

/// Block error probability Q(omega); strictly decreasing in snr, strictly
/// increasing in d for fixed n.
double fbl_error(double snr, const BlockSpec& spec);

/// Analytic d(eps)/d(snr), negative on the domain.
double fbl_error_dsnr(double snr, const BlockSpec& spec);

/// Analytic d(eps)/d(d), nonnegative on the domain.
double fbl_error_dbits(double snr, const BlockSpec& spec);

// Result of a monotone inversion. When the target is unreachable the value is
// clamped to the nearest domain boundary and `reachable` is false.
struct InvertResult {
  double value;
  bool reachable;
};

/// Solves fbl_error(snr, {n, d}) = eps_target for d in [0, n] by bisection
/// (absolute tolerance 1e-9, at most 200 iterations).
InvertResult invert_info_bits(double snr, int n, double eps_target);

/// Solves fbl_error(snr, spec) = eps_target for snr > 0 by bisection on an
/// exponentially expanded bracket; same tolerances as invert_info_bits.
InvertResult invert_snr(const BlockSpec& spec, double eps_target);

}  // namespace pld
