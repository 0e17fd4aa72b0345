#pragma once

#include "pld/link.hpp"

namespace pld {

// Conventional PLS comparators: no deceptive ciphering (d_k = 0, p_k = 0),
// so R_d = 0 by construction and only the leakage-failure probability is
// optimized. eps_lf reduces to 1 - (1 - eps_bob_m) * eps_eve_m.
struct BaselineResult {
  double p_m;     // transmit power actually used
  int d_m;        // message bits per block actually used
  double eps_lf;  // achieved leakage-failure probability
  double r_d = 0.0;
};

/// Scalar search of p_m in [0, p_total] at fixed d_m (resolution 1e-6 * p_total).
/// With `apply_thresholds` the message error constraints gate the candidates.
BaselineResult baseline_power(const LinkScenario& scn, bool apply_thresholds = false);

/// Integer search of d_m in [16, n] at full power p_m = p_total.
BaselineResult baseline_rate(const LinkScenario& scn, bool apply_thresholds = false);

/// eps_lf of a keyless transmission at power p_m with d_m message bits.
double baseline_eps_lf(const LinkScenario& scn, double p_m, int d_m);

}  // namespace pld
