#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pld/link.hpp"

namespace pld {

// Tangent majorizer of 1/R_d at a local point. With
//   lambda1 = (1 - eps_eve_m)/r_b,  lambda2 = eps_eve_k/r_b   (at the local point)
// the three-term AM-GM bound
//   1/R_d <= (1/r_b + lambda1/(1-eps_eve_m) + lambda2/eps_eve_k)^3 / (27 lambda1 lambda2)
// is tight at the local point and majorizes 1/R_d everywhere.
struct Surrogate {
  double local_d_k;
  double local_p_m;
  double lambda1;
  double lambda2;
};

struct SolverConfig {
  double mu_mm = 1e-7;    // outer (MM) relative stop threshold
  double mu_bcd = 1.49e-8;  // inner (BCD) relative stop threshold
  int max_outer = 100;    // Q
  int max_inner = 100;    // T
  std::optional<double> init_d_k;  // default: midpoint of feasible box (16x16 prescan)
  std::optional<double> init_p_m;
  bool pm_update_first = true;  // update order of the inner loop
  // Re-optimize p_m on the true R_d after integer rounding of d_k. Without
  // this the rounding step inherits a p_m tuned for the relaxed d_k, which
  // costs up to ~5e-6 in R_d on the benchmark scenarios.
  bool polish_after_rounding = true;
};

enum class SolverStatus { kConverged, kIterationCap, kInfeasible };

struct TracePoint {
  int q;  // outer iteration
  int t;  // inner iteration
  double d_k;
  double p_m;
  double surrogate;
  double r_d;
  double eps_lf;
};

struct SolverResult {
  int d_k_star = 0;
  double p_m_star = 0.0;
  double p_k_star = 0.0;
  double r_d = 0.0;
  double eps_lf = 1.0;
  std::vector<TracePoint> trace;
  SolverStatus status = SolverStatus::kInfeasible;
  int outer_iterations = 0;
  std::string message;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = true;
};

class EmptyFeasibleInterval : public std::runtime_error {
 public:
  EmptyFeasibleInterval() : std::runtime_error("empty feasible interval") {}
};

/// Builds the majorizer at a feasible local point (full power assumed).
/// Throws std::domain_error if R_d vanishes there.
Surrogate build_surrogate(const LinkScenario& scn, double local_d_k, double local_p_m);

/// Evaluates the majorizer at (d_k, p_m) with p_k = p_total - p_m.
/// Returns +inf where a denominator degenerates.
double surrogate_value(const LinkScenario& scn, const Surrogate& s, double d_k, double p_m);

// Feasible interval of d_k for fixed p_m under full power, from the monotone
// constraints on the component error probabilities. The eps_lf constraint is
// not monotone in general and is enforced by post-filtering minimizers.
Interval feasible_dk_interval(const LinkScenario& scn, double p_m);

// Feasible interval of p_m for fixed d_k under full power.
Interval feasible_pm_interval(const LinkScenario& scn, double d_k);

/// Minimizes the surrogate over d_k for fixed p_m. Throws EmptyFeasibleInterval.
double solve_sp1(const LinkScenario& scn, const Surrogate& s, double p_m_fixed);

/// Minimizes the surrogate over p_m for fixed d_k. Throws EmptyFeasibleInterval.
double solve_sp2(const LinkScenario& scn, const Surrogate& s, double d_k_fixed);

/// Two-layer optimizer: outer MM rebuilds the surrogate at the inner BCD
/// fixed point; the relaxed key length is rounded by comparing the integer
/// neighbors on the true objective.
SolverResult mm_bcd(const LinkScenario& scn, const SolverConfig& cfg = {});

}  // namespace pld
