#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pld/link.hpp"

namespace pld {

using BoolArrayXX = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

struct GridSpec {
  int p_m_steps = 512;
  int p_k_steps = 512;
  std::vector<int> d_k_values;  // empty means all of {0, ..., n}
  bool full_power = false;      // substitute p_k = p_total - p_m
};

// Dense (p_m, p_k) surface for a fixed d_k. Infeasible cells keep their
// metric values and are masked, so plots can reproduce the opacity split.
struct PowerSurface {
  Eigen::ArrayXd p_m;  // axis values, size p_m_steps
  Eigen::ArrayXd p_k;
  Eigen::ArrayXXd r_d;     // (p_m_steps, p_k_steps)
  Eigen::ArrayXXd eps_lf;
  BoolArrayXX feasible;
};

struct PowerSearchResult {
  bool found = false;
  PowerSplit best{0.0, 0.0};
  double r_d = 0.0;
  double eps_lf = 1.0;
  PowerSurface surface;
};

/// Exhaustive search of R_d over the power box [0, P]^2 for fixed d_k.
PowerSearchResult search_2d_power(const LinkScenario& scn, int d_k, const GridSpec& grid);

// Full-power surface over (p_m, d_k).
struct FullPowerSurface {
  Eigen::ArrayXd p_m;
  std::vector<int> d_k;
  Eigen::ArrayXXd r_d;  // (p_m_steps, |d_k|)
  Eigen::ArrayXXd eps_lf;
  BoolArrayXX feasible;
};

struct FullPowerSearchResult {
  bool found = false;
  double p_m = 0.0;
  int d_k = 0;
  double r_d = 0.0;
  double eps_lf = 1.0;
  FullPowerSurface surface;
};

/// Exhaustive search over (p_m, d_k) with p_k = p_total - p_m. With `refine`
/// a single local pass re-optimizes p_m continuously around the best cell.
FullPowerSearchResult search_fullpower(const LinkScenario& scn, const GridSpec& grid,
                                       bool refine = false);

struct MinLfpResult {
  double threshold = 1.0;
  bool feasible = false;  // false: not feasible even with the threshold at 1-
};

/// Smallest eps_lf threshold for which the full-power feasible region is
/// nonempty, by bisection (feasibility is monotone in the threshold).
MinLfpResult min_feasible_lfp_threshold(const LinkScenario& scn, double resolution,
                                        const GridSpec& probe = {});

}  // namespace pld
