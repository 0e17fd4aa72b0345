#include "pld/grid.hpp"

#include <algorithm>
#include <cmath>

#include "pld/golden.hpp"

namespace pld {
namespace {

std::vector<int> dk_values_or_default(const GridSpec& grid, int n) {
  if (!grid.d_k_values.empty()) return grid.d_k_values;
  std::vector<int> all(n + 1);
  for (int i = 0; i <= n; ++i) all[i] = i;
  return all;
}

Eigen::ArrayXd linspace(double lo, double hi, int steps) {
  return Eigen::ArrayXd::LinSpaced(steps, lo, hi);
}

}  // namespace

PowerSearchResult search_2d_power(const LinkScenario& scn, int d_k, const GridSpec& grid) {
  if (grid.p_m_steps < 2 || grid.p_k_steps < 2) {
    throw std::invalid_argument("search_2d_power: step counts must be >= 2");
  }
  PowerSearchResult res;
  PowerSurface& s = res.surface;
  s.p_m = linspace(0.0, scn.p_total, grid.p_m_steps);
  s.p_k = linspace(0.0, scn.p_total, grid.p_k_steps);
  s.r_d.resize(grid.p_m_steps, grid.p_k_steps);
  s.eps_lf.resize(grid.p_m_steps, grid.p_k_steps);
  s.feasible.resize(grid.p_m_steps, grid.p_k_steps);

  for (int i = 0; i < grid.p_m_steps; ++i) {
    for (int j = 0; j < grid.p_k_steps; ++j) {
      const FeasibilityReport rep =
          check_feasible(scn, {s.p_m[i], s.p_k[j]}, static_cast<double>(d_k));
      s.r_d(i, j) = rep.m.r_d;
      s.eps_lf(i, j) = rep.m.eps_lf;
      s.feasible(i, j) = rep.feasible;
      if (rep.feasible && rep.m.r_d > res.r_d) {
        res.found = true;
        res.best = {s.p_m[i], s.p_k[j]};
        res.r_d = rep.m.r_d;
        res.eps_lf = rep.m.eps_lf;
      }
    }
  }
  return res;
}

FullPowerSearchResult search_fullpower(const LinkScenario& scn, const GridSpec& grid,
                                       bool refine) {
  if (grid.p_m_steps < 2) {
    throw std::invalid_argument("search_fullpower: step counts must be >= 2");
  }
  FullPowerSearchResult res;
  FullPowerSurface& s = res.surface;
  s.p_m = linspace(0.0, scn.p_total, grid.p_m_steps);
  s.d_k = dk_values_or_default(grid, scn.n);
  const int nd = static_cast<int>(s.d_k.size());
  s.r_d.resize(grid.p_m_steps, nd);
  s.eps_lf.resize(grid.p_m_steps, nd);
  s.feasible.resize(grid.p_m_steps, nd);

  int best_j = -1;
  for (int i = 0; i < grid.p_m_steps; ++i) {
    const PowerSplit split{s.p_m[i], scn.p_total - s.p_m[i]};
    for (int j = 0; j < nd; ++j) {
      const FeasibilityReport rep = check_feasible(scn, split, static_cast<double>(s.d_k[j]));
      s.r_d(i, j) = rep.m.r_d;
      s.eps_lf(i, j) = rep.m.eps_lf;
      s.feasible(i, j) = rep.feasible;
      if (rep.feasible && rep.m.r_d > res.r_d) {
        res.found = true;
        best_j = j;
        res.p_m = s.p_m[i];
        res.d_k = s.d_k[j];
        res.r_d = rep.m.r_d;
        res.eps_lf = rep.m.eps_lf;
      }
    }
  }
  if (!res.found || !refine) return res;

  // One local refinement pass: for d_k near the best cell, re-optimize p_m
  // continuously inside the bracket spanned by the neighboring grid columns.
  const double step = s.p_m.size() > 1 ? s.p_m[1] - s.p_m[0] : scn.p_total;
  auto eval = [&](int dk, double pm) {
    return check_feasible(scn, {pm, scn.p_total - pm}, static_cast<double>(dk));
  };
  for (int j = std::max(0, best_j - 2); j <= std::min(nd - 1, best_j + 2); ++j) {
    const int dk = s.d_k[j];
    // Bracket from this column's feasible band around its best cell.
    int ci = -1;
    double cv = -1.0;
    for (int i = 0; i < grid.p_m_steps; ++i) {
      if (s.feasible(i, j) && s.r_d(i, j) > cv) {
        cv = s.r_d(i, j);
        ci = i;
      }
    }
    if (ci < 0) continue;
    const double lo = std::max(0.0, s.p_m[ci] - 2.0 * step);
    const double hi = std::min(scn.p_total, s.p_m[ci] + 2.0 * step);
    const double pm = golden_section_max(
        [&](double x) {
          const FeasibilityReport rep = eval(dk, x);
          return rep.feasible ? rep.m.r_d : -1.0;
        },
        lo, hi, 1e-10, 300);
    const FeasibilityReport rep = eval(dk, pm);
    if (rep.feasible && rep.m.r_d > res.r_d) {
      res.p_m = pm;
      res.d_k = dk;
      res.r_d = rep.m.r_d;
      res.eps_lf = rep.m.eps_lf;
    }
  }
  return res;
}

MinLfpResult min_feasible_lfp_threshold(const LinkScenario& scn, double resolution,
                                        const GridSpec& probe) {
  if (!(resolution > 0.0)) {
    throw std::invalid_argument("min_feasible_lfp_threshold: resolution must be positive");
  }
  const std::vector<int> dks = dk_values_or_default(probe, scn.n);
  const Eigen::ArrayXd pms = linspace(0.0, scn.p_total, probe.p_m_steps);

  auto region_nonempty = [&](double th_lf) {
    LinkScenario s = scn;
    s.thresholds.eps_lf = th_lf;
    for (int i = 0; i < pms.size(); ++i) {
      const PowerSplit split{pms[i], scn.p_total - pms[i]};
      for (int dk : dks) {
        if (check_feasible(s, split, static_cast<double>(dk)).feasible) return true;
      }
    }
    return false;
  };

  const double top = 1.0 - 1e-9;
  if (!region_nonempty(top)) return {1.0, false};
  double lo = 0.0, hi = top;
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    (region_nonempty(mid) ? hi : lo) = mid;
  }
  return {hi, true};
}

}  // namespace pld
