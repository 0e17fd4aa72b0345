#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pld/grid.hpp"
#include "pld/math.hpp"
#include "pld/solver.hpp"

using namespace pld;

namespace {

LinkScenario fig2_scenario(double p_total = 10.0, double z_eve_db = -10.0) {
  LinkScenario scn;
  scn.z_bob = 1.0;
  scn.z_eve = db_to_linear(z_eve_db);
  scn.sigma2 = 1.0;
  scn.p_total = p_total;
  scn.n = 64;
  scn.d_m = 16;
  return scn;
}

}  // namespace

TEST_CASE("search_2d_power puts the optimum on the budget line") {
  const LinkScenario scn = fig2_scenario();
  GridSpec grid;
  grid.p_m_steps = 128;
  grid.p_k_steps = 128;
  for (int d_k : {30, 60}) {
    const PowerSearchResult res = search_2d_power(scn, d_k, grid);
    REQUIRE(res.found);
    const double step = scn.p_total / (grid.p_m_steps - 1);
    CHECK(scn.p_total - (res.best.p_m + res.best.p_k) <= step + 1e-12);
  }
}

TEST_CASE("search_2d_power masks agree with check_feasible") {
  const LinkScenario scn = fig2_scenario();
  GridSpec grid;
  grid.p_m_steps = 24;
  grid.p_k_steps = 24;
  const PowerSearchResult res = search_2d_power(scn, 30, grid);
  for (int i = 0; i < grid.p_m_steps; ++i) {
    for (int j = 0; j < grid.p_k_steps; ++j) {
      const bool ok =
          check_feasible(scn, {res.surface.p_m[i], res.surface.p_k[j]}, 30.0).feasible;
      CHECK(res.surface.feasible(i, j) == ok);
    }
  }
}

TEST_CASE("contradictory key thresholds empty the 2d search") {
  LinkScenario scn = fig2_scenario();
  scn.z_eve = scn.z_bob;
  scn.thresholds.eps_bob_k = 0.4;
  scn.thresholds.eps_eve_k = 0.6;
  GridSpec grid;
  grid.p_m_steps = 32;
  grid.p_k_steps = 32;
  const PowerSearchResult res = search_2d_power(scn, 30, grid);
  CHECK_FALSE(res.found);
  CHECK_FALSE(res.surface.feasible.any());
}

TEST_CASE("search_fullpower surface is unimodal inside the feasible region") {
  const LinkScenario scn = fig2_scenario();
  GridSpec grid;
  grid.p_m_steps = 160;
  const FullPowerSearchResult res = search_fullpower(scn, grid);
  REQUIRE(res.found);

  // Along p_m for each d_k column.
  for (int j = 0; j < static_cast<int>(res.surface.d_k.size()); ++j) {
    bool falling = false;
    double prev = -1.0;
    for (int i = 0; i < grid.p_m_steps; ++i) {
      if (!res.surface.feasible(i, j)) continue;
      const double v = res.surface.r_d(i, j);
      if (prev >= 0.0) {
        if (v < prev - 1e-12) falling = true;
        if (falling) CHECK(v <= prev + 1e-12);
      }
      prev = v;
    }
  }
  // Along d_k for each p_m row.
  for (int i = 0; i < grid.p_m_steps; ++i) {
    bool falling = false;
    double prev = -1.0;
    for (int j = 0; j < static_cast<int>(res.surface.d_k.size()); ++j) {
      if (!res.surface.feasible(i, j)) continue;
      const double v = res.surface.r_d(i, j);
      if (prev >= 0.0) {
        if (v < prev - 1e-12) falling = true;
        if (falling) CHECK(v <= prev + 1e-12);
      }
      prev = v;
    }
  }
}

TEST_CASE("search_fullpower reports an empty region explicitly") {
  LinkScenario scn = fig2_scenario();
  scn.z_eve = scn.z_bob;
  scn.thresholds.eps_bob_k = 0.4;
  scn.thresholds.eps_eve_k = 0.6;
  GridSpec grid;
  grid.p_m_steps = 64;
  const FullPowerSearchResult res = search_fullpower(scn, grid, true);
  CHECK_FALSE(res.found);
}

TEST_CASE("refined oracle agrees with the solver") {
  const LinkScenario scn = fig2_scenario();
  GridSpec grid;
  grid.p_m_steps = 256;
  const FullPowerSearchResult oracle_res = search_fullpower(scn, grid, /*refine=*/true);
  REQUIRE(oracle_res.found);
  const SolverResult solver_res = mm_bcd(scn);
  REQUIRE(solver_res.status == SolverStatus::kConverged);
  CHECK(std::fabs(solver_res.r_d - oracle_res.r_d) <= 1e-6);
  // The oracle never loses to the solver by more than numerical dust.
  CHECK(oracle_res.r_d >= solver_res.r_d - 1e-9);
}

TEST_CASE("theorem-1 witness on the full-power line") {
  const LinkScenario scn = fig2_scenario();
  for (int d_k : {30, 60}) {
    for (int i = 1; i < 20; ++i) {
      for (int j = 1; j < 20; ++j) {
        const double p_m = scn.p_total * i / 20.0;
        const double p_k = scn.p_total * j / 20.0;
        if (p_m + p_k >= scn.p_total) continue;
        const FeasibilityReport interior = check_feasible(scn, {p_m, p_k}, d_k);
        if (!interior.feasible) continue;
        const FeasibilityReport on_line =
            check_feasible(scn, {scn.p_total - p_k, p_k}, d_k);
        if (!on_line.feasible) continue;
        CHECK(on_line.m.r_d >= interior.m.r_d - 1e-9);
      }
    }
  }
}

TEST_CASE("min_feasible_lfp_threshold") {
  GridSpec probe;
  probe.p_m_steps = 128;

  SUBCASE("below the minimum the region is empty") {
    const LinkScenario scn = fig2_scenario(2.0, -5.0);
    const MinLfpResult r = min_feasible_lfp_threshold(scn, 1e-3, probe);
    REQUIRE(r.feasible);
    LinkScenario tight = scn;
    tight.thresholds.eps_lf = r.threshold - 5e-3;
    GridSpec g;
    g.p_m_steps = 128;
    CHECK_FALSE(search_fullpower(tight, g).found);
    LinkScenario loose = scn;
    loose.thresholds.eps_lf = r.threshold + 5e-3;
    CHECK(search_fullpower(loose, g).found);
  }

  SUBCASE("nonincreasing in the power budget") {
    double prev = 2.0;
    for (double p : {1.0, 2.0, 4.0, 8.0}) {
      const LinkScenario scn = fig2_scenario(p, -5.0);
      const MinLfpResult r = min_feasible_lfp_threshold(scn, 5e-4, probe);
      REQUIRE(r.feasible);
      CHECK(r.threshold <= prev + 2e-3);
      prev = r.threshold;
    }
  }

  SUBCASE("tight eavesdropper at low power needs a threshold above 0.1") {
    const LinkScenario scn = fig2_scenario(2.0, -3.0);
    const MinLfpResult r = min_feasible_lfp_threshold(scn, 1e-3, probe);
    REQUIRE(r.feasible);
    CHECK(r.threshold > 0.1);
  }

  SUBCASE("never feasible is reported") {
    LinkScenario scn = fig2_scenario();
    scn.z_eve = scn.z_bob;
    scn.thresholds.eps_bob_k = 0.4;
    scn.thresholds.eps_eve_k = 0.6;
    const MinLfpResult r = min_feasible_lfp_threshold(scn, 1e-3, probe);
    CHECK_FALSE(r.feasible);
    CHECK(r.threshold == 1.0);
  }
}
