#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pld/link.hpp"
#include "pld/math.hpp"
#include "pld/rng.hpp"

using namespace pld;

namespace {

LinkScenario fig2_scenario() {
  LinkScenario scn;
  scn.z_bob = 1.0;
  scn.z_eve = db_to_linear(-10.0);
  scn.sigma2 = 1.0;
  scn.p_total = 10.0;
  scn.n = 64;
  scn.d_m = 16;
  return scn;
}

}  // namespace

TEST_CASE("sinr mappings") {
  CHECK(sinr_message(1.0, {8.0, 2.0}, 1.0) == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
  CHECK(sinr_message(1.0, {8.0, 0.0}, 1.0) == doctest::Approx(8.0).epsilon(1e-15));
  const double z = std::pow(10.0, -0.5);
  CHECK(sinr_message(z, {1.5, 0.5}, 1.0) ==
        doctest::Approx(0.40958117848744297).epsilon(1e-12));

  CHECK(sinr_key(1.0, {8.0, 2.0}, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sinr_key(1.0, {8.0, 0.0}, 1.0) == 0.0);
  CHECK(sinr_key(0.1, {0.0, 4.0}, 1.0) == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("error_profile") {
  LinkScenario scn = fig2_scenario();

  SUBCASE("symmetric gains give identical columns") {
    scn.z_eve = scn.z_bob;
    const ErrorProfile p = error_profile(scn, {6.0, 4.0}, 30.0);
    CHECK(p.eps_bob_m == p.eps_eve_m);
    CHECK(p.eps_bob_k == p.eps_eve_k);
  }

  SUBCASE("d_k = 0 with key power makes key errors vanish") {
    const ErrorProfile p = error_profile(scn, {6.0, 4.0}, 0.0);
    CHECK(p.eps_bob_k < 1e-9);
    CHECK(p.eps_eve_k < 0.5);
  }

  SUBCASE("degenerate powers map to certain loss") {
    const ErrorProfile p = error_profile(scn, {10.0, 0.0}, 30.0);
    CHECK(p.eps_bob_k == 1.0);
    CHECK(p.eps_eve_k == 1.0);
    const ErrorProfile q = error_profile(scn, {0.0, 10.0}, 30.0);
    CHECK(q.eps_bob_m == 1.0);
    CHECK(q.eps_eve_m == 1.0);
  }

  SUBCASE("d_k outside range throws") {
    CHECK_THROWS_AS(error_profile(scn, {6.0, 4.0}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(error_profile(scn, {6.0, 4.0}, 65.0), std::invalid_argument);
  }
}

TEST_CASE("metrics formulas") {
  SUBCASE("perfect secrecy and reliability") {
    const Metrics m = metrics({0.0, 0.0, 1.0, 1.0});
    CHECK(m.eps_bob == 0.0);
    CHECK(m.eps_eve == 1.0);
    CHECK(m.eps_lf == 0.0);
  }
  SUBCASE("Bob always deceived kills the deception rate") {
    const Metrics m = metrics({0.0, 1.0, 0.0, 1.0});
    CHECK(m.r_b == 0.0);
    CHECK(m.r_d == 0.0);
  }
  SUBCASE("arithmetic example") {
    const Metrics m = metrics({0.01, 0.02, 0.05, 0.9});
    CHECK(m.r_b == doctest::Approx(0.9802).epsilon(1e-12));
    CHECK(m.r_d == doctest::Approx(0.838071).epsilon(1e-12));
    CHECK(m.eps_bob == doctest::Approx(0.0298).epsilon(1e-12));
    CHECK(m.eps_eve == doctest::Approx(0.905).epsilon(1e-12));
    CHECK(m.eps_lf == doctest::Approx(0.121969).epsilon(1e-12));
  }
  SUBCASE("identities hold exactly") {
    CounterRng rng(3);
    for (int i = 0; i < 200; ++i) {
      const ErrorProfile p{rng.next_double(), rng.next_double(), rng.next_double(),
                           rng.next_double()};
      const Metrics m = metrics(p);
      CHECK(m.eps_lf == 1.0 - (1.0 - m.eps_bob) * m.eps_eve);
      CHECK(m.r_d == m.r_b * (1.0 - p.eps_eve_m) * p.eps_eve_k);
      for (double v : {m.eps_bob, m.eps_eve, m.eps_lf, m.r_b, m.r_d}) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
  }
}

TEST_CASE("check_feasible") {
  LinkScenario scn = fig2_scenario();

  SUBCASE("power budget violation is flagged") {
    const FeasibilityReport r = check_feasible(scn, {8.0, 3.0}, 30.0);
    CHECK_FALSE(r.power_budget);
    CHECK_FALSE(r.feasible);
  }
  SUBCASE("known good point passes every constraint") {
    const FeasibilityReport r = check_feasible(scn, {8.0, 2.0}, 30.0);
    CHECK(r.power_nonneg);
    CHECK(r.power_budget);
    CHECK(r.dk_range);
    CHECK(r.bob_m);
    CHECK(r.eve_m);
    CHECK(r.bob_k);
    CHECK(r.eve_k);
    CHECK(r.lfp);
    CHECK(r.feasible);
  }
  SUBCASE("comparisons absorb 1e-12 noise") {
    const FeasibilityReport r = check_feasible(scn, {8.0, 2.0 + 5e-13}, 30.0);
    CHECK(r.power_budget);
  }
}

TEST_CASE("eps_k monotone in d_k, eps_m independent of it") {
  const LinkScenario scn = fig2_scenario();
  double prev_bob = -1.0, prev_eve = -1.0;
  const ErrorProfile base = error_profile(scn, {8.0, 2.0}, 0.0);
  for (double dk = 0.0; dk <= 64.0; dk += 1.0) {
    const ErrorProfile p = error_profile(scn, {8.0, 2.0}, dk);
    CHECK(p.eps_bob_k >= prev_bob);
    CHECK(p.eps_eve_k >= prev_eve);
    prev_bob = p.eps_bob_k;
    prev_eve = p.eps_eve_k;
    CHECK(p.eps_bob_m == base.eps_bob_m);
    CHECK(p.eps_eve_m == base.eps_eve_m);
  }
}

TEST_CASE("symmetric scenario equalizes the receivers") {
  LinkScenario scn = fig2_scenario();
  scn.z_eve = scn.z_bob;
  const Metrics m = metrics(error_profile(scn, {7.0, 3.0}, 24.0));
  CHECK(m.eps_bob == m.eps_eve);
}

TEST_CASE("full-power dominance on the Fig. 2 grid") {
  const LinkScenario scn = fig2_scenario();
  for (int d_k : {30, 60}) {
    for (int i = 1; i < 24; ++i) {
      for (int j = 1; j < 24; ++j) {
        const double p_m = scn.p_total * i / 24.0;
        const double p_k = scn.p_total * j / 24.0;
        if (p_m + p_k >= scn.p_total) continue;
        const FeasibilityReport interior = check_feasible(scn, {p_m, p_k}, d_k);
        if (!interior.feasible) continue;
        const double p_m_full = scn.p_total - p_k;
        const FeasibilityReport full = check_feasible(scn, {p_m_full, p_k}, d_k);
        if (!full.feasible) continue;
        CHECK(full.m.r_d >= interior.m.r_d - 1e-9);
      }
    }
  }
}

TEST_CASE("scenario validation") {
  LinkScenario scn = fig2_scenario();
  CHECK(validate(scn).empty() == false);  // thresholds at 0.5 warn
  scn.thresholds.eps_bob_k = 0.4;
  scn.thresholds.eps_eve_k = 0.6;
  CHECK(validate(scn).empty());

  LinkScenario bad = scn;
  bad.z_bob = -1.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = scn;
  bad.d_m = 0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = scn;
  bad.thresholds.eps_lf = 0.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  CHECK_THROWS_AS(validate(scn, {6.0, 6.0}), std::invalid_argument);  // budget
  CHECK_THROWS_AS(validate(scn, {-1.0, 2.0}), std::invalid_argument);
  CHECK(validate(scn, {4.0, 5.0}).size() == 1);  // primary-component warning
  CHECK(validate(scn, {6.0, 4.0}).empty());
}

TEST_CASE("full-power derivative helpers match central differences") {
  const LinkScenario scn = fig2_scenario();
  CounterRng rng(99);
  int checked = 0;
  while (checked < 150) {
    const double p_m = 0.5 + 9.0 * rng.next_double();
    const double d_k = 4.0 + 56.0 * rng.next_double();
    const double h = 4e-6 * scn.p_total;
    for (double gain : {scn.z_bob, scn.z_eve}) {
      const double em = fbl_error(sinr_message_fullpower(scn, gain, p_m),
                                  {scn.n, static_cast<double>(scn.d_m)});
      if (em < 1e-8 || em > 1.0 - 1e-8) continue;
      const double fd_m =
          (fbl_error(sinr_message_fullpower(scn, gain, p_m + h),
                     {scn.n, static_cast<double>(scn.d_m)}) -
           fbl_error(sinr_message_fullpower(scn, gain, p_m - h),
                     {scn.n, static_cast<double>(scn.d_m)})) /
          (2.0 * h);
      CHECK(deps_message_dpm(scn, gain, p_m) == doctest::Approx(fd_m).epsilon(2e-6));

      const double ek = fbl_error(sinr_key_fullpower(scn, gain, p_m), {scn.n, d_k});
      if (ek < 1e-8 || ek > 1.0 - 1e-8) continue;
      const double fd_k = (fbl_error(sinr_key_fullpower(scn, gain, p_m + h), {scn.n, d_k}) -
                           fbl_error(sinr_key_fullpower(scn, gain, p_m - h), {scn.n, d_k})) /
                          (2.0 * h);
      CHECK(deps_key_dpm(scn, gain, p_m, d_k) == doctest::Approx(fd_k).epsilon(2e-6));
      ++checked;
    }
  }
}
