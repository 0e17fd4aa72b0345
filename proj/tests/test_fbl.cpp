#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "pld/fbl.hpp"
#include "pld/rng.hpp"

using namespace pld;

TEST_CASE("q_func basics") {
  CHECK(q_func(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(q_func(40.0) < 1e-300);
  // Frozen from the integration oracle.
  CHECK(q_func(1.0) == doctest::Approx(0.15865525393145705).epsilon(1e-12));
  CHECK(q_func(2.3) == doctest::Approx(0.010724110021675805).epsilon(1e-12));
}

TEST_CASE("q_func against the integration oracle") {
  for (double x = -8.0; x <= 8.0; x += 0.25) {
    const double ref = static_cast<double>(oracle::q(x));
    CHECK(q_func(x) == doctest::Approx(ref).epsilon(1e-12));
  }
  CHECK(q_func(20.0) == doctest::Approx(static_cast<double>(oracle::q(20.0L))).epsilon(1e-11));
}

TEST_CASE("q_func is monotone decreasing") {
  double prev = 1.0;
  for (double x = -10.0; x <= 10.0; x += 0.1) {
    const double v = q_func(x);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("q_inv") {
  CHECK(q_inv(0.5) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(q_inv(q_func(2.3)) == doctest::Approx(2.3).epsilon(1e-10));
  CHECK(q_inv(0.15865525393145705) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(q_inv(0.0), std::domain_error);
  CHECK_THROWS_AS(q_inv(1.0), std::domain_error);
  CHECK_THROWS_AS(q_inv(-0.5), std::domain_error);

  // Round trip across many magnitudes.
  for (double p : {1e-12, 1e-9, 1e-6, 1e-3, 0.1, 0.3, 0.7, 0.9, 1.0 - 1e-9}) {
    CHECK(q_func(q_inv(p)) == doctest::Approx(p).epsilon(1e-10));
  }
}

TEST_CASE("capacity and dispersion") {
  CHECK(capacity(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(capacity(3.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(capacity(0.5) == doctest::Approx(0.5849625007211562).epsilon(1e-15));
  CHECK(dispersion(1.0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(dispersion(3.0) == doctest::Approx(0.9375).epsilon(1e-15));
  CHECK(dispersion(1e-9) == doctest::Approx(2e-9).epsilon(1e-6));
  double prev = 0.0;
  for (double g = 0.01; g < 100.0; g *= 1.3) {
    const double v = dispersion(g);
    CHECK(v > 0.0);
    CHECK(v < 1.0);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("fbl_error examples") {
  // d/n equal to capacity zeroes the Q-argument.
  CHECK(fbl_error(1.0, {64, 64.0}) == doctest::Approx(0.5).epsilon(1e-14));
  // Frozen from the step-by-step long double oracle.
  CHECK(fbl_omega(1.0, {64, 16.0}) == doctest::Approx(4.802264535411775).epsilon(1e-13));
  CHECK(fbl_error(1.0, {64, 16.0}) == doctest::Approx(7.844062349910905e-7).epsilon(1e-12));
  CHECK(fbl_error(1.0, {64, 0.0}) == doctest::Approx(7.616692357290297e-11).epsilon(1e-12));
  // Largest Q-argument at d = 0.
  CHECK(fbl_error(1.0, {64, 0.0}) < fbl_error(1.0, {64, 1.0}));
  CHECK(fbl_error(1.0, {64, 0.0}) < 1e-9);
}

TEST_CASE("fbl_error against the oracle on a grid") {
  for (double g : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    for (double d : {1.0, 16.0, 32.0, 48.0, 63.0}) {
      const double ref = static_cast<double>(oracle::fbl_error(g, 64.0L, d));
      CHECK(fbl_error(g, {64, d}) == doctest::Approx(ref).epsilon(1e-11));
    }
  }
}

TEST_CASE("fbl_error monotonicity on 100-point grids") {
  double prev = 1.0;
  for (int i = 1; i <= 100; ++i) {
    const double g = 0.05 * i;
    const double v = fbl_error(g, {64, 16.0});
    CHECK(v < prev);
    prev = v;
  }
  prev = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double d = 64.0 * i / 101.0;
    const double v = fbl_error(1.0, {64, d});
    CHECK(v > prev);
    prev = v;
  }
  for (int i = 0; i <= 100; ++i) {
    const double v = fbl_error(0.02 + 0.3 * i, {64, 24.0});
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("analytic derivatives match central differences") {
  CounterRng rng(4242);
  int checked = 0;
  while (checked < 300) {
    const double g = 0.05 + 20.0 * rng.next_double();
    const double d = 2.0 + 60.0 * rng.next_double();
    const BlockSpec spec{64, d};
    const double eps = fbl_error(g, spec);
    if (eps < 1e-8 || eps > 1.0 - 1e-8) continue;  // keep the density healthy
    ++checked;

    const double hg = 6e-6 * std::max(1.0, std::fabs(g));
    const double fd_g = (fbl_error(g + hg, spec) - fbl_error(g - hg, spec)) / (2.0 * hg);
    const double an_g = fbl_error_dsnr(g, spec);
    CHECK(an_g == doctest::Approx(fd_g).epsilon(1e-6));

    const double hd = 6e-6 * std::max(1.0, std::fabs(d));
    const double fd_d =
        (fbl_error(g, {64, d + hd}) - fbl_error(g, {64, d - hd})) / (2.0 * hd);
    const double an_d = fbl_error_dbits(g, spec);
    CHECK(an_d == doctest::Approx(fd_d).epsilon(1e-6));
    CHECK(an_d >= 0.0);
    CHECK(an_g <= 0.0);
  }
}

TEST_CASE("invert_info_bits") {
  // Zero Q-argument at the median.
  const InvertResult r = invert_info_bits(1.0, 64, 0.5);
  CHECK(r.reachable);
  CHECK(r.value == doctest::Approx(64.0 * capacity(1.0)).epsilon(1e-9));

  // Two-sided round trip on random feasible d.
  CounterRng rng(7);
  for (int i = 0; i < 50; ++i) {
    const double g = 0.2 + 3.0 * rng.next_double();
    const double d = 4.0 + 56.0 * rng.next_double();
    const double eps = fbl_error(g, {64, d});
    if (eps <= 0.0 || eps >= 1.0) continue;
    const InvertResult rr = invert_info_bits(g, 64, eps);
    CHECK(rr.reachable);
    CHECK(rr.value == doctest::Approx(d).epsilon(1e-6));
  }

  // Derived inverse of the frozen example.
  const InvertResult rd = invert_info_bits(1.0, 64, 7.844062349910905e-7);
  CHECK(rd.reachable);
  CHECK(rd.value == doctest::Approx(16.0).epsilon(1e-6));

  // Unreachable targets clamp with the flag down.
  const InvertResult lo = invert_info_bits(1.0, 64, 1e-300);
  CHECK_FALSE(lo.reachable);
  CHECK(lo.value == 0.0);
  const InvertResult hi = invert_info_bits(1.0, 64, 1.0 - 1e-12);
  CHECK_FALSE(hi.reachable);
  CHECK(hi.value == 64.0);
  CHECK_THROWS_AS(invert_info_bits(1.0, 64, 0.0), std::domain_error);
}

TEST_CASE("invert_snr") {
  // C(gamma) = d/n at eps = 0.5.
  const InvertResult r = invert_snr({64, 32.0}, 0.5);
  CHECK(r.reachable);
  CHECK(r.value == doctest::Approx(0.41421356237309515).epsilon(1e-8));

  CounterRng rng(11);
  for (int i = 0; i < 50; ++i) {
    const double g = 0.2 + 3.0 * rng.next_double();
    const BlockSpec spec{64, 4.0 + 56.0 * rng.next_double()};
    const double eps = fbl_error(g, spec);
    if (eps <= 1e-300 || eps >= 1.0) continue;
    const InvertResult rr = invert_snr(spec, eps);
    CHECK(rr.reachable);
    CHECK(fbl_error(rr.value, spec) == doctest::Approx(eps).epsilon(1e-6));
  }

  const InvertResult rd = invert_snr({64, 16.0}, 7.844062349910905e-7);
  CHECK(rd.reachable);
  CHECK(rd.value == doctest::Approx(1.0).epsilon(1e-6));

  // d = 0 keeps eps below 0.5 for every positive snr.
  const InvertResult un = invert_snr({64, 0.0}, 0.75);
  CHECK_FALSE(un.reachable);
}
