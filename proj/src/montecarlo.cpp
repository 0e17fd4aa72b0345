#include "pld/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "pld/rng.hpp"

namespace pld {
namespace {

// Per-trial lanes of the counter stream.
enum Lane : std::uint64_t { kBobM = 0, kBobK = 1, kEveM = 2, kEveK = 3 };

DecodeResult draw(double eps_fail, std::uint64_t seed, std::uint64_t trial, Lane lane) {
  const double u = uniform01(seed, trial * 4 + lane);
  return u < eps_fail ? DecodeResult::erasure() : DecodeResult::success(0);
}

}  // namespace

OutcomeStats simulate(const ErrorProfile& profile, std::uint64_t n_samples, std::uint64_t seed,
                      OutcomeMode mode) {
  if (n_samples < 1) throw std::invalid_argument("simulate: n_samples must be >= 1");
  OutcomeStats st;
  st.n_samples = n_samples;
  st.seed = seed;
  st.mode = mode;

  std::uint64_t bob_perceive = 0, lf_events = 0, rd_events = 0;
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    const DecodeResult bob_ct = draw(profile.eps_bob_m, seed, i, kBobM);
    const DecodeResult bob_key = draw(profile.eps_bob_k, seed, i, kBobK);
    const DecodeResult eve_ct = draw(profile.eps_eve_m, seed, i, kEveM);
    const DecodeResult eve_key = draw(profile.eps_eve_k, seed, i, kEveK);
    const ReceptionOutcome bob = classify_outcome(bob_ct, bob_key, mode);
    const ReceptionOutcome eve = classify_outcome(eve_ct, eve_key, mode);
    ++st.bob_counts[static_cast<int>(bob)];
    ++st.eve_counts[static_cast<int>(eve)];

    const bool bob_p = bob == ReceptionOutcome::kPerception;
    const bool eve_p = eve == ReceptionOutcome::kPerception;
    bob_perceive += bob_p;
    // Leakage failure: Eve perceives the plaintext or Bob does not.
    lf_events += !(bob_p && !eve_p);
    // Effective deception: Eve deceived while Bob is not.
    rd_events += (eve == ReceptionOutcome::kDeception) &&
                 (bob != ReceptionOutcome::kDeception);
  }
  const double inv_n = 1.0 / static_cast<double>(n_samples);
  st.eps_bob = 1.0 - static_cast<double>(bob_perceive) * inv_n;
  st.eps_eve =
      1.0 - static_cast<double>(st.eve_counts[static_cast<int>(ReceptionOutcome::kPerception)]) *
                inv_n;
  st.eps_lf = static_cast<double>(lf_events) * inv_n;
  st.r_d = static_cast<double>(rd_events) * inv_n;
  return st;
}

std::vector<MetricAgreement> agreement_report(const OutcomeStats& stats,
                                              const ErrorProfile& profile) {
  const Metrics m = metrics(profile);
  const double n = static_cast<double>(stats.n_samples);
  auto entry = [&](const char* name, double analytic, double empirical) {
    MetricAgreement a;
    a.name = name;
    a.analytic = analytic;
    a.empirical = empirical;
    a.sigma = std::sqrt(analytic * (1.0 - analytic) / n);
    if (a.sigma == 0.0) {
      // Deterministic metric: require an exact match.
      a.z = 0.0;
      a.flagged = empirical != analytic;
    } else {
      a.z = (empirical - analytic) / a.sigma;
      a.flagged = std::abs(a.z) > 4.0;
    }
    return a;
  };
  return {
      entry("eps_bob", m.eps_bob, stats.eps_bob),
      entry("eps_eve", m.eps_eve, stats.eps_eve),
      entry("eps_lf", m.eps_lf, stats.eps_lf),
      entry("r_d", m.r_d, stats.r_d),
  };
}

}  // namespace pld
