#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pld/cipher.hpp"
#include "pld/link.hpp"

namespace pld {

struct OutcomeStats {
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  OutcomeMode mode = OutcomeMode::kRandomActivation;
  // Perception / Deception / Loss counts per receiver.
  std::array<std::uint64_t, 3> bob_counts{0, 0, 0};
  std::array<std::uint64_t, 3> eve_counts{0, 0, 0};
  double eps_bob = 0.0;  // empirical non-perception probabilities
  double eps_eve = 0.0;
  double eps_lf = 0.0;
  double r_d = 0.0;
};

/// Samples per-component decode outcomes (success with probability 1 - eps,
/// erasure otherwise) and classifies them per receiver. Empirical eps_lf uses
/// the per-trial event "Bob fails to perceive or Eve perceives"; empirical
/// R_d counts trials where Eve is deceived and Bob is not. Deterministic in
/// (seed, n_samples, mode); trials are indexed, so partitioned execution
/// reproduces the same stream.
OutcomeStats simulate(const ErrorProfile& profile, std::uint64_t n_samples, std::uint64_t seed,
                      OutcomeMode mode = OutcomeMode::kRandomActivation);

struct MetricAgreement {
  std::string name;
  double analytic;
  double empirical;
  double sigma;  // binomial standard deviation sqrt(p(1-p)/N)
  double z;      // (empirical - analytic) / sigma; 0 for exact degenerate matches
  bool flagged;  // |z| > 4, or a degenerate mismatch
};

std::vector<MetricAgreement> agreement_report(const OutcomeStats& stats,
                                              const ErrorProfile& profile);

}  // namespace pld
