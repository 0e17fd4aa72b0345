#pragma once

#include <string>
#include <vector>

#include "pld/fbl.hpp"

namespace pld {

// Constraint thresholds. All but eps_eve_k are upper bounds; eps_eve_k is a
// lower bound (the eavesdropper must be likely to lose the key).
struct Thresholds {
  double eps_bob_m = 0.5;
  double eps_eve_m = 0.5;
  double eps_bob_k = 0.5;
  double eps_eve_k = 0.5;
  double eps_lf = 0.5;
};

// One problem instance: channel gains and noise are linear quantities,
// powers are in mW. dB conversion happens at the configuration boundary only.
struct LinkScenario {
  double z_bob;    // legitimate channel gain
  double z_eve;    // eavesdropper channel gain
  double sigma2;   // noise power, mW
  double p_total;  // power budget, mW
  int n;           // blocklength
  int d_m;         // ciphertext bits per block
  Thresholds thresholds;
};

// Throws std::invalid_argument on hard violations, returns soft warnings
// (threshold sign conditions needed by the full-power argument, etc.).
std::vector<std::string> validate(const LinkScenario& scn);

struct PowerSplit {
  double p_m;  // ciphertext component power, mW
  double p_k;  // key component power, mW
};

// Soft Split warnings (primary-component rule p_m > p_k); hard violations throw.
std::vector<std::string> validate(const LinkScenario& scn, const PowerSplit& split);

// The four component decoding-failure probabilities.
struct ErrorProfile {
  double eps_bob_m;
  double eps_bob_k;
  double eps_eve_m;
  double eps_eve_k;
};

struct Metrics {
  double eps_bob;  // Bob non-perception probability
  double eps_eve;  // Eve non-perception probability
  double eps_lf;   // leakage-failure probability
  double r_b;      // probability that Bob is not deceived
  double r_d;      // effective deception rate
};

// Message SINR under non-orthogonal multiplexing: the key component is
// interference until SIC removes it.
inline double sinr_message(double gain, const PowerSplit& split, double sigma2) noexcept {
  return gain * split.p_m / (gain * split.p_k + sigma2);
}

// Key SINR after ideal SIC of the message component.
inline double sinr_key(double gain, const PowerSplit& split, double sigma2) noexcept {
  return gain * split.p_k / sigma2;
}

// Four applications of the FBL approximation. Degenerate SINR (zero power in
// a component) maps to error probability 1: an absent component is always lost.
ErrorProfile error_profile(const LinkScenario& scn, const PowerSplit& split, double d_k);

Metrics metrics(const ErrorProfile& p) noexcept;

// Comparison slack absorbing floating-point noise in constraint checks.
inline constexpr double kFeasSlack = 1e-12;

struct FeasibilityReport {
  bool power_nonneg;
  bool power_budget;
  bool dk_range;
  bool bob_m;  // eps_bob_m <= threshold
  bool eve_m;  // eps_eve_m <= threshold
  bool bob_k;  // eps_bob_k <= threshold
  bool eve_k;  // eps_eve_k >= threshold
  bool lfp;    // eps_lf <= threshold
  bool feasible;
  ErrorProfile profile;
  Metrics m;
};

FeasibilityReport check_feasible(const LinkScenario& scn, const PowerSplit& split, double d_k);

// Full-power parametrization p_k = p_total - p_m, used by the solver and the
// derivative checks. `gain` selects the receiver.
double sinr_message_fullpower(const LinkScenario& scn, double gain, double p_m) noexcept;
double sinr_key_fullpower(const LinkScenario& scn, double gain, double p_m) noexcept;
double dsinr_message_dpm(const LinkScenario& scn, double gain, double p_m) noexcept;
inline double dsinr_key_dpm(const LinkScenario& scn, double gain) noexcept {
  return -gain / scn.sigma2;
}

// Analytic d(eps_{i,M})/d(p_m) and d(eps_{i,K})/d(p_m) under full power.
double deps_message_dpm(const LinkScenario& scn, double gain, double p_m);
double deps_key_dpm(const LinkScenario& scn, double gain, double p_m, double d_k);

}  // namespace pld
