#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pld/cipher.hpp"
#include "pld/link.hpp"
#include "pld/solver.hpp"

namespace pld::bench {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Flat key-value configuration with sectioned keys ("scenario.z_eve_db = -5").
// Defaults mirror the reference simulation setup, so a bare config reproduces
// it: sigma2 = 1 mW, z_bob = 0 dB, n = 64, all thresholds 0.5,
// mu_mm = 1e-7, mu_bcd = 1.49e-8, outer/inner caps 100.
struct ExperimentConfig {
  // scenario (gains in dB at the boundary, linear inside)
  double z_bob_db = 0.0;
  double z_eve_db = -10.0;
  double sigma2 = 1.0;
  double p_total = 10.0;
  int n = 64;
  int d_m = 16;
  Thresholds thresholds{};

  SolverConfig solver{};

  // grids
  int grid_pm_steps = 512;
  int grid_pk_steps = 512;

  // sweeps
  std::vector<double> sweep_z_eve_db = {-10, -9, -8, -7, -6, -5};
  std::vector<double> sweep_p_total = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<int> theorem1_d_k = {30, 60};
  std::vector<double> table3_z_eve_db = {-3, -5, -7};
  double minlfp_resolution = 2.5e-4;

  // monte carlo
  std::uint64_t mc_samples = 1000000;
  std::uint64_t mc_seed = 12345;
  OutcomeMode mc_mode = OutcomeMode::kRandomActivation;

  // cipher demo
  int cipher_d_p = 8;
  int cipher_d_k_bits = 8;
  int cipher_code_n = 16;
  int cipher_d_max = 2;
  int cipher_codebook_size = 8;

  // lut
  std::vector<double> lut_z_bob_db = {0};
  std::vector<double> lut_z_eve_db = {-10, -9, -8, -7, -6, -5, -4, -3, -2};

  std::string output_dir = ".";
  int threads = 1;

  // Raw config text (for hashing); empty when defaults are used.
  std::string source_text;

  LinkScenario scenario() const;
};

/// Parses the key=value text; unknown keys and malformed values raise
/// ConfigError.
ExperimentConfig parse_config(const std::string& text);

/// Loads a config file; missing file raises ConfigError.
ExperimentConfig load_config(const std::string& path);

/// FNV-1a 64-bit hash of the configuration text (or of the serialized
/// defaults when no file was given).
std::uint64_t config_hash(const ExperimentConfig& cfg);

}  // namespace pld::bench
