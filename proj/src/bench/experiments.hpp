#pragma once

#include <string>

#include "config.hpp"

namespace pld::bench {

// Exit codes shared with the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitInfeasible = 3;

// Runs one experiment kind: solve | sweep-zeve | sweep-ptotal | surface |
// theorem1 | table3 | minlfp | montecarlo | lut | cipher-demo.
// Writes CSV artifacts plus a run manifest into cfg.output_dir and returns an
// exit code. Infeasible points inside sweeps are recorded in the output, not
// fatal; only an entirely infeasible run yields kExitInfeasible.
int run_experiment(const std::string& kind, const ExperimentConfig& cfg);

}  // namespace pld::bench
