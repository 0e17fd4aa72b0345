#include "experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "csv.hpp"
#include "pld/baselines.hpp"
#include "pld/grid.hpp"
#include "pld/math.hpp"
#include "pld/montecarlo.hpp"
#include "pld/version.hpp"

namespace pld::bench {
namespace {

namespace fs = std::filesystem;

struct RunLog {
  std::vector<std::string> artifacts;
  std::vector<std::string> notes;
};

std::string out_path(const ExperimentConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.output_dir);
  return (fs::path(cfg.output_dir) / name).string();
}

void write_manifest(const std::string& kind, const ExperimentConfig& cfg, const RunLog& log,
                    double wall_ms) {
  nlohmann::json m;
  std::ostringstream hash;
  hash << std::hex << config_hash(cfg);
  m["kind"] = kind;
  m["config_hash"] = hash.str();
  m["version"] = kVersion;
  m["wall_time_ms"] = wall_ms;
  m["artifacts"] = log.artifacts;
  m["notes"] = log.notes;
  std::ofstream out(out_path(cfg, "run_manifest.json"));
  out << m.dump(2) << '\n';
}

// Chunked parallel map with deterministic result placement.
void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct SweepPoint {
  SolverResult solver;
  BaselineResult bl_power;
  BaselineResult bl_rate;
  bool feasible = false;
};

SweepPoint eval_point(const LinkScenario& scn, const SolverConfig& solver_cfg) {
  SweepPoint p;
  p.solver = mm_bcd(scn, solver_cfg);
  p.feasible = p.solver.status != SolverStatus::kInfeasible;
  p.bl_power = baseline_power(scn);
  p.bl_rate = baseline_rate(scn);
  return p;
}

void write_sweep_csv(CsvWriter& csv, double key, const SweepPoint& p) {
  csv.field(key)
      .field(p.feasible)
      .field(p.solver.d_k_star)
      .field(p.solver.p_m_star)
      .field(p.solver.p_k_star)
      .field(p.solver.r_d)
      .field(p.solver.eps_lf)
      .field(p.bl_power.p_m)
      .field(p.bl_power.eps_lf)
      .field(p.bl_rate.d_m)
      .field(p.bl_rate.eps_lf);
  csv.end_row();
}

const std::vector<std::string> kSweepColumns = {
    "key",          "feasible",        "d_k",          "p_m",          "p_k",
    "r_d",          "eps_lf",          "bl_power_p_m", "bl_power_eps_lf",
    "bl_rate_d_m",  "bl_rate_eps_lf"};

int run_solve(const ExperimentConfig& cfg, RunLog& log) {
  const LinkScenario scn = cfg.scenario();
  const SolverResult res = mm_bcd(scn, cfg.solver);

  const std::string summary = out_path(cfg, "solve_summary.csv");
  {
    CsvWriter csv(summary, {"z_bob_db", "z_eve_db", "p_total", "d_m", "status", "d_k", "p_m",
                            "p_k", "r_d", "eps_lf", "outer_iterations"});
    const std::string status = res.status == SolverStatus::kConverged      ? "converged"
                               : res.status == SolverStatus::kIterationCap ? "iteration-cap"
                                                                           : "infeasible";
    csv.field(cfg.z_bob_db)
        .field(cfg.z_eve_db)
        .field(cfg.p_total)
        .field(cfg.d_m)
        .field(status)
        .field(res.d_k_star)
        .field(res.p_m_star)
        .field(res.p_k_star)
        .field(res.r_d)
        .field(res.eps_lf)
        .field(res.outer_iterations);
    csv.end_row();
  }
  log.artifacts.push_back(summary);

  const std::string trace = out_path(cfg, "solve_trace.csv");
  {
    CsvWriter csv(trace, {"q", "t", "d_k", "p_m", "surrogate", "r_d", "eps_lf"});
    for (const TracePoint& tp : res.trace) {
      csv.field(tp.q).field(tp.t).field(tp.d_k).field(tp.p_m).field(tp.surrogate)
          .field(tp.r_d).field(tp.eps_lf);
      csv.end_row();
    }
  }
  log.artifacts.push_back(trace);
  if (res.status == SolverStatus::kInfeasible) {
    log.notes.push_back("infeasible: " + res.message);
    return kExitInfeasible;
  }
  return kExitOk;
}

int run_sweep(const ExperimentConfig& cfg, RunLog& log, bool over_z_eve) {
  const std::vector<double>& keys = over_z_eve ? cfg.sweep_z_eve_db : cfg.sweep_p_total;
  const std::string name = over_z_eve ? "sweep_zeve.csv" : "sweep_ptotal.csv";
  std::vector<SweepPoint> points(keys.size());
  parallel_for(static_cast<int>(keys.size()), cfg.threads, [&](int i) {
    ExperimentConfig c = cfg;
    if (over_z_eve) {
      c.z_eve_db = keys[i];
    } else {
      c.p_total = keys[i];
    }
    points[i] = eval_point(c.scenario(), cfg.solver);
  });

  const std::string path = out_path(cfg, name);
  CsvWriter csv(path, kSweepColumns);
  bool any_feasible = keys.empty();  // an empty sweep is a successful no-op
  for (std::size_t i = 0; i < keys.size(); ++i) {
    write_sweep_csv(csv, keys[i], points[i]);
    any_feasible = any_feasible || points[i].feasible;
  }
  log.artifacts.push_back(path);
  return any_feasible ? kExitOk : kExitInfeasible;
}

int run_surface(const ExperimentConfig& cfg, RunLog& log) {
  const LinkScenario scn = cfg.scenario();
  GridSpec grid;
  grid.p_m_steps = cfg.grid_pm_steps;
  grid.full_power = true;
  const FullPowerSearchResult res = search_fullpower(scn, grid, /*refine=*/true);

  const std::string path = out_path(cfg, "surface.csv");
  {
    CsvWriter csv(path, {"p_m", "d_k", "r_d", "eps_lf", "feasible"});
    for (int j = 0; j < static_cast<int>(res.surface.d_k.size()); ++j) {
      for (int i = 0; i < res.surface.p_m.size(); ++i) {
        csv.field(res.surface.p_m[i])
            .field(res.surface.d_k[j])
            .field(res.surface.r_d(i, j))
            .field(res.surface.eps_lf(i, j))
            .field(res.surface.feasible(i, j));
        csv.end_row();
      }
    }
  }
  log.artifacts.push_back(path);

  const std::string best = out_path(cfg, "surface_best.csv");
  {
    CsvWriter csv(best, {"found", "p_m", "d_k", "r_d", "eps_lf"});
    csv.field(res.found).field(res.p_m).field(res.d_k).field(res.r_d).field(res.eps_lf);
    csv.end_row();
  }
  log.artifacts.push_back(best);
  return res.found ? kExitOk : kExitInfeasible;
}

int run_theorem1(const ExperimentConfig& cfg, RunLog& log) {
  const LinkScenario scn = cfg.scenario();
  GridSpec grid;
  grid.p_m_steps = cfg.grid_pm_steps;
  grid.p_k_steps = cfg.grid_pk_steps;

  const std::string path = out_path(cfg, "theorem1.csv");
  CsvWriter csv(path, {"d_k", "found", "p_m", "p_k", "r_d", "eps_lf", "budget_gap"});
  bool any = cfg.theorem1_d_k.empty();
  for (int dk : cfg.theorem1_d_k) {
    const PowerSearchResult res = search_2d_power(scn, dk, grid);
    const double gap = scn.p_total - (res.best.p_m + res.best.p_k);
    csv.field(dk)
        .field(res.found)
        .field(res.best.p_m)
        .field(res.best.p_k)
        .field(res.r_d)
        .field(res.eps_lf)
        .field(gap);
    csv.end_row();
    any = any || res.found;
  }
  log.artifacts.push_back(path);
  return any ? kExitOk : kExitInfeasible;
}

// Sub-optimal fallback when the full-power region is empty: sweep reduced
// budgets (power-budget equality relaxed back to an inequality) and keep the
// best feasible solve.
SolverResult reduced_power_fallback(const LinkScenario& scn, const SolverConfig& solver_cfg,
                                    double* used_budget) {
  SolverResult best;
  for (int i = 63; i >= 1; --i) {
    LinkScenario s = scn;
    s.p_total = scn.p_total * i / 64.0;
    const SolverResult r = mm_bcd(s, solver_cfg);
    if (r.status != SolverStatus::kInfeasible && r.r_d > best.r_d) {
      best = r;
      *used_budget = s.p_total;
    }
  }
  return best;
}

int run_table3(const ExperimentConfig& cfg, RunLog& log) {
  const std::string path = out_path(cfg, "table3.csv");
  CsvWriter csv(path, {"z_eve_db", "feasible", "eps_lf", "r_d", "d_k", "p_m", "p_k",
                       "reduced_power", "bl_power_eps_lf", "bl_power_p_m", "bl_rate_eps_lf",
                       "bl_rate_d_m"});
  bool any = false;
  for (double z : cfg.table3_z_eve_db) {
    ExperimentConfig c = cfg;
    c.z_eve_db = z;
    const LinkScenario scn = c.scenario();
    SolverResult res = mm_bcd(scn, cfg.solver);
    bool reduced = false;
    if (res.status == SolverStatus::kInfeasible) {
      double used = scn.p_total;
      const SolverResult fb = reduced_power_fallback(scn, cfg.solver, &used);
      if (fb.status != SolverStatus::kInfeasible) {
        res = fb;
        reduced = true;
        log.notes.push_back("z_eve_db=" + std::to_string(z) +
                            ": sub-optimum at reduced power");
      }
    }
    const BaselineResult blp = baseline_power(scn);
    const BaselineResult blr = baseline_rate(scn);
    const bool ok = res.status != SolverStatus::kInfeasible;
    any = any || ok;
    csv.field(z)
        .field(ok)
        .field(res.eps_lf)
        .field(res.r_d)
        .field(res.d_k_star)
        .field(res.p_m_star)
        .field(res.p_k_star)
        .field(reduced)
        .field(blp.eps_lf)
        .field(blp.p_m)
        .field(blr.eps_lf)
        .field(blr.d_m);
    csv.end_row();
  }
  log.artifacts.push_back(path);
  return any || cfg.table3_z_eve_db.empty() ? kExitOk : kExitInfeasible;
}

int run_minlfp(const ExperimentConfig& cfg, RunLog& log) {
  const std::string path = out_path(cfg, "minlfp.csv");
  std::vector<MinLfpResult> results(cfg.sweep_p_total.size());
  parallel_for(static_cast<int>(cfg.sweep_p_total.size()), cfg.threads, [&](int i) {
    ExperimentConfig c = cfg;
    c.p_total = cfg.sweep_p_total[i];
    GridSpec probe;
    probe.p_m_steps = cfg.grid_pm_steps;
    results[i] = min_feasible_lfp_threshold(c.scenario(), cfg.minlfp_resolution, probe);
  });
  CsvWriter csv(path, {"p_total", "min_lfp_threshold", "feasible"});
  bool any = cfg.sweep_p_total.empty();
  for (std::size_t i = 0; i < results.size(); ++i) {
    csv.field(cfg.sweep_p_total[i]).field(results[i].threshold).field(results[i].feasible);
    csv.end_row();
    any = any || results[i].feasible;
  }
  log.artifacts.push_back(path);
  return any ? kExitOk : kExitInfeasible;
}

int run_montecarlo(const ExperimentConfig& cfg, RunLog& log) {
  const LinkScenario scn = cfg.scenario();
  const SolverResult res = mm_bcd(scn, cfg.solver);
  if (res.status == SolverStatus::kInfeasible) {
    log.notes.push_back("infeasible: " + res.message);
    return kExitInfeasible;
  }
  const ErrorProfile profile = error_profile(
      scn, {res.p_m_star, res.p_k_star}, static_cast<double>(res.d_k_star));
  const OutcomeStats st = simulate(profile, cfg.mc_samples, cfg.mc_seed, cfg.mc_mode);

  const std::string stats = out_path(cfg, "montecarlo_stats.csv");
  {
    CsvWriter csv(stats, {"receiver", "perception", "deception", "loss", "n_samples", "seed"});
    csv.field(std::string("bob"))
        .field(st.bob_counts[0])
        .field(st.bob_counts[1])
        .field(st.bob_counts[2])
        .field(st.n_samples)
        .field(st.seed);
    csv.end_row();
    csv.field(std::string("eve"))
        .field(st.eve_counts[0])
        .field(st.eve_counts[1])
        .field(st.eve_counts[2])
        .field(st.n_samples)
        .field(st.seed);
    csv.end_row();
  }
  log.artifacts.push_back(stats);

  const std::string agree = out_path(cfg, "montecarlo_agreement.csv");
  {
    CsvWriter csv(agree, {"metric", "analytic", "empirical", "sigma", "z", "flagged"});
    for (const MetricAgreement& a : agreement_report(st, profile)) {
      csv.field(a.name).field(a.analytic).field(a.empirical).field(a.sigma).field(a.z)
          .field(a.flagged);
      csv.end_row();
    }
  }
  log.artifacts.push_back(agree);
  return kExitOk;
}

int run_lut(const ExperimentConfig& cfg, RunLog& log) {
  struct Cell {
    double zb, ze;
    SolverResult res;
  };
  std::vector<Cell> cells;
  for (double zb : cfg.lut_z_bob_db) {
    for (double ze : cfg.lut_z_eve_db) {
      cells.push_back({zb, ze, {}});
    }
  }
  parallel_for(static_cast<int>(cells.size()), cfg.threads, [&](int i) {
    ExperimentConfig c = cfg;
    c.z_bob_db = cells[i].zb;
    c.z_eve_db = cells[i].ze;
    cells[i].res = mm_bcd(c.scenario(), cfg.solver);
  });

  const std::string path = out_path(cfg, "lut.csv");
  CsvWriter csv(path, {"z_bob_db", "z_eve_db", "d_k", "p_m", "r_d", "eps_lf", "feasible"});
  bool any = cells.empty();
  for (const Cell& c : cells) {
    const bool ok = c.res.status != SolverStatus::kInfeasible;
    any = any || ok;
    csv.field(c.zb).field(c.ze).field(c.res.d_k_star).field(c.res.p_m_star).field(c.res.r_d)
        .field(c.res.eps_lf).field(ok);
    csv.end_row();
  }
  log.artifacts.push_back(path);
  return any ? kExitOk : kExitInfeasible;
}

int run_cipher_demo(const ExperimentConfig& cfg, RunLog& log) {
  CipherSpace space{cfg.cipher_d_p, cfg.cipher_d_k_bits};
  if (!space.valid()) {
    log.notes.push_back("invalid cipher space");
    return kExitConfigError;
  }
  const Word p_count = Word{1} << space.d_p;
  const Word k_count = Word{1} << space.d_k_bits;

  // Exhaustive round trip and key-substitution witness.
  std::uint64_t roundtrip_fail = 0, substitution_fail = 0;
  for (Word p = 0; p < p_count; ++p) {
    for (Word k = 0; k < k_count; ++k) {
      if (decrypt(space, encrypt(space, p, k), k) != p) ++roundtrip_fail;
    }
  }
  for (Word k = 0; k < k_count; ++k) {
    for (Word kp = 0; kp < k_count; ++kp) {
      if (kp != k && expand_key(space, kp) == expand_key(space, k)) ++substitution_fail;
    }
  }

  // Random codebook, a litter word, and its decode outcome.
  Codebook codebook;
  codebook.n_bits = cfg.cipher_code_n;
  CounterRng rng(cfg.mc_seed);
  const Word mask = (Word{1} << cfg.cipher_code_n) - 1;
  for (int i = 0; i < cfg.cipher_codebook_size; ++i) {
    codebook.codewords.push_back(rng.next_u64() & mask);
  }
  const LitterResult litter = gen_litter(codebook, cfg.cipher_d_max, cfg.mc_seed + 1);
  const DecodeResult litter_decode =
      bounded_distance_decode(litter.word, codebook, cfg.cipher_d_max);

  const std::string path = out_path(cfg, "cipher_demo.csv");
  CsvWriter csv(path, {"check", "value"});
  auto row = [&](const std::string& k, std::uint64_t v) {
    csv.field(k).field(v);
    csv.end_row();
  };
  row("roundtrip_failures", roundtrip_fail);
  row("key_substitution_collisions", substitution_fail);
  row("litter_word", litter.word);
  row("litter_attempts", litter.attempts);
  row("litter_decodes_to_erasure",
      litter_decode.kind == DecodeKind::kErasure ? 1 : 0);
  log.artifacts.push_back(path);

  std::cout << "cipher demo: " << p_count << "x" << k_count << " round trips, "
            << roundtrip_fail << " failures, " << substitution_fail
            << " key collisions; litter decode "
            << (litter_decode.kind == DecodeKind::kErasure ? "erasure" : "NOT erasure") << "\n";
  return roundtrip_fail == 0 && substitution_fail == 0 ? kExitOk : kExitInfeasible;
}

}  // namespace

int run_experiment(const std::string& kind, const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  RunLog log;
  int code;
  if (kind == "solve") code = run_solve(cfg, log);
  else if (kind == "sweep-zeve") code = run_sweep(cfg, log, true);
  else if (kind == "sweep-ptotal") code = run_sweep(cfg, log, false);
  else if (kind == "surface") code = run_surface(cfg, log);
  else if (kind == "theorem1") code = run_theorem1(cfg, log);
  else if (kind == "table3") code = run_table3(cfg, log);
  else if (kind == "minlfp") code = run_minlfp(cfg, log);
  else if (kind == "montecarlo") code = run_montecarlo(cfg, log);
  else if (kind == "lut") code = run_lut(cfg, log);
  else if (kind == "cipher-demo") code = run_cipher_demo(cfg, log);
  else throw ConfigError("unknown experiment kind: " + kind);
  const auto end = std::chrono::steady_clock::now();
  const double wall_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(end - start).count();
  write_manifest(kind, cfg, log, wall_ms);
  return code;
}

}  // namespace pld::bench
