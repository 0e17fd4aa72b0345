#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "pld/math.hpp"

namespace pld::bench {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: bad number for '" + key + "': " + v);
  }
}

int parse_int(const std::string& key, const std::string& v) {
  const double x = parse_double(key, v);
  if (x != std::floor(x)) throw ConfigError("config: expected integer for '" + key + "'");
  return static_cast<int>(x);
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  const double x = parse_double(key, v);
  if (x < 0 || x != std::floor(x)) {
    throw ConfigError("config: expected nonnegative integer for '" + key + "'");
  }
  return static_cast<std::uint64_t>(x);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: expected boolean for '" + key + "'");
}

// Either a comma list "1,2,3" or an inclusive range "lo:hi:step".
std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  if (v.find(':') != std::string::npos) {
    std::stringstream ss(v);
    std::string part;
    std::vector<double> f;
    while (std::getline(ss, part, ':')) f.push_back(parse_double(key, trim(part)));
    if (f.size() != 3 || f[2] == 0.0) {
      throw ConfigError("config: range for '" + key + "' must be lo:hi:step");
    }
    const double dir = f[2] > 0 ? 1.0 : -1.0;
    for (double x = f[0]; dir * x <= dir * f[1] + 1e-12; x += f[2]) out.push_back(x);
    return out;
  }
  std::stringstream ss(v);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (!part.empty()) out.push_back(parse_double(key, part));
  }
  return out;
}

std::vector<int> to_int_list(const std::string& key, const std::vector<double>& xs) {
  std::vector<int> out;
  for (double x : xs) {
    if (x != std::floor(x)) throw ConfigError("config: expected integers for '" + key + "'");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

OutcomeMode parse_mode(const std::string& key, const std::string& v) {
  if (v == "generic") return OutcomeMode::kGeneric;
  if (v == "sufficient-redundancy") return OutcomeMode::kSufficientRedundancy;
  if (v == "random-activation") return OutcomeMode::kRandomActivation;
  throw ConfigError("config: unknown mode for '" + key + "': " + v);
}

}  // namespace

LinkScenario ExperimentConfig::scenario() const {
  LinkScenario scn;
  scn.z_bob = db_to_linear(z_bob_db);
  scn.z_eve = db_to_linear(z_eve_db);
  scn.sigma2 = sigma2;
  scn.p_total = p_total;
  scn.n = n;
  scn.d_m = d_m;
  scn.thresholds = thresholds;
  return scn;
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  cfg.source_text = text;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: line " + std::to_string(lineno) + " is not key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (val.empty()) throw ConfigError("config: empty value for '" + key + "'");

    if (key == "scenario.z_bob_db") cfg.z_bob_db = parse_double(key, val);
    else if (key == "scenario.z_eve_db") cfg.z_eve_db = parse_double(key, val);
    else if (key == "scenario.sigma2") cfg.sigma2 = parse_double(key, val);
    else if (key == "scenario.p_total") cfg.p_total = parse_double(key, val);
    else if (key == "scenario.n") cfg.n = parse_int(key, val);
    else if (key == "scenario.d_m") cfg.d_m = parse_int(key, val);
    else if (key == "scenario.th_bob_m") cfg.thresholds.eps_bob_m = parse_double(key, val);
    else if (key == "scenario.th_eve_m") cfg.thresholds.eps_eve_m = parse_double(key, val);
    else if (key == "scenario.th_bob_k") cfg.thresholds.eps_bob_k = parse_double(key, val);
    else if (key == "scenario.th_eve_k") cfg.thresholds.eps_eve_k = parse_double(key, val);
    else if (key == "scenario.th_lf") cfg.thresholds.eps_lf = parse_double(key, val);
    else if (key == "solver.mu_mm") cfg.solver.mu_mm = parse_double(key, val);
    else if (key == "solver.mu_bcd") cfg.solver.mu_bcd = parse_double(key, val);
    else if (key == "solver.max_outer") cfg.solver.max_outer = parse_int(key, val);
    else if (key == "solver.max_inner") cfg.solver.max_inner = parse_int(key, val);
    else if (key == "solver.init_d_k") cfg.solver.init_d_k = parse_double(key, val);
    else if (key == "solver.init_p_m") cfg.solver.init_p_m = parse_double(key, val);
    else if (key == "solver.pm_update_first") cfg.solver.pm_update_first = parse_bool(key, val);
    else if (key == "solver.polish") cfg.solver.polish_after_rounding = parse_bool(key, val);
    else if (key == "grid.p_m_steps") cfg.grid_pm_steps = parse_int(key, val);
    else if (key == "grid.p_k_steps") cfg.grid_pk_steps = parse_int(key, val);
    else if (key == "sweep.z_eve_db") cfg.sweep_z_eve_db = parse_list(key, val);
    else if (key == "sweep.p_total") cfg.sweep_p_total = parse_list(key, val);
    else if (key == "sweep.d_k") cfg.theorem1_d_k = to_int_list(key, parse_list(key, val));
    else if (key == "table3.z_eve_db") cfg.table3_z_eve_db = parse_list(key, val);
    else if (key == "minlfp.resolution") cfg.minlfp_resolution = parse_double(key, val);
    else if (key == "mc.samples") cfg.mc_samples = parse_u64(key, val);
    else if (key == "mc.seed") cfg.mc_seed = parse_u64(key, val);
    else if (key == "mc.mode") cfg.mc_mode = parse_mode(key, val);
    else if (key == "cipher.d_p") cfg.cipher_d_p = parse_int(key, val);
    else if (key == "cipher.d_k_bits") cfg.cipher_d_k_bits = parse_int(key, val);
    else if (key == "cipher.code_n") cfg.cipher_code_n = parse_int(key, val);
    else if (key == "cipher.d_max") cfg.cipher_d_max = parse_int(key, val);
    else if (key == "cipher.codebook_size") cfg.cipher_codebook_size = parse_int(key, val);
    else if (key == "lut.z_bob_db") cfg.lut_z_bob_db = parse_list(key, val);
    else if (key == "lut.z_eve_db") cfg.lut_z_eve_db = parse_list(key, val);
    else if (key == "output.dir") cfg.output_dir = val;
    else if (key == "output.threads") cfg.threads = parse_int(key, val);
    else throw ConfigError("config: unknown key '" + key + "'");
  }
  try {
    validate(cfg.scenario());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::uint64_t config_hash(const ExperimentConfig& cfg) {
  std::string text = cfg.source_text;
  if (text.empty()) {
    std::ostringstream os;
    os << cfg.z_bob_db << '|' << cfg.z_eve_db << '|' << cfg.sigma2 << '|' << cfg.p_total << '|'
       << cfg.n << '|' << cfg.d_m << '|' << cfg.thresholds.eps_lf << '|' << cfg.mc_seed;
    text = os.str();
  }
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace pld::bench
