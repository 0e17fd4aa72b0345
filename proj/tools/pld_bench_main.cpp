#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "experiments.hpp"
#include "svg.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string output_dir;
  std::vector<std::string> overrides;  // raw "key=value" pairs appended to the config
  int threads = 0;
  long long seed = -1;
  int grid_pm = 0;
  int grid_pk = 0;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("-c,--config", opts->config_path, "configuration file (key = value lines)");
  cmd->add_option("-o,--out", opts->output_dir, "output directory for artifacts");
  cmd->add_option("--seed", opts->seed, "override mc.seed");
  cmd->add_option("-j,--threads", opts->threads, "worker threads for sweeps");
  cmd->add_option("--grid-pm", opts->grid_pm, "override grid.p_m_steps");
  cmd->add_option("--grid-pk", opts->grid_pk, "override grid.p_k_steps");
  cmd->add_option("--set", opts->overrides, "extra config assignments, e.g. --set scenario.d_m=24");
}

pld::bench::ExperimentConfig build_config(const CommonOpts& opts) {
  std::string text;
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) throw pld::bench::ConfigError("config: cannot open " + opts.config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  for (const std::string& kv : opts.overrides) {
    text += "\n" + kv + "\n";
  }
  pld::bench::ExperimentConfig cfg = pld::bench::parse_config(text);
  if (!opts.output_dir.empty()) cfg.output_dir = opts.output_dir;
  if (opts.seed >= 0) cfg.mc_seed = static_cast<std::uint64_t>(opts.seed);
  if (opts.threads > 0) cfg.threads = opts.threads;
  if (opts.grid_pm > 0) cfg.grid_pm_steps = opts.grid_pm;
  if (opts.grid_pk > 0) cfg.grid_pk_steps = opts.grid_pk;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Physical-layer deception benchmark runner"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds = {"solve",   "sweep-zeve", "sweep-ptotal", "surface",
                                          "theorem1", "table3",    "minlfp",       "montecarlo",
                                          "lut",     "cipher-demo"};
  std::map<std::string, CommonOpts> opts;
  for (const std::string& kind : kinds) {
    CLI::App* cmd = app.add_subcommand(kind, "run the '" + kind + "' experiment");
    add_common(cmd, &opts[kind]);
  }

  // Plot subcommand reads only the exported CSVs.
  struct {
    std::string csv, svg, kind = "line", x, value;
    std::vector<std::string> y;
    bool log_y = false;
  } plot;
  CLI::App* plot_cmd = app.add_subcommand("plot", "render a CSV artifact to SVG");
  plot_cmd->add_option("--csv", plot.csv, "input CSV")->required();
  plot_cmd->add_option("--svg", plot.svg, "output SVG")->required();
  plot_cmd->add_option("--kind", plot.kind, "line | heatmap");
  plot_cmd->add_option("-x", plot.x, "x column")->required();
  plot_cmd->add_option("-y", plot.y, "y columns (line) / y column (heatmap)");
  plot_cmd->add_option("--value", plot.value, "value column (heatmap)");
  plot_cmd->add_flag("--log-y", plot.log_y, "logarithmic y axis");

  CLI11_PARSE(app, argc, argv);

  try {
    if (plot_cmd->parsed()) {
      if (plot.kind == "line") {
        pld::bench::svg_line_plot(plot.csv, plot.x, plot.y, plot.svg, plot.log_y);
      } else if (plot.kind == "heatmap") {
        if (plot.y.size() != 1 || plot.value.empty()) {
          std::cerr << "plot heatmap needs -y <col> and --value <col>\n";
          return pld::bench::kExitConfigError;
        }
        pld::bench::svg_heatmap(plot.csv, plot.x, plot.y[0], plot.value, plot.svg);
      } else {
        std::cerr << "unknown plot kind: " << plot.kind << "\n";
        return pld::bench::kExitConfigError;
      }
      return pld::bench::kExitOk;
    }
    for (const std::string& kind : kinds) {
      if (app.get_subcommand(kind)->parsed()) {
        return pld::bench::run_experiment(kind, build_config(opts[kind]));
      }
    }
  } catch (const pld::bench::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return pld::bench::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return pld::bench::kExitConfigError;
}
