// pbit: config-driven experiments for autonomous p-bit networks.
//
//   pbit <command> --config <file> [--seed N] [--out DIR] [--threads K]
//
// Commands: sample, anneal, quantum, quantum-corr, perf, validate-sk.
// Exit status: 0 success, 2 configuration error, 3 tolerance failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pbit/errors.hpp"
#include "pbit/experiment.hpp"

namespace {

int default_threads() {
  if (const char* env = std::getenv("PBIT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Autonomous p-bit network simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<int> threads;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"sample", "fixed-temperature sampling of a network"},
      {"anneal", "geometric annealing of an image-encoded lattice"},
      {"quantum", "transverse-field magnetization sweep on a replica lattice"},
      {"quantum-corr", "spatial correlations on a replica lattice"},
      {"perf", "flips-per-second and power report"},
      {"validate-sk", "autonomous vs Gibbs vs exact Boltzmann on an SK instance"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    auto* cfg_opt = sub->add_option("--config", config_path, "experiment config (JSON)")->check(CLI::ExistingFile);
    if (name != "perf") cfg_opt->required();
    sub->add_option("--seed", seed, "master seed (overrides the config)");
    sub->add_option("--out", out_dir, "output directory (overrides the config)");
    sub->add_option("--threads", threads, "worker threads (default: config, or PBIT_THREADS)")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pbit::kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    std::string text = "{\"kind\": \"perf\"}\n";
    if (!config_path.empty()) {
      std::ifstream in(config_path, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    auto cfg = pbit::config_from_json(text);
    const auto kind = pbit::experiment_kind_from_string(command);
    if (!config_path.empty() && cfg.kind != kind) {
      throw pbit::ConfigError("config kind '" + pbit::to_string(cfg.kind) + "' does not match command '" + command +
                              "'");
    }
    cfg.kind = kind;
    if (seed) {
      cfg.master_seed = *seed;
      cfg.params.master_seed = *seed;
    }
    if (out_dir) cfg.output_dir = *out_dir;
    if (threads) {
      cfg.threads = *threads;
    } else if (const int env = default_threads(); env > 0) {
      cfg.threads = env;
    }
    std::string log;
    const int status = pbit::run_experiment(cfg, text, &log);
    std::cout << log;
    return status;
  } catch (const pbit::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return pbit::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
