// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance --configs DIR --unit-tests PATH [--only K]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fmt/format.h"
#include "pbit/experiment.hpp"
#include "pbit/perf.hpp"

using namespace pbit;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

ExperimentConfig load(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  auto cfg = config_from_json(ss.str());
  cfg.check();
  return cfg;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome sk_fidelity(const fs::path& configs) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto v = run_validate_sk(load(configs / "validate_sk16.json"));
  const bool pass = v.ed_ratio <= 2.0 && v.fe_rel_error <= 0.05;
  return {pass, fmt::format("ED ratio {:.3f} (<= 2), FE rel. error {:.4f} (<= 0.05), {:.0f} s", v.ed_ratio,
                            v.fe_rel_error, seconds_since(t0))};
}

Outcome quantum_magnetization(const fs::path& configs) {
  const auto t0 = std::chrono::steady_clock::now();
  auto cfg = load(configs / "quantum_magnetization.json");
  cfg.s0_values = {1.0 / 12.0, 1.0};
  const auto points = run_quantum(cfg);
  double worst_twelfth = 0.0, worst_one = 0.0;
  for (const auto& p : points) {
    const double dev = std::abs(p.mz - p.mz_exact.value());
    (p.s0 == 1.0 ? worst_one : worst_twelfth) = std::max(p.s0 == 1.0 ? worst_one : worst_twelfth, dev);
  }
  const bool pass = worst_twelfth <= 0.05 && worst_one >= 0.15;
  return {pass, fmt::format("max |mz - exact|: s0=1/12 {:.4f} (<= 0.05), s0=1 {:.4f} (>= 0.15), {:.0f} s",
                            worst_twelfth, worst_one, seconds_since(t0))};
}

Outcome anneal_ordering(const fs::path& configs) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto sweep = run_anneal_sweep(load(configs / "anneal_30x30.json"));
  auto mean_energy = [&](double s0) {
    double sum = 0.0;
    int n = 0;
    for (const auto& o : sweep.outcomes) {
      if (o.s0 == s0) sum += o.final_energy, ++n;
    }
    return sum / n;
  };
  int ground = 0, runs = 0;
  for (const auto& o : sweep.outcomes) {
    if (o.s0 == 0.25) ground += o.reached_ground, ++runs;
  }
  const double e4 = mean_energy(0.25), e2 = mean_energy(0.5), e1 = mean_energy(1.0);
  const bool pass = e4 < e2 && e2 < e1 && ground * 10 >= runs * 8;
  return {pass, fmt::format("mean E: s0=1/4 {:.1f} < s0=1/2 {:.1f} < s0=1 {:.1f}; ground {}/{} (>= 8/10); E0 {:.0f}; "
                            "{:.0f} s",
                            e4, e2, e1, ground, runs, sweep.problem.ground_energy, seconds_since(t0))};
}

// Averages lags [k*w, (k+1)*w) for L < M/2.
std::vector<double> binned(const std::vector<double>& corr, std::size_t width) {
  std::vector<double> out;
  const std::size_t half = corr.size() / 2;
  for (std::size_t start = 0; start + width <= half; start += width) {
    double s = 0.0;
    for (std::size_t l = start; l < start + width; ++l) s += corr[l];
    out.push_back(s / static_cast<double>(width));
  }
  return out;
}

// Binned curve strictly decreasing until it enters |c| < band, then staying inside it up to L = M/2.
bool decays_monotonically(const std::vector<double>& corr, double band) {
  const auto b = binned(corr, 5);
  std::size_t k = 0;
  while (k < b.size() && std::abs(b[k]) >= band) {
    if (k > 0 && b[k] >= b[k - 1]) return false;
    ++k;
  }
  if (k == b.size()) return false;
  if (k > 0 && b[k] >= b[k - 1]) return false;
  for (; k < b.size(); ++k) {
    if (std::abs(b[k]) >= band) return false;
  }
  return true;
}

// Some lag L < M/2 where the raw curve rises by more than `band`.
bool oscillates(const std::vector<double>& corr, double band) {
  for (std::size_t l = 0; l + 1 < corr.size() / 2; ++l) {
    if (corr[l + 1] - corr[l] > band) return true;
  }
  return false;
}

Outcome correlation_decay(const fs::path& configs) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto small = run_quantum_corr(load(configs / "quantum_corr_m10.json"));
  double worst = 0.0;
  for (const auto& c : small) {
    for (std::size_t l = 0; l < c.exact.size(); ++l) worst = std::max(worst, std::abs(c.correlations[l] - c.exact[l]));
  }
  const bool small_pass = !small.empty() && !small.front().exact.empty() && worst <= 0.05;

  const auto large = run_quantum_corr(load(configs / "quantum_corr_m250.json"));
  bool large_pass = true;
  std::string shapes;
  for (const auto& c : large) {
    std::string shape;
    if (c.s0 <= 0.125) {
      const bool ok = decays_monotonically(c.correlations, 0.05);
      large_pass = large_pass && ok;
      shape = ok ? "decays" : "no monotone decay";
    } else if (c.s0 == 0.5) {
      const bool ok = oscillates(c.correlations, 0.05);
      large_pass = large_pass && ok;
      shape = ok ? "oscillates" : "no oscillation";
    } else {
      continue;
    }
    shapes += fmt::format(" s0={:.4g} {};", c.s0, shape);
  }
  return {small_pass && large_pass,
          fmt::format("M=10 s0=1/8 max |corr - exact| {:.4f} (<= 0.05); M=250:{} {:.0f} s", worst, shapes,
                      seconds_since(t0))};
}

Outcome table_goldens() {
  struct Cell {
    const char* preset;
    double f, update_ps, power;
  };
  const Cell cells[] = {{"hitachi", 1e12, 1.0, 0.05},
                        {"janus2", 2.5e11, 4.0, 25.0},
                        {"fpga_2k_qa", 2.08e10, 48.0, 55.0},
                        {"fpga_8k_ising", 2.5e11, 4.0, 32.0},
                        {"mtj_projected", 1e16, 1e-4, 19.25}};
  double worst = 0.0;
  std::string name;
  for (const auto& c : cells) {
    const auto r = model_report(preset(c.preset));
    for (double rel : {r.flips_per_second / c.f, r.update_time * 1e12 / c.update_ps, r.power.value_or(0.0) / c.power}) {
      if (std::abs(rel - 1.0) > worst) worst = std::abs(rel - 1.0), name = c.preset;
    }
  }
  return {worst <= 0.02, fmt::format("15 cells, worst relative error {:.4f} ({}) (<= 0.02)", worst, name)};
}

Outcome property_suite(const std::string& unit_tests) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string cmd = unit_tests + " --minimal > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return {code == 0, fmt::format("unit and property suites exit {} ({:.0f} s)", code, seconds_since(t0))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string configs, unit_tests;
  std::vector<int> only;
  app.add_option("--configs", configs, "config directory")->required();
  app.add_option("--unit-tests", unit_tests, "unit test executable")->required();
  app.add_option("--only", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const fs::path dir(configs);
  const std::vector<Criterion> criteria = {
      {1, "SK fidelity", [&] { return sk_fidelity(dir); }},
      {2, "quantum magnetization", [&] { return quantum_magnetization(dir); }},
      {3, "annealing s0 ordering", [&] { return anneal_ordering(dir); }},
      {4, "correlation decay", [&] { return correlation_decay(dir); }},
      {5, "throughput table", [] { return table_goldens(); }},
      {6, "oracle and property suite", [&] { return property_suite(unit_tests); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << fmt::format("{} criterion {} ({}): {}", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail) << std::endl;
  }
  return all ? 0 : 1;
}
