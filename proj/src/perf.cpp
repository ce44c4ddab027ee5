#include "pbit/perf.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fmt/format.h"
#include "json.hpp"

namespace pbit {

namespace {

void require_positive(const std::optional<double>& v, const char* what) {
  if (!v) throw std::invalid_argument(std::string(what) + " is required");
  if (!(*v > 0.0) || !std::isfinite(*v)) throw std::invalid_argument(std::string(what) + " must be > 0");
}

void check_optional(const std::optional<double>& v, const char* what) {
  if (v && (!(*v > 0.0) || !std::isfinite(*v))) throw std::invalid_argument(std::string(what) + " must be > 0");
}

HardwareParams make(std::string name, Architecture arch, double n, std::optional<double> np, double tau_s,
                    double tau_n, std::optional<double> tau_clock, double s) {
  HardwareParams hw;
  hw.name = std::move(name);
  hw.architecture = arch;
  hw.n_spins = n;
  hw.n_parallel = np;
  hw.tau_s = tau_s;
  hw.tau_n = tau_n;
  hw.tau_clock = tau_clock;
  hw.s = s;
  return hw;
}

const std::map<std::string, HardwareParams>& presets() {
  static const std::map<std::string, HardwareParams> table = [] {
    std::map<std::string, HardwareParams> t;
    // 20K-spin SRAM annealer at 100 MHz; half the spins update per clock.
    auto hitachi = make("hitachi", Architecture::Sequenced, 20000, 10000, 10e-9, 10e-9, 10e-9, 1.0);
    hitachi.epsilon = 5e-14;
    // Single Janus II spin processor at 250 MHz, half the spins per clock.
    auto janus = make("janus2", Architecture::Sequenced, 2000, 1000, 4e-9, 4e-9, 4e-9, 1.0);
    janus.epsilon = 1e-10;
    // FPGA rows: power is the measured maximum draw.
    auto qa = make("fpga_2k_qa", Architecture::Autonomous, 2000, std::nullopt, 8e-9, 96e-9, std::nullopt, 1.0 / 12.0);
    qa.power_budget = 55.0;
    auto ising =
        make("fpga_8k_ising", Architecture::Autonomous, 8100, std::nullopt, 8e-9, 32e-9, std::nullopt, 0.25);
    ising.power_budget = 32.0;
    auto mtj = make("mtj_projected", Architecture::Autonomous, 1e6, std::nullopt, 10e-12, 100e-12, std::nullopt, 0.1);
    mtj.epsilon = 1.93e-15;
    for (auto* hw : {&hitachi, &janus, &qa, &ising, &mtj}) t.emplace(hw->name, *hw);
    return t;
  }();
  return table;
}

std::optional<double> opt_number(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || doc[key].is_null()) return std::nullopt;
  if (!doc[key].is_number()) throw std::invalid_argument(std::string("hardware field '") + key + "' must be a number");
  return doc[key].get<double>();
}

HardwareParams hardware_from_object(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("hardware description must be a JSON object");
  static const char* known[] = {"name",     "architecture", "n_spins", "n_parallel", "tau_s",
                                "tau_n",    "tau_clock",    "s",       "epsilon",    "power_budget"};
  for (const auto& [key, value] : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw std::invalid_argument("unknown hardware field '" + key + "'");
  }
  HardwareParams hw;
  hw.name = doc.value("name", std::string{});
  hw.architecture = architecture_from_string(doc.value("architecture", std::string("autonomous")));
  if (!doc.contains("n_spins")) throw std::invalid_argument("hardware field 'n_spins' is required");
  hw.n_spins = doc.at("n_spins").get<double>();
  hw.n_parallel = opt_number(doc, "n_parallel");
  hw.tau_s = opt_number(doc, "tau_s");
  hw.tau_n = opt_number(doc, "tau_n");
  hw.tau_clock = opt_number(doc, "tau_clock");
  hw.s = opt_number(doc, "s");
  hw.epsilon = opt_number(doc, "epsilon");
  hw.power_budget = opt_number(doc, "power_budget");
  hw.validate();
  return hw;
}

nlohmann::json hardware_object(const HardwareParams& hw) {
  nlohmann::json doc;
  doc["name"] = hw.name;
  doc["architecture"] = to_string(hw.architecture);
  doc["n_spins"] = hw.n_spins;
  const auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) doc[key] = *v;
  };
  put("n_parallel", hw.n_parallel);
  put("tau_s", hw.tau_s);
  put("tau_n", hw.tau_n);
  put("tau_clock", hw.tau_clock);
  put("s", hw.s);
  put("epsilon", hw.epsilon);
  put("power_budget", hw.power_budget);
  return doc;
}

std::string opt_cell(const std::optional<double>& v, double scale, const char* spec) {
  if (!v) return "-";
  return fmt::format(fmt::runtime(spec), *v * scale);
}

}  // namespace

std::string to_string(Architecture arch) { return arch == Architecture::Sequenced ? "sequenced" : "autonomous"; }

Architecture architecture_from_string(const std::string& name) {
  if (name == "sequenced") return Architecture::Sequenced;
  if (name == "autonomous") return Architecture::Autonomous;
  throw std::invalid_argument("unknown architecture '" + name + "' (expected sequenced or autonomous)");
}

void HardwareParams::validate() const {
  if (!(n_spins > 0.0) || !std::isfinite(n_spins)) throw std::invalid_argument("n_spins must be > 0");
  check_optional(n_parallel, "n_parallel");
  check_optional(tau_s, "tau_s");
  check_optional(tau_n, "tau_n");
  check_optional(tau_clock, "tau_clock");
  check_optional(s, "s");
  check_optional(epsilon, "epsilon");
  check_optional(power_budget, "power_budget");
  if (n_parallel && *n_parallel > n_spins) throw std::invalid_argument("n_parallel must not exceed n_spins");
  if (s && tau_n && tau_s) {
    const double lhs = *s * *tau_n;
    if (std::abs(lhs - *tau_s) > 1e-9 * std::abs(*tau_s)) {
      throw std::invalid_argument(fmt::format("inconsistent delays: s * tau_n = {:g} but tau_s = {:g}", lhs, *tau_s));
    }
  }
}

double flips_sequenced(const HardwareParams& hw) {
  require_positive(hw.tau_clock, "tau_clock");
  require_positive(hw.n_parallel, "n_parallel");
  return *hw.n_parallel / *hw.tau_clock;
}

double flips_autonomous(const HardwareParams& hw) {
  if (!(hw.n_spins > 0.0)) throw std::invalid_argument("n_spins must be > 0");
  if (hw.tau_n) {
    require_positive(hw.tau_n, "tau_n");
    return hw.n_spins / *hw.tau_n;
  }
  require_positive(hw.tau_s, "tau_s");
  require_positive(hw.s, "s");
  return *hw.s * hw.n_spins / *hw.tau_s;
}

bool autonomous_advantage(const HardwareParams& hw) {
  require_positive(hw.tau_s, "tau_s");
  require_positive(hw.tau_clock, "tau_clock");
  require_positive(hw.n_parallel, "n_parallel");
  require_positive(hw.s, "s");
  return *hw.tau_s < (*hw.s * hw.n_spins / *hw.n_parallel) * *hw.tau_clock;
}

double flips_per_second(const HardwareParams& hw) {
  return hw.architecture == Architecture::Sequenced ? flips_sequenced(hw) : flips_autonomous(hw);
}

std::vector<std::string> preset_names() {
  return {"hitachi", "janus2", "fpga_2k_qa", "fpga_8k_ising", "mtj_projected"};
}

HardwareParams preset(const std::string& name) {
  const auto it = presets().find(name);
  if (it == presets().end()) throw std::invalid_argument("unknown hardware preset '" + name + "'");
  return it->second;
}

HardwareParams hardware_from_json(const std::string& text) { return hardware_from_object(nlohmann::json::parse(text)); }

std::string hardware_to_json(const HardwareParams& hw) { return hardware_object(hw).dump(2); }

std::vector<HardwareParams> load_hardware_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open hardware file " + path);
  const auto doc = nlohmann::json::parse(in);
  std::vector<HardwareParams> out;
  if (doc.is_array()) {
    for (const auto& item : doc) out.push_back(hardware_from_object(item));
  } else {
    out.push_back(hardware_from_object(doc));
  }
  return out;
}

PerfReport model_report(const HardwareParams& hw) {
  hw.validate();
  PerfReport r;
  r.name = hw.name;
  r.architecture = hw.architecture;
  r.n_spins = hw.n_spins;
  r.s = hw.s;
  r.tau_s = hw.tau_s;
  r.tau_n = hw.tau_n;
  r.flips_per_second = flips_per_second(hw);
  r.update_time = 1.0 / r.flips_per_second;
  if (hw.epsilon) {
    r.energy_per_flip = *hw.epsilon;
    r.power = r.flips_per_second * *hw.epsilon;
  } else if (hw.power_budget) {
    r.power = *hw.power_budget;
    r.energy_per_flip = *hw.power_budget / r.flips_per_second;
  }
  return r;
}

PerfReport run_report(const RunTrajectory& traj, const HardwareParams& hw) {
  if (traj.stages.empty()) throw std::invalid_argument("run report needs a non-empty trajectory");
  PerfReport r = model_report(hw);
  r.steps = traj.totals.steps;
  r.realized_flips = traj.totals.realized_flips;
  r.attempt_flips = traj.totals.attempt_equivalent > 0.0 ? traj.totals.attempt_equivalent
                                                         : static_cast<double>(traj.totals.attempts);
  const auto step_time = hw.architecture == Architecture::Sequenced ? hw.tau_clock : hw.tau_s;
  if (step_time) r.hardware_time = static_cast<double>(traj.totals.steps) * *step_time;
  return r;
}

std::string reports_table(const std::vector<PerfReport>& reports) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"name", "arch", "N", "s", "tau_S (ps)", "tau_N (ps)", "f (flips/s)", "1/f (ps/flip)",
                  "eps (nJ/flip)", "P (W)"});
  for (const auto& r : reports) {
    rows.push_back({r.name, to_string(r.architecture), fmt::format("{:g}", r.n_spins), opt_cell(r.s, 1.0, "{:.4g}"),
                    opt_cell(r.tau_s, 1e12, "{:g}"), opt_cell(r.tau_n, 1e12, "{:g}"),
                    fmt::format("{:.3g}", r.flips_per_second), fmt::format("{:.3g}", r.update_time * 1e12),
                    opt_cell(r.energy_per_flip, 1e9, "{:.3g}"), opt_cell(r.power, 1.0, "{:.4g}")});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += c == 0 ? fmt::format("{:<{}}", row[c], width[c]) : fmt::format("  {:>{}}", row[c], width[c]);
    }
    out += '\n';
  }
  return out;
}

std::string reports_json(const std::vector<PerfReport>& reports) {
  auto arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json doc;
    doc["name"] = r.name;
    doc["architecture"] = to_string(r.architecture);
    doc["n_spins"] = r.n_spins;
    if (r.s) doc["s"] = *r.s;
    if (r.tau_s) doc["tau_s_ps"] = *r.tau_s * 1e12;
    if (r.tau_n) doc["tau_n_ps"] = *r.tau_n * 1e12;
    doc["flips_per_second"] = r.flips_per_second;
    doc["update_time_ps_per_flip"] = r.update_time * 1e12;
    if (r.energy_per_flip) doc["energy_nj_per_flip"] = *r.energy_per_flip * 1e9;
    if (r.power) doc["power_w"] = *r.power;
    if (r.steps) doc["steps"] = *r.steps;
    if (r.realized_flips) doc["realized_flips"] = *r.realized_flips;
    if (r.attempt_flips) doc["attempt_flips"] = *r.attempt_flips;
    if (r.hardware_time) doc["hardware_time_s"] = *r.hardware_time;
    arr.push_back(std::move(doc));
  }
  return arr.dump(2);
}

}  // namespace pbit
