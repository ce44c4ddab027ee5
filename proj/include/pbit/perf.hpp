#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbit/anneal.hpp"

namespace pbit {

enum class Architecture { Sequenced, Autonomous };

std::string to_string(Architecture arch);
Architecture architecture_from_string(const std::string& name);

/// Timing and size description of one Ising machine. SI units throughout
/// (seconds, joules, watts). Optional fields are only required by the
/// formulas that use them.
struct HardwareParams {
  std::string name;
  Architecture architecture = Architecture::Autonomous;
  double n_spins = 0.0;
  std::optional<double> n_parallel;
  std::optional<double> tau_s;
  std::optional<double> tau_n;
  std::optional<double> tau_clock;
  std::optional<double> s;
  /// Energy per flip.
  std::optional<double> epsilon;
  /// Measured or budgeted total power; used when epsilon is absent.
  std::optional<double> power_budget;

  /// Checks signs, N_p <= N, and s * tau_n == tau_s (1e-9 relative) when all
  /// three are given. Throws std::invalid_argument.
  void validate() const;

  bool operator==(const HardwareParams&) const = default;
};

/// f = N_p / tau_clock.
double flips_sequenced(const HardwareParams& hw);
/// f = N / tau_n, or s N / tau_s when tau_n is absent.
double flips_autonomous(const HardwareParams& hw);
/// tau_s < (s N / N_p) tau_clock, strictly.
bool autonomous_advantage(const HardwareParams& hw);
/// flips_sequenced or flips_autonomous according to the architecture.
double flips_per_second(const HardwareParams& hw);

/// Table rows: "hitachi", "janus2", "fpga_2k_qa", "fpga_8k_ising", "mtj_projected".
std::vector<std::string> preset_names();
HardwareParams preset(const std::string& name);

HardwareParams hardware_from_json(const std::string& text);
std::string hardware_to_json(const HardwareParams& hw);
/// Accepts one object or an array of objects.
std::vector<HardwareParams> load_hardware_file(const std::string& path);

struct PerfReport {
  std::string name;
  Architecture architecture = Architecture::Autonomous;
  double n_spins = 0.0;
  std::optional<double> s;
  std::optional<double> tau_s;
  std::optional<double> tau_n;
  double flips_per_second = 0.0;
  double update_time = 0.0;  ///< 1/f in seconds
  std::optional<double> energy_per_flip;
  std::optional<double> power;
  /// Filled from a simulator trajectory.
  std::optional<std::uint64_t> steps;
  std::optional<std::uint64_t> realized_flips;
  std::optional<double> attempt_flips;
  /// steps * tau_s: time the run would take on the modelled hardware.
  std::optional<double> hardware_time;
};

/// Model-only report. Power is f * epsilon when epsilon is given, otherwise the
/// supplied power budget with epsilon = P / f; both are omitted when neither is set.
PerfReport model_report(const HardwareParams& hw);
/// Model report plus the counters of a simulator run. Throws std::invalid_argument
/// for an empty trajectory.
PerfReport run_report(const RunTrajectory& traj, const HardwareParams& hw);

/// Aligned text table in ps/flip and nJ/flip.
std::string reports_table(const std::vector<PerfReport>& reports);
std::string reports_json(const std::vector<PerfReport>& reports);

}  // namespace pbit
