#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbit/dynamics.hpp"
#include "pbit/network.hpp"

namespace pbit {

/// Geometric schedule T(k+1) = ratio * T(k), starting at t_initial, for at
/// most `stages` stages and stopping before T drops below t_floor.
struct AnnealSchedule {
  double t_initial = 10.0;
  double ratio = 0.9;
  std::size_t stages = 44;
  /// Steps per stage; 0 selects round(50 / s0).
  std::uint64_t steps_per_stage = 0;
  double t_floor = 0.1;

  void validate() const;
  std::vector<double> temperatures() const;
  std::uint64_t resolved_steps(double s0) const;

  bool operator==(const AnnealSchedule&) const = default;
};

struct StageRecord {
  std::size_t stage = 0;
  double temperature = 0.0;
  double beta = 0.0;
  std::uint64_t steps = 0;
  double energy = 0.0;
  std::uint64_t realized_flips = 0;
  double attempt_flips = 0.0;
  std::optional<SpinState> snapshot;
};

struct RunTrajectory {
  std::vector<StageRecord> stages;
  SpinState final_state;
  StepStats totals;

  double final_energy() const { return stages.empty() ? 0.0 : stages.back().energy; }
};

struct AnnealOptions {
  std::optional<TwoColoring> coloring;
  std::optional<SpinState> initial_state;
  bool snapshots = false;
  int threads = 1;
};

/// Runs every stage of `schedule` at beta = 1/T, recording the exact energy and
/// flip counters after each stage.
RunTrajectory run_anneal(const CouplingNetwork& net, const AnnealSchedule& schedule, const AutonomousParams& params,
                         UpdateMode mode, const AnnealOptions& options = {});

struct SampleProtocol {
  std::uint64_t burn_in = 0;
  std::size_t n_samples = 200;
  std::uint64_t spacing = 30000;

  bool operator==(const SampleProtocol&) const = default;
};

/// Fixed-temperature run at the network's beta: burn_in steps, then n_samples
/// states each taken `spacing` steps after the previous one.
std::vector<SpinState> sample_run(const CouplingNetwork& net, const AutonomousParams& params, UpdateMode mode,
                                  const SampleProtocol& protocol, const AnnealOptions& options = {},
                                  StepStats* stats = nullptr);

/// Trajectory CSV: stage,T,beta,steps,energy,realized_flips,attempt_flips.
std::string trajectory_csv(const RunTrajectory& traj);

/// Binary PGM (P5) of a lattice state: +1 -> 255, -1 -> 0.
std::string state_pgm(const SpinState& state, std::size_t rows, std::size_t cols);

}  // namespace pbit
