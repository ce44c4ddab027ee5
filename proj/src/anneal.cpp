#include "pbit/anneal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fmt/format.h"
#include "pbit/errors.hpp"

namespace pbit {

void AnnealSchedule::validate() const {
  if (!(t_initial > 0.0) || !std::isfinite(t_initial)) throw std::invalid_argument("t_initial must be > 0");
  if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("ratio must lie in (0, 1)");
  if (stages < 1) throw std::invalid_argument("schedule needs at least one stage");
  if (!(t_floor >= 0.0)) throw std::invalid_argument("t_floor must be >= 0");
  if (t_initial < t_floor) throw std::invalid_argument("t_initial is below t_floor");
}

std::vector<double> AnnealSchedule::temperatures() const {
  validate();
  std::vector<double> temps;
  double t = t_initial;
  for (std::size_t k = 0; k < stages && t >= t_floor; ++k) {
    temps.push_back(t);
    t *= ratio;
  }
  return temps;
}

std::uint64_t AnnealSchedule::resolved_steps(double s0) const {
  if (steps_per_stage > 0) return steps_per_stage;
  return static_cast<std::uint64_t>(std::llround(50.0 / s0));
}

RunTrajectory run_anneal(const CouplingNetwork& net, const AnnealSchedule& schedule, const AutonomousParams& params,
                         UpdateMode mode, const AnnealOptions& options) {
  params.validate();
  const auto temps = schedule.temperatures();
  const std::uint64_t steps = schedule.resolved_steps(params.s0);

  Sampler sampler(net, params, mode, options.coloring, options.threads);
  if (options.initial_state) sampler.set_state(*options.initial_state);

  RunTrajectory traj;
  for (std::size_t k = 0; k < temps.size(); ++k) {
    const double beta = 1.0 / temps[k];
    if (!std::isfinite(beta)) throw std::invalid_argument("stage temperature gives a non-finite beta");
    sampler.set_beta(beta);
    StepStats stage_stats;
    sampler.run(steps, &stage_stats);
    StageRecord rec;
    rec.stage = k;
    rec.temperature = temps[k];
    rec.beta = beta;
    rec.steps = steps;
    rec.energy = energy(net, sampler.state());
    rec.realized_flips = stage_stats.realized_flips;
    rec.attempt_flips = mode == UpdateMode::Autonomous ? stage_stats.attempt_equivalent
                                                       : static_cast<double>(stage_stats.attempts);
    if (options.snapshots) rec.snapshot = sampler.state();
    traj.stages.push_back(std::move(rec));
    traj.totals += stage_stats;
  }
  traj.final_state = sampler.state();
  return traj;
}

std::vector<SpinState> sample_run(const CouplingNetwork& net, const AutonomousParams& params, UpdateMode mode,
                                  const SampleProtocol& protocol, const AnnealOptions& options, StepStats* stats) {
  if (protocol.spacing < 1) throw std::invalid_argument("sample spacing must be >= 1");
  Sampler sampler(net, params, mode, options.coloring, options.threads);
  if (options.initial_state) sampler.set_state(*options.initial_state);
  sampler.run(protocol.burn_in, stats);
  std::vector<SpinState> samples;
  samples.reserve(protocol.n_samples);
  for (std::size_t s = 0; s < protocol.n_samples; ++s) {
    sampler.run(s == 0 ? 1 : protocol.spacing, stats);
    samples.push_back(sampler.state());
  }
  return samples;
}

std::string trajectory_csv(const RunTrajectory& traj) {
  std::string out = "stage,T,beta,steps,energy,realized_flips,attempt_flips\n";
  for (const auto& r : traj.stages) {
    out += fmt::format("{},{:.17g},{:.17g},{},{:.17g},{},{:.17g}\n", r.stage, r.temperature, r.beta, r.steps,
                       r.energy, r.realized_flips, r.attempt_flips);
  }
  return out;
}

std::string state_pgm(const SpinState& state, std::size_t rows, std::size_t cols) {
  require_same_size(state.size(), rows * cols, "state vs image size");
  std::string out = fmt::format("P5\n{} {}\n255\n", cols, rows);
  out.reserve(out.size() + state.size());
  for (auto v : state.view()) out.push_back(static_cast<char>(v > 0 ? 255 : 0));
  return out;
}

}  // namespace pbit
