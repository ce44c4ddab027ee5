#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbit/anneal.hpp"
#include "pbit/dynamics.hpp"
#include "pbit/perf.hpp"
#include "pbit/problems.hpp"

namespace pbit {

enum class ExperimentKind { Sample, Anneal, Quantum, QuantumCorr, Perf, ValidateSk };

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

enum class ProblemKind { Sk, Image, Trotter, File };

std::string to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(const std::string& name);

struct SkSection {
  std::size_t n_spins = 16;
  std::uint64_t instance_seed = 1;
  double beta = 1.0;
  bool operator==(const SkSection&) const = default;
};

struct ImageSection {
  std::size_t rows = 30;
  std::size_t cols = 30;
  bool wrap = false;
  /// Rendered with the built-in font when `path` is empty.
  std::string text = "PBIT";
  /// PGM (P2/P5) or JSON 0/1 matrix.
  std::string path;
  bool operator==(const ImageSection&) const = default;
};

struct QuantumSection {
  TrotterMapping map;
  /// Transverse field grid as multiples of J; must stay > 0.
  std::vector<double> gamma_ratios{0.05, 0.25, 0.5, 0.75, 1.0};
  /// Average correlations over every reference site, not only site 0.
  bool translation_average = false;
  /// Largest allowed |sampled - exact| when the exact column is available.
  std::optional<double> tolerance;
  bool operator==(const QuantumSection&) const = default;
};

struct ValidateSection {
  std::size_t ensembles = 4000;
  std::uint64_t steps = 2000;
  std::uint64_t record_every = 100;
  bool compare_gibbs = true;
  double ed_ratio_max = 2.0;
  double fe_rel_tol = 0.05;
  std::optional<double> p_th;
  bool operator==(const ValidateSection&) const = default;
};

struct PerfSection {
  std::vector<std::string> presets = preset_names();
  std::string hardware_file;
  bool operator==(const PerfSection&) const = default;
};

/// Everything one command needs. Every random quantity derives from
/// `master_seed`; `params.master_seed` mirrors it.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Sample;
  std::uint64_t master_seed = 1;
  std::string output_dir = "out";
  int threads = 1;
  UpdateMode mode = UpdateMode::Autonomous;
  AutonomousParams params;
  /// s0 sweep; empty means just params.s0.
  std::vector<double> s0_values;
  /// Independent seeds per s0 value (anneal).
  std::size_t runs = 1;
  bool snapshots = false;
  ProblemKind problem = ProblemKind::Sk;
  std::string network_file;
  SkSection sk;
  ImageSection image;
  QuantumSection quantum;
  AnnealSchedule schedule;
  SampleProtocol sampling;
  ValidateSection validate;
  PerfSection perf;

  std::vector<double> s0_sweep() const;
  /// Throws ConfigError.
  void check() const;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Parses a config document; missing keys keep their defaults and unknown keys
/// are rejected. Throws ConfigError.
ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& cfg);

/// Seed of independent task `index` within `family` (ensembles, seeds, grid points).
std::uint64_t task_seed(std::uint64_t master, std::uint64_t family, std::uint64_t index);

/// Network described by the config's problem section. Image problems also
/// return their lattice metadata.
struct BuiltProblem {
  CouplingNetwork network;
  std::optional<LatticeProblem> lattice;
};
BuiltProblem build_problem(const ExperimentConfig& cfg);

// --- validate-sk --------------------------------------------------------------

struct SkValidation {
  std::vector<std::uint64_t> times;
  std::vector<double> ed_autonomous;
  std::vector<double> ed_gibbs;
  /// NaN where no configuration clears p_th.
  std::vector<double> fe_autonomous;
  std::vector<double> fe_gibbs;
  double fe_exact = 0.0;
  double ed_ratio = 0.0;     ///< final ED autonomous / final ED Gibbs
  double fe_rel_error = 0.0;  ///< final |FE_auto - FE_exact| / |FE_exact|
  bool pass = false;
};

SkValidation run_validate_sk(const ExperimentConfig& cfg);
std::string sk_validation_csv(const SkValidation& v);

// --- quantum ------------------------------------------------------------------

struct QuantumPoint {
  double s0 = 0.0;
  double gamma_ratio = 0.0;
  double gamma_x = 0.0;
  double j_perp = 0.0;
  double mz = 0.0;
  std::optional<double> mz_exact;
  /// Site- and replica-averaged magnetization of each sample.
  std::vector<double> sample_mz;
};

std::vector<QuantumPoint> run_quantum(const ExperimentConfig& cfg);
std::string quantum_csv(const std::vector<QuantumPoint>& points);
/// One row per sample: s0, gamma ratio, sample, mz, error against the exact value.
std::string quantum_samples_csv(const std::vector<QuantumPoint>& points);

struct CorrelationCurve {
  double s0 = 0.0;
  std::vector<double> correlations;
  std::vector<double> exact;  ///< empty unless M <= 12
  double mz = 0.0;
};

std::vector<CorrelationCurve> run_quantum_corr(const ExperimentConfig& cfg);
std::string correlation_csv(const std::vector<CorrelationCurve>& curves);

// --- anneal -------------------------------------------------------------------

struct AnnealOutcome {
  double s0 = 0.0;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double final_energy = 0.0;
  double ground_energy = 0.0;
  bool reached_ground = false;
  RunTrajectory trajectory;
};

struct AnnealSweep {
  LatticeProblem problem;
  std::vector<AnnealOutcome> outcomes;  ///< s0-major, then run
};

AnnealSweep run_anneal_sweep(const ExperimentConfig& cfg);
std::string anneal_summary_csv(const AnnealSweep& sweep);

// --- perf ---------------------------------------------------------------------

std::vector<PerfReport> run_perf(const ExperimentConfig& cfg);

// --- driver -------------------------------------------------------------------

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitTolerance = 3 };

/// Runs the command for `cfg.kind`, writing data files into cfg.output_dir
/// and copying `config_text` there verbatim as config.json. Human-readable
/// summaries go to `log`. Returns an ExitCode.
int run_experiment(const ExperimentConfig& cfg, const std::string& config_text, std::string* log = nullptr);

}  // namespace pbit
