#include "pbit/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "fmt/format.h"
#include "json.hpp"
#include "pbit/errors.hpp"
#include "pbit/oracles.hpp"

namespace pbit {

using nlohmann::json;

namespace {

// Task families keep the seeds of unrelated fan-outs apart.
enum SeedFamily : std::uint64_t {
  kFamilySample = 1,
  kFamilyEnsembleAuto = 2,
  kFamilyEnsembleGibbs = 3,
  kFamilyQuantum = 4,
  kFamilyCorrelation = 5,
  kFamilyAnneal = 6,
};

template <typename Fn>
void fan_out(std::size_t tasks, int threads, Fn&& fn) {
  std::vector<std::exception_ptr> errors(tasks);
  const long count = static_cast<long>(tasks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1 && tasks > 1)
  for (long t = 0; t < count; ++t) {
    try {
      fn(static_cast<std::size_t>(t));
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Threads left for each sampler once independent tasks have taken theirs.
int inner_threads(std::size_t tasks, int threads) { return tasks > 1 ? 1 : threads; }

void check_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) throw ConfigError("'" + where + "' must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

void read(const json& obj, const char* key, std::optional<double>& out) {
  if (!obj.contains(key)) return;
  if (obj.at(key).is_null()) {
    out.reset();
  } else {
    out = obj.at(key).get<double>();
  }
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

std::string spin_string(const SpinState& s) {
  std::string out(s.size(), '-');
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] > 0 ? '+' : '-';
  return out;
}

std::string num(double v) { return std::isfinite(v) ? fmt::format("{:.17g}", v) : std::string(); }

AutonomousParams params_for(const ExperimentConfig& cfg, double s0, std::uint64_t seed) {
  AutonomousParams p = cfg.params;
  p.s0 = s0;
  p.master_seed = seed;
  return p;
}

std::optional<TwoColoring> coloring_for(const ExperimentConfig& cfg, const CouplingNetwork& net) {
  if (cfg.mode != UpdateMode::Checkerboard) return std::nullopt;
  auto tc = two_coloring(net);
  if (!tc) throw ConfigError("checkerboard mode needs a bipartite interaction graph");
  return tc;
}

Bitmap load_bitmap(const ImageSection& image) {
  if (image.path.empty()) return text_bitmap(image.text, image.rows, image.cols);
  const std::filesystem::path p(image.path);
  if (p.extension() == ".json") return bitmap_from_json(read_file(image.path));
  return read_pgm(image.path);
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Sample: return "sample";
    case ExperimentKind::Anneal: return "anneal";
    case ExperimentKind::Quantum: return "quantum";
    case ExperimentKind::QuantumCorr: return "quantum-corr";
    case ExperimentKind::Perf: return "perf";
    case ExperimentKind::ValidateSk: return "validate-sk";
  }
  return "?";
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
  for (auto k : {ExperimentKind::Sample, ExperimentKind::Anneal, ExperimentKind::Quantum, ExperimentKind::QuantumCorr,
                 ExperimentKind::Perf, ExperimentKind::ValidateSk}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown experiment kind '" + name + "'");
}

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Sk: return "sk";
    case ProblemKind::Image: return "image";
    case ProblemKind::Trotter: return "trotter";
    case ProblemKind::File: return "file";
  }
  return "?";
}

ProblemKind problem_kind_from_string(const std::string& name) {
  for (auto k : {ProblemKind::Sk, ProblemKind::Image, ProblemKind::Trotter, ProblemKind::File}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown problem '" + name + "'");
}

std::vector<double> ExperimentConfig::s0_sweep() const {
  return s0_values.empty() ? std::vector<double>{params.s0} : s0_values;
}

void ExperimentConfig::check() const {
  try {
    params.validate();
    for (double s0 : s0_sweep()) {
      if (!(s0 > 0.0 && s0 <= 1.0)) throw ConfigError(fmt::format("s0 = {} is outside (0, 1]", s0));
    }
    if (threads < 1) throw ConfigError("threads must be >= 1");
    if (runs < 1) throw ConfigError("runs must be >= 1");
    if (sampling.spacing < 1) throw ConfigError("sampling.spacing must be >= 1");
    schedule.validate();
    if (problem == ProblemKind::File && network_file.empty()) throw ConfigError("problem 'file' needs network_file");
    if (kind == ExperimentKind::Quantum || kind == ExperimentKind::QuantumCorr || problem == ProblemKind::Trotter) {
      quantum.map.validate();
    }
    if (kind == ExperimentKind::Quantum) {
      if (quantum.gamma_ratios.empty()) throw ConfigError("quantum.gamma_ratios is empty");
      for (double g : quantum.gamma_ratios) {
        if (!(g > 0.0)) throw ConfigError("gamma_ratios must be > 0 (J_perp diverges at Gamma_x = 0)");
      }
      if (!(quantum.map.j_coupling != 0.0)) throw ConfigError("quantum grid is relative to J, which must be nonzero");
    }
    if (kind == ExperimentKind::ValidateSk) {
      if (validate.ensembles < 1) throw ConfigError("validate.ensembles must be >= 1");
      if (validate.record_every < 1) throw ConfigError("validate.record_every must be >= 1");
      if (validate.p_th && !(*validate.p_th > 0.0 && *validate.p_th < 1.0)) {
        throw ConfigError("validate.p_th must lie in (0, 1)");
      }
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

ExperimentConfig config_from_json(const std::string& text) {
  ExperimentConfig cfg;
  try {
    const json doc = json::parse(text);
    check_keys(doc,
               {"kind", "master_seed", "output_dir", "threads", "mode", "params", "s0_values", "runs", "snapshots",
                "problem", "network_file", "sk", "image", "quantum", "schedule", "sampling", "validate", "perf"},
               "config");
    if (doc.contains("kind")) cfg.kind = experiment_kind_from_string(doc.at("kind").get<std::string>());
    read(doc, "master_seed", cfg.master_seed);
    read(doc, "output_dir", cfg.output_dir);
    read(doc, "threads", cfg.threads);
    if (doc.contains("mode")) cfg.mode = update_mode_from_string(doc.at("mode").get<std::string>());
    if (doc.contains("params")) {
      const auto& p = doc.at("params");
      check_keys(p, {"s0", "input_bits", "output_bits", "u_max", "prng"}, "params");
      read(p, "s0", cfg.params.s0);
      read(p, "input_bits", cfg.params.input_bits);
      read(p, "output_bits", cfg.params.output_bits);
      read(p, "u_max", cfg.params.u_max);
      if (p.contains("prng")) cfg.params.prng = prng_kind_from_string(p.at("prng").get<std::string>());
    }
    read(doc, "s0_values", cfg.s0_values);
    read(doc, "runs", cfg.runs);
    read(doc, "snapshots", cfg.snapshots);
    if (doc.contains("problem")) cfg.problem = problem_kind_from_string(doc.at("problem").get<std::string>());
    read(doc, "network_file", cfg.network_file);
    if (doc.contains("sk")) {
      const auto& s = doc.at("sk");
      check_keys(s, {"n_spins", "instance_seed", "beta"}, "sk");
      read(s, "n_spins", cfg.sk.n_spins);
      read(s, "instance_seed", cfg.sk.instance_seed);
      read(s, "beta", cfg.sk.beta);
    }
    if (doc.contains("image")) {
      const auto& s = doc.at("image");
      check_keys(s, {"rows", "cols", "wrap", "text", "path"}, "image");
      read(s, "rows", cfg.image.rows);
      read(s, "cols", cfg.image.cols);
      read(s, "wrap", cfg.image.wrap);
      read(s, "text", cfg.image.text);
      read(s, "path", cfg.image.path);
    }
    if (doc.contains("quantum")) {
      const auto& s = doc.at("quantum");
      check_keys(s,
                 {"m_spins", "n_replicas", "j", "gamma_x", "gamma_z", "beta", "gamma_ratios", "translation_average",
                  "tolerance"},
                 "quantum");
      read(s, "m_spins", cfg.quantum.map.m_spins);
      read(s, "n_replicas", cfg.quantum.map.n_replicas);
      read(s, "j", cfg.quantum.map.j_coupling);
      read(s, "gamma_x", cfg.quantum.map.gamma_x);
      read(s, "gamma_z", cfg.quantum.map.gamma_z);
      read(s, "beta", cfg.quantum.map.beta);
      read(s, "gamma_ratios", cfg.quantum.gamma_ratios);
      read(s, "translation_average", cfg.quantum.translation_average);
      read(s, "tolerance", cfg.quantum.tolerance);
    }
    if (doc.contains("schedule")) {
      const auto& s = doc.at("schedule");
      check_keys(s, {"t_initial", "ratio", "stages", "steps_per_stage", "t_floor"}, "schedule");
      read(s, "t_initial", cfg.schedule.t_initial);
      read(s, "ratio", cfg.schedule.ratio);
      read(s, "stages", cfg.schedule.stages);
      read(s, "steps_per_stage", cfg.schedule.steps_per_stage);
      read(s, "t_floor", cfg.schedule.t_floor);
    }
    if (doc.contains("sampling")) {
      const auto& s = doc.at("sampling");
      check_keys(s, {"burn_in", "n_samples", "spacing"}, "sampling");
      read(s, "burn_in", cfg.sampling.burn_in);
      read(s, "n_samples", cfg.sampling.n_samples);
      read(s, "spacing", cfg.sampling.spacing);
    }
    if (doc.contains("validate")) {
      const auto& s = doc.at("validate");
      check_keys(s, {"ensembles", "steps", "record_every", "compare_gibbs", "ed_ratio_max", "fe_rel_tol", "p_th"},
                 "validate");
      read(s, "ensembles", cfg.validate.ensembles);
      read(s, "steps", cfg.validate.steps);
      read(s, "record_every", cfg.validate.record_every);
      read(s, "compare_gibbs", cfg.validate.compare_gibbs);
      read(s, "ed_ratio_max", cfg.validate.ed_ratio_max);
      read(s, "fe_rel_tol", cfg.validate.fe_rel_tol);
      read(s, "p_th", cfg.validate.p_th);
    }
    if (doc.contains("perf")) {
      const auto& s = doc.at("perf");
      check_keys(s, {"presets", "hardware_file"}, "perf");
      read(s, "presets", cfg.perf.presets);
      read(s, "hardware_file", cfg.perf.hardware_file);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  cfg.params.master_seed = cfg.master_seed;
  cfg.check();
  return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json doc;
  doc["kind"] = to_string(cfg.kind);
  doc["master_seed"] = cfg.master_seed;
  doc["output_dir"] = cfg.output_dir;
  doc["threads"] = cfg.threads;
  doc["mode"] = to_string(cfg.mode);
  doc["params"] = {{"s0", cfg.params.s0},
                   {"input_bits", cfg.params.input_bits},
                   {"output_bits", cfg.params.output_bits},
                   {"u_max", cfg.params.u_max},
                   {"prng", to_string(cfg.params.prng)}};
  doc["s0_values"] = cfg.s0_values;
  doc["runs"] = cfg.runs;
  doc["snapshots"] = cfg.snapshots;
  doc["problem"] = to_string(cfg.problem);
  doc["network_file"] = cfg.network_file;
  doc["sk"] = {{"n_spins", cfg.sk.n_spins}, {"instance_seed", cfg.sk.instance_seed}, {"beta", cfg.sk.beta}};
  doc["image"] = {{"rows", cfg.image.rows},
                  {"cols", cfg.image.cols},
                  {"wrap", cfg.image.wrap},
                  {"text", cfg.image.text},
                  {"path", cfg.image.path}};
  const auto& q = cfg.quantum;
  doc["quantum"] = {{"m_spins", q.map.m_spins},
                    {"n_replicas", q.map.n_replicas},
                    {"j", q.map.j_coupling},
                    {"gamma_x", q.map.gamma_x},
                    {"gamma_z", q.map.gamma_z},
                    {"beta", q.map.beta},
                    {"gamma_ratios", q.gamma_ratios},
                    {"translation_average", q.translation_average},
                    {"tolerance", optional_json(q.tolerance)}};
  doc["schedule"] = {{"t_initial", cfg.schedule.t_initial},
                     {"ratio", cfg.schedule.ratio},
                     {"stages", cfg.schedule.stages},
                     {"steps_per_stage", cfg.schedule.steps_per_stage},
                     {"t_floor", cfg.schedule.t_floor}};
  doc["sampling"] = {{"burn_in", cfg.sampling.burn_in},
                     {"n_samples", cfg.sampling.n_samples},
                     {"spacing", cfg.sampling.spacing}};
  const auto& v = cfg.validate;
  doc["validate"] = {{"ensembles", v.ensembles},       {"steps", v.steps},
                     {"record_every", v.record_every}, {"compare_gibbs", v.compare_gibbs},
                     {"ed_ratio_max", v.ed_ratio_max}, {"fe_rel_tol", v.fe_rel_tol},
                     {"p_th", optional_json(v.p_th)}};
  doc["perf"] = {{"presets", cfg.perf.presets}, {"hardware_file", cfg.perf.hardware_file}};
  return doc.dump(2) + "\n";
}

std::uint64_t task_seed(std::uint64_t master, std::uint64_t family, std::uint64_t index) {
  return stream_seed(stream_seed(master, family), index);
}

BuiltProblem build_problem(const ExperimentConfig& cfg) {
  switch (cfg.problem) {
    case ProblemKind::Sk:
      return {sk_random(cfg.sk.n_spins, cfg.sk.instance_seed, cfg.sk.beta), std::nullopt};
    case ProblemKind::Image: {
      auto lattice =
          lattice_from_image(load_bitmap(cfg.image), LatticeSpec{cfg.image.rows, cfg.image.cols, cfg.image.wrap});
      auto net = lattice.network;
      return {std::move(net), std::move(lattice)};
    }
    case ProblemKind::Trotter:
      return {trotter_map(cfg.quantum.map), std::nullopt};
    case ProblemKind::File:
      return {load_network(cfg.network_file), std::nullopt};
  }
  throw ConfigError("unknown problem kind");
}

// --- validate-sk --------------------------------------------------------------

namespace {

// Configuration index of every ensemble member at each record time.
std::vector<std::vector<std::uint64_t>> ensemble_indices(const CouplingNetwork& net, const ExperimentConfig& cfg,
                                                         UpdateMode mode, std::uint64_t family,
                                                         const std::vector<std::uint64_t>& times) {
  const std::size_t ensembles = cfg.validate.ensembles;
  std::vector<std::vector<std::uint64_t>> at(times.size(), std::vector<std::uint64_t>(ensembles));
  const auto coloring = mode == UpdateMode::Checkerboard ? two_coloring(net) : std::nullopt;
  fan_out(ensembles, cfg.threads, [&](std::size_t e) {
    Sampler sampler(net, params_for(cfg, cfg.params.s0, task_seed(cfg.master_seed, family, e)), mode, coloring);
    std::uint64_t now = 0;
    for (std::size_t t = 0; t < times.size(); ++t) {
      sampler.run(times[t] - now);
      now = times[t];
      at[t][e] = sampler.state().index();
    }
  });
  return at;
}

double estimate_or_nan(std::span<const SpinState> samples, const CouplingNetwork& net, std::optional<double> p_th) {
  try {
    return free_energy_from_samples(samples, net, p_th);
  } catch (const EstimateError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

SkValidation run_validate_sk(const ExperimentConfig& cfg) {
  cfg.check();
  const auto net = build_problem(cfg).network;
  if (net.size() > kMaxEnumerationSpins) throw ConfigError("validate-sk needs N <= 24 for exact enumeration");
  SkValidation v;
  for (std::uint64_t t = 0; t < cfg.validate.steps; t += cfg.validate.record_every) v.times.push_back(t);
  v.times.push_back(cfg.validate.steps);

  const auto exact = boltzmann_exact(net);
  v.fe_exact = free_energy_exact(net);
  const auto summarize = [&](const std::vector<std::vector<std::uint64_t>>& idx, std::vector<double>& ed,
                             std::vector<double>& fe) {
    for (const auto& row : idx) {
      std::vector<SpinState> samples;
      samples.reserve(row.size());
      for (auto k : row) samples.push_back(SpinState::from_index(k, net.size()));
      ed.push_back(euclidean_distance(empirical_distribution(samples), exact));
      fe.push_back(estimate_or_nan(samples, net, cfg.validate.p_th));
    }
  };
  summarize(ensemble_indices(net, cfg, cfg.mode, kFamilyEnsembleAuto, v.times), v.ed_autonomous, v.fe_autonomous);
  if (cfg.validate.compare_gibbs) {
    summarize(ensemble_indices(net, cfg, UpdateMode::Gibbs, kFamilyEnsembleGibbs, v.times), v.ed_gibbs, v.fe_gibbs);
    v.ed_ratio = v.ed_autonomous.back() / v.ed_gibbs.back();
  }
  v.fe_rel_error = std::abs(v.fe_autonomous.back() - v.fe_exact) / std::abs(v.fe_exact);
  const bool ed_ok = !cfg.validate.compare_gibbs || v.ed_ratio <= cfg.validate.ed_ratio_max;
  v.pass = ed_ok && std::isfinite(v.fe_rel_error) && v.fe_rel_error <= cfg.validate.fe_rel_tol;
  return v;
}

std::string sk_validation_csv(const SkValidation& v) {
  std::string out = "t,ed_autonomous,ed_gibbs,fe_autonomous,fe_gibbs,fe_exact\n";
  for (std::size_t k = 0; k < v.times.size(); ++k) {
    const double edg = k < v.ed_gibbs.size() ? v.ed_gibbs[k] : std::numeric_limits<double>::quiet_NaN();
    const double feg = k < v.fe_gibbs.size() ? v.fe_gibbs[k] : std::numeric_limits<double>::quiet_NaN();
    out += fmt::format("{},{},{},{},{},{}\n", v.times[k], num(v.ed_autonomous[k]), num(edg), num(v.fe_autonomous[k]),
                       num(feg), num(v.fe_exact));
  }
  return out;
}

// --- quantum ------------------------------------------------------------------

std::vector<QuantumPoint> run_quantum(const ExperimentConfig& cfg) {
  cfg.check();
  const auto s0s = cfg.s0_sweep();
  const auto& ratios = cfg.quantum.gamma_ratios;
  std::vector<QuantumPoint> points(s0s.size() * ratios.size());
  const int inner = inner_threads(points.size(), cfg.threads);
  fan_out(points.size(), cfg.threads, [&](std::size_t task) {
    QuantumPoint& pt = points[task];
    pt.s0 = s0s[task / ratios.size()];
    pt.gamma_ratio = ratios[task % ratios.size()];
    TrotterMapping map = cfg.quantum.map;
    map.gamma_x = pt.gamma_ratio * map.j_coupling;
    pt.gamma_x = map.gamma_x;
    pt.j_perp = map.j_perp();
    const auto net = trotter_map(map);
    AnnealOptions opts;
    opts.coloring = coloring_for(cfg, net);
    opts.threads = inner;
    const auto samples = sample_run(net, params_for(cfg, pt.s0, task_seed(cfg.master_seed, kFamilyQuantum, task)),
                                    cfg.mode, cfg.sampling, opts);
    pt.mz = replica_observables(samples, map, cfg.quantum.translation_average).mz_avg;
    for (const auto& s : samples) pt.sample_mz.push_back(s.magnetization());
    if (map.m_spins <= kMaxExactChain) {
      pt.mz_exact = tfim_exact(map.m_spins, map.j_coupling, map.gamma_x, map.gamma_z, map.beta).mz_avg;
    }
  });
  return points;
}

std::string quantum_csv(const std::vector<QuantumPoint>& points) {
  std::string out = "s0,gamma_ratio,gamma_x,j_perp,mz,mz_exact,deviation\n";
  for (const auto& p : points) {
    const double dev = p.mz_exact ? p.mz - *p.mz_exact : std::numeric_limits<double>::quiet_NaN();
    out += fmt::format("{},{},{},{},{},{},{}\n", num(p.s0), num(p.gamma_ratio), num(p.gamma_x), num(p.j_perp),
                       num(p.mz), p.mz_exact ? num(*p.mz_exact) : "", num(dev));
  }
  return out;
}

std::string quantum_samples_csv(const std::vector<QuantumPoint>& points) {
  std::string out = "s0,gamma_ratio,sample,mz,error\n";
  for (const auto& p : points) {
    for (std::size_t k = 0; k < p.sample_mz.size(); ++k) {
      const double err = p.mz_exact ? p.sample_mz[k] - *p.mz_exact : std::numeric_limits<double>::quiet_NaN();
      out += fmt::format("{},{},{},{},{}\n", num(p.s0), num(p.gamma_ratio), k, num(p.sample_mz[k]), num(err));
    }
  }
  return out;
}

std::vector<CorrelationCurve> run_quantum_corr(const ExperimentConfig& cfg) {
  cfg.check();
  const auto s0s = cfg.s0_sweep();
  const auto& map = cfg.quantum.map;
  const auto net = trotter_map(map);
  std::vector<double> exact;
  if (map.m_spins <= kMaxExactChain) {
    exact = tfim_exact(map.m_spins, map.j_coupling, map.gamma_x, map.gamma_z, map.beta).correlations;
  }
  std::vector<CorrelationCurve> curves(s0s.size());
  const int inner = inner_threads(curves.size(), cfg.threads);
  const auto coloring = coloring_for(cfg, net);
  fan_out(curves.size(), cfg.threads, [&](std::size_t task) {
    AnnealOptions opts;
    opts.coloring = coloring;
    opts.threads = inner;
    const auto samples = sample_run(
        net, params_for(cfg, s0s[task], task_seed(cfg.master_seed, kFamilyCorrelation, task)), cfg.mode,
        cfg.sampling, opts);
    const auto obs = replica_observables(samples, map, cfg.quantum.translation_average);
    curves[task] = {s0s[task], obs.correlations, exact, obs.mz_avg};
  });
  return curves;
}

std::string correlation_csv(const std::vector<CorrelationCurve>& curves) {
  std::string out = "s0,L,correlation,exact\n";
  for (const auto& c : curves) {
    for (std::size_t l = 0; l < c.correlations.size(); ++l) {
      out += fmt::format("{},{},{},{}\n", num(c.s0), l, num(c.correlations[l]),
                         l < c.exact.size() ? num(c.exact[l]) : "");
    }
  }
  return out;
}

// --- anneal -------------------------------------------------------------------

AnnealSweep run_anneal_sweep(const ExperimentConfig& cfg) {
  cfg.check();
  if (cfg.problem != ProblemKind::Image) throw ConfigError("anneal needs an image problem");
  auto built = build_problem(cfg);
  AnnealSweep sweep{std::move(*built.lattice), {}};
  const auto& lattice = sweep.problem;
  const auto s0s = cfg.s0_sweep();
  sweep.outcomes.resize(s0s.size() * cfg.runs);
  const int inner = inner_threads(sweep.outcomes.size(), cfg.threads);
  SpinState inverse = lattice.target;
  for (std::size_t i = 0; i < inverse.size(); ++i) inverse.flip(i);
  fan_out(sweep.outcomes.size(), cfg.threads, [&](std::size_t task) {
    AnnealOutcome& out = sweep.outcomes[task];
    out.s0 = s0s[task / cfg.runs];
    out.run = task % cfg.runs;
    out.seed = task_seed(cfg.master_seed, kFamilyAnneal, out.run);
    AnnealOptions opts;
    if (cfg.mode == UpdateMode::Checkerboard) opts.coloring = lattice.coloring;
    opts.snapshots = cfg.snapshots;
    opts.threads = inner;
    out.trajectory = run_anneal(lattice.network, cfg.schedule, params_for(cfg, out.s0, out.seed), cfg.mode, opts);
    out.final_energy = energy(lattice.network, out.trajectory.final_state);
    out.ground_energy = lattice.ground_energy;
    out.reached_ground = out.final_energy <= lattice.ground_energy + 1e-9 ||
                         out.trajectory.final_state == lattice.target || out.trajectory.final_state == inverse;
  });
  return sweep;
}

std::string anneal_summary_csv(const AnnealSweep& sweep) {
  std::string out = "s0,run,seed,final_energy,ground_energy,reached_ground\n";
  for (const auto& o : sweep.outcomes) {
    out += fmt::format("{},{},{},{},{},{}\n", num(o.s0), o.run, o.seed, num(o.final_energy), num(o.ground_energy),
                       o.reached_ground ? 1 : 0);
  }
  return out;
}

// --- perf ---------------------------------------------------------------------

std::vector<PerfReport> run_perf(const ExperimentConfig& cfg) {
  std::vector<PerfReport> reports;
  try {
    for (const auto& name : cfg.perf.presets) reports.push_back(model_report(preset(name)));
    if (!cfg.perf.hardware_file.empty()) {
      for (const auto& hw : load_hardware_file(cfg.perf.hardware_file)) reports.push_back(model_report(hw));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("hardware file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return reports;
}

// --- driver -------------------------------------------------------------------

int run_experiment(const ExperimentConfig& cfg, const std::string& config_text, std::string* log) {
  cfg.check();
  namespace fs = std::filesystem;
  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  write_file(dir / "config.json", config_text);
  std::string text;
  int status = kExitOk;

  switch (cfg.kind) {
    case ExperimentKind::Sample: {
      auto built = build_problem(cfg);
      const auto& net = built.network;
      AnnealOptions opts;
      if (cfg.mode == UpdateMode::Checkerboard) {
        opts.coloring = built.lattice ? std::optional(built.lattice->coloring) : coloring_for(cfg, net);
      }
      opts.threads = cfg.threads;
      StepStats stats;
      const auto samples = sample_run(net, params_for(cfg, cfg.params.s0, task_seed(cfg.master_seed, kFamilySample, 0)),
                                      cfg.mode, cfg.sampling, opts, &stats);
      std::string csv = "sample,energy,magnetization,spins\n";
      for (std::size_t k = 0; k < samples.size(); ++k) {
        csv += fmt::format("{},{},{},{}\n", k, num(energy(net, samples[k])), num(samples[k].magnetization()),
                           spin_string(samples[k]));
      }
      write_file(dir / "samples.csv", csv);
      write_file(dir / "network.json", network_to_json(net));
      json summary = {{"n_spins", net.size()},
                      {"samples", samples.size()},
                      {"steps", stats.steps},
                      {"realized_flips", stats.realized_flips},
                      {"attempts", stats.attempts},
                      {"attempt_equivalent", stats.attempt_equivalent}};
      if (net.size() <= 20 && !samples.empty()) {
        const auto exact = boltzmann_exact(net);
        const auto empirical = empirical_distribution(samples);
        summary["ed_to_exact"] = euclidean_distance(empirical, exact);
        summary["fe_exact"] = free_energy_exact(net);
        const double fe = estimate_or_nan(samples, net, std::nullopt);
        summary["fe_estimate"] = std::isfinite(fe) ? json(fe) : json(nullptr);
        write_file(dir / "distribution_exact.csv", distribution_csv(exact));
        write_file(dir / "distribution_empirical.csv", distribution_csv(empirical));
        text += fmt::format("ED to exact: {:.4g}\n", summary["ed_to_exact"].get<double>());
      }
      write_file(dir / "summary.json", summary.dump(2) + "\n");
      text += fmt::format("{} samples of {} spins written\n", samples.size(), net.size());
      break;
    }
    case ExperimentKind::Anneal: {
      const auto sweep = run_anneal_sweep(cfg);
      const auto& lat = sweep.problem;
      write_file(dir / "summary.csv", anneal_summary_csv(sweep));
      write_file(dir / "target.pgm", state_pgm(lat.target, cfg.image.rows, cfg.image.cols));
      const auto s0s = cfg.s0_sweep();
      json per_s0 = json::array();
      for (std::size_t k = 0; k < s0s.size(); ++k) {
        double sum = 0.0;
        std::size_t hits = 0;
        for (std::size_t r = 0; r < cfg.runs; ++r) {
          const auto& o = sweep.outcomes[k * cfg.runs + r];
          const std::string stem = fmt::format("s{}_run{}", k, r);
          write_file(dir / ("trajectory_" + stem + ".csv"), trajectory_csv(o.trajectory));
          write_file(dir / ("final_" + stem + ".pgm"), state_pgm(o.trajectory.final_state, cfg.image.rows, cfg.image.cols));
          if (cfg.snapshots) {
            for (const auto& st : o.trajectory.stages) {
              write_file(dir / fmt::format("snap_{}_stage{:02}.pgm", stem, st.stage),
                         state_pgm(*st.snapshot, cfg.image.rows, cfg.image.cols));
            }
          }
          sum += o.final_energy;
          hits += o.reached_ground ? 1 : 0;
        }
        const double mean = sum / static_cast<double>(cfg.runs);
        per_s0.push_back({{"s0", s0s[k]}, {"mean_final_energy", mean}, {"ground_state_runs", hits}});
        text += fmt::format("s0 = {:.4g}: mean final energy {:.2f} (ground {}), ground state in {}/{} runs\n", s0s[k],
                            mean, lat.ground_energy, hits, cfg.runs);
      }
      json summary = {{"ground_energy", lat.ground_energy}, {"n_spins", lat.network.size()}, {"by_s0", per_s0}};
      write_file(dir / "summary.json", summary.dump(2) + "\n");
      break;
    }
    case ExperimentKind::Quantum: {
      const auto points = run_quantum(cfg);
      write_file(dir / "magnetization.csv", quantum_csv(points));
      write_file(dir / "samples.csv", quantum_samples_csv(points));
      json summary = json::array();
      for (const auto& p : points) {
        const double dev = p.mz_exact ? std::abs(p.mz - *p.mz_exact) : std::numeric_limits<double>::quiet_NaN();
        text += fmt::format("s0 = {:.4g}  Gx/J = {:<5g} <mz> = {:.4f}  exact = {}\n", p.s0, p.gamma_ratio, p.mz,
                            p.mz_exact ? fmt::format("{:.4f}", *p.mz_exact) : "-");
        if (cfg.quantum.tolerance && p.mz_exact && dev > *cfg.quantum.tolerance) status = kExitTolerance;
        summary.push_back({{"s0", p.s0}, {"gamma_ratio", p.gamma_ratio}, {"mz", p.mz},
                           {"mz_exact", p.mz_exact ? json(*p.mz_exact) : json(nullptr)}});
      }
      write_file(dir / "summary.json", summary.dump(2) + "\n");
      break;
    }
    case ExperimentKind::QuantumCorr: {
      const auto curves = run_quantum_corr(cfg);
      write_file(dir / "correlations.csv", correlation_csv(curves));
      for (const auto& c : curves) {
        double worst = 0.0;
        for (std::size_t l = 0; l < c.exact.size(); ++l) worst = std::max(worst, std::abs(c.correlations[l] - c.exact[l]));
        text += fmt::format("s0 = {:.4g}: <mz> = {:.4f}", c.s0, c.mz);
        if (!c.exact.empty()) text += fmt::format(", max |corr - exact| = {:.4f}", worst);
        text += '\n';
        if (cfg.quantum.tolerance && !c.exact.empty() && worst > *cfg.quantum.tolerance) status = kExitTolerance;
      }
      break;
    }
    case ExperimentKind::Perf: {
      const auto reports = run_perf(cfg);
      text += reports_table(reports);
      write_file(dir / "perf.txt", reports_table(reports));
      write_file(dir / "perf.json", reports_json(reports) + "\n");
      break;
    }
    case ExperimentKind::ValidateSk: {
      const auto v = run_validate_sk(cfg);
      write_file(dir / "validation.csv", sk_validation_csv(v));
      json summary = {{"fe_exact", v.fe_exact},
                      {"fe_autonomous", std::isfinite(v.fe_autonomous.back()) ? json(v.fe_autonomous.back()) : json()},
                      {"fe_rel_error", std::isfinite(v.fe_rel_error) ? json(v.fe_rel_error) : json()},
                      {"ed_autonomous", v.ed_autonomous.back()},
                      {"pass", v.pass}};
      if (!v.ed_gibbs.empty()) {
        summary["ed_gibbs"] = v.ed_gibbs.back();
        summary["ed_ratio"] = v.ed_ratio;
      }
      write_file(dir / "summary.json", summary.dump(2) + "\n");
      text += fmt::format("final ED autonomous {:.4f}", v.ed_autonomous.back());
      if (!v.ed_gibbs.empty()) text += fmt::format(", Gibbs {:.4f} (ratio {:.3f})", v.ed_gibbs.back(), v.ed_ratio);
      text += fmt::format("\nFE estimate {:.5f} vs exact {:.5f} (relative error {:.4f})\n", v.fe_autonomous.back(),
                          v.fe_exact, v.fe_rel_error);
      text += v.pass ? "validation passed\n" : "validation FAILED\n";
      if (!v.pass) status = kExitTolerance;
      break;
    }
  }
  if (log) *log += text;
  return status;
}

}  // namespace pbit
