#include "pbit/oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "pbit/errors.hpp"

namespace pbit {

namespace {

void check_enumerable(std::size_t n) {
  if (n > kMaxEnumerationSpins) {
    throw std::length_error("exact enumeration limited to N <= " + std::to_string(kMaxEnumerationSpins) + ", got " +
                            std::to_string(n));
  }
}

double pairwise_rec(const double* v, std::size_t n) {
  if (n <= 8) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += v[k];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_rec(v, half) + pairwise_rec(v + half, n - half);
}

// Energy recomputed from scratch this often during Gray-code enumeration.
constexpr std::uint64_t kResyncMask = 0xFFF;

}  // namespace

double pairwise_sum(std::span<const double> values) { return pairwise_rec(values.data(), values.size()); }

DistributionTable::DistributionTable(std::size_t n_spins, std::vector<double> weights)
    : n_spins_(n_spins), probs_(std::move(weights)) {
  check_enumerable(n_spins);
  require_same_size(probs_.size(), std::size_t{1} << n_spins, "distribution length vs 2^N");
  for (double w : probs_) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("distribution weights must be finite and >= 0");
  }
  const double total = pairwise_sum(probs_);
  if (!(total > 0.0)) throw std::invalid_argument("distribution weights sum to zero");
  for (auto& p : probs_) p /= total;
}

std::vector<double> enumerate_energies(const CouplingNetwork& net) {
  const std::size_t n = net.size();
  check_enumerable(n);
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<double> energies(count);
  std::vector<std::int8_t> spins(n, -1);
  std::vector<double> field(n);
  for (std::size_t i = 0; i < n; ++i) field[i] = net.local_field(spins, i);
  double e = energy(net, spins);
  energies[0] = e;
  for (std::uint64_t g = 1; g < count; ++g) {
    const auto i = static_cast<std::size_t>(std::countr_zero(g));
    const std::int8_t m = spins[i];
    e += 2.0 * m * field[i];
    spins[i] = static_cast<std::int8_t>(-m);
    for (const auto& nb : net.neighbors(i)) field[nb.j] -= 2.0 * m * nb.w;
    if ((g & kResyncMask) == 0) e = energy(net, spins);
    const std::uint64_t code = g ^ (g >> 1);
    energies[code] = e;
  }
  return energies;
}

DistributionTable boltzmann_exact(const CouplingNetwork& net) {
  const auto energies = enumerate_energies(net);
  const double beta = net.beta();
  const double e_min = *std::min_element(energies.begin(), energies.end());
  std::vector<double> weights(energies.size());
  for (std::size_t k = 0; k < energies.size(); ++k) weights[k] = std::exp(-beta * (energies[k] - e_min));
  return DistributionTable(net.size(), std::move(weights));
}

double free_energy_exact(const CouplingNetwork& net) {
  const auto energies = enumerate_energies(net);
  const double beta = net.beta();
  const double e_min = *std::min_element(energies.begin(), energies.end());
  std::vector<double> weights(energies.size());
  for (std::size_t k = 0; k < energies.size(); ++k) weights[k] = std::exp(-beta * (energies[k] - e_min));
  // ln Z = -beta e_min + ln sum exp(-beta (E - e_min))
  return e_min - std::log(pairwise_sum(weights)) / beta;
}

double euclidean_distance(std::span<const double> p, std::span<const double> q) {
  require_same_size(p.size(), q.size(), "distribution lengths");
  std::vector<double> sq(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double d = p[k] - q[k];
    sq[k] = d * d;
  }
  return std::sqrt(pairwise_sum(sq));
}

double euclidean_distance(const DistributionTable& p, const DistributionTable& q) {
  return euclidean_distance(p.probs(), q.probs());
}

DistributionTable empirical_distribution(std::span<const SpinState> samples) {
  if (samples.empty()) throw std::invalid_argument("empirical distribution needs at least one sample");
  const std::size_t n = samples.front().size();
  check_enumerable(n);
  std::vector<double> counts(std::size_t{1} << n, 0.0);
  for (const auto& s : samples) {
    require_same_size(s.size(), n, "sample size");
    counts[s.index()] += 1.0;
  }
  return DistributionTable(n, std::move(counts));
}

double free_energy_from_samples(std::span<const SpinState> samples, const CouplingNetwork& net,
                                std::optional<double> p_th) {
  if (samples.empty()) throw EstimateError("free energy estimate needs samples");
  if (p_th && !(*p_th > 0.0 && *p_th < 1.0)) throw std::invalid_argument("p_th must lie in (0, 1)");
  const double threshold = p_th.value_or(4.0 / static_cast<double>(samples.size()));
  if (net.size() > 64) throw std::invalid_argument("free energy estimate supports at most 64 spins");

  std::unordered_map<std::uint64_t, std::size_t> counts;
  std::unordered_map<std::uint64_t, std::size_t> first_seen;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    require_same_size(samples[s].size(), net.size(), "sample size vs network");
    const auto key = samples[s].index();
    if (counts[key]++ == 0) first_seen[key] = s;
  }
  std::vector<std::uint64_t> keys;
  for (const auto& [key, c] : counts) {
    if (static_cast<double>(c) / static_cast<double>(samples.size()) > threshold) keys.push_back(key);
  }
  if (keys.empty()) {
    throw EstimateError("no configuration exceeds p_th = " + std::to_string(threshold) +
                        "; free energy estimate undefined");
  }
  std::sort(keys.begin(), keys.end());
  const double beta = net.beta();
  std::vector<double> fe;
  fe.reserve(keys.size());
  for (auto key : keys) {
    const double p = static_cast<double>(counts[key]) / static_cast<double>(samples.size());
    const double e = energy(net, samples[first_seen[key]]);
    const double log_z = -beta * e - std::log(p);
    fe.push_back(-log_z / beta);
  }
  return pairwise_sum(fe) / static_cast<double>(fe.size());
}

QuantumObservables tfim_exact(std::size_t m, double j, double gx, double gz, double beta) {
  if (m < 2 || m > kMaxExactChain) {
    throw std::out_of_range("tfim_exact supports 2 <= M <= " + std::to_string(kMaxExactChain));
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be positive");
  const std::size_t dim = std::size_t{1} << m;
  const auto spin = [](std::size_t k, std::size_t i) { return ((k >> i) & 1u) ? 1.0 : -1.0; };

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    double diag = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      diag -= j * spin(k, i) * spin(k, (i + 1) % m);
      diag -= gz * spin(k, i);
      h(static_cast<Eigen::Index>(k ^ (std::size_t{1} << i)), static_cast<Eigen::Index>(k)) -= gx;
    }
    h(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = diag;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("TFIM diagonalization failed");
  const Eigen::VectorXd& evals = solver.eigenvalues();
  const Eigen::MatrixXd& evecs = solver.eigenvectors();
  const double e0 = evals.minCoeff();
  Eigen::VectorXd w = (-(beta) * (evals.array() - e0)).exp().matrix();
  const Eigen::VectorXd diag = evecs.array().square().matrix() * w;

  QuantumObservables obs;
  obs.diag_probs.assign(diag.data(), diag.data() + dim);
  const double z = pairwise_sum(obs.diag_probs);
  for (auto& p : obs.diag_probs) p /= z;

  std::vector<double> mz_terms(dim);
  obs.correlations.assign(m, 0.0);
  std::vector<std::vector<double>> corr_terms(m, std::vector<double>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += spin(k, i);
    mz_terms[k] = obs.diag_probs[k] * s / static_cast<double>(m);
    for (std::size_t l = 0; l < m; ++l) corr_terms[l][k] = obs.diag_probs[k] * spin(k, 0) * spin(k, l);
  }
  obs.mz_avg = pairwise_sum(mz_terms);
  for (std::size_t l = 0; l < m; ++l) obs.correlations[l] = pairwise_sum(corr_terms[l]);
  return obs;
}

QuantumObservables replica_observables(std::span<const SpinState> samples, const TrotterMapping& map,
                                       bool translation_average) {
  if (samples.empty()) throw std::invalid_argument("replica observables need samples");
  const std::size_t m = map.m_spins;
  const std::size_t n = map.n_replicas;
  QuantumObservables obs;
  obs.correlations.assign(m, 0.0);
  long long spin_sum = 0;
  std::vector<long long> corr_sum(m, 0);
  for (const auto& s : samples) {
    require_same_size(s.size(), m * n, "sample size vs M*n");
    for (auto v : s.view()) spin_sum += v;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t sites = translation_average ? m : 1;
      for (std::size_t i = 0; i < sites; ++i) {
        const int ref = s[map.spin_index(i, k)];
        for (std::size_t l = 0; l < m; ++l) corr_sum[l] += ref * s[map.spin_index((i + l) % m, k)];
      }
    }
  }
  const double count = static_cast<double>(samples.size());
  obs.mz_avg = static_cast<double>(spin_sum) / (count * static_cast<double>(m * n));
  const double pairs = count * static_cast<double>(n) * (translation_average ? static_cast<double>(m) : 1.0);
  for (std::size_t l = 0; l < m; ++l) obs.correlations[l] = static_cast<double>(corr_sum[l]) / pairs;
  return obs;
}

std::string distribution_csv(const DistributionTable& table) {
  std::ostringstream out;
  out.precision(17);
  out << "index,value\n";
  for (std::size_t k = 0; k < table.size(); ++k) out << k << ',' << table[k] << '\n';
  return out.str();
}

}  // namespace pbit
