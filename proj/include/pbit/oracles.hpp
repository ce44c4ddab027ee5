#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pbit/network.hpp"
#include "pbit/problems.hpp"

namespace pbit {

inline constexpr std::size_t kMaxEnumerationSpins = 24;

/// Probability of each of the 2^N configurations (little-endian index).
class DistributionTable {
 public:
  DistributionTable() = default;
  /// Takes nonnegative weights and normalizes them.
  DistributionTable(std::size_t n_spins, std::vector<double> weights);

  std::size_t n_spins() const { return n_spins_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t k) const { return probs_[k]; }
  std::span<const double> probs() const { return probs_; }

 private:
  std::size_t n_spins_ = 0;
  std::vector<double> probs_;
};

/// Sum in a fixed pairwise tree order so the result does not depend on how
/// the caller chunked the work.
double pairwise_sum(std::span<const double> values);

/// Exact Boltzmann law P_k ~ exp(-beta E_k), N <= 24.
DistributionTable boltzmann_exact(const CouplingNetwork& net);

/// Energies of all 2^N configurations in index order (Gray-code enumeration).
std::vector<double> enumerate_energies(const CouplingNetwork& net);

double euclidean_distance(const DistributionTable& p, const DistributionTable& q);
double euclidean_distance(std::span<const double> p, std::span<const double> q);

DistributionTable empirical_distribution(std::span<const SpinState> samples);

/// -ln(sum_k exp(-beta E_k)) / beta with log-sum-exp stabilization.
double free_energy_exact(const CouplingNetwork& net);

/// Importance-sampling estimate: for each configuration with empirical
/// probability P_i > p_th, Z_i = exp(-beta E_i) / P_i and FE_i = -ln(Z_i) / beta;
/// returns the mean FE_i. `p_th` defaults to 4 / samples.size().
/// Throws EstimateError when no configuration clears the threshold.
double free_energy_from_samples(std::span<const SpinState> samples, const CouplingNetwork& net,
                                std::optional<double> p_th = std::nullopt);

/// Diagonal observables of a periodic transverse-field chain.
struct QuantumObservables {
  double mz_avg = 0.0;
  /// <s^z_1 s^z_{1+L}> for L = 0 .. M-1.
  std::vector<double> correlations;
  /// Diagonal of rho / tr(rho) in the s^z basis; empty for sampled estimates.
  std::vector<double> diag_probs;
};

inline constexpr std::size_t kMaxExactChain = 12;

/// Exact thermal observables of
///   H = -(sum_i J s^z_i s^z_{i+1} + gx sum_i s^x_i + gz sum_i s^z_i)
/// on a periodic chain of M sites (2 <= M <= 12) by dense diagonalization.
QuantumObservables tfim_exact(std::size_t m, double j, double gx, double gz, double beta);

/// Replica-lattice estimates: mz averaged over samples, sites and replicas;
/// correlation(L) averaged over samples and replicas of m_{0,k} m_{L,k}. With
/// `translation_average` the reference site also runs over all M sites.
QuantumObservables replica_observables(std::span<const SpinState> samples, const TrotterMapping& map,
                                       bool translation_average = false);

/// CSV "index,value" rows.
std::string distribution_csv(const DistributionTable& table);

}  // namespace pbit
