#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pbit/anneal.hpp"
#include "pbit/dynamics.hpp"
#include "pbit/network.hpp"
#include "pbit/oracles.hpp"

namespace support {

// Dense reference implementations, written without the CSR structure.

inline std::vector<std::vector<double>> dense_weights(const pbit::CouplingNetwork& net) {
  std::vector<std::vector<double>> w(net.size(), std::vector<double>(net.size(), 0.0));
  for (const auto& b : net.bonds()) {
    w[b.i][b.j] = b.w;
    w[b.j][b.i] = b.w;
  }
  return w;
}

inline double naive_energy(const pbit::CouplingNetwork& net, const pbit::SpinState& s) {
  const auto w = dense_weights(net);
  double e = 0.0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = 0; j < net.size(); ++j) {
      if (i != j) e -= 0.5 * w[i][j] * s[i] * s[j];
    }
    e -= net.bias(i) * s[i];
  }
  return e;
}

/// Random network with roughly `density` of all pairs coupled.
inline pbit::CouplingNetwork random_network(std::size_t n, double density, std::uint64_t seed, double beta = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::bernoulli_distribution keep(density);
  std::vector<pbit::Bond> bonds;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (keep(rng)) bonds.push_back({i, j, u(rng)});
    }
  }
  std::vector<double> h(n);
  for (auto& x : h) x = u(rng);
  return pbit::CouplingNetwork(n, bonds, h, beta);
}

inline pbit::SpinState random_state(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int8_t> s(n);
  for (auto& x : s) x = (rng() & 1u) ? 1 : -1;
  return pbit::SpinState(s);
}

inline std::vector<pbit::SpinState> sample(const pbit::CouplingNetwork& net, pbit::UpdateMode mode, double s0,
                                           std::uint64_t seed, std::size_t n_samples, std::uint64_t spacing,
                                           std::optional<pbit::TwoColoring> coloring = std::nullopt,
                                           std::uint64_t burn_in = 1000) {
  pbit::AutonomousParams p;
  p.s0 = s0;
  p.master_seed = seed;
  pbit::AnnealOptions opts;
  opts.coloring = std::move(coloring);
  return pbit::sample_run(net, p, mode, {burn_in, n_samples, spacing}, opts);
}

inline double ed_to_exact(const pbit::CouplingNetwork& net, std::span<const pbit::SpinState> samples) {
  return pbit::euclidean_distance(pbit::empirical_distribution(samples), pbit::boltzmann_exact(net));
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("pbit_tests_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace support
