#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pbit {

/// Vector of N binary spins, each exactly -1 or +1.
///
/// Configuration indices are little-endian: spin i maps to bit i, and a set
/// bit means +1. The same convention is used by every distribution table and
/// serialized file.
class SpinState {
 public:
  SpinState() = default;
  explicit SpinState(std::size_t n, std::int8_t value = 1);
  explicit SpinState(std::vector<std::int8_t> spins);

  static SpinState from_index(std::uint64_t config, std::size_t n);

  std::uint64_t index() const;
  std::size_t size() const { return spins_.size(); }
  std::int8_t operator[](std::size_t i) const { return spins_[i]; }
  void set(std::size_t i, std::int8_t value);
  void flip(std::size_t i) { spins_[i] = static_cast<std::int8_t>(-spins_[i]); }

  std::span<const std::int8_t> view() const { return spins_; }
  // Raw access for update kernels. Writers must keep every element at +-1.
  std::span<std::int8_t> raw() { return spins_; }

  double magnetization() const;

  bool operator==(const SpinState&) const = default;

 private:
  std::vector<std::int8_t> spins_;
};

struct Bond {
  std::size_t i = 0;
  std::size_t j = 0;
  double w = 0.0;
};

struct Neighbor {
  std::uint32_t j;
  double w;
};

/// Symmetric sparse coupling matrix W with bias h and inverse temperature beta.
///
/// Bonds passed to the constructor are symmetrized and duplicate pairs are
/// summed, so W_ij == W_ji holds by construction. Self bonds and out of range
/// indices are rejected. Pairs whose summed weight is exactly zero are dropped.
class CouplingNetwork {
 public:
  CouplingNetwork() = default;
  CouplingNetwork(std::size_t n, std::span<const Bond> bonds, std::vector<double> bias, double beta);

  std::size_t size() const { return n_; }
  double beta() const { return beta_; }
  std::span<const double> bias() const { return bias_; }
  double bias(std::size_t i) const { return bias_[i]; }

  std::span<const Neighbor> neighbors(std::size_t i) const {
    return {adj_.data() + offsets_[i], adj_.data() + offsets_[i + 1]};
  }
  std::size_t degree(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }

  double weight(std::size_t i, std::size_t j) const;
  /// Upper-triangle bond list (i < j), sorted.
  std::vector<Bond> bonds() const;
  std::size_t bond_count() const { return adj_.size() / 2; }

  CouplingNetwork with_beta(double beta) const;

  /// Local field sum_j W_ij m_j + h_i, without the beta factor.
  double local_field(std::span<const std::int8_t> spins, std::size_t i) const {
    double acc = 0.0;
    for (const auto& nb : neighbors(i)) acc += nb.w * spins[nb.j];
    return acc + bias_[i];
  }

  bool operator==(const CouplingNetwork&) const;

  // CSR arrays for the update kernels: neighbors of i are
  // adjacency()[offsets()[i] .. offsets()[i + 1]).
  const std::size_t* offsets() const { return offsets_.data(); }
  const Neighbor* adjacency() const { return adj_.data(); }
  const double* bias_data() const { return bias_.data(); }

 private:
  std::size_t n_ = 0;
  double beta_ = 1.0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adj_;
  std::vector<double> bias_;
};

/// I_i = beta * (sum_j W_ij m_j + h_i).
std::vector<double> compute_inputs(const CouplingNetwork& net, const SpinState& state);

/// E = -1/2 sum_{i != j} W_ij m_i m_j - sum_i h_i m_i.
double energy(const CouplingNetwork& net, const SpinState& state);
double energy(const CouplingNetwork& net, std::span<const std::int8_t> spins);

/// Network JSON document: {"n", "beta", "weights": [[i, j, w], ...] with i < j, "bias": [...]}.
std::string network_to_json(const CouplingNetwork& net);
CouplingNetwork network_from_json(const std::string& text);
CouplingNetwork load_network(const std::string& path);
void save_network(const CouplingNetwork& net, const std::string& path);

}  // namespace pbit
