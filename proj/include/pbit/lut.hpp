#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pbit {

/// Fixed-point table of stay probabilities exp(-s0 * exp(-beta * u)), indexed by
/// the quantized aligned field u = m_i * (sum_j W_ij m_j + h_i).
///
/// u is quantized as a signed fixed-point value q = trunc(u / delta) with
/// delta = u_max / 2^(input_bits - 1), clamped to the two's-complement range
/// [-2^(input_bits-1), 2^(input_bits-1) - 1]. So u = 0 lands exactly on the
/// q = 0 entry and |u| beyond u_max saturates at the boundary entries. Entries
/// hold round-to-nearest values with `output_bits` fractional bits, clamped to
/// [1, 2^output_bits] so every stored probability lies in (0, 1].
///
/// beta lives inside the table: annealing rebuilds the table instead of
/// touching the weights.
class ActivationLut {
 public:
  ActivationLut() = default;
  ActivationLut(double s0, double beta, int input_bits, int output_bits, double u_max);

  double s0() const { return s0_; }
  double beta() const { return beta_; }
  int input_bits() const { return input_bits_; }
  int output_bits() const { return output_bits_; }
  double u_max() const { return u_max_; }
  double delta() const { return delta_; }
  std::size_t size() const { return entries_.size(); }

  /// Table index for an aligned field value.
  std::size_t index(double u) const {
    // The bounds are integers, so clamping before the truncating conversion
    // gives the same index as truncating first.
    double x = u * inv_delta_;
    x = x < q_min_ ? q_min_ : x;
    x = x > q_max_ ? q_max_ : x;
    return static_cast<std::size_t>(static_cast<long>(x) - static_cast<long>(q_min_));
  }

  /// Stored entry rescaled to 24 fractional bits, ready to compare with a
  /// 24-bit PRNG draw: the p-bit keeps its value iff draw < threshold.
  std::uint32_t threshold(std::size_t idx) const { return thresholds_[idx]; }
  std::uint32_t entry(std::size_t idx) const { return entries_[idx]; }
  double stay_probability(std::size_t idx) const { return std::ldexp(entries_[idx], -output_bits_); }
  /// Neuron/synapse ratio s = s0 * exp(-beta * u) at the quantized input.
  double rate(std::size_t idx) const { return rates_[idx]; }
  double u_at(std::size_t idx) const { return (static_cast<double>(idx) + q_min_) * delta_; }

  const std::uint32_t* threshold_data() const { return thresholds_.data(); }
  const double* rate_data() const { return rates_.data(); }

 private:
  double s0_ = 1.0;
  double beta_ = 1.0;
  int input_bits_ = 16;
  int output_bits_ = 24;
  double u_max_ = 8.0;
  double delta_ = 0.0;
  double inv_delta_ = 0.0;
  double q_min_ = 0.0;
  double q_max_ = 0.0;
  std::vector<std::uint32_t> entries_;
  std::vector<std::uint32_t> thresholds_;
  std::vector<double> rates_;
};

ActivationLut lut_build(double s0, double beta, int input_bits = 16, int output_bits = 24, double u_max = 8.0);

}  // namespace pbit
