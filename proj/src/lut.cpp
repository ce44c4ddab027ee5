#include "pbit/lut.hpp"

#include <stdexcept>
#include <string>

namespace pbit {

ActivationLut::ActivationLut(double s0, double beta, int input_bits, int output_bits, double u_max)
    : s0_(s0), beta_(beta), input_bits_(input_bits), output_bits_(output_bits), u_max_(u_max) {
  if (!(s0 > 0.0 && s0 <= 1.0)) throw std::invalid_argument("s0 must lie in (0, 1]");
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw std::invalid_argument("LUT beta must be finite and >= 0");
  if (input_bits < 2 || input_bits > 24) {
    throw std::invalid_argument("input_bits must lie in [2, 24], got " + std::to_string(input_bits));
  }
  if (output_bits < 2 || output_bits > 24) {
    throw std::invalid_argument("output_bits must lie in [2, 24], got " + std::to_string(output_bits));
  }
  if (!(u_max > 0.0) || !std::isfinite(u_max)) throw std::invalid_argument("u_max must be positive");

  const long half = 1L << (input_bits - 1);
  q_min_ = static_cast<double>(-half);
  q_max_ = static_cast<double>(half - 1);
  delta_ = u_max / static_cast<double>(half);
  inv_delta_ = 1.0 / delta_;

  const std::size_t count = std::size_t{1} << input_bits;
  const double one = std::ldexp(1.0, output_bits);
  const int shift = 24 - output_bits;
  entries_.resize(count);
  thresholds_.resize(count);
  rates_.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double u = u_at(k);
    const double s = s0 * std::exp(-beta * u);
    rates_[k] = s;
    double v = std::nearbyint(std::exp(-s) * one);
    if (v < 1.0) v = 1.0;
    if (v > one) v = one;
    entries_[k] = static_cast<std::uint32_t>(v);
    thresholds_[k] = entries_[k] << shift;
  }
}

ActivationLut lut_build(double s0, double beta, int input_bits, int output_bits, double u_max) {
  return ActivationLut(s0, beta, input_bits, output_bits, u_max);
}

}  // namespace pbit
