#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pbit/lut.hpp"
#include "pbit/network.hpp"
#include "pbit/prng.hpp"

namespace pbit {

/// Knobs of the autonomous p-bit model: zero-input flip scale s0, LUT
/// precision, PRNG flavour and the master seed every stream derives from.
struct AutonomousParams {
  double s0 = 1.0 / 12.0;
  int input_bits = 16;
  int output_bits = 24;
  double u_max = 8.0;
  PrngKind prng = PrngKind::Xoshiro128Plus;
  std::uint64_t master_seed = 1;

  void validate() const;
  ActivationLut lut(double beta) const { return lut_build(s0, beta, input_bits, output_bits, u_max); }

  bool operator==(const AutonomousParams&) const = default;
};

/// Per-run flip accounting. `realized_flips` counts actual sign changes;
/// `attempts` counts p-bit update attempts (N per autonomous step or sweep);
/// `attempt_equivalent` sums s_i over p-bits and steps in autonomous mode.
struct StepStats {
  std::uint64_t steps = 0;
  std::uint64_t realized_flips = 0;
  std::uint64_t attempts = 0;
  double attempt_equivalent = 0.0;

  StepStats& operator+=(const StepStats& o);
};

/// Proper two-coloring of the interaction graph (color[i] is 0 or 1).
struct TwoColoring {
  std::vector<std::uint8_t> color;
};

/// Throws std::invalid_argument when `coloring` has the wrong length, a value
/// other than 0/1, or a bond inside one color class.
void validate_coloring(const CouplingNetwork& net, const TwoColoring& coloring);

/// Throws std::invalid_argument unless `order` is a permutation of [0, n).
void validate_permutation(std::span<const std::size_t> order, std::size_t n);

// --- single-step operations -------------------------------------------------

/// One synapse delay of the autonomous model. Every p-bit reads the input
/// state: m_i' = m_i * sgn(lut(m_i * field_i) - r_i). The LUT carries s0 and beta.
SpinState autonomous_step(const CouplingNetwork& net, const SpinState& state, const ActivationLut& lut,
                          std::span<PrngStream> streams, StepStats* stats = nullptr, int threads = 1);

/// Same, building the LUT from `params` at the network's beta.
SpinState autonomous_step(const CouplingNetwork& net, const SpinState& state, const AutonomousParams& params,
                          std::span<PrngStream> streams, StepStats* stats = nullptr, int threads = 1);

/// Sequential Gibbs sweep: p-bits in `order` see every earlier update.
SpinState gibbs_sweep(const CouplingNetwork& net, const SpinState& state, std::span<const std::size_t> order,
                      PrngStream& stream, StepStats* stats = nullptr);

/// Color class 0 in parallel, then color class 1, each with Gibbs statistics.
SpinState checkerboard_sweep(const CouplingNetwork& net, const SpinState& state, const TwoColoring& coloring,
                             std::span<PrngStream> streams, StepStats* stats = nullptr, int threads = 1);

// --- in-place kernels -------------------------------------------------------

void autonomous_step_into(const CouplingNetwork& net, const ActivationLut& lut, std::span<const std::int8_t> in,
                          std::span<std::int8_t> out, std::span<PrngStream> streams, StepStats* stats,
                          int threads);

void gibbs_sweep_inplace(const CouplingNetwork& net, double beta, std::span<std::int8_t> spins,
                         std::span<const std::size_t> order, PrngStream& stream, StepStats* stats);

void checkerboard_sweep_inplace(const CouplingNetwork& net, double beta, std::span<std::int8_t> spins,
                                std::span<const std::uint32_t> class0, std::span<const std::uint32_t> class1,
                                std::span<PrngStream> streams, StepStats* stats, int threads);

// --- long runs --------------------------------------------------------------

enum class UpdateMode { Autonomous, Gibbs, Checkerboard };

std::string to_string(UpdateMode mode);
UpdateMode update_mode_from_string(const std::string& name);

/// Owns the mutable side of a run: spin buffers, PRNG streams and the
/// current activation table. The network must outlive the sampler.
///
/// Streams: p-bit i draws from stream (master_seed, i); the sequential Gibbs
/// stream and the initial-state stream use reserved indices. One "step" is one
/// autonomous synapse delay, one Gibbs sweep or one checkerboard sweep.
class Sampler {
 public:
  Sampler(const CouplingNetwork& net, const AutonomousParams& params, UpdateMode mode,
          std::optional<TwoColoring> coloring = std::nullopt, int threads = 1);

  /// Draws a uniformly random initial state from the init stream.
  void randomize();
  void set_state(const SpinState& state);
  const SpinState& state() const { return state_; }

  /// Changes the inverse temperature; rebuilds the activation table.
  void set_beta(double beta);
  double beta() const { return beta_; }

  void step(StepStats* stats = nullptr) { run(1, stats); }
  void run(std::uint64_t steps, StepStats* stats = nullptr);

  UpdateMode mode() const { return mode_; }
  const AutonomousParams& params() const { return params_; }
  const ActivationLut& lut() const { return lut_; }

 private:
  const CouplingNetwork* net_;
  AutonomousParams params_;
  UpdateMode mode_;
  int threads_;
  double beta_;
  ActivationLut lut_;
  SpinState state_;
  SpinState scratch_;
  std::vector<PrngStream> streams_;
  PrngStream sequential_;
  PrngStream init_;
  std::vector<std::size_t> order_;
  std::vector<std::uint32_t> class0_;
  std::vector<std::uint32_t> class1_;
};

}  // namespace pbit
