#include "pbit/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "pbit/errors.hpp"

namespace pbit {

namespace {

// Fixed reduction granularity, independent of the worker count, so the
// floating-point attempt sums are identical for any number of threads.
constexpr std::size_t kChunk = 512;

std::size_t chunk_count(std::size_t n) { return (n + kChunk - 1) / kChunk; }

template <PrngKind Kind>
inline std::uint32_t draw24(PrngStream& stream) {
  auto& s = stream.raw_state();
  if constexpr (Kind == PrngKind::Xoshiro128Plus) {
    return PrngStream::xoshiro_next(s) >> 8;
  } else {
    PrngStream::lfsr_shift(s[0], 24);
    return s[0] >> 8;
  }
}

template <PrngKind Kind, bool TrackRates>
void autonomous_chunk(const CouplingNetwork& net, const ActivationLut& lut, const std::int8_t* in, std::int8_t* out,
                      PrngStream* streams, std::size_t begin, std::size_t end, std::uint64_t& flips,
                      double& attempt_eq) {
  const std::uint32_t* thresholds = lut.threshold_data();
  const double* rates = lut.rate_data();
  const std::size_t* offsets = net.offsets();
  const Neighbor* adj = net.adjacency();
  const double* bias = net.bias_data();
  std::uint64_t local_flips = 0;
  double local_eq = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    const std::int8_t m = in[i];
    double field = 0.0;
    for (std::size_t k = offsets[i], k_end = offsets[i + 1]; k < k_end; ++k) field += adj[k].w * in[adj[k].j];
    const double u = m * (field + bias[i]);
    const std::size_t idx = lut.index(u);
    const std::uint32_t r = draw24<Kind>(streams[i]);
    const bool stay = r < thresholds[idx];
    out[i] = stay ? m : static_cast<std::int8_t>(-m);
    local_flips += stay ? 0u : 1u;
    if constexpr (TrackRates) local_eq += rates[idx];
  }
  flips = local_flips;
  attempt_eq = local_eq;
}

template <PrngKind Kind, bool TrackRates>
void autonomous_all(const CouplingNetwork& net, const ActivationLut& lut, const std::int8_t* in, std::int8_t* out,
                    PrngStream* streams, StepStats* stats, int threads) {
  const std::size_t n = net.size();
  const std::size_t chunks = chunk_count(n);
  if (chunks == 1 || threads <= 1) {
    std::uint64_t flips_total = 0;
    double eq_total = 0.0;
    for (std::size_t c = 0; c < chunks; ++c) {
      std::uint64_t f = 0;
      double e = 0.0;
      autonomous_chunk<Kind, TrackRates>(net, lut, in, out, streams, c * kChunk, std::min(n, (c + 1) * kChunk), f,
                                         e);
      flips_total += f;
      eq_total += e;
    }
    if (stats) {
      stats->realized_flips += flips_total;
      stats->attempt_equivalent += eq_total;
    }
    return;
  }
  std::vector<std::uint64_t> flips(chunks, 0);
  std::vector<double> eq(chunks, 0.0);
  const long nchunks = static_cast<long>(chunks);
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long c = 0; c < nchunks; ++c) {
    const auto cc = static_cast<std::size_t>(c);
    autonomous_chunk<Kind, TrackRates>(net, lut, in, out, streams, cc * kChunk, std::min(n, (cc + 1) * kChunk),
                                       flips[cc], eq[cc]);
  }
  if (stats) {
    std::uint64_t flips_total = 0;
    double eq_total = 0.0;
    for (std::size_t c = 0; c < chunks; ++c) {
      flips_total += flips[c];
      eq_total += eq[c];
    }
    stats->realized_flips += flips_total;
    stats->attempt_equivalent += eq_total;
  }
}

inline std::int8_t gibbs_update(double input, std::uint32_t r24) {
  // r uniform on [-1, 1) with a 2^-23 quantum.
  const double r = static_cast<double>(r24) * 0x1p-23 - 1.0;
  return std::tanh(input) > r ? std::int8_t{1} : std::int8_t{-1};
}

template <PrngKind Kind>
std::uint64_t update_class(const CouplingNetwork& net, double beta, std::int8_t* spins,
                           std::span<const std::uint32_t> members, PrngStream* streams, int threads) {
  std::uint64_t flips = 0;
  const long count = static_cast<long>(members.size());
  const std::span<const std::int8_t> view{spins, net.size()};
#pragma omp parallel for schedule(static) num_threads(threads) reduction(+ : flips) if (threads > 1)
  for (long k = 0; k < count; ++k) {
    const std::uint32_t i = members[static_cast<std::size_t>(k)];
    const double input = beta * net.local_field(view, i);
    const std::int8_t next = gibbs_update(input, draw24<Kind>(streams[i]));
    flips += next != spins[i] ? 1u : 0u;
    spins[i] = next;
  }
  return flips;
}

}  // namespace

StepStats& StepStats::operator+=(const StepStats& o) {
  steps += o.steps;
  realized_flips += o.realized_flips;
  attempts += o.attempts;
  attempt_equivalent += o.attempt_equivalent;
  return *this;
}

void AutonomousParams::validate() const {
  if (!(s0 > 0.0 && s0 <= 1.0)) throw std::invalid_argument("s0 must lie in (0, 1]");
  if (input_bits < 2 || input_bits > 24) throw std::invalid_argument("input_bits must lie in [2, 24]");
  if (output_bits < 2 || output_bits > 24) throw std::invalid_argument("output_bits must lie in [2, 24]");
  if (!(u_max > 0.0)) throw std::invalid_argument("u_max must be positive");
}

void validate_coloring(const CouplingNetwork& net, const TwoColoring& coloring) {
  if (coloring.color.size() != net.size()) {
    throw std::invalid_argument("coloring length " + std::to_string(coloring.color.size()) + " != network size " +
                                std::to_string(net.size()));
  }
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (coloring.color[i] > 1) throw std::invalid_argument("coloring values must be 0 or 1");
    for (const auto& nb : net.neighbors(i)) {
      if (coloring.color[nb.j] == coloring.color[i]) {
        throw std::invalid_argument("coloring has an internal edge (" + std::to_string(i) + ", " +
                                    std::to_string(nb.j) + ")");
      }
    }
  }
}

void validate_permutation(std::span<const std::size_t> order, std::size_t n) {
  if (order.size() != n) throw std::invalid_argument("update order must visit every p-bit exactly once");
  std::vector<bool> seen(n, false);
  for (auto i : order) {
    if (i >= n || seen[i]) throw std::invalid_argument("update order is not a permutation");
    seen[i] = true;
  }
}

void autonomous_step_into(const CouplingNetwork& net, const ActivationLut& lut, std::span<const std::int8_t> in,
                          std::span<std::int8_t> out, std::span<PrngStream> streams, StepStats* stats,
                          int threads) {
  require_same_size(in.size(), net.size(), "spin state vs network");
  require_same_size(out.size(), net.size(), "output buffer vs network");
  require_same_size(streams.size(), net.size(), "PRNG streams vs p-bits");
  if (streams.empty()) return;
  const PrngKind kind = streams[0].kind();
  const bool track = stats != nullptr;
  if (kind == PrngKind::Xoshiro128Plus) {
    track ? autonomous_all<PrngKind::Xoshiro128Plus, true>(net, lut, in.data(), out.data(), streams.data(), stats,
                                                           threads)
          : autonomous_all<PrngKind::Xoshiro128Plus, false>(net, lut, in.data(), out.data(), streams.data(),
                                                            stats, threads);
  } else {
    track ? autonomous_all<PrngKind::Lfsr32, true>(net, lut, in.data(), out.data(), streams.data(), stats, threads)
          : autonomous_all<PrngKind::Lfsr32, false>(net, lut, in.data(), out.data(), streams.data(), stats,
                                                    threads);
  }
  if (stats) {
    stats->steps += 1;
    stats->attempts += net.size();
  }
}

SpinState autonomous_step(const CouplingNetwork& net, const SpinState& state, const ActivationLut& lut,
                          std::span<PrngStream> streams, StepStats* stats, int threads) {
  require_same_size(state.size(), net.size(), "spin state vs network");
  require_same_size(streams.size(), net.size(), "PRNG streams vs p-bits");
  for (const auto& s : streams) {
    if (s.kind() != streams[0].kind()) throw std::invalid_argument("all streams of a step must share one kind");
  }
  SpinState next = state;
  autonomous_step_into(net, lut, state.view(), next.raw(), streams, stats, threads);
  return next;
}

SpinState autonomous_step(const CouplingNetwork& net, const SpinState& state, const AutonomousParams& params,
                          std::span<PrngStream> streams, StepStats* stats, int threads) {
  params.validate();
  return autonomous_step(net, state, params.lut(net.beta()), streams, stats, threads);
}

void gibbs_sweep_inplace(const CouplingNetwork& net, double beta, std::span<std::int8_t> spins,
                         std::span<const std::size_t> order, PrngStream& stream, StepStats* stats) {
  std::uint64_t flips = 0;
  for (auto i : order) {
    const double input = beta * net.local_field(spins, i);
    const std::int8_t next = gibbs_update(input, stream.next_bits24());
    flips += next != spins[i] ? 1u : 0u;
    spins[i] = next;
  }
  if (stats) {
    stats->steps += 1;
    stats->realized_flips += flips;
    stats->attempts += order.size();
  }
}

SpinState gibbs_sweep(const CouplingNetwork& net, const SpinState& state, std::span<const std::size_t> order,
                      PrngStream& stream, StepStats* stats) {
  require_same_size(state.size(), net.size(), "spin state vs network");
  validate_permutation(order, net.size());
  SpinState next = state;
  gibbs_sweep_inplace(net, net.beta(), next.raw(), order, stream, stats);
  return next;
}

void checkerboard_sweep_inplace(const CouplingNetwork& net, double beta, std::span<std::int8_t> spins,
                                std::span<const std::uint32_t> class0, std::span<const std::uint32_t> class1,
                                std::span<PrngStream> streams, StepStats* stats, int threads) {
  require_same_size(streams.size(), net.size(), "PRNG streams vs p-bits");
  std::uint64_t flips = 0;
  if (!streams.empty() && streams[0].kind() == PrngKind::Lfsr32) {
    flips += update_class<PrngKind::Lfsr32>(net, beta, spins.data(), class0, streams.data(), threads);
    flips += update_class<PrngKind::Lfsr32>(net, beta, spins.data(), class1, streams.data(), threads);
  } else {
    flips += update_class<PrngKind::Xoshiro128Plus>(net, beta, spins.data(), class0, streams.data(), threads);
    flips += update_class<PrngKind::Xoshiro128Plus>(net, beta, spins.data(), class1, streams.data(), threads);
  }
  if (stats) {
    stats->steps += 1;
    stats->realized_flips += flips;
    stats->attempts += net.size();
  }
}

namespace {

void split_classes(const TwoColoring& coloring, std::vector<std::uint32_t>& c0, std::vector<std::uint32_t>& c1) {
  c0.clear();
  c1.clear();
  for (std::size_t i = 0; i < coloring.color.size(); ++i) {
    (coloring.color[i] == 0 ? c0 : c1).push_back(static_cast<std::uint32_t>(i));
  }
}

}  // namespace

SpinState checkerboard_sweep(const CouplingNetwork& net, const SpinState& state, const TwoColoring& coloring,
                             std::span<PrngStream> streams, StepStats* stats, int threads) {
  require_same_size(state.size(), net.size(), "spin state vs network");
  require_same_size(streams.size(), net.size(), "PRNG streams vs p-bits");
  validate_coloring(net, coloring);
  std::vector<std::uint32_t> c0, c1;
  split_classes(coloring, c0, c1);
  SpinState next = state;
  checkerboard_sweep_inplace(net, net.beta(), next.raw(), c0, c1, streams, stats, threads);
  return next;
}

std::string to_string(UpdateMode mode) {
  switch (mode) {
    case UpdateMode::Autonomous:
      return "autonomous";
    case UpdateMode::Gibbs:
      return "gibbs";
    case UpdateMode::Checkerboard:
      return "checkerboard";
  }
  return "autonomous";
}

UpdateMode update_mode_from_string(const std::string& name) {
  if (name == "autonomous") return UpdateMode::Autonomous;
  if (name == "gibbs") return UpdateMode::Gibbs;
  if (name == "checkerboard") return UpdateMode::Checkerboard;
  throw std::invalid_argument("unknown update mode '" + name + "'");
}

Sampler::Sampler(const CouplingNetwork& net, const AutonomousParams& params, UpdateMode mode,
                 std::optional<TwoColoring> coloring, int threads)
    : net_(&net),
      params_(params),
      mode_(mode),
      threads_(threads < 1 ? 1 : threads),
      beta_(net.beta()),
      state_(net.size()),
      scratch_(net.size()),
      streams_(make_streams(params.prng, params.master_seed, net.size())),
      sequential_(PrngStream::seeded(params.prng, stream_seed(params.master_seed, kSequentialStreamIndex))),
      init_(PrngStream::seeded(params.prng, stream_seed(params.master_seed, kInitStreamIndex))) {
  params_.validate();
  if (mode_ == UpdateMode::Autonomous) lut_ = params_.lut(beta_);
  if (mode_ == UpdateMode::Gibbs) {
    order_.resize(net.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
  }
  if (mode_ == UpdateMode::Checkerboard) {
    if (!coloring) throw std::invalid_argument("checkerboard mode requires a two-coloring");
    validate_coloring(net, *coloring);
    split_classes(*coloring, class0_, class1_);
  }
  randomize();
}

void Sampler::randomize() {
  auto raw = state_.raw();
  for (auto& m : raw) m = (init_.next_bits24() & 1u) ? 1 : -1;
}

void Sampler::set_state(const SpinState& state) {
  require_same_size(state.size(), net_->size(), "spin state vs network");
  state_ = state;
}

void Sampler::set_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be finite and >= 0");
  beta_ = beta;
  if (mode_ == UpdateMode::Autonomous) lut_ = params_.lut(beta_);
}

void Sampler::run(std::uint64_t steps, StepStats* stats) {
  for (std::uint64_t t = 0; t < steps; ++t) {
    switch (mode_) {
      case UpdateMode::Autonomous:
        autonomous_step_into(*net_, lut_, state_.view(), scratch_.raw(), streams_, stats, threads_);
        std::swap(state_, scratch_);
        break;
      case UpdateMode::Gibbs:
        gibbs_sweep_inplace(*net_, beta_, state_.raw(), order_, sequential_, stats);
        break;
      case UpdateMode::Checkerboard:
        checkerboard_sweep_inplace(*net_, beta_, state_.raw(), class0_, class1_, streams_, stats, threads_);
        break;
    }
  }
}

}  // namespace pbit
