#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pbit {

enum class PrngKind { Lfsr32, Xoshiro128Plus };

std::string to_string(PrngKind kind);
PrngKind prng_kind_from_string(const std::string& name);

/// SplitMix64 step; advances `x` and returns the mixed output.
constexpr std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// 64-bit seed for stream `index` under `master_seed`.
constexpr std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t index) {
  std::uint64_t x = master_seed;
  const std::uint64_t a = splitmix64(x);
  std::uint64_t y = a ^ (index * 0xd1b54a32d192ed03ULL);
  splitmix64(y);
  return splitmix64(y);
}

// Stream indices reserved outside the per-p-bit range [0, N).
inline constexpr std::uint64_t kSequentialStreamIndex = std::uint64_t{1} << 40;
inline constexpr std::uint64_t kInitStreamIndex = kSequentialStreamIndex + 1;

/// One pseudo-random stream, either a 32-bit Fibonacci LFSR (taps 32, 22, 2, 1)
/// or xoshiro128+. Every draw yields 24 fresh bits; `next()` maps them to
/// [0, 1) with a 2^-24 quantum.
class PrngStream {
 public:
  static constexpr int kBits = 24;
  static constexpr double kQuantum = 0x1p-24;

  /// LFSR from a raw 32-bit state; the state must be nonzero.
  static PrngStream lfsr32(std::uint32_t state);
  /// xoshiro128+ from a raw state; the state must not be all zero.
  static PrngStream xoshiro128plus(std::array<std::uint32_t, 4> state);
  /// Stream of the requested kind seeded from a 64-bit value.
  static PrngStream seeded(PrngKind kind, std::uint64_t seed);

  PrngKind kind() const { return kind_; }
  const std::array<std::uint32_t, 4>& state() const { return s_; }
  // Mutable state for the update kernels; see xoshiro_next / lfsr_shift.
  std::array<std::uint32_t, 4>& raw_state() { return s_; }

  /// Raw generator word: the xoshiro128+ result, or the LFSR register after 32 shifts.
  std::uint32_t next_u32() {
    if (kind_ == PrngKind::Xoshiro128Plus) return xoshiro_next(s_);
    lfsr_shift(s_[0], 32);
    return s_[0];
  }

  std::uint32_t next_bits24() {
    if (kind_ == PrngKind::Xoshiro128Plus) return xoshiro_next(s_) >> 8;
    lfsr_shift(s_[0], 24);
    return s_[0] >> 8;
  }

  double next() { return next_bits24() * kQuantum; }

  bool operator==(const PrngStream&) const = default;

  // Building blocks shared with the update kernels, which call them on
  // unpacked state to keep the hot loops free of the kind dispatch.
  static std::uint32_t xoshiro_next(std::array<std::uint32_t, 4>& s) {
    const std::uint32_t result = s[0] + s[3];
    const std::uint32_t t = s[1] << 9;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = (s[3] << 11) | (s[3] >> 21);
    return result;
  }

  static void lfsr_shift(std::uint32_t& reg, int count) {
    for (int k = 0; k < count; ++k) {
      const std::uint32_t bit = (reg ^ (reg >> 10) ^ (reg >> 30) ^ (reg >> 31)) & 1u;
      reg = (reg >> 1) | (bit << 31);
    }
  }

 private:
  PrngStream(PrngKind kind, std::array<std::uint32_t, 4> s) : kind_(kind), s_(s) {}

  PrngKind kind_ = PrngKind::Xoshiro128Plus;
  std::array<std::uint32_t, 4> s_{};
};

/// `count` independent streams; stream k is seeded from (master_seed, first_index + k).
std::vector<PrngStream> make_streams(PrngKind kind, std::uint64_t master_seed, std::size_t count,
                                     std::uint64_t first_index = 0);

}  // namespace pbit
