#include "pbit/prng.hpp"

#include <stdexcept>

namespace pbit {

std::string to_string(PrngKind kind) {
  return kind == PrngKind::Lfsr32 ? "lfsr32" : "xoshiro128plus";
}

PrngKind prng_kind_from_string(const std::string& name) {
  if (name == "lfsr32" || name == "lfsr") return PrngKind::Lfsr32;
  if (name == "xoshiro128plus" || name == "xoshiro128+" || name == "xoshiro") return PrngKind::Xoshiro128Plus;
  throw std::invalid_argument("unknown PRNG kind '" + name + "'");
}

PrngStream PrngStream::lfsr32(std::uint32_t state) {
  if (state == 0) throw std::invalid_argument("LFSR state must be nonzero");
  return PrngStream(PrngKind::Lfsr32, {state, 0, 0, 0});
}

PrngStream PrngStream::xoshiro128plus(std::array<std::uint32_t, 4> state) {
  if ((state[0] | state[1] | state[2] | state[3]) == 0) {
    throw std::invalid_argument("xoshiro128+ state must not be all zero");
  }
  return PrngStream(PrngKind::Xoshiro128Plus, state);
}

PrngStream PrngStream::seeded(PrngKind kind, std::uint64_t seed) {
  std::uint64_t x = seed;
  const std::uint64_t a = splitmix64(x);
  if (kind == PrngKind::Lfsr32) {
    auto reg = static_cast<std::uint32_t>(a ^ (a >> 32));
    return lfsr32(reg == 0 ? 1u : reg);
  }
  const std::uint64_t b = splitmix64(x);
  std::array<std::uint32_t, 4> s{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                                 static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  if ((s[0] | s[1] | s[2] | s[3]) == 0) s[0] = 1;
  return xoshiro128plus(s);
}

std::vector<PrngStream> make_streams(PrngKind kind, std::uint64_t master_seed, std::size_t count,
                                     std::uint64_t first_index) {
  std::vector<PrngStream> streams;
  streams.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    streams.push_back(PrngStream::seeded(kind, stream_seed(master_seed, first_index + k)));
  }
  return streams;
}

}  // namespace pbit
