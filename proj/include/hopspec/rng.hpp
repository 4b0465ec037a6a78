#pragma once

#include <cmath>
#include <cstdint>

namespace hopspec {

// Counter-based generator: every output is a pure function of (seed, stream
// indices), so trajectories can be replayed or evaluated out of order without
// carrying generator state.  Streams are independent of threading and batch
// layout by construction.
namespace rng {

inline std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finaliser
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t at(std::uint64_t seed, std::uint64_t a) { return mix(mix(seed) ^ a); }

inline std::uint64_t at(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return mix(at(seed, a) ^ b);
}

inline std::uint64_t at(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix(at(seed, a, b) ^ c);
}

// Uniform double in [0,1) from the top 53 bits.
inline double unit(std::uint64_t bits) { return double(bits >> 11) * 0x1.0p-53; }

// One +/-1 sign per index.
inline double sign_at(std::uint64_t seed, std::uint64_t k) {
  return (at(seed, k) & 1) ? -1.0 : 1.0;
}

// 64 signs per block: bit b of sign_block(seed, key, t) is the sign for step
// 64*t + b of stream `key`.
inline std::uint64_t sign_block(std::uint64_t seed, std::uint64_t key, std::uint64_t t) {
  return at(seed, key, t);
}

inline double sign_from_block(std::uint64_t block, unsigned bit) {
  return (block >> bit) & 1 ? -1.0 : 1.0;
}

}  // namespace rng
}  // namespace hopspec
