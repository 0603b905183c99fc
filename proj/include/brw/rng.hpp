#pragma once

#include <cstdint>
#include <string_view>

namespace brw {

// splitmix64 (Vigna, public domain); used for seeding and stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// xoshiro256++ (Blackman/Vigna, public domain). Fixed algorithm so that
/// identical seeds give identical streams on every platform; the standard
/// library distributions are implementation-defined and are not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& si : s_) si = splitmix64(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n) by rejection; exact and platform-stable.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Named substream derivation: master seed -> (check name, replica index).
/// Adding new check names never perturbs existing streams.
inline Rng substream(std::uint64_t master_seed, std::string_view check_name, std::uint64_t replica) {
  std::uint64_t st = master_seed ^ fnv1a64(check_name);
  std::uint64_t a = splitmix64(st);
  st ^= replica * 0x9e3779b97f4a7c15ull;
  std::uint64_t b = splitmix64(st);
  return Rng(a ^ (b + 0x165667b19e3779f9ull));
}

}  // namespace brw
