#pragma once

#include <cstdint>
#include <string_view>

namespace mwde {

// splitmix64, used to expand a single seed into generator state.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256++ (Blackman/Vigna). Fixed generator so samples are reproducible
// bit-exactly across platforms and implementations.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
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

  // Uniform on the open interval (0,1): 53-bit mantissa, offset by half a
  // step so 0 and 1 are never returned (keeps the normal quantile finite).
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

// Inverse standard normal CDF, Wichura's PPND16 rational approximations
// (absolute error below 1e-15 over (0,1)).
double normal_quantile(double p);

// FNV-1a over a canonical byte string; used to derive per-cell benchmark
// seeds from (master seed, names, level) so cell seeds are stable across
// platforms and config orderings.
std::uint64_t stable_hash(std::string_view text);

}  // namespace mwde
