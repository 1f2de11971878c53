#pragma once

#include <cmath>
#include <cstdint>

namespace multclt {

// Counter-based random stream: the state is derived from (seed, stream_index)
// alone, so sample i always sees the same draws no matter how work is split
// across threads.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index) {
    state_ = seed ^ 0x6A09E667F3BCC908ULL;
    state_ = mix(state_ + 0x9E3779B97F4A7C15ULL * (stream_index + 1));
    state_ = mix(state_ ^ (stream_index * 0xD1B54A32D192ED03ULL));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; the spare value is cached per stream.
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace multclt
