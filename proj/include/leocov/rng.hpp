#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

// Counter-based random stream: one 64-bit state per stream, advanced by a
// fixed odd increment and finalized with the splitmix64 mixer. Streams are
// keyed by (seed, stream index) so parallel workers draw from independent,
// reproducible substreams; every transform below is arithmetic-only (no
// libstdc++ distributions), keeping sequences bit-identical across runs.

namespace leocov {

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix(mix(seed + golden) + (stream + 1) * 0xBF58476D1CE4E5B9ull)) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += golden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on (0, 1]; never 0, so logs are safe.
  double uniform() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  // Uniform cosine/sine pair of an angle uniform on [0, 2*pi), by rejection
  // from the unit disc (exact, and cheaper than sincos).
  void unit_circle(double& c, double& s) {
    for (;;) {
      const double v1 = 2.0 * uniform() - 1.0;
      const double v2 = 2.0 * uniform() - 1.0;
      const double m = v1 * v1 + v2 * v2;
      if (m > 0.0 && m < 1.0) {
        const double inv = 1.0 / std::sqrt(m);
        c = v1 * inv;
        s = v2 * inv;
        return;
      }
    }
  }

  // Two independent standard normals (Marsaglia polar transform).
  std::pair<double, double> normal_pair() {
    for (;;) {
      const double v1 = 2.0 * uniform() - 1.0;
      const double v2 = 2.0 * uniform() - 1.0;
      const double m = v1 * v1 + v2 * v2;
      if (m > 0.0 && m < 1.0) {
        const double f = std::sqrt(-2.0 * std::log(m) / m);
        return {v1 * f, v2 * f};
      }
    }
  }

 private:
  static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace leocov
