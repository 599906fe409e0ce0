#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace pluri {

/// Counter-based generator: the k-th draw of stream s under seed q is a pure
/// function of (q, s, k), so disjoint streams can be consumed in any order.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter = 0)
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))), counter_(counter) {}

  std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    // Box-Muller; 1 - u keeps the log argument in (0, 1].
    const double u = 1.0 - uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }

  std::uint64_t counter() const { return counter_; }

  /// Derive an independent sub-stream key, e.g. one per suite or per chunk.
  static std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
    return mix(seed + 0xd1b54a32d192ed03ULL * (index + 1));
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace pluri
