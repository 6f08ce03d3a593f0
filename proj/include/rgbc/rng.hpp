#pragma once

#include <cstdint>
#include <random>

namespace rgbc {

/// Deterministic, splittable random stream.
///
/// Substreams are derived from the parent's seed and a key, never from the
/// engine state, so how much a parent has been consumed does not affect its
/// children. Doubles come from the top 53 bits of the raw engine output;
/// nothing here goes through implementation-defined <random> distributions,
/// so sequences are reproducible across standard libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed)
      : seed_(seed), engine_(mix(seed, 0x243f6a8885a308d3ull)) {}

  /// Independent child stream keyed by `key`.
  RngStream substream(std::uint64_t key) const {
    return RngStream(mix(seed_, key));
  }

  std::uint64_t next_u64() {
    ++draws_;
    return engine_();
  }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  std::uint64_t seed() const { return seed_; }

  /// Raw 64-bit draws consumed so far (lets tests count rejection attempts).
  std::uint64_t draws() const { return draws_; }

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    // hash-combine followed by the splitmix64 finalizer
    std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace rgbc
