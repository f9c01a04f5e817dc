#pragma once

#include <cstdint>
#include <random>

namespace omega {

/// Seeded generator with a portable bounded draw.  std::uniform_int_distribution
/// is implementation-defined, and golden fixtures must not depend on the
/// standard library vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish draw from [0, n); returns 0 when n == 0.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  /// Draw from the closed range [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace omega
