#pragma once

#include <cstdint>
#include <random>

namespace qresb {

/// Seeded generator with a pinned uniform-double mapping. std::mt19937_64's
/// output sequence is fixed by the standard, and (x >> 11) * 2^-53 is exact,
/// so streams are bit-identical across platforms for the same seed. (The
/// std distribution adapters make no such promise.)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qresb
