#pragma once

// Seeded generators of rational points and group elements for the
// property-style checks.

#include <cstdint>
#include <random>

#include "iams/lattice_core.hpp"

namespace iams {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// Uniform over fractions p/q in [lo, hi] with 1 <= q <= max_den.
  Rat rational(const Rat& lo, const Rat& hi, long max_den = 12) {
    const long q = integer(1, max_den);
    const Int plo = ceil_of(lo * q);
    const Int phi = floor_of(hi * q);
    if (phi < plo) return lo;
    const long span = Int(phi - plo).get_si();
    Rat r(Int(plo + integer(0, span)), Int(q));
    r.canonicalize();
    return r;
  }

  RatVec point(const Rat& lo, const Rat& hi, long max_den = 12) {
    return {rational(lo, hi, max_den), rational(lo, hi, max_den)};
  }

  GammaElement gamma(const ValidatedData& data, long range = 3) {
    GammaElement g{{integer(-range, range), integer(-range, range)}, 1};
    if (data.has_involution() && integer(0, 1) == 1) g.h = -1;
    return g;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace iams
