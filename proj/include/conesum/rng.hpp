#pragma once

#include <cstdint>

#include "conesum/linalg.hpp"

namespace conesum {

/// Deterministic splitmix64 stream; the single source of pseudo-randomness
/// for test points and CLI verification suites.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Rational p/q with p in [-num_bound, num_bound], q in [1, den_bound].
  Rat rational(long num_bound, long den_bound) {
    return Rat(integer(-num_bound, num_bound), integer(1, den_bound));
  }

  VecQ rational_vector(int dim, long num_bound, long den_bound) {
    VecQ v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rational(num_bound, den_bound);
    return v;
  }

  VecQ integer_vector(int dim, long bound) {
    VecQ v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Rat(integer(-bound, bound));
    return v;
  }

private:
  std::uint64_t state_;
};

}  // namespace conesum
