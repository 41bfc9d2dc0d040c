// Copyright 2026 The gml Authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic random stream used by every sampler. Distributions are
// hand-rolled on top of a 64-bit Mersenne twister so draw sequences are
// reproducible across platforms and standard-library versions. Streams are
// splittable by seed derivation: derive(seed, k) yields decorrelated
// sub-stream seeds for deterministic parallel/chunked sampling.

#ifndef GML_RNG_HPP
#define GML_RNG_HPP

#include <cstdint>
#include <random>

#include "gml/errors.hpp"

namespace gml {

class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal (Marsaglia polar method, one value cached).
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u, v, q;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      q = u * u + v * v;
    } while (q >= 1.0 || q == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(q) / q);
    cached_ = v * scale;
    has_cached_ = true;
    return u * scale;
  }

  /// Gamma(shape, rate) via Marsaglia-Tsang, with the usual power boost for
  /// shape < 1.
  double gamma(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0)) {
      throw DomainError("gamma sampling requires shape > 0 and rate > 0");
    }
    if (shape < 1.0) {
      const double boosted = gamma(shape + 1.0, 1.0);
      return boosted * std::pow(uniform(), 1.0 / shape) / rate;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v / rate;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
        return d * v / rate;
      }
    }
  }

  /// Beta(alpha, beta) from two gamma draws.
  double beta(double alpha, double beta_param) {
    const double g1 = gamma(alpha, 1.0);
    const double g2 = gamma(beta_param, 1.0);
    return g1 / (g1 + g2);
  }

  /// Decorrelated sub-stream seed (splitmix64 finalizer over seed + index).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream_index) {
    std::uint64_t x = seed + (stream_index + 1) * 0x9E3779B97F4A7C15ULL;
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
  }

private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace gml

#endif  // GML_RNG_HPP
