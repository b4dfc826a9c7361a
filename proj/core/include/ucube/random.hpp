#pragma once

// Portable seeded randomness.
//
// The engine is std::mt19937_64 seeded directly with the 64-bit seed; its
// output sequence is fixed by the C++ standard. Only raw 64-bit outputs are
// consumed (no std:: distributions, whose algorithms vary by library):
//
//  * below(n): rejection sampling. Draw r until r < 2^64 - (2^64 mod n),
//    return r mod n.
//  * bernoulli(a/b) with b < 2^64: u = below(b), success iff u < a.
//  * bernoulli(a/b) with larger b: compare a uniform binary fraction, one
//    output bit at a time (most significant bit first), against the binary
//    expansion of a/b.

#include <cstdint>
#include <random>
#include <vector>

#include "ucube/cube.hpp"

namespace ucube {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); requires n > 0.
  std::uint64_t below(std::uint64_t n);
  /// True with probability exactly p, for p in [0,1].
  bool bernoulli(const Rational& p);

 private:
  bool next_bit();

  std::mt19937_64 engine_;
  std::uint64_t bit_buffer_ = 0;
  int bits_left_ = 0;
};

/// Samples cube points from mu_p; caches each p_i as a 64-bit fraction when
/// it fits so that the hot loop stays in machine integers.
class PointSampler {
 public:
  explicit PointSampler(const WeightVector& w);

  int dimension() const { return w_.dimension(); }
  Mask operator()(Rng& rng) const;

 private:
  struct Fraction {
    bool small = false;
    std::uint64_t num = 0;
    std::uint64_t den = 1;
  };

  WeightVector w_;
  std::vector<Fraction> fractions_;
};

enum class WeightRange {
  interior,       ///< 0 < p_i < 1
  at_least_half,  ///< 1/2 <= p_i < 1
};

/// Random rational bias vector: each p_i = a/b with b uniform in
/// [2, max_denominator] and a uniform over the numerators allowed by `range`.
WeightVector random_weights(int d, Rng& rng, WeightRange range, std::uint64_t max_denominator = 16);

}  // namespace ucube
