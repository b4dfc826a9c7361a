#include "ucube/random.hpp"

#include <stdexcept>

namespace ucube {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t rejected = (0 - n) % n;  // 2^64 mod n
  const std::uint64_t limit = 0 - rejected;    // 2^64 - rejected, 0 meaning 2^64
  while (true) {
    const std::uint64_t r = next();
    if (rejected == 0 || r < limit) return r % n;
  }
}

bool Rng::next_bit() {
  if (bits_left_ == 0) {
    bit_buffer_ = next();
    bits_left_ = 64;
  }
  --bits_left_;
  return (bit_buffer_ >> bits_left_) & 1U;
}

bool Rng::bernoulli(const Rational& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  const Integer& den = p.get_den();
  if (mpz_sizeinbase(den.get_mpz_t(), 2) <= 64) {
    const std::uint64_t b = mpz_get_ui(den.get_mpz_t());
    const std::uint64_t a = mpz_get_ui(p.get_num().get_mpz_t());
    return below(b) < a;
  }
  Integer rem = p.get_num();
  while (true) {
    rem *= 2;
    bool digit = false;
    if (rem >= den) {
      rem -= den;
      digit = true;
    }
    const bool b = next_bit();
    if (b != digit) return b < digit;
  }
}

PointSampler::PointSampler(const WeightVector& w) : w_(w) {
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
  for (const Rational& p : w_.ps()) {
    Fraction f;
    if (mpz_sizeinbase(p.get_den().get_mpz_t(), 2) <= 64) {
      f.small = true;
      f.num = mpz_get_ui(p.get_num().get_mpz_t());
      f.den = mpz_get_ui(p.get_den().get_mpz_t());
    }
    fractions_.push_back(f);
  }
}

Mask PointSampler::operator()(Rng& rng) const {
  Mask x = 0;
  for (int i = 0; i < w_.dimension(); ++i) {
    const Fraction& f = fractions_[static_cast<std::size_t>(i)];
    bool set;
    if (f.small) {
      set = f.num != 0 && (f.num == f.den || rng.below(f.den) < f.num);
    } else {
      set = rng.bernoulli(w_.p(i));
    }
    if (set) x |= bit(i);
  }
  return x;
}

WeightVector random_weights(int d, Rng& rng, WeightRange range, std::uint64_t max_denominator) {
  check_dimension(d);
  if (max_denominator < 2) throw std::invalid_argument("max_denominator must be at least 2");
  std::vector<Rational> p;
  p.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const std::uint64_t den = 2 + rng.below(max_denominator - 1);
    // Numerators in [lo, den - 1].
    const std::uint64_t lo = range == WeightRange::interior ? 1 : (den + 1) / 2;
    const std::uint64_t num = lo + rng.below(den - lo);
    Rational r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
    r.canonicalize();
    p.push_back(r);
  }
  return WeightVector(std::move(p));
}

}  // namespace ucube
