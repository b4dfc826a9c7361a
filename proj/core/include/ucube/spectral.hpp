#pragma once

// Fourier analysis on the p-biased cube.
//
// The orthonormal basis is chi_S = prod_{i in S} alpha_i (x_i - p_i) with
// alpha_i = 1/sqrt(p_i q_i). alpha_i is irrational in general, so a spectrum
// stores the rational kernel
//
//     m_S = E_mu[ f(x) * prod_{i in S} (x_i - p_i) ],   f^(S) = m_S * prod alpha_i,
//
// and every quantity built from it (squared coefficients, level weights,
// alpha_i f^({i}) = alpha_i^2 m_{i}) stays exact.

#include <cstdint>
#include <vector>

#include "ucube/cube.hpp"

namespace ucube {

/// A +/-1 valued function on the cube, table indexed by mask.
class BooleanFunction {
 public:
  /// Every entry must be +1 or -1.
  BooleanFunction(int d, std::vector<std::int8_t> values);

  static BooleanFunction constant(int d, int value);
  /// Function whose value at x is +1 iff bit x of `table` is set; d <= 6.
  static BooleanFunction from_table(int d, std::uint64_t table);

  int dimension() const { return d_; }
  int operator()(Mask x) const { return values_[x]; }
  const std::vector<std::int8_t>& values() const { return values_; }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int d_;
  std::vector<std::int8_t> values_;
};

/// +1 on the members of F, -1 elsewhere.
BooleanFunction indicator(const SetFamily& family);

class Spectrum {
 public:
  Spectrum(std::vector<Rational> kernels, std::vector<Rational> alpha_sq);

  int dimension() const { return d_; }
  const Rational& kernel(Mask s) const { return kernels_[s]; }
  const std::vector<Rational>& kernels() const { return kernels_; }
  /// f^(S)^2 = m_S^2 * prod_{i in S} alpha_i^2.
  Rational coeff_sq(Mask s) const;
  /// sign(m_S) * sqrt(coeff_sq(S)); for display.
  double coeff_float(Mask s) const;

 private:
  int d_;
  std::vector<Rational> kernels_;
  std::vector<Rational> alpha_sq_;
};

/// Biased butterfly, O(d 2^d) rational operations. Per coordinate the pair
/// (a, b) = (x_i = 0 slice, x_i = 1 slice) becomes (q a + p b, p q (b - a)).
/// Requires 0 < p_i < 1.
Spectrum transform(const BooleanFunction& f, const WeightVector& w);

/// W^k = sum_{|S| = k} f^(S)^2.
Rational level_weight(const Spectrum& spectrum, int k);
/// W^0 .. W^d.
std::vector<Rational> level_weights(const Spectrum& spectrum);

/// sum_k W^k - mu(f^2); zero for every +/-1 function.
Rational parseval_defect(const BooleanFunction& f, const WeightVector& w);
Rational parseval_defect(const BooleanFunction& f, const WeightVector& w, const Spectrum& spectrum);

/// D_i f(x) = (f(x_{i->1}) - f(x_{i->0})) / 2, values in {-1, 0, 1}.
std::vector<int> derivative(const BooleanFunction& f, int coordinate);

struct InfluenceProfile {
  std::vector<Rational> plus;   ///< I_i^+ as probabilities
  std::vector<Rational> minus;  ///< I_i^-
  std::vector<Rational> total;  ///< I_i = I_i^+ + I_i^-
  Rational weighted_total;      ///< I(f) = sum_i 4 p_i q_i I_i
  Rational weighted_plus;
  Rational weighted_minus;
};

/// Exact influences; boundary weights are allowed.
InfluenceProfile influences(const BooleanFunction& f, const WeightVector& w);

/// mu((D_i f)^2).
Rational derivative_energy(const BooleanFunction& f, const WeightVector& w, int coordinate);

struct DegreeOneReport {
  Rational empty_kernel;       ///< m_{} = f^(empty)
  Rational empty_expected;     ///< 2 mu(f^{-1}(1)) - 1
  std::vector<Rational> scaled_singletons;  ///< alpha_i^2 m_{i} = alpha_i f^({i})
  std::vector<Rational> influence_gaps;     ///< 2 (I_i^+ - I_i^-)

  bool holds() const;
};

DegreeOneReport degree_one_identities(const BooleanFunction& f, const WeightVector& w);
DegreeOneReport degree_one_identities(const BooleanFunction& f, const WeightVector& w,
                                      const Spectrum& spectrum, const InfluenceProfile& inf);

struct InfluenceLevelCheck {
  Rational defect;  ///< I(f) - sum_k k W^k
  /// I_i - (alpha_i^2 / 4) sum_{S containing i} f^(S)^2, per coordinate.
  std::vector<Rational> coordinate_defects;

  bool exact() const;
};

InfluenceLevelCheck influence_level_identity_defect(const BooleanFunction& f, const WeightVector& w);
InfluenceLevelCheck influence_level_identity_defect(const Spectrum& spectrum, const InfluenceProfile& inf,
                                                    const WeightVector& w);

/// I(f) - (k - sum_{i<k} (k - i) W^i); non-negative for +/-1 functions.
/// Requires 1 <= k <= d.
Rational low_degree_bound_margin(const BooleanFunction& f, const WeightVector& w, int k);
Rational low_degree_bound_margin(const std::vector<Rational>& levels, const InfluenceProfile& inf, int k);

}  // namespace ucube
