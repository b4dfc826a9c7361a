#include "ucube/spectral.hpp"

#include <cmath>
#include <string>

namespace ucube {

namespace {

void require_interior(const WeightVector& w) {
  for (int i = 0; i < w.dimension(); ++i) {
    if (w.p(i) <= 0 || w.p(i) >= 1) {
      throw PreconditionError("Fourier transform needs 0 < p_i < 1; p_" + std::to_string(i + 1) + " = " +
                              to_string(w.p(i)));
    }
  }
}

void require_same_dimension(int a, int b) {
  if (a != b) {
    throw PreconditionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

BooleanFunction::BooleanFunction(int d, std::vector<std::int8_t> values) : d_(d), values_(std::move(values)) {
  check_dimension(d);
  if (values_.size() != cube_size(d)) {
    throw PreconditionError("expected " + std::to_string(cube_size(d)) + " values, got " +
                            std::to_string(values_.size()));
  }
  for (std::int8_t v : values_) {
    if (v != 1 && v != -1) throw PreconditionError("Boolean function values must be +1 or -1");
  }
}

BooleanFunction BooleanFunction::constant(int d, int value) {
  check_dimension(d);
  return BooleanFunction(d, std::vector<std::int8_t>(cube_size(d), static_cast<std::int8_t>(value)));
}

BooleanFunction BooleanFunction::from_table(int d, std::uint64_t table) {
  return indicator(SetFamily::from_table(d, table));
}

BooleanFunction indicator(const SetFamily& family) {
  std::vector<std::int8_t> values(cube_size(family.dimension()), -1);
  family.for_each([&](Mask x) { values[x] = 1; });
  return BooleanFunction(family.dimension(), std::move(values));
}

// ---------------------------------------------------------------------------

Spectrum::Spectrum(std::vector<Rational> kernels, std::vector<Rational> alpha_sq)
    : d_(static_cast<int>(alpha_sq.size())), kernels_(std::move(kernels)), alpha_sq_(std::move(alpha_sq)) {
  if (kernels_.size() != cube_size(d_)) throw PreconditionError("kernel table size does not match dimension");
}

Rational Spectrum::coeff_sq(Mask s) const {
  Rational r = kernels_[s] * kernels_[s];
  for (int i = 0; i < d_; ++i) {
    if (has_bit(s, i)) r *= alpha_sq_[static_cast<std::size_t>(i)];
  }
  return r;
}

double Spectrum::coeff_float(Mask s) const {
  const double mag = std::sqrt(coeff_sq(s).get_d());
  return sgn(kernels_[s]) < 0 ? -mag : mag;
}

Spectrum transform(const BooleanFunction& f, const WeightVector& w) {
  require_same_dimension(f.dimension(), w.dimension());
  require_interior(w);
  const int d = f.dimension();

  std::vector<Rational> t(cube_size(d));
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = f(static_cast<Mask>(x));

  Rational a, b;
  for (int i = 0; i < d; ++i) {
    const Rational& p = w.p(i);
    const Rational& q = w.q(i);
    const Rational pq = p * q;
    const std::size_t stride = cube_size(i);
    for (std::size_t base = 0; base < t.size(); base += 2 * stride) {
      for (std::size_t x = base; x < base + stride; ++x) {
        a = t[x];
        b = t[x + stride];
        t[x] = q * a + p * b;
        t[x + stride] = pq * (b - a);
      }
    }
  }

  std::vector<Rational> alpha_sq;
  alpha_sq.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) alpha_sq.push_back(w.alpha_sq(i));
  return Spectrum(std::move(t), std::move(alpha_sq));
}

Rational level_weight(const Spectrum& spectrum, int k) {
  if (k < 0 || k > spectrum.dimension()) {
    throw PreconditionError("level " + std::to_string(k) + " out of range 0.." +
                            std::to_string(spectrum.dimension()));
  }
  Rational total = 0;
  for (Mask s = 0; s < cube_size(spectrum.dimension()); ++s) {
    if (popcount(s) == k) total += spectrum.coeff_sq(s);
  }
  return total;
}

std::vector<Rational> level_weights(const Spectrum& spectrum) {
  std::vector<Rational> levels(static_cast<std::size_t>(spectrum.dimension()) + 1, Rational(0));
  for (Mask s = 0; s < cube_size(spectrum.dimension()); ++s) {
    levels[static_cast<std::size_t>(popcount(s))] += spectrum.coeff_sq(s);
  }
  return levels;
}

Rational parseval_defect(const BooleanFunction& f, const WeightVector& w) {
  return parseval_defect(f, w, transform(f, w));
}

Rational parseval_defect(const BooleanFunction& f, const WeightVector& w, const Spectrum& spectrum) {
  Rational energy = 0;
  for (const Rational& level : level_weights(spectrum)) energy += level;
  const MeasureTable mu(w);
  Rational second_moment = 0;
  for (Mask x = 0; x < cube_size(f.dimension()); ++x) second_moment += mu[x] * (f(x) * f(x));
  return energy - second_moment;
}

std::vector<int> derivative(const BooleanFunction& f, int coordinate) {
  check_coordinate(coordinate, f.dimension());
  std::vector<int> out(cube_size(f.dimension()));
  for (Mask x = 0; x < out.size(); ++x) {
    out[x] = (f(x | bit(coordinate)) - f(x & ~bit(coordinate))) / 2;
  }
  return out;
}

InfluenceProfile influences(const BooleanFunction& f, const WeightVector& w) {
  require_same_dimension(f.dimension(), w.dimension());
  const int d = f.dimension();
  const MeasureTable mu(w);

  InfluenceProfile prof;
  prof.plus.assign(static_cast<std::size_t>(d), Rational(0));
  prof.minus.assign(static_cast<std::size_t>(d), Rational(0));
  for (int i = 0; i < d; ++i) {
    Rational& plus = prof.plus[static_cast<std::size_t>(i)];
    Rational& minus = prof.minus[static_cast<std::size_t>(i)];
    for (Mask x = 0; x < cube_size(d); ++x) {
      if (has_bit(x, i)) continue;
      const Mask hi = x | bit(i);
      const int lo_value = f(x);
      const int hi_value = f(hi);
      if (lo_value == hi_value) continue;
      // Probability of the other coordinates: mu(x_{i->0}) + mu(x_{i->1}).
      const Rational marginal = mu[x] + mu[hi];
      if (lo_value < hi_value) {
        plus += marginal;
      } else {
        minus += marginal;
      }
    }
  }

  prof.weighted_total = 0;
  prof.weighted_plus = 0;
  prof.weighted_minus = 0;
  for (int i = 0; i < d; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    prof.total.emplace_back(prof.plus[ui] + prof.minus[ui]);
    const Rational scale = 4 * w.p(i) * w.q(i);
    prof.weighted_plus += scale * prof.plus[ui];
    prof.weighted_minus += scale * prof.minus[ui];
  }
  prof.weighted_total = prof.weighted_plus + prof.weighted_minus;
  return prof;
}

Rational derivative_energy(const BooleanFunction& f, const WeightVector& w, int coordinate) {
  require_same_dimension(f.dimension(), w.dimension());
  const std::vector<int> df = derivative(f, coordinate);
  const MeasureTable mu(w);
  Rational total = 0;
  for (Mask x = 0; x < df.size(); ++x) {
    if (df[x] != 0) total += mu[x];
  }
  return total;
}

bool DegreeOneReport::holds() const {
  if (empty_kernel != empty_expected) return false;
  for (std::size_t i = 0; i < scaled_singletons.size(); ++i) {
    if (scaled_singletons[i] != influence_gaps[i]) return false;
  }
  return true;
}

DegreeOneReport degree_one_identities(const BooleanFunction& f, const WeightVector& w) {
  return degree_one_identities(f, w, transform(f, w), influences(f, w));
}

DegreeOneReport degree_one_identities(const BooleanFunction& f, const WeightVector& w, const Spectrum& spectrum,
                                      const InfluenceProfile& inf) {
  const MeasureTable mu(w);
  Rational positive_mass = 0;
  for (Mask x = 0; x < cube_size(f.dimension()); ++x) {
    if (f(x) == 1) positive_mass += mu[x];
  }

  DegreeOneReport r;
  r.empty_kernel = spectrum.kernel(0);
  r.empty_expected = 2 * positive_mass - 1;
  for (int i = 0; i < f.dimension(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    r.scaled_singletons.emplace_back(w.alpha_sq(i) * spectrum.kernel(bit(i)));
    r.influence_gaps.emplace_back(2 * (inf.plus[ui] - inf.minus[ui]));
  }
  return r;
}

bool InfluenceLevelCheck::exact() const {
  if (defect != 0) return false;
  for (const Rational& r : coordinate_defects) {
    if (r != 0) return false;
  }
  return true;
}

InfluenceLevelCheck influence_level_identity_defect(const BooleanFunction& f, const WeightVector& w) {
  return influence_level_identity_defect(transform(f, w), influences(f, w), w);
}

InfluenceLevelCheck influence_level_identity_defect(const Spectrum& spectrum, const InfluenceProfile& inf,
                                                    const WeightVector& w) {
  const int d = spectrum.dimension();
  std::vector<Rational> coeffs(cube_size(d));
  for (Mask s = 0; s < coeffs.size(); ++s) coeffs[s] = spectrum.coeff_sq(s);

  InfluenceLevelCheck check;
  Rational weighted_levels = 0;
  for (Mask s = 0; s < coeffs.size(); ++s) weighted_levels += popcount(s) * coeffs[s];
  check.defect = inf.weighted_total - weighted_levels;

  for (int i = 0; i < d; ++i) {
    Rational mass = 0;
    for (Mask s = 0; s < coeffs.size(); ++s) {
      if (has_bit(s, i)) mass += coeffs[s];
    }
    check.coordinate_defects.emplace_back(inf.total[static_cast<std::size_t>(i)] - w.alpha_sq(i) * mass / 4);
  }
  return check;
}

Rational low_degree_bound_margin(const BooleanFunction& f, const WeightVector& w, int k) {
  return low_degree_bound_margin(level_weights(transform(f, w)), influences(f, w), k);
}

Rational low_degree_bound_margin(const std::vector<Rational>& levels, const InfluenceProfile& inf, int k) {
  const int d = static_cast<int>(levels.size()) - 1;
  if (k < 1 || k > d) {
    throw PreconditionError("k = " + std::to_string(k) + " out of range 1.." + std::to_string(d));
  }
  Rational bound = k;
  for (int i = 0; i < k; ++i) bound -= (k - i) * levels[static_cast<std::size_t>(i)];
  return inf.weighted_total - bound;
}

}  // namespace ucube
