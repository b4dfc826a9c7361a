#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ucube/explore.hpp"
#include "ucube/family_io.hpp"
#include "ucube/spectral.hpp"

using namespace ucube;

namespace {

const WeightVector kW23({Rational(2, 3)});
const WeightVector kMixed({Rational(1, 3), Rational(1, 2), Rational(5, 7)});

BooleanFunction dictator() { return indicator(SetFamily::from_members(1, {1})); }
BooleanFunction uniform_and() { return indicator(SetFamily::from_members(2, {3})); }

std::vector<WeightVector> weight_corpus(int d, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<WeightVector> out{WeightVector::uniform(d)};
  while (out.size() < count + 1) out.push_back(random_weights(d, rng, WeightRange::interior));
  return out;
}

void expect_identities(const BooleanFunction& f, const WeightVector& w) {
  const Spectrum s = transform(f, w);
  const InfluenceProfile inf = influences(f, w);
  ASSERT_EQ(parseval_defect(f, w, s), 0);
  ASSERT_TRUE(degree_one_identities(f, w, s, inf).holds());
  ASSERT_TRUE(influence_level_identity_defect(s, inf, w).exact());
  const auto levels = level_weights(s);
  for (int k = 1; k <= f.dimension(); ++k) ASSERT_GE(low_degree_bound_margin(levels, inf, k), 0) << k;
  for (int i = 0; i < f.dimension(); ++i) ASSERT_EQ(derivative_energy(f, w, i), inf.total[i]);
}

}  // namespace

TEST(Indicator, Examples) {
  EXPECT_EQ(indicator(SetFamily(2)), BooleanFunction::constant(2, -1));
  EXPECT_EQ(indicator(SetFamily::full(2)), BooleanFunction::constant(2, 1));
  EXPECT_EQ(dictator()(0), -1);
  EXPECT_EQ(dictator()(1), 1);
  EXPECT_THROW(BooleanFunction(1, {1, 0}), PreconditionError);
  EXPECT_THROW(BooleanFunction(2, {1, 1}), PreconditionError);
}

TEST(Transform, ConstantFunction) {
  const Spectrum s = transform(BooleanFunction::constant(3, 1), kMixed);
  EXPECT_EQ(s.kernel(0), 1);
  for (Mask m = 1; m < 8; ++m) EXPECT_EQ(s.kernel(m), 0);
}

TEST(Transform, BiasedDictator) {
  const Spectrum s = transform(dictator(), kW23);
  EXPECT_EQ(s.kernel(0), Rational(1, 3));
  EXPECT_EQ(s.kernel(1), Rational(4, 9));
  EXPECT_EQ(s.coeff_sq(1), Rational(8, 9));
  EXPECT_NEAR(s.coeff_float(1), std::sqrt(8.0 / 9.0), 1e-12);
}

TEST(Transform, UniformAnd) {
  const Spectrum s = transform(uniform_and(), WeightVector::uniform(2));
  for (Mask m = 0; m < 4; ++m) EXPECT_EQ(s.coeff_sq(m), Rational(1, 4));
  EXPECT_LT(s.coeff_float(0), 0);
}

TEST(Transform, RejectsBoundaryWeights) {
  EXPECT_THROW(transform(dictator(), WeightVector({Rational(1)})), PreconditionError);
  EXPECT_THROW(transform(dictator(), WeightVector::uniform(2)), PreconditionError);
}

TEST(Transform, MatchesNaiveExhaustivelyUpToDimensionThree) {
  for (int d = 1; d <= 3; ++d) {
    for (const WeightVector& w : weight_corpus(d, 3, 100 + d)) {
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << cube_size(d)); ++t) {
        const BooleanFunction f = BooleanFunction::from_table(d, t);
        ASSERT_EQ(transform(f, w).kernels(), oracle::naive_kernels(f, w));
      }
    }
  }
}

TEST(Transform, MatchesNaiveOnRandomLargerFunctions) {
  Rng rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 4 + trial % 4;
    const WeightVector w = random_weights(d, rng, WeightRange::interior);
    const BooleanFunction f = oracle::random_function(d, rng);
    ASSERT_EQ(transform(f, w).kernels(), oracle::naive_kernels(f, w));
  }
}

TEST(LevelWeights, Examples) {
  const auto constant = level_weights(transform(BooleanFunction::constant(3, 1), kMixed));
  EXPECT_EQ(constant, (std::vector<Rational>{1, 0, 0, 0}));
  EXPECT_EQ(level_weights(transform(uniform_and(), WeightVector::uniform(2))),
            (std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(1, 4)}));
  EXPECT_EQ(level_weights(transform(dictator(), kW23)), (std::vector<Rational>{Rational(1, 9), Rational(8, 9)}));
  const Spectrum s = transform(dictator(), kW23);
  EXPECT_THROW(level_weight(s, 2), PreconditionError);
  EXPECT_THROW(level_weight(s, -1), PreconditionError);
}

TEST(Parseval, Examples) {
  EXPECT_EQ(parseval_defect(BooleanFunction::constant(2, -1), WeightVector::uniform(2)), 0);
  Rng rng(2);
  EXPECT_EQ(parseval_defect(oracle::random_function(3, rng), kMixed), 0);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % 4;
    EXPECT_EQ(parseval_defect(oracle::random_function(d, rng), random_weights(d, rng, WeightRange::interior)), 0);
  }
}

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(BooleanFunction::constant(2, 1), 0), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(derivative(dictator(), 0), (std::vector<int>{1, 1}));
  EXPECT_EQ(derivative(uniform_and(), 0), (std::vector<int>{0, 0, 1, 1}));
  EXPECT_THROW(derivative(uniform_and(), 2), PreconditionError);
}

TEST(Derivative, IndependentOfOwnCoordinate) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const BooleanFunction f = oracle::random_function(4, rng);
    for (int i = 0; i < 4; ++i) {
      const auto df = derivative(f, i);
      for (Mask x = 0; x < 16; ++x) {
        EXPECT_EQ(df[x], df[x ^ bit(i)]);
        EXPECT_LE(std::abs(df[x]), 1);
      }
    }
  }
}

TEST(Influences, Examples) {
  const InfluenceProfile c = influences(BooleanFunction::constant(2, 1), WeightVector::uniform(2));
  EXPECT_EQ(c.total, (std::vector<Rational>{0, 0}));
  EXPECT_EQ(c.weighted_total, 0);

  const InfluenceProfile d = influences(dictator(), kW23);
  EXPECT_EQ(d.plus[0], 1);
  EXPECT_EQ(d.minus[0], 0);
  EXPECT_EQ(d.weighted_total, Rational(8, 9));

  const InfluenceProfile a = influences(uniform_and(), WeightVector::uniform(2));
  EXPECT_EQ(a.total, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(a.weighted_total, 1);
}

TEST(Influences, AllowBoundaryWeightsAndMatchOracle) {
  const InfluenceProfile b = influences(uniform_and(), WeightVector({Rational(1), Rational(0)}));
  EXPECT_EQ(b.total[1], 1);
  EXPECT_EQ(b.weighted_total, 0);
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + trial % 5;
    const WeightVector w = random_weights(d, rng, WeightRange::interior);
    const BooleanFunction f = oracle::random_function(d, rng);
    const InfluenceProfile inf = influences(f, w);
    for (int i = 0; i < d; ++i) {
      const auto [plus, minus] = oracle::naive_influence(f, w, i);
      EXPECT_EQ(inf.plus[i], plus);
      EXPECT_EQ(inf.minus[i], minus);
      EXPECT_EQ(inf.total[i], plus + minus);
    }
    EXPECT_EQ(inf.weighted_total, inf.weighted_plus + inf.weighted_minus);
  }
}

TEST(DegreeOne, Examples) {
  const auto constant = degree_one_identities(BooleanFunction::constant(1, 1), kW23);
  EXPECT_EQ(constant.empty_kernel, 1);
  EXPECT_TRUE(constant.holds());

  const auto dict = degree_one_identities(dictator(), kW23);
  EXPECT_EQ(dict.scaled_singletons[0], 2);
  EXPECT_EQ(dict.influence_gaps[0], 2);
  EXPECT_TRUE(dict.holds());

  const auto a = degree_one_identities(uniform_and(), WeightVector::uniform(2));
  EXPECT_EQ(a.empty_kernel, Rational(-1, 2));
  EXPECT_EQ(a.empty_expected, Rational(-1, 2));
  EXPECT_EQ(a.scaled_singletons[0], 1);
  EXPECT_EQ(a.influence_gaps[0], 1);
}

TEST(InfluenceLevel, Examples) {
  EXPECT_EQ(influence_level_identity_defect(BooleanFunction::constant(2, -1), WeightVector::uniform(2)).defect, 0);
  const auto a = influence_level_identity_defect(uniform_and(), WeightVector::uniform(2));
  EXPECT_EQ(a.defect, 0);
  EXPECT_TRUE(a.exact());
  Rng rng(4);
  EXPECT_TRUE(influence_level_identity_defect(oracle::random_function(3, rng), kMixed).exact());
}

TEST(LowDegree, Examples) {
  EXPECT_EQ(low_degree_bound_margin(BooleanFunction::constant(2, 1), WeightVector::uniform(2), 1), 0);
  EXPECT_EQ(low_degree_bound_margin(uniform_and(), WeightVector::uniform(2), 2), 0);
  EXPECT_THROW(low_degree_bound_margin(uniform_and(), WeightVector::uniform(2), 0), PreconditionError);
  EXPECT_THROW(low_degree_bound_margin(uniform_and(), WeightVector::uniform(2), 3), PreconditionError);
}

TEST(Identities, ExhaustiveUpToDimensionThree) {
  for (int d = 1; d <= 3; ++d) {
    for (const WeightVector& w : weight_corpus(d, 10, 200 + d)) {
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << cube_size(d)); ++t) {
        expect_identities(BooleanFunction::from_table(d, t), w);
      }
    }
  }
}

TEST(Identities, RandomLargerDimensions) {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 4 + trial % 5;
    expect_identities(oracle::random_function(d, rng), random_weights(d, rng, WeightRange::interior));
  }
}

TEST(Orthonormality, KernelFormExhaustive) {
  Rng rng(13);
  for (int d = 1; d <= 3; ++d) {
    const WeightVector w = random_weights(d, rng, WeightRange::interior);
    const auto p = oracle::probs(w);
    for (Mask s = 0; s < cube_size(d); ++s) {
      for (Mask t = 0; t < cube_size(d); ++t) {
        Rational e = 0;
        for (Mask x = 0; x < cube_size(d); ++x) {
          Rational term = oracle::point_mass(x, p);
          for (int i = 0; i < d; ++i) {
            const Rational c = Rational(has_bit(x, i) ? 1 : 0) - p[i];
            if (has_bit(s, i)) term *= c;
            if (has_bit(t, i)) term *= c;
          }
          e += term;
        }
        for (int i = 0; i < d; ++i) {
          if (has_bit(s & t, i)) e *= w.alpha_sq(i);
        }
        EXPECT_EQ(e, s == t ? 1 : 0) << s << ' ' << t;
      }
    }
  }
}
