#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ucube/cube.hpp"
#include "ucube/explore.hpp"

using namespace ucube;

namespace {

// Coordinates are zero-based; {1,2} is mask 0b11.
constexpr Mask kEmpty = 0, k1 = 1, k2 = 2, k12 = 3;

WeightVector w23_34() { return WeightVector({Rational(2, 3), Rational(3, 4)}); }

}  // namespace

TEST(WeightVector, DerivedQuantities) {
  const WeightVector w = w23_34();
  EXPECT_EQ(w.dimension(), 2);
  EXPECT_EQ(w.q(0), Rational(1, 3));
  EXPECT_EQ(w.alpha_sq(0), Rational(9, 2));
  EXPECT_EQ(w.big_q(1), Rational(4));
  EXPECT_EQ(w.big_q_total(), Rational(12));
  EXPECT_EQ(w.p_min(), Rational(2, 3));
  EXPECT_EQ(w.q_max(), Rational(1, 3));
  EXPECT_TRUE(w.is_interior());
  EXPECT_TRUE(w.all_at_least_half());
}

TEST(WeightVector, ExactInvariantsOnRandomWeights) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightVector w = random_weights(1 + trial % 8, rng, WeightRange::interior);
    Rational q_prod = 1;
    for (int i = 0; i < w.dimension(); ++i) {
      EXPECT_EQ(w.p(i) + w.q(i), 1);
      EXPECT_EQ(w.alpha_sq(i) * w.p(i) * w.q(i), 1);
      q_prod *= w.q(i);
    }
    EXPECT_EQ(w.big_q_total() * q_prod, 1);
  }
}

TEST(WeightVector, RejectsBadInput) {
  EXPECT_THROW(WeightVector({}), PreconditionError);
  EXPECT_THROW(WeightVector({Rational(3, 2)}), PreconditionError);
  EXPECT_THROW(WeightVector({Rational(-1, 2)}), PreconditionError);
  EXPECT_THROW(WeightVector(std::vector<Rational>(17, Rational(1, 2))), PreconditionError);
  const WeightVector boundary({Rational(0), Rational(1)});
  EXPECT_FALSE(boundary.is_interior());
  EXPECT_THROW(boundary.alpha_sq(0), PreconditionError);
  EXPECT_THROW(boundary.big_q(1), PreconditionError);
  EXPECT_EQ(boundary.big_q(0), 1);
}

TEST(PointMeasure, Examples) {
  EXPECT_EQ(point_measure(kEmpty, WeightVector::uniform(2)), Rational(1, 4));
  EXPECT_EQ(point_measure(k12, w23_34()), Rational(1, 2));
  EXPECT_EQ(point_measure(kEmpty, w23_34()), Rational(1, 12));
  EXPECT_THROW(point_measure(4, w23_34()), PreconditionError);
}

TEST(PointMeasure, SumsToOneOverTheCube) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightVector w = random_weights(1 + trial % 8, rng, WeightRange::interior);
    Rational total = 0;
    for (Mask x = 0; x < cube_size(w.dimension()); ++x) total += point_measure(x, w);
    EXPECT_EQ(total, 1);
    const MeasureTable table(w);
    for (Mask x = 0; x < cube_size(w.dimension()); ++x) EXPECT_EQ(table[x], oracle::point_mass(x, oracle::probs(w)));
  }
}

TEST(FamilyMeasure, Examples) {
  const SetFamily f = SetFamily::from_members(2, {kEmpty, k1, k12});
  EXPECT_EQ(family_measure(SetFamily::full(3), WeightVector({Rational(1, 5), Rational(2, 7), Rational(5, 6)})), 1);
  EXPECT_EQ(family_measure(f, WeightVector::uniform(2)), Rational(3, 4));
  EXPECT_EQ(family_measure(f, w23_34()), Rational(3, 4));
  EXPECT_THROW(family_measure(f, WeightVector::uniform(3)), PreconditionError);
}

TEST(FamilyMeasure, ComplementAddsToOne) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + trial % 6;
    const SetFamily f = oracle::random_family(d, rng);
    const WeightVector w = random_weights(d, rng, WeightRange::interior);
    EXPECT_EQ(family_measure(f, w) + family_measure(complement_family(f), w), 1);
    EXPECT_EQ(MeasureTable(w).measure(f), family_measure(f, w));
  }
}

TEST(Subfamily, Examples) {
  const SetFamily f = SetFamily::from_members(2, {kEmpty, k1, k12});
  EXPECT_EQ(subfamily_containing(f, 0), SetFamily::from_members(2, {k1, k12}));
  EXPECT_EQ(subfamily_containing(f, 1), SetFamily::from_members(2, {k12}));
  EXPECT_TRUE(subfamily_containing(SetFamily::from_members(1, {kEmpty}), 0).empty());
  EXPECT_THROW(subfamily_containing(f, 2), PreconditionError);
  EXPECT_THROW(subfamily_containing(f, -1), PreconditionError);
}

TEST(SetCoordinate, Examples) {
  EXPECT_EQ(set_coordinate(k12, 0, false, 2), k2);
  EXPECT_EQ(set_coordinate(k2, 1, true, 2), k2);
  EXPECT_EQ(set_coordinate(kEmpty, 2, true, 3), Mask{4});
  EXPECT_THROW(set_coordinate(kEmpty, 3, true, 3), PreconditionError);
}

TEST(UnionClosed, Examples) {
  EXPECT_TRUE(is_union_closed(SetFamily::from_members(2, {k1, k2, k12})));
  EXPECT_FALSE(is_union_closed(SetFamily::from_members(2, {k1, k2})));
  EXPECT_TRUE(is_union_closed(SetFamily::from_members(2, {kEmpty})));
  EXPECT_TRUE(is_union_closed(SetFamily(3)));
}

TEST(SimplyRooted, Examples) {
  EXPECT_TRUE(is_simply_rooted(SetFamily::from_members(2, {k2})));
  EXPECT_TRUE(is_simply_rooted(SetFamily::full(3)));
  EXPECT_FALSE(is_simply_rooted(SetFamily::from_members(2, {kEmpty, k12})));
}

TEST(Complement, ExamplesAndInvolution) {
  EXPECT_TRUE(complement_family(SetFamily::full(4)).empty());
  EXPECT_EQ(complement_family(SetFamily::from_members(2, {kEmpty, k1, k12})), SetFamily::from_members(2, {k2}));
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const SetFamily f = oracle::random_family(1 + trial % 9, rng);
    EXPECT_EQ(complement_family(complement_family(f)), f);
    EXPECT_EQ(complement_family(f).size() + f.size(), cube_size(f.dimension()));
  }
}

TEST(MissingLowerNeighbors, Examples) {
  EXPECT_EQ(missing_lower_neighbors(SetFamily::from_members(2, {k2}), k2), std::vector<int>{1});
  EXPECT_TRUE(missing_lower_neighbors(SetFamily::full(3), 7).empty());
  EXPECT_TRUE(missing_lower_neighbors(SetFamily::from_members(2, {k1, k2, k12}), k12).empty());
  EXPECT_THROW(missing_lower_neighbors(SetFamily::from_members(2, {k2}), k1), PreconditionError);
}

TEST(Structure, SimplyRootedIsComplementUnionClosedExhaustive) {
  for (int d = 1; d <= 3; ++d) {
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << cube_size(d)); ++t) {
      const SetFamily f = SetFamily::from_table(d, t);
      EXPECT_EQ(is_simply_rooted(f), oracle::naive_union_closed(oracle::member_set(complement_family(f))));
      EXPECT_EQ(is_union_closed(f), oracle::naive_union_closed(oracle::member_set(f)));
    }
  }
}

TEST(Structure, SimplyRootedMembersMissAtMostOneLowerNeighbourExhaustive) {
  for (int d = 1; d <= 4; ++d) {
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << cube_size(d)); ++t) {
      const SetFamily f = SetFamily::from_table(d, t);
      if (!is_simply_rooted(f)) continue;
      f.for_each([&](Mask x) { ASSERT_LE(missing_lower_neighbors(f, x).size(), 1U); });
    }
  }
}

TEST(Structure, MonotoneDualityOfSubfamilyMeasures) {
  Rng rng(19);
  for (const SetFamily& g : enumerate_families(3, FamilyFilter::union_closed)) {
    const WeightVector w = random_weights(3, rng, WeightRange::interior);
    const SetFamily gc = complement_family(g);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(family_measure(subfamily_containing(g, i), w),
                w.p(i) - family_measure(subfamily_containing(gc, i), w));
    }
  }
}

TEST(SetFamily, TableOrderAndBookkeeping) {
  SetFamily f(7);
  f.insert(0);
  f.insert(100);
  f.insert(100);
  EXPECT_EQ(f.size(), 2U);
  EXPECT_EQ(f.members(), (std::vector<Mask>{0, 100}));
  f.erase(0);
  EXPECT_EQ(f.size(), 1U);
  EXPECT_THROW(f.insert(128), PreconditionError);
  EXPECT_LT(SetFamily::from_table(2, 5), SetFamily::from_table(2, 6));
  EXPECT_EQ(SetFamily::full(7).size(), 128U);
  EXPECT_EQ(dictator_coordinate(SetFamily::from_members(2, {k2, k12})), 1);
  EXPECT_EQ(dictator_coordinate(SetFamily::from_members(2, {k1, k12})), 0);
  EXPECT_FALSE(dictator_coordinate(SetFamily::from_members(2, {k1, k2})));
}
