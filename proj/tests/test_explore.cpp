#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "ucube/explore.hpp"
#include "ucube/family_io.hpp"
#include "ucube/verify.hpp"

using namespace ucube;

TEST(Enumerate, UnionClosedCounts) {
  EXPECT_EQ(enumerate_families(1, FamilyFilter::union_closed).size(), 4U);
  EXPECT_EQ(enumerate_families(2, FamilyFilter::union_closed).size(), 14U);
  EXPECT_EQ(enumerate_families(3, FamilyFilter::union_closed).size(), oracle::naive_union_closed_count(3));
  EXPECT_EQ(oracle::naive_union_closed_count(3), 122U);
}

TEST(Enumerate, StreamMatchesCollectedAndIsAscending) {
  const FamilyFilter filter = FamilyFilter::union_closed | FamilyFilter::contains_empty;
  EnumerationStream stream(3, filter);
  std::vector<SetFamily> streamed;
  while (auto f = stream.next()) streamed.push_back(*f);
  EXPECT_EQ(streamed, enumerate_families(3, filter));
  EXPECT_TRUE(std::is_sorted(streamed.begin(), streamed.end()));
  EXPECT_EQ(std::adjacent_find(streamed.begin(), streamed.end()), streamed.end());
  for (const auto& f : streamed) EXPECT_TRUE(f.contains(0));
}

TEST(Enumerate, JobsDoNotChangeOutput) {
  const auto one = enumerate_families(4, FamilyFilter::union_closed, 1);
  EXPECT_EQ(enumerate_families(4, FamilyFilter::union_closed, 3), one);
  EXPECT_EQ(one.size(), 4960U);
}

TEST(Enumerate, SimplyRootedIsComplementOfUnionClosed) {
  for (int d = 1; d <= 3; ++d) {
    std::set<SetFamily> complements;
    for (const auto& g : enumerate_families(d, FamilyFilter::union_closed)) complements.insert(complement_family(g));
    const auto rooted = enumerate_families(d, FamilyFilter::simply_rooted);
    EXPECT_EQ(std::set<SetFamily>(rooted.begin(), rooted.end()), complements);
  }
}

TEST(Enumerate, RejectsLargeDimensions) {
  EXPECT_THROW(EnumerationStream(5, FamilyFilter::none), PreconditionError);
  EXPECT_THROW(EnumerationStream(0, FamilyFilter::none), PreconditionError);
}

TEST(Filter, Parsing) {
  EXPECT_EQ(parse_filter("union-closed,contains-empty"), FamilyFilter::union_closed | FamilyFilter::contains_empty);
  EXPECT_EQ(parse_filter("all"), FamilyFilter::none);
  EXPECT_ANY_THROW(parse_filter("bogus"));
  EXPECT_FALSE(passes(SetFamily::from_members(2, {0}), FamilyFilter::has_nonempty_member));
}

TEST(UnionClosure, Examples) {
  const std::vector<Mask> two{1, 2};
  EXPECT_EQ(union_closure(2, two), SetFamily::from_members(2, {1, 2, 3}));
  EXPECT_TRUE(union_closure(2, {}).empty());
  const std::vector<Mask> three{1, 2, 4};
  const SetFamily c = union_closure(3, three);
  EXPECT_EQ(c.size(), 7U);
  EXPECT_FALSE(c.contains(0));
}

TEST(UnionClosure, Properties) {
  Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 7;
    std::vector<Mask> gens;
    for (std::uint64_t k = rng.below(6); k > 0; --k) gens.push_back(static_cast<Mask>(rng.below(cube_size(d))));
    const SetFamily c = union_closure(d, gens);
    ASSERT_TRUE(is_union_closed(c));
    for (Mask g : gens) ASSERT_TRUE(c.contains(g));
    const auto members = c.members();
    ASSERT_EQ(union_closure(d, members), c);
  }
  for (const auto& f : enumerate_families(3, FamilyFilter::union_closed)) {
    const auto members = f.members();
    ASSERT_EQ(union_closure(3, members), f);
  }
}

TEST(Sampling, DeterministicBiases) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    EXPECT_EQ(sample_point(WeightVector({Rational(1), Rational(1)}), seed), Mask{3});
    EXPECT_EQ(sample_point(WeightVector({Rational(0), Rational(0)}), seed), Mask{0});
  }
  const WeightVector w({Rational(1, 3), Rational(5, 7)});
  EXPECT_EQ(sample_point(w, 42), sample_point(w, 42));
}

TEST(Sampling, FrequenciesWithinThreeSigma) {
  const WeightVector w({Rational(1, 2), Rational(1, 3), Rational(9, 10)});
  Rng rng(12345);
  const PointSampler sampler(w);
  constexpr int n = 100000;
  std::array<int, 3> counts{};
  for (int k = 0; k < n; ++k) {
    const Mask x = sampler(rng);
    for (int i = 0; i < 3; ++i) counts[static_cast<std::size_t>(i)] += has_bit(x, i);
  }
  for (int i = 0; i < 3; ++i) {
    const double p = to_double(w.p(i));
    const double sigma = std::sqrt(p * (1 - p) / n);
    EXPECT_LT(std::abs(counts[static_cast<std::size_t>(i)] / double(n) - p), 3 * sigma) << i;
  }
}

TEST(Rng, BernoulliOnHugeDenominators) {
  // Denominator beyond 64 bits takes the bit-comparison path.
  const Rational p = Rational(1, 3) + Rational(1) / pow2(80);
  Rng rng(3);
  int hits = 0;
  constexpr int n = 30000;
  for (int k = 0; k < n; ++k) hits += rng.bernoulli(p);
  EXPECT_NEAR(hits / double(n), 1.0 / 3.0, 4 * std::sqrt(2.0 / 9.0 / n));
  EXPECT_TRUE(rng.bernoulli(Rational(1)));
  EXPECT_FALSE(rng.bernoulli(Rational(0)));
}

TEST(Rng, BelowIsInRangeAndReproducible) {
  Rng a(7), b(7);
  for (int k = 0; k < 1000; ++k) {
    const auto x = a.below(10);
    EXPECT_LT(x, 10U);
    EXPECT_EQ(x, b.below(10));
  }
  EXPECT_EQ(Rng(5).below(1), 0U);
}

TEST(Rng, RandomWeightsRespectRange) {
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const WeightVector w = random_weights(4, rng, WeightRange::at_least_half, 9);
    EXPECT_TRUE(w.all_at_least_half());
    EXPECT_TRUE(w.all_below_one());
    for (int i = 0; i < 4; ++i) EXPECT_LE(w.p(i).get_den(), 9);
    EXPECT_TRUE(random_weights(3, rng, WeightRange::interior).is_interior());
  }
}

TEST(MonteCarlo, Examples) {
  const WeightVector w({Rational(2, 3), Rational(3, 4)});
  const auto full = monte_carlo_measure(SetFamily::full(2), w, 1000, 1);
  EXPECT_EQ(full.estimate, 1.0);
  EXPECT_EQ(full.standard_error, 0.0);
  EXPECT_EQ(monte_carlo_measure(SetFamily(2), w, 1000, 1).estimate, 0.0);

  const auto chain = monte_carlo_measure(SetFamily::from_members(2, {0, 1, 3}), w, 100000, 9);
  EXPECT_EQ(chain.draws, 100000U);
  EXPECT_LT(std::abs(chain.estimate - 0.75), 3 * chain.standard_error);
  EXPECT_THROW(monte_carlo_measure(SetFamily::full(2), w, 0, 1), PreconditionError);
}

TEST(MonteCarlo, ConvergesOverSeeds) {
  Rng rng(55);
  const SetFamily f = oracle::random_family(5, rng);
  const WeightVector w = random_weights(5, rng, WeightRange::interior);
  const double exact = to_double(family_measure(f, w));
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto est = monte_carlo_measure(f, w, 4000, seed);
    if (std::abs(est.estimate - exact) < 5 * est.standard_error) ++good;
  }
  EXPECT_GE(good, 99);
}

TEST(Search, BudgetZeroReturnsInitialObjective) {
  const WeightVector w = WeightVector::uniform(3);
  const SearchResult r = search_min_ratio(w, 0, 11);
  EXPECT_EQ(r.moves, 0U);
  EXPECT_EQ(r.seed, 11U);
  SetFamily closed = union_closure(3, r.generators);
  closed.insert(0);
  EXPECT_EQ(r.best, closed);
  if (r.objective) EXPECT_EQ(*r.objective, *weighted_frankl_ratio(r.best, MeasureTable(w)));
}

TEST(Search, ObjectiveIsRecomputableAndDeterministic) {
  const WeightVector w({Rational(2, 3), Rational(3, 5), Rational(4, 7)});
  const SearchResult a = search_min_ratio(w, 300, 4);
  const SearchResult b = search_min_ratio(w, 300, 4);
  ASSERT_TRUE(a.objective);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.objective, b.objective);
  EXPECT_EQ(*a.objective, *weighted_frankl_ratio(a.best, MeasureTable(w)));
  EXPECT_TRUE(is_union_closed(a.best));
  EXPECT_TRUE(a.best.has_nonempty_member());
}

TEST(Search, DimensionOneBestRatioIsHalf) {
  const SearchResult r = search_min_ratio(WeightVector::uniform(1), 50, 1, {.include_empty = false});
  ASSERT_TRUE(r.objective);
  EXPECT_EQ(*r.objective, 1);
  const SearchResult e = search_min_ratio(WeightVector::uniform(1), 50, 1);
  ASSERT_TRUE(e.objective);
  EXPECT_EQ(*e.objective, Rational(1, 2));
}

TEST(Search, NeverBeatsExhaustiveMinimum) {
  Rng rng(21);
  for (int d = 2; d <= 3; ++d) {
    for (int k = 0; k < 3; ++k) {
      const WeightVector w = k == 0 ? WeightVector::uniform(d) : random_weights(d, rng, WeightRange::interior);
      const MeasureTable mu(w);
      for (bool constrained : {false, true}) {
        for (bool with_empty : {false, true}) {
          // The search space: closures of nonempty generators, optionally plus the empty set.
          std::optional<Rational> best;
          for (const auto& f :
               enumerate_families(d, FamilyFilter::union_closed | FamilyFilter::has_nonempty_member)) {
            if (f.contains(0) != with_empty) continue;
            if (constrained && mu.measure(f) < w.q_max()) continue;
            const auto r = weighted_frankl_ratio(f, mu);
            if (r && (!best || *r < *best)) best = r;
          }
          SearchOptions opts;
          opts.require_hypothesis = constrained;
          opts.include_empty = with_empty;
          const SearchResult s = search_min_ratio(w, 400, 7 + static_cast<std::uint64_t>(k), opts);
          if (!best) {
            EXPECT_FALSE(s.objective);
            continue;
          }
          ASSERT_TRUE(s.objective) << format_weights(w) << ' ' << constrained << with_empty;
          EXPECT_GE(*s.objective, *best);
          if (d == 2 && k == 0) EXPECT_GE(*s.objective, Rational(1, 2));
        }
      }
    }
  }
}
