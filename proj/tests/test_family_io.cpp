#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "ucube/family_io.hpp"

using namespace ucube;

TEST(FamilyIo, ParsesCanonicalFile) {
  const SetFamily f = parse_family("d=2\n00\n10\n11\n");
  EXPECT_EQ(f, SetFamily::from_members(2, {0, 1, 3}));
}

TEST(FamilyIo, LeftmostCharacterIsElementOne) {
  const SetFamily f = parse_family("d=3\n100\n");
  EXPECT_TRUE(f.contains(1));
  EXPECT_EQ(format_point(1, 3), "100");
  EXPECT_EQ(format_point(6, 3), "011");
}

TEST(FamilyIo, SkipsBlankAndCommentLines) {
  const SetFamily f = parse_family("# header\n\nd=2\n\n  # note\n01\n\n");
  EXPECT_EQ(f, SetFamily::from_members(2, {2}));
  EXPECT_TRUE(parse_family("d=3\n").empty());
}

TEST(FamilyIo, RejectsMalformedFiles) {
  for (const char* bad : {"", "00\n", "d=2\n00\n00\n", "d=2\n000\n", "d=2\n0\n", "d=2\n02\n", "d=0\n",
                          "d=17\n", "d=x\n", "d=2\nd=2\n"}) {
    EXPECT_THROW(parse_family(bad), ParseError) << bad;
  }
}

TEST(FamilyIo, RoundTripsRandomFamilies) {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const SetFamily f = oracle::random_family(1 + trial % 10, rng);
    EXPECT_EQ(parse_family(format_family(f)), f);
  }
}

TEST(FamilyIo, ParsesFamilyLists) {
  std::stringstream in("d=1\n0\nd=2\n11\n01\nd=1\n");
  const auto list = parse_family_list(in);
  ASSERT_EQ(list.size(), 3U);
  EXPECT_EQ(list[0], SetFamily::from_members(1, {0}));
  EXPECT_EQ(list[1], SetFamily::from_members(2, {2, 3}));
  EXPECT_TRUE(list[2].empty());
}

TEST(FamilyIo, FormatsSets) {
  EXPECT_EQ(format_set(0), "{}");
  EXPECT_EQ(format_set(5), "{1,3}");
}

TEST(FamilyIo, ReadsFilesAndReportsMissingOnes) {
  const auto dir = std::filesystem::temp_directory_path() / "ucube_test_family_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "f.txt";
  std::ofstream(path) << "d=2\n11\n";
  EXPECT_EQ(read_family_file(path), SetFamily::from_members(2, {3}));
  EXPECT_ANY_THROW(read_family_file(dir / "missing.txt"));

  const auto wpath = dir / "w.txt";
  std::ofstream(wpath) << "1/3, 0.5\n";
  EXPECT_EQ(read_weights(wpath.string()), WeightVector({Rational(1, 3), Rational(1, 2)}));
  std::filesystem::remove_all(dir);
}

TEST(Weights, ParseAndFormat) {
  const WeightVector w = parse_weights("2/3,0.75");
  EXPECT_EQ(w, WeightVector({Rational(2, 3), Rational(3, 4)}));
  EXPECT_EQ(format_weights(w), "2/3,3/4");
  EXPECT_EQ(parse_weights(format_weights(w)), w);
  EXPECT_EQ(read_weights("1/2"), WeightVector::uniform(1));
  EXPECT_ANY_THROW(parse_weights(""));
  EXPECT_ANY_THROW(parse_weights("1/2,,1/2"));
  EXPECT_ANY_THROW(parse_weights("3/2"));
}
