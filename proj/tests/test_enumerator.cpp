#include <gtest/gtest.h>

#include <set>

#include "diamonds/enumerator.hpp"
#include "diamonds/error.hpp"
#include "oracle.hpp"

using namespace diamonds;

namespace {

std::vector<std::vector<int>> to_vectors(const PatternSet& set) {
  std::vector<std::vector<int>> out;
  for (const auto& p : set.patterns()) out.emplace_back(p.begin(), p.end());
  return out;
}

std::vector<std::vector<int>> library_avoiders(const SystemShape& shape, const PatternSet& set) {
  std::vector<std::vector<int>> out;
  for_each_avoider(shape, set, [&](std::span<const int> p) { out.emplace_back(p.begin(), p.end()); });
  return out;
}

}  // namespace

TEST(Enumerator, SystemCounts) {
  std::vector<std::string> perms;
  generate_systems(SystemShape::make(4, 1), [&](const LabelledSystem& s) {
    perms.push_back(associated_permutation(s).to_string());
  });
  EXPECT_EQ(perms, (std::vector<std::string>{"1 2 3 4", "1 3 2 4"}));

  int n = 0;
  generate_systems(SystemShape::make(4, 2), [&](const LabelledSystem&) { ++n; });
  EXPECT_EQ(n, 280);
  n = 0;
  generate_systems(SystemShape::make(5, 1), [&](const LabelledSystem&) { ++n; });
  EXPECT_EQ(n, 6);
}

TEST(Enumerator, LabelBound) {
  SearchLimits limits;
  limits.max_labels = 8;
  EXPECT_THROW(generate_systems(SystemShape::make(4, 3), [](const LabelledSystem&) {}, limits),
               BoundExceeded);
}

TEST(Enumerator, AvoiderBound) {
  SearchLimits limits;
  limits.max_avoiders = 100;
  EXPECT_THROW(count_avoiders_brute(SystemShape::make(4, 3), PatternSet::parse("321"), limits),
               BoundExceeded);
}

TEST(Enumerator, D42Avoiding213) {
  std::vector<std::string> perms;
  for (const auto& s : collect_avoiders(SystemShape::make(4, 2), PatternSet::parse("213"))) {
    perms.push_back(associated_permutation(s).compact());
  }
  const std::set<std::string> got(perms.begin(), perms.end());
  const std::set<std::string> want{"12345678", "12384567", "12783456", "16782345", "56781234"};
  EXPECT_EQ(got, want);
  EXPECT_EQ(perms.size(), 5u);
}

TEST(Enumerator, Avoid123IsEmpty) {
  for (int d = 1; d <= 3; ++d) {
    EXPECT_EQ(count_avoiders_brute(SystemShape::make(4, d), PatternSet::parse("123")), 0);
  }
}

TEST(Enumerator, PartialShapeAlphaExample) {
  const auto shape = SystemShape::make(5, 1, 1);
  EXPECT_EQ(count_avoiders_brute(shape, PatternSet::parse("231")), 10);
  EXPECT_EQ(descent_poly_brute(shape, PatternSet::parse("231")), DescentPoly({1, 4, 4, 1}));
}

TEST(Enumerator, KnownValues) {
  EXPECT_EQ(count_avoiders_brute(SystemShape::make(4, 2), PatternSet::parse("231:321")), 14);
  EXPECT_EQ(count_avoiders_brute(SystemShape::make(4, 1), PatternSet{}), 2);
  EXPECT_EQ(descent_poly_brute(SystemShape::make(4, 2), PatternSet::parse("213")),
            DescentPoly({1, 4}));
  EXPECT_EQ(descent_poly_brute(SystemShape::make(4, 2), PatternSet::parse("321")),
            DescentPoly({1, 71, 29, 5}));
}

TEST(Enumerator, LexicographicOrder) {
  const auto got = library_avoiders(SystemShape::make(4, 2), PatternSet::parse("312"));
  EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
}

// Full agreement with next_permutation + exhaustive subsequence scan.
TEST(Enumerator, MatchesOracleOnAllSubsets) {
  const std::vector<std::tuple<int, int, int>> shapes{{4, 1, 0}, {4, 2, 0}, {5, 1, 0},
                                                      {4, 1, 2}, {5, 1, 3}, {3, 2, 0},
                                                      {3, 2, 1}};
  for (const auto& [v, full, j] : shapes) {
    const auto shape = j ? SystemShape::make(v, full, j) : SystemShape::make(v, full);
    for (const auto& set : PatternSet::all_subsets_of_s3()) {
      const auto want = oracle::avoiders(oracle::blocks(v, full, j), v, to_vectors(set));
      ASSERT_EQ(library_avoiders(shape, set), want) << shape.to_string() << " " << set.to_string();
      ASSERT_EQ(descent_poly_brute(shape, set),
                DescentPoly::from_counts(
                    oracle::descent_histogram(oracle::blocks(v, full, j), v, to_vectors(set))));
    }
  }
}

TEST(Enumerator, LongerPatterns) {
  const auto shape = SystemShape::make(4, 2);
  for (const char* text : {"1324", "2143", "4321:1234", "3412"}) {
    const auto set = PatternSet::parse(text);
    EXPECT_EQ(library_avoiders(shape, set), oracle::avoiders({4, 4}, 4, to_vectors(set))) << text;
  }
}

TEST(Enumerator, ParallelMatchesSerial) {
  SearchLimits parallel;
  parallel.workers = 4;
  for (const char* text : {"321", "231", "none", "132:321"}) {
    const auto set = PatternSet::parse(text);
    const auto shape = SystemShape::make(4, 3);
    EXPECT_EQ(descent_poly_brute(shape, set, parallel), descent_poly_brute(shape, set)) << text;
  }
  const auto partial = SystemShape::make(5, 1, 3);
  EXPECT_EQ(descent_poly_brute(partial, PatternSet::parse("231"), parallel),
            descent_poly_brute(partial, PatternSet::parse("231")));
}
