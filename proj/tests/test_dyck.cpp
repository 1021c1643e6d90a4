#include <gtest/gtest.h>

#include <set>

#include "diamonds/dyck.hpp"
#include "diamonds/enumerator.hpp"
#include "diamonds/error.hpp"
#include "diamonds/gfd.hpp"

using namespace diamonds;

namespace {

LatticePath from_heights(std::vector<int> h, int v) { return LatticePath::from_east_heights(h, v); }

const Permutation kRunImage{13, 14, 15, 16, 6, 7, 8, 9, 5, 10, 11, 12, 1, 2, 3, 4};
const Permutation kRepeatImage{11, 12, 13, 14, 4, 5, 6, 7, 8, 9, 10, 15, 1, 2, 3, 16};

}  // namespace

TEST(Dyck, Counts) {
  EXPECT_EQ(all_paths(4, 2).size(), 5u);
  EXPECT_EQ(all_paths(5, 2).size(), 6u);
  const auto one = all_paths(4, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].steps(), "ENNNN");
  for (int v = 1; v <= 5; ++v) {
    for (int d = 1; d <= 4; ++d) EXPECT_EQ(BigInt(all_paths(v, d).size()), fuss_catalan_count(v, d));
  }
  EXPECT_THROW(all_paths(4, 4, 10), BoundExceeded);
}

TEST(Dyck, ParseAndValidity) {
  EXPECT_THROW(LatticePath::parse("ENX"), ParseError);
  EXPECT_TRUE(LatticePath::parse("ENNNN").is_valid(4, 1));
  EXPECT_FALSE(LatticePath::parse("NENNN").is_valid(4, 1));
  EXPECT_FALSE(LatticePath::parse("ENNN").is_valid(4, 1));
  EXPECT_EQ(from_heights({0, 4, 5, 12}, 4).east_heights(), (std::vector<int>{0, 4, 5, 12}));
}

TEST(Dyck, WorkedStatistics) {
  EXPECT_EQ(path_statistics(from_heights({0, 4, 5, 12}, 4), 4, 4), (PathStats{3, 3, 7}));
  // 11..14 then 4..10, 15, 16 is increasing of length 9, matching height 9
  EXPECT_EQ(path_statistics(from_heights({0, 3, 3, 10}, 4), 4, 4), (PathStats{1, 2, 9}));
  EXPECT_EQ(lis(kRepeatImage), 9);
  EXPECT_EQ(descents(kRepeatImage), 2);
}

TEST(Dyck, WorkedImages) {
  EXPECT_EQ(associated_permutation(phi_map(from_heights({0, 4, 5, 12}, 4), 4, 4)), kRunImage);
  EXPECT_EQ(associated_permutation(phi_map(from_heights({0, 3, 3, 10}, 4), 4, 4)), kRepeatImage);
}

TEST(Dyck, WorkedInverses) {
  const auto shape = SystemShape::make(4, 4);
  EXPECT_EQ(phi_inverse(system_from_permutation(shape, kRunImage)).east_heights(),
            (std::vector<int>{0, 4, 5, 12}));
  EXPECT_EQ(phi_inverse(system_from_permutation(shape, kRepeatImage)).east_heights(),
            (std::vector<int>{0, 3, 3, 10}));
}

TEST(Dyck, InverseRejects132) {
  const auto s = system_from_permutation(SystemShape::make(4, 1), Permutation{1, 3, 2, 4});
  EXPECT_THROW(phi_inverse(s), Not132Avoider);
  EXPECT_THROW(phi_map(LatticePath::parse("NENNN"), 4, 1), DomainError);
}

TEST(Dyck, BijectionAndTransport) {
  for (auto [v, d] : {std::pair{4, 1}, {4, 2}, {4, 3}, {5, 2}, {3, 3}, {6, 2}}) {
    std::set<Permutation> images;
    for (const auto& p : all_paths(v, d)) {
      const auto system = phi_map(p, v, d);
      ASSERT_FALSE(validate_system(system));
      const auto perm = associated_permutation(system);
      ASSERT_FALSE(contains(perm, Pattern{1, 3, 2}));
      const auto stats = path_statistics(p, v, d);
      ASSERT_EQ(stats.touchpoints, rlmax(perm)) << p.steps();
      ASSERT_EQ(stats.corners, descents(perm)) << p.steps();
      ASSERT_EQ(stats.height, lis(perm)) << p.steps();
      ASSERT_EQ(phi_inverse(system), p);
      images.insert(perm);
    }
    std::set<Permutation> avoiders;
    for (const auto& s : collect_avoiders(SystemShape::make(v, d), PatternSet::parse("132"))) {
      avoiders.insert(associated_permutation(s));
    }
    EXPECT_EQ(images, avoiders) << v << "," << d;
  }
}

TEST(Dyck, CornersPolynomial) {
  for (auto [v, d] : {std::pair{4, 3}, {5, 2}, {2, 4}}) {
    std::vector<std::uint64_t> hist;
    for (const auto& p : all_paths(v, d)) {
      const auto c = static_cast<std::size_t>(path_statistics(p, v, d).corners);
      if (hist.size() <= c) hist.resize(c + 1);
      ++hist[c];
    }
    EXPECT_EQ(corners_polynomial(v, d), DescentPoly::from_counts(hist));
  }
}
