// Copyright 2026 The braidfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "braidfree/arrangement.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

namespace braidfree {
namespace {

using Normal = std::vector<std::int64_t>;

TEST(HyperplaneTest, CanonicalForm) {
  const Hyperplane h({-2, 4, 0}, 6);
  EXPECT_EQ(h.normal(), (Normal{1, -2, 0}));
  EXPECT_EQ(h.offset(), -3);
  EXPECT_EQ(Hyperplane({0, -3}, 0), Hyperplane({0, 1}, 0));
  EXPECT_EQ(Hyperplane::difference(3, 1, 0, 2), Hyperplane({-1, 1, 0}, 2));
  EXPECT_EQ(Hyperplane::difference(3, 1, 0, 2).normal(), (Normal{1, -1, 0}));
  EXPECT_EQ(Hyperplane::difference(3, 1, 0, 2).offset(), -2);
  EXPECT_THROW(Hyperplane({0, 0}, 1), std::invalid_argument);
}

TEST(ArrangementTest, DeduplicatesAndValidatesMarker) {
  Arrangement a(2, {Hyperplane({1, 0}, 1), Hyperplane({2, 0}, 2)});
  EXPECT_EQ(a.size(), 1u);
  EXPECT_THROW(Arrangement(2, {Hyperplane({1, 0}, 1)}, Hyperplane({0, 1}, 0)), std::invalid_argument);
  EXPECT_THROW(Arrangement(3, {Hyperplane({1, 0}, 1)}), std::invalid_argument);
}

TEST(BuildDeformationTest, Examples) {
  const Arrangement braid = build_deformation(Digraph(3), 0);
  EXPECT_EQ(braid.size(), 3u);
  EXPECT_TRUE(braid.is_central());
  EXPECT_EQ(braid.dim(), 3);

  const Arrangement catalan = build_deformation(Digraph::complete(3), 0);
  EXPECT_EQ(catalan.size(), 9u);
  for (int c = -1; c <= 1; ++c) EXPECT_TRUE(catalan.contains(Hyperplane::difference(3, 0, 2, c)));

  const Arrangement path = build_deformation(Digraph(3, {{0, 1}, {1, 2}}), 0);
  const Arrangement expected(3, {Hyperplane::difference(3, 0, 1, -1), Hyperplane::difference(3, 0, 1, 0),
                                 Hyperplane::difference(3, 1, 2, -1), Hyperplane::difference(3, 1, 2, 0),
                                 Hyperplane::difference(3, 0, 2, 0)});
  EXPECT_EQ(path, expected);
}

TEST(BuildDeformationTest, DumpIsCanonicalAndSorted) {
  const Arrangement path = build_deformation(Digraph(3, {{0, 1}, {1, 2}}), 0);
  EXPECT_EQ(dump(path),
            "-1 : 0 1 -1\n"
            "0 : 0 1 -1\n"
            "-1 : 1 -1 0\n"
            "0 : 1 -1 0\n"
            "0 : 1 0 -1\n");
}

TEST(BuildDeformationTest, RejectsBadInput) {
  EXPECT_THROW(build_deformation(Digraph(1), 0), std::invalid_argument);
  EXPECT_THROW(build_deformation(Digraph(3), -1), std::invalid_argument);
}

TEST(BuildDeformationTest, HyperplaneCountMatchesOffsetRanges) {
  for (int k = 0; k <= 2; ++k) {
    for (const Digraph& g : enumerate_digraphs(4)) {
      std::size_t expected = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) expected += 2 * k + 1 + g.has_arc(i, j) + g.has_arc(j, i);
      ASSERT_EQ(build_deformation(g, k).size(), expected);
    }
  }
}

TEST(BuildDeformationTest, RelabelingCommutesWithCoordinatePermutation) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 4;
    const Digraph g = digraph_from_code(n, std::uniform_int_distribution<std::uint64_t>(0, digraph_count(n) - 1)(rng));
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    const int k = trial % 3;
    ASSERT_EQ(build_deformation(relabel(g, pi), k), permute_coordinates(build_deformation(g, k), pi));
  }
}

TEST(ConeTest, Examples) {
  const Arrangement c = cone(build_deformation(Digraph(3), 0));
  EXPECT_EQ(c.dim(), 4);
  EXPECT_EQ(c.size(), 4u);
  ASSERT_TRUE(c.marker());
  EXPECT_EQ(*c.marker(), Hyperplane::coordinate(4, 3));
  EXPECT_TRUE(c.is_central());

  const Arrangement single(2, {Hyperplane({1, -1}, -1)});
  const Arrangement cs = cone(single);
  EXPECT_TRUE(cs.contains(Hyperplane({1, -1, 1}, 0)));
  EXPECT_TRUE(cs.contains(Hyperplane({0, 0, 1}, 0)));
  EXPECT_EQ(cs.size(), 2u);
}

TEST(ConeTest, AddsExactlyOneHyperplane) {
  for (int k = 0; k <= 2; ++k) {
    for (const Digraph& g : enumerate_digraphs(3)) {
      const Arrangement a = build_deformation(g, k);
      ASSERT_EQ(cone(a).size(), a.size() + 1);
    }
  }
}

TEST(LocalizeTest, BraidTriple) {
  const Arrangement c = cone(build_deformation(Digraph(4), 0));
  const Arrangement local = localize_triple(c, 0, 1, 2);
  EXPECT_EQ(local.size(), 4u);
  EXPECT_TRUE(local.contains(Hyperplane::difference(5, 0, 1, 0)));
  EXPECT_TRUE(local.contains(Hyperplane::difference(5, 0, 2, 0)));
  EXPECT_TRUE(local.contains(Hyperplane::difference(5, 1, 2, 0)));
  EXPECT_EQ(local.marker(), c.marker());
  EXPECT_EQ(local.dim(), 5);
}

TEST(LocalizeTest, RejectsBadIndicesOrMissingMarker) {
  const Arrangement c = cone(build_deformation(Digraph(4), 0));
  EXPECT_THROW(localize_triple(c, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(localize_triple(c, 0, 1, 9), std::invalid_argument);
  EXPECT_THROW(localize_triple(build_deformation(Digraph(4), 0), 0, 1, 2), std::invalid_argument);
}

TEST(LocalizeTest, MatchesConedInducedDeformation) {
  for (int k = 0; k <= 1; ++k) {
    for (const Digraph& g : enumerate_digraphs(4)) {
      const Arrangement c = cone(build_deformation(g, k));
      for (auto t : {std::array<int, 3>{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}) {
        const Arrangement local = localize_triple(c, t[0], t[1], t[2]);
        const Arrangement small = cone(build_deformation(induced_subgraph(g, t), k));
        ASSERT_EQ(local.size(), small.size());
        const int kept[] = {t[0], t[1], t[2], 4};
        ASSERT_EQ(restrict_coordinates(local, kept), small);
      }
    }
  }
}

TEST(GeneralLocalizeTest, Examples) {
  const Arrangement c = cone(build_deformation(Digraph(4, {{0, 1}, {2, 3}}), 1));
  for (const auto& h : c.hyperplanes()) {
    const Hyperplane flat[] = {h};
    const Arrangement local = general_localize(c, flat);
    ASSERT_EQ(local.size(), 1u);
    ASSERT_TRUE(local.contains(h));
  }
  const Hyperplane triple[] = {Hyperplane::difference(5, 0, 1, 0), Hyperplane::difference(5, 1, 2, 0),
                               *c.marker()};
  EXPECT_EQ(general_localize(c, triple), localize_triple(c, 0, 1, 2));
  EXPECT_TRUE(general_localize(c, {}).empty());

  const Hyperplane marker_only[] = {*c.marker()};
  const Arrangement at_infinity = general_localize(c, marker_only);
  EXPECT_EQ(at_infinity.size(), 1u);
  EXPECT_EQ(at_infinity.marker(), c.marker());
}

TEST(GeneralLocalizeTest, AffineFlat) {
  // The point x = (0, 1, 1) lies on x_0 - x_1 = -1 and x_1 - x_2 = 0 but not
  // on x_0 - x_2 = 1.
  const Arrangement a(3, {Hyperplane::difference(3, 0, 1, -1), Hyperplane::difference(3, 1, 2, 0),
                          Hyperplane::difference(3, 0, 2, 1), Hyperplane::difference(3, 0, 2, -1)});
  const Hyperplane point[] = {Hyperplane({1, 0, 0}, 0), Hyperplane({0, 1, 0}, 1), Hyperplane({0, 0, 1}, 1)};
  const Arrangement local = general_localize(a, point);
  EXPECT_EQ(local.size(), 3u);
  EXPECT_FALSE(local.contains(Hyperplane::difference(3, 0, 2, 1)));
}

TEST(GeneralLocalizeTest, InconsistentFlatIsAnError) {
  const Arrangement a = build_deformation(Digraph(3), 0);
  const Hyperplane bad[] = {Hyperplane::difference(3, 0, 1, 0), Hyperplane::difference(3, 0, 1, 1)};
  EXPECT_THROW(general_localize(a, bad), std::invalid_argument);
}

TEST(RestrictCoordinatesTest, RejectsDroppingAUsedCoordinate) {
  const Arrangement a = build_deformation(Digraph(3), 0);
  const int keep[] = {0, 1};
  EXPECT_THROW(restrict_coordinates(a, keep), std::invalid_argument);
}

}  // namespace
}  // namespace braidfree
