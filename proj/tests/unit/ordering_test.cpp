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
#include "braidfree/ordering.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

namespace braidfree {
namespace {

TEST(VertexOrderingTest, IdentityMapsEachVertexToItself) {
  const auto ord = VertexOrdering::identity(4);
  for (int v = 0; v < 4; ++v) {
    EXPECT_EQ(ord.vertex_at(v), v);
    EXPECT_EQ(ord.position_of(v), v);
  }
}

TEST(VertexOrderingTest, SequenceAndPositionsAreInverse) {
  const auto ord = VertexOrdering::from_sequence({2, 0, 3, 1});
  EXPECT_EQ(ord.positions(), (std::vector<int>{1, 3, 0, 2}));
  EXPECT_EQ(VertexOrdering::from_positions(ord.positions()), ord);
}

TEST(VertexOrderingTest, RejectsNonPermutations) {
  EXPECT_THROW(VertexOrdering::from_sequence({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(VertexOrdering::from_sequence({0, 3}), std::invalid_argument);
  EXPECT_THROW(VertexOrdering::from_sequence({-1, 0}), std::invalid_argument);
}

TEST(VertexOrderingTest, ComparesBySequence) {
  EXPECT_LT(VertexOrdering::from_sequence({0, 2, 1}), VertexOrdering::from_sequence({1, 0, 2}));
}

TEST(VertexOrderingTest, RelabeledFollowsThePermutation) {
  const auto ord = VertexOrdering::from_sequence({2, 0, 1});
  const std::vector<int> perm = {1, 2, 0};
  EXPECT_EQ(ord.relabeled(perm).sequence(), (std::vector<int>{0, 1, 2}));
}

TEST(LexSearchTest, AcceptAllReturnsIdentity) {
  auto ord = find_lex_smallest_ordering(5, [](std::span<const int>, int) { return true; });
  ASSERT_TRUE(ord);
  EXPECT_EQ(*ord, VertexOrdering::identity(5));
}

TEST(LexSearchTest, RejectAllReturnsNothing) {
  auto ord = find_lex_smallest_ordering(3, [](std::span<const int> prefix, int) { return prefix.size() < 2; });
  EXPECT_FALSE(ord);
}

TEST(LexSearchTest, BacktracksToTheSmallestAcceptedSequence) {
  // Vertex 0 may not be placed after vertex 2.
  auto ord = find_lex_smallest_ordering(3, [](std::span<const int> prefix, int v) {
    if (v != 0) return true;
    for (int u : prefix) {
      if (u == 2) return false;
    }
    return true;
  });
  ASSERT_TRUE(ord);
  EXPECT_EQ(ord->sequence(), (std::vector<int>{0, 1, 2}));

  // Vertex 0 must come last.
  auto last = find_lex_smallest_ordering(3, [](std::span<const int> prefix, int v) {
    return v != 0 || prefix.size() == 2;
  });
  ASSERT_TRUE(last);
  EXPECT_EQ(last->sequence(), (std::vector<int>{1, 2, 0}));
}

}  // namespace
}  // namespace braidfree
