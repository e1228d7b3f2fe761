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
#include "braidfree/charpoly.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "unit/oracles.hpp"

namespace braidfree {
namespace {

std::vector<oracle::Affine> affine(const Arrangement& a) {
  std::vector<oracle::Affine> out;
  for (const auto& h : a.hyperplanes()) out.push_back({h.normal(), h.offset()});
  return out;
}

// chi via the naive counter and Lagrange through the first dim+1 primes above
// the reduction bound.
IntPolynomial oracle_chi(const Arrangement& a) {
  std::vector<std::int64_t> xs, ys;
  std::uint64_t q = reduction_bound(a);
  for (int i = 0; i <= a.dim(); ++i) {
    q = next_prime(q);
    xs.push_back(static_cast<std::int64_t>(q));
    ys.push_back(static_cast<std::int64_t>(oracle::naive_complement_count(a.dim(), affine(a), q)));
  }
  auto coeffs = oracle::lagrange(xs, ys);
  EXPECT_TRUE(coeffs.has_value());
  return IntPolynomial(*coeffs);
}

TEST(PrimeTest, Basics) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(23));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(25));
  EXPECT_EQ(next_prime(7), 11u);
  EXPECT_EQ(next_prime(1), 2u);
}

TEST(ReductionBoundTest, IsTheLargerOfDimAndTwiceTheEntryBoundPlusOne) {
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(reduction_bound(build_deformation(Digraph::complete(3), k)), std::uint64_t(2 * k + 3));
    EXPECT_EQ(reduction_bound(cone(build_deformation(Digraph::complete(3), k))), std::uint64_t(std::max(4, 2 * k + 3)));
  }
  EXPECT_EQ(reduction_bound(build_deformation(Digraph(5), 0)), 5u);
}

TEST(CountComplementTest, Examples) {
  EXPECT_EQ(count_complement_points(Arrangement(2), 5).count, 25u);
  EXPECT_EQ(count_complement_points(Arrangement(1, {Hyperplane::coordinate(1, 0)}), 7).count, 6u);

  // Injective triples over F_5, by direct enumeration.
  std::uint64_t injective = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c) injective += (a != b && b != c && a != c);
  EXPECT_EQ(injective, 60u);
  EXPECT_EQ(count_complement_points(build_deformation(Digraph(3), 0), 5).count, injective);
}

TEST(CountComplementTest, RejectsBadPrimes) {
  const Arrangement a = build_deformation(Digraph::complete(3), 1);  // bound 5
  EXPECT_THROW(count_complement_points(a, 9), std::invalid_argument);
  EXPECT_THROW(count_complement_points(a, 5), std::invalid_argument);
  EXPECT_NO_THROW(count_complement_points(a, 7));
}

TEST(CountComplementTest, BudgetIsEnforced) {
  std::vector<Hyperplane> hs;
  for (int i = 0; i < 7; ++i) hs.push_back(Hyperplane::coordinate(7, i));
  const Arrangement a(7, hs);
  EXPECT_THROW(count_complement_points(a, 23), ResourceError);
}

TEST(CountComplementTest, AgreesWithNaiveCountOnRandomArrangements) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const int dim = 1 + trial % 4;
    const int count = trial % 7;
    std::vector<Hyperplane> hs;
    for (int h = 0; h < count; ++h) {
      std::vector<std::int64_t> normal(dim);
      bool nonzero = false;
      for (auto& v : normal) {
        v = entry(rng);
        nonzero = nonzero || v != 0;
      }
      if (!nonzero) normal[0] = 1;
      hs.emplace_back(std::move(normal), entry(rng));
    }
    const Arrangement a(dim, hs);
    const std::uint64_t q = next_prime(reduction_bound(a) + trial % 5);
    ASSERT_EQ(count_complement_points(a, q).count, oracle::naive_complement_count(dim, affine(a), q))
        << "trial " << trial << "\n" << dump(a);
  }
}

TEST(CharacteristicPolynomialTest, LemmaExamples) {
  EXPECT_EQ(characteristic_polynomial(build_deformation(Digraph(3, {{0, 1}, {1, 2}}), 0)),
            IntPolynomial({0, 7, -5, 1}));
  EXPECT_EQ(characteristic_polynomial(build_deformation(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), 1)),
            IntPolynomial({0, 38, -12, 1}));
}

TEST(CharacteristicPolynomialTest, EmptyArrangementIsAPowerOfT) {
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(characteristic_polynomial(Arrangement(d)), IntPolynomial::monomial(d));
}

TEST(CharacteristicPolynomialTest, BraidArrangementIsAFallingFactorial) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::int64_t> roots(n);
    std::iota(roots.begin(), roots.end(), 0);
    EXPECT_EQ(characteristic_polynomial(build_deformation(Digraph(n), 0)), IntPolynomial::from_roots(roots));
  }
}

TEST(CharacteristicPolynomialTest, MatchesIndependentOracleOnThreeVertices) {
  for (int k = 0; k <= 1; ++k) {
    for (std::uint64_t code : {0u, 3u, 21u, 42u, 63u}) {
      const Arrangement a = build_deformation(digraph_from_code(3, code), k);
      EXPECT_EQ(characteristic_polynomial(a), oracle_chi(a)) << "code " << code << " k " << k;
      EXPECT_EQ(characteristic_polynomial(cone(a)), oracle_chi(cone(a))) << "code " << code << " k " << k;
    }
  }
}

TEST(CharacteristicPolynomialTest, TraceUsesDimPlusOnePrimesAndAFreshCheck) {
  const Arrangement a = cone(build_deformation(Digraph::complete(3), 0));
  const CharpolyTrace t = characteristic_polynomial_traced(a);
  EXPECT_EQ(t.fit.size(), static_cast<std::size_t>(a.dim() + 1));
  EXPECT_EQ(t.escalations, 0);
  for (const auto& e : t.fit) {
    EXPECT_GT(e.q, reduction_bound(a));
    EXPECT_LT(e.q, t.check.q);
    EXPECT_EQ(t.chi.evaluate(static_cast<std::int64_t>(e.q)), static_cast<std::int64_t>(e.count));
  }
  EXPECT_EQ(t.chi.evaluate(static_cast<std::int64_t>(t.check.q)), static_cast<std::int64_t>(t.check.count));
}

TEST(CharacteristicPolynomialTest, AgreesWithCountsAtLargerPrimes) {
  const Arrangement a = build_deformation(Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 1);
  const IntPolynomial chi = characteristic_polynomial(a);
  for (std::uint64_t q : {31u, 37u, 41u}) {
    EXPECT_EQ(chi.evaluate(static_cast<std::int64_t>(q)),
              static_cast<std::int64_t>(count_complement_points(a, q).count));
  }
}

TEST(IntegerRootSplitTest, Examples) {
  EXPECT_FALSE(integer_root_split(IntPolynomial({0, 7, -5, 1})));
  const std::int64_t r012[] = {0, 1, 2};
  EXPECT_EQ(integer_root_split(IntPolynomial::from_roots(r012)), (std::vector<std::int64_t>{0, 1, 2}));
  EXPECT_THROW(integer_root_split(IntPolynomial({1, 2})), std::invalid_argument);
  EXPECT_THROW(integer_root_split(IntPolynomial()), std::invalid_argument);
  EXPECT_EQ(integer_root_split(IntPolynomial({1})), std::vector<std::int64_t>{});
}

TEST(IntegerRootSplitTest, CatalanConeSplitsWithZeroAndOne) {
  const IntPolynomial chi = characteristic_polynomial(cone(build_deformation(Digraph::complete(3), 0)));
  EXPECT_EQ(chi, oracle_chi(cone(build_deformation(Digraph::complete(3), 0))));
  const auto roots = integer_root_split(chi);
  ASSERT_TRUE(roots);
  ASSERT_EQ(roots->size(), 4u);
  EXPECT_EQ(std::count(roots->begin(), roots->end(), 0), 1);
  EXPECT_GE(std::count(roots->begin(), roots->end(), 1), 1);
}

TEST(IntegerRootSplitTest, RecoversRandomRootMultisets) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> root(-9, 12);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<std::int64_t> roots(1 + trial % 6);
    for (auto& r : roots) r = root(rng);
    std::sort(roots.begin(), roots.end());
    const IntPolynomial p = IntPolynomial::from_roots(roots);
    const auto split = integer_root_split(p);
    ASSERT_TRUE(split);
    ASSERT_EQ(*split, roots);
    ASSERT_EQ(IntPolynomial::from_roots(*split), p);
    // An irreducible quadratic factor blocks the split.
    ASSERT_FALSE(integer_root_split(p * IntPolynomial({2, 0, 1})));
  }
}

}  // namespace
}  // namespace braidfree
