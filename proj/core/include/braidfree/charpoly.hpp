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

#ifndef BRAIDFREE_CHARPOLY_HPP
#define BRAIDFREE_CHARPOLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "braidfree/arrangement.hpp"
#include "braidfree/errors.hpp"
#include "braidfree/polynomial.hpp"

namespace braidfree {

/// Largest q^rank a single point count may enumerate.
inline constexpr std::uint64_t kPointBudget = 100'000'000;

/// Maximum number of times the prime window is doubled after a failed
/// verification.
inline constexpr int kMaxEscalations = 3;

struct PrimeEvaluation {
  std::uint64_t q = 0;
  std::uint64_t count = 0;  // points of F_q^dim on no hyperplane
};

bool is_prime(std::uint64_t q);

/// Smallest prime strictly greater than `q`.
std::uint64_t next_prime(std::uint64_t q);

/// Primes above this value are admissible: max(dim, 2M+1) where M is the
/// largest absolute value among all normal entries and offsets.
std::uint64_t reduction_bound(const Arrangement& a);

/// Number of points of F_q^dim lying on no hyperplane of `a` (reduced mod q).
///
/// Directions common to every hyperplane are factored out first: if the
/// normals span a rank-r subspace mod q, points are enumerated over r
/// coordinates and the result scaled by q^(dim-r). The last coordinate is
/// never enumerated; its admissible values are counted directly.
///
/// Throws std::invalid_argument if q is not a prime above reduction_bound(a)
/// or q >= 2^26, and ResourceError if q^r exceeds kPointBudget.
PrimeEvaluation count_complement_points(const Arrangement& a, std::uint64_t q);

struct CharpolyTrace {
  IntPolynomial chi;
  std::vector<PrimeEvaluation> fit;  // dim+1 evaluations used for interpolation
  PrimeEvaluation check;             // the independent verification prime
  int escalations = 0;
};

/// chi(a, t), interpolated from point counts at dim+1 admissible primes and
/// verified at one more. On a failed verification the prime window is
/// doubled, at most kMaxEscalations times, before InternalError is thrown.
CharpolyTrace characteristic_polynomial_traced(const Arrangement& a);
IntPolynomial characteristic_polynomial(const Arrangement& a);

/// The multiset of integer roots, sorted ascending, when `p` is a product of
/// monic linear factors over the integers; absent otherwise. Throws
/// std::invalid_argument if `p` is not monic.
std::optional<std::vector<std::int64_t>> integer_root_split(const IntPolynomial& p);

}  // namespace braidfree

#endif  // BRAIDFREE_CHARPOLY_HPP
