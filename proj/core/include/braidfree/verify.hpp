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

#ifndef BRAIDFREE_VERIFY_HPP
#define BRAIDFREE_VERIFY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidfree/arrangement.hpp"
#include "braidfree/charpoly.hpp"
#include "braidfree/digraph.hpp"
#include "braidfree/signed_graph.hpp"

namespace braidfree {

enum class Verdict { FreePredicted, NotFree };

std::string_view to_string(Verdict v);

/// Everything the library knows about one digraph at one level k.
struct AnalysisReport {
  Digraph digraph;
  int k = 0;
  SignedGraph signed_graph;
  MultiplicityMap multiplicity;
  std::optional<ForbiddenPattern> forbidden;
  std::optional<VertexOrdering> a1a2_ordering;
  std::optional<VertexOrdering> elimination_ordering;
  std::size_t hyperplane_count = 0;
  IntPolynomial chi;
  IntPolynomial chi_cone;
  std::optional<std::vector<std::int64_t>> cone_roots;
  /// FreePredicted iff an (A1)/(A2) ordering exists.
  Verdict verdict = Verdict::NotFree;
};

inline constexpr int kAnalyzeMaxVertices = 5;
inline constexpr int kAnalyzeMaxLevel = 3;

/// Throws std::invalid_argument outside 2 <= n <= 5, 0 <= k <= 3, and
/// InternalError if a FreePredicted digraph's coned polynomial does not split
/// over the integers.
AnalysisReport analyze(const Digraph& g, int k);

/// Outcome of one exhaustive check. `violations` keeps the first few
/// counterexample dumps; `violation_count` counts all of them.
struct VerifySummary {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::map<std::string, std::uint64_t> counts;
  std::vector<std::string> violations;

  bool ok() const { return violation_count == 0; }
  void add_violation(std::string what);
  void merge(const VerifySummary& other);
};

inline constexpr std::size_t kMaxStoredViolations = 20;

/// Called with (done, total) as the harness advances.
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

/// For every digraph on n vertices: an (A1)/(A2) ordering exists iff S(G) is
/// signed eliminable and no forbidden triple is present. 1 <= n <= 5.
VerifySummary verify_proposition_char(int n, const ProgressFn& progress = {});

/// The printed polynomial for a forbidden pattern at level k.
IntPolynomial lemma_formula(PatternKind kind, int k);

/// chi of each forbidden pattern for k = 0..k_max against lemma_formula, and
/// absence of integer roots in the quadratic factor. k_max <= 3.
VerifySummary verify_lemma_vectors(int k_max);

/// chi(cone(A_G)) == (t - 1) chi(A_G) for every digraph on n vertices, both
/// sides by point counting. 2 <= n <= 4, 0 <= k <= 2.
VerifySummary verify_coning(int n, int k, const ProgressFn& progress = {});

/// Every (A1)/(A2) digraph on n vertices has a coned polynomial that splits
/// with nonnegative integer roots. 2 <= n <= 4, 0 <= k <= 2. `counts`
/// records each root multiset seen.
VerifySummary verify_factorization(int n, int k, const ProgressFn& progress = {});

/// For every digraph (all when n <= 4 or `exhaustive`, otherwise `samples`
/// drawn with a fixed seed) and every vertex triple: the localized cone
/// matches the coned induced deformation both as hyperplanes (after dropping
/// the other coordinates) and as chi up to t^(n-3). 3 <= n <= 5.
VerifySummary verify_localization(int n, int k, bool exhaustive, std::uint64_t samples = 512,
                                  const ProgressFn& progress = {});

/// Liftings of the signed eliminable signed graphs on {0,1,2} with vertex 2
/// numbered last, grouped by (|E+|, |E-|) and taken up to swapping 0 and 1.
struct LiftingCase {
  int id = 0;  // 1..10
  int plus = 0;
  int minus = 0;
  int classes = 0;
  int failing = 0;
  int expected_classes = 0;
  int expected_failing = 0;
};

std::vector<LiftingCase> classify_lifting_cases();

/// Compares classify_lifting_cases() with the expected per-case counts, and
/// checks that a lifting fails (A1)/(A2) exactly when it is a forbidden
/// pattern.
VerifySummary verify_case_classification();

}  // namespace braidfree

#endif  // BRAIDFREE_VERIFY_HPP
