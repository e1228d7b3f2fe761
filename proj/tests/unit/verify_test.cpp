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
#include "braidfree/verify.hpp"

#include <gtest/gtest.h>

#include "braidfree/io.hpp"
#include "unit/oracles.hpp"

namespace braidfree {
namespace {

oracle::ArcSet arc_set(const Digraph& g) {
  oracle::ArcSet e;
  for (auto a : g.arcs()) e.insert(a);
  return e;
}

TEST(AnalyzeTest, PathIsNotFree) {
  const AnalysisReport r = analyze(Digraph(3, {{0, 1}, {1, 2}}), 0);
  EXPECT_EQ(r.verdict, Verdict::NotFree);
  ASSERT_TRUE(r.forbidden);
  EXPECT_EQ(r.forbidden->kind, PatternKind::Path);
  EXPECT_EQ(r.chi, IntPolynomial({0, 7, -5, 1}));
  EXPECT_EQ(r.chi_cone, IntPolynomial({-1, 1}) * IntPolynomial({0, 7, -5, 1}));
  EXPECT_FALSE(r.cone_roots);
  EXPECT_EQ(r.hyperplane_count, 5u);
}

TEST(AnalyzeTest, EmptyAndCompleteDigraphsSplit) {
  const AnalysisReport empty = analyze(Digraph(3), 0);
  EXPECT_EQ(empty.verdict, Verdict::FreePredicted);
  EXPECT_EQ(empty.cone_roots, (std::vector<std::int64_t>{0, 1, 1, 2}));

  const AnalysisReport full = analyze(Digraph::complete(3), 0);
  EXPECT_EQ(full.verdict, Verdict::FreePredicted);
  EXPECT_EQ(full.cone_roots, (std::vector<std::int64_t>{0, 1, 4, 5}));
  EXPECT_EQ(full.hyperplane_count, 9u);
  EXPECT_EQ(full.multiplicity.total(), 9);
}

TEST(AnalyzeTest, RejectsOutOfRangeInput) {
  EXPECT_THROW(analyze(Digraph(1), 0), std::invalid_argument);
  EXPECT_THROW(analyze(Digraph(6), 0), std::invalid_argument);
  EXPECT_THROW(analyze(Digraph(3), -1), std::invalid_argument);
  EXPECT_THROW(analyze(Digraph(3), 4), std::invalid_argument);
}

TEST(AnalyzeTest, FreePredictionHoldsOnAllFourVertexDigraphsAtLevelZero) {
  for (const Digraph& g : enumerate_digraphs(4)) {
    const AnalysisReport r = analyze(g, 0);
    const bool oracle_free =
        oracle::smallest_sequence(4, [&](const std::vector<int>& pos) { return oracle::a1_a2(4, arc_set(g), pos); })
            .has_value();
    ASSERT_EQ(r.verdict == Verdict::FreePredicted, oracle_free) << format_digraph_text(g);
    if (oracle_free) ASSERT_TRUE(r.cone_roots) << format_digraph_text(g);
  }
}

TEST(AnalyzeTest, DeterministicOutput) {
  const Digraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  EXPECT_EQ(format_report_json(analyze(g, 1)), format_report_json(analyze(g, 1)));
}

TEST(VerifyTest, PropositionCharOnSmallN) {
  for (int n = 1; n <= 4; ++n) {
    const VerifySummary s = verify_proposition_char(n);
    EXPECT_TRUE(s.ok()) << format_summary_text(s);
    EXPECT_EQ(s.checked, digraph_count(n));
  }
}

TEST(VerifyTest, PropositionCharCountsMatchOracle) {
  const VerifySummary s = verify_proposition_char(3);
  std::uint64_t oracle_a1a2 = 0;
  for (const Digraph& g : enumerate_digraphs(3)) {
    oracle_a1a2 +=
        oracle::smallest_sequence(3, [&](const std::vector<int>& pos) { return oracle::a1_a2(3, arc_set(g), pos); })
            .has_value();
  }
  std::uint64_t lib_a1a2 = 0;
  for (const auto& [key, value] : s.counts) {
    if (key.rfind("a1a2 ", 0) == 0) lib_a1a2 += value;
  }
  EXPECT_EQ(lib_a1a2, oracle_a1a2);
}

TEST(VerifyTest, LemmaFormulas) {
  EXPECT_EQ(lemma_formula(PatternKind::Path, 0), IntPolynomial({0, 7, -5, 1}));
  EXPECT_EQ(lemma_formula(PatternKind::Cycle, 1), IntPolynomial({0, 38, -12, 1}));
  EXPECT_EQ(lemma_formula(PatternKind::CyclePlusChord, 2), IntPolynomial({0, 91, -19, 1}));
  const VerifySummary s = verify_lemma_vectors(2);
  EXPECT_TRUE(s.ok()) << format_summary_text(s);
  EXPECT_EQ(s.counts.at("formula_match"), 9u);
}

TEST(VerifyTest, ConingAndFactorizationOnThreeVertices) {
  for (int k = 0; k <= 1; ++k) {
    const VerifySummary c = verify_coning(3, k);
    EXPECT_TRUE(c.ok()) << format_summary_text(c);
    EXPECT_EQ(c.counts.at("identity_holds"), 64u);
    const VerifySummary f = verify_factorization(3, k);
    EXPECT_TRUE(f.ok()) << format_summary_text(f);
    EXPECT_EQ(f.counts.at("a1a2_digraphs"), 64u - 14u);
  }
}

TEST(VerifyTest, LocalizationOnFourVertices) {
  const VerifySummary s = verify_localization(4, 0, true);
  EXPECT_TRUE(s.ok()) << format_summary_text(s);
  EXPECT_EQ(s.counts.at("digraphs"), digraph_count(4));
  EXPECT_EQ(s.counts.at("chi_match"), digraph_count(4) * 4);
}

TEST(VerifyTest, LiftingCases) {
  const auto cases = classify_lifting_cases();
  ASSERT_EQ(cases.size(), 10u);
  const int classes[] = {4, 7, 7, 2, 2, 2, 1, 1, 1, 1};
  const int failing[] = {1, 3, 3, 0, 0, 0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    EXPECT_EQ(cases[i].classes, classes[i]) << "case " << cases[i].id;
    EXPECT_EQ(cases[i].failing, failing[i]) << "case " << cases[i].id;
  }
  EXPECT_TRUE(verify_case_classification().ok());
}

TEST(VerifySummaryTest, CapsStoredViolations) {
  VerifySummary s;
  for (int i = 0; i < 30; ++i) s.add_violation("v" + std::to_string(i));
  EXPECT_EQ(s.violation_count, 30u);
  EXPECT_EQ(s.violations.size(), kMaxStoredViolations);
  VerifySummary t;
  t.checked = 2;
  t.counts["x"] = 1;
  s.merge(t);
  EXPECT_EQ(s.checked, 2u);
  EXPECT_EQ(s.counts.at("x"), 1u);
  EXPECT_FALSE(s.ok());
}

}  // namespace
}  // namespace braidfree
