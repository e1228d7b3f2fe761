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

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#include "braidfree/parallel.hpp"

namespace braidfree {

namespace {

std::string describe(const Digraph& g) {
  std::ostringstream os;
  os << "n=" << g.size() << " arcs={";
  bool first = true;
  for (auto [i, j] : g.arcs()) {
    os << (first ? "" : " ") << '(' << i << ',' << j << ')';
    first = false;
  }
  os << "} code=" << digraph_code(g);
  return os.str();
}

std::string roots_key(const std::vector<std::int64_t>& roots) {
  std::ostringstream os;
  os << "roots {";
  for (std::size_t i = 0; i < roots.size(); ++i) os << (i ? "," : "") << roots[i];
  os << '}';
  return os.str();
}

void require_range(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi) {
    throw std::invalid_argument(std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "], got " + std::to_string(value));
  }
}

// Runs `check` on every code in `codes` (or on all digraphs when empty) in
// parallel and merges the per-worker summaries.
template <class Check>
VerifySummary run_over_digraphs(std::string name, int n, const std::vector<std::uint64_t>* codes,
                                const ProgressFn& progress, Check&& check) {
  const DigraphSpace space(n);
  const std::uint64_t total = codes ? codes->size() : space.size();
  const int workers = worker_count();
  std::vector<VerifySummary> partial(workers);
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mutex;

  const std::uint64_t chunk = std::clamp<std::uint64_t>(total / (64 * std::uint64_t(workers)) + 1, 1, 4096);
  parallel_for(
      total, chunk,
      [&](std::uint64_t begin, std::uint64_t end, int worker) {
        for (std::uint64_t i = begin; i < end; ++i) {
          const std::uint64_t code = codes ? (*codes)[i] : i;
          check(digraph_from_code(n, code), partial[worker]);
          ++partial[worker].checked;
        }
        const std::uint64_t now = done.fetch_add(end - begin) + (end - begin);
        if (progress) {
          std::lock_guard lock(progress_mutex);
          progress(now, total);
        }
      },
      workers);

  VerifySummary summary;
  summary.name = std::move(name);
  for (const auto& p : partial) summary.merge(p);
  std::sort(summary.violations.begin(), summary.violations.end());
  if (summary.violations.size() > kMaxStoredViolations) summary.violations.resize(kMaxStoredViolations);
  return summary;
}

}  // namespace

std::string_view to_string(Verdict v) {
  return v == Verdict::FreePredicted ? "free_predicted" : "not_free";
}

void VerifySummary::add_violation(std::string what) {
  ++violation_count;
  if (violations.size() < kMaxStoredViolations) violations.push_back(std::move(what));
}

void VerifySummary::merge(const VerifySummary& other) {
  checked += other.checked;
  violation_count += other.violation_count;
  for (const auto& [key, value] : other.counts) counts[key] += value;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

AnalysisReport analyze(const Digraph& g, int k) {
  require_range(g.size(), 2, kAnalyzeMaxVertices, "vertex count");
  require_range(k, 0, kAnalyzeMaxLevel, "level k");

  AnalysisReport r;
  r.digraph = g;
  r.k = k;
  r.signed_graph = sign_map(g);
  r.multiplicity = ziegler_multiplicity(g, k);
  r.forbidden = find_forbidden_triple(g);
  r.a1a2_ordering = find_a1_a2_ordering(g);
  r.elimination_ordering = find_elimination_ordering(r.signed_graph);

  const Arrangement a = build_deformation(g, k);
  r.hyperplane_count = a.size();
  r.chi = characteristic_polynomial(a);
  r.chi_cone = characteristic_polynomial(cone(a));
  r.cone_roots = integer_root_split(r.chi_cone);
  r.verdict = r.a1a2_ordering ? Verdict::FreePredicted : Verdict::NotFree;

  if (r.verdict == Verdict::FreePredicted && !r.cone_roots) {
    throw InternalError("coned characteristic polynomial " + r.chi_cone.to_string() +
                        " does not split for a digraph satisfying (A1)/(A2): " + describe(g));
  }
  return r;
}

VerifySummary verify_proposition_char(int n, const ProgressFn& progress) {
  require_range(n, 1, DigraphSpace::kMaxEnumerable, "n");
  return run_over_digraphs("proposition-char n=" + std::to_string(n), n, nullptr, progress,
                           [](const Digraph& g, VerifySummary& s) {
                             const bool a1a2 = find_a1_a2_ordering(g).has_value();
                             const bool eliminable = find_elimination_ordering(sign_map(g)).has_value();
                             const bool forbidden = find_forbidden_triple(g).has_value();
                             ++s.counts[std::string(a1a2 ? "a1a2" : "not_a1a2") +
                                        (eliminable ? " eliminable" : " not_eliminable") +
                                        (forbidden ? " forbidden" : " no_forbidden")];
                             if (a1a2 != (eliminable && !forbidden)) {
                               s.add_violation(describe(g) + " a1a2=" + std::to_string(a1a2) +
                                               " eliminable=" + std::to_string(eliminable) +
                                               " forbidden=" + std::to_string(forbidden));
                             }
                           });
}

IntPolynomial lemma_formula(PatternKind kind, int k) {
  const std::int64_t kk = k;
  std::int64_t linear = 0, constant = 0;
  switch (kind) {
    case PatternKind::Path:
      linear = 6 * kk + 5;
      constant = 9 * kk * kk + 15 * kk + 7;
      break;
    case PatternKind::Cycle:
      linear = 6 * kk + 6;
      constant = 9 * kk * kk + 18 * kk + 11;
      break;
    case PatternKind::CyclePlusChord:
      linear = 6 * kk + 7;
      constant = 9 * kk * kk + 21 * kk + 13;
      break;
  }
  // t (t^2 - linear t + constant)
  return IntPolynomial{0, constant, -linear, 1};
}

VerifySummary verify_lemma_vectors(int k_max) {
  require_range(k_max, 0, 3, "k_max");
  VerifySummary s;
  s.name = "lemma-vectors k_max=" + std::to_string(k_max);
  for (auto kind : {PatternKind::Path, PatternKind::Cycle, PatternKind::CyclePlusChord}) {
    for (int k = 0; k <= k_max; ++k) {
      ++s.checked;
      const std::string tag = std::string(to_string(kind)) + " k=" + std::to_string(k);
      const IntPolynomial chi = characteristic_polynomial(build_deformation(pattern_digraph(kind), k));
      const IntPolynomial expected = lemma_formula(kind, k);
      if (chi != expected) {
        s.add_violation(tag + ": computed " + chi.to_string() + ", expected " + expected.to_string());
        continue;
      }
      ++s.counts["formula_match"];
      if (integer_root_split(chi.divide_by_root(0))) {
        s.add_violation(tag + ": quadratic factor of " + chi.to_string() + " has integer roots");
      } else {
        ++s.counts["quadratic_irreducible"];
      }
    }
  }
  return s;
}

VerifySummary verify_coning(int n, int k, const ProgressFn& progress) {
  require_range(n, 2, 4, "n");
  require_range(k, 0, 2, "k");
  return run_over_digraphs("coning n=" + std::to_string(n) + " k=" + std::to_string(k), n, nullptr, progress,
                           [k](const Digraph& g, VerifySummary& s) {
                             const Arrangement a = build_deformation(g, k);
                             const IntPolynomial chi = characteristic_polynomial(a);
                             const IntPolynomial chi_cone = characteristic_polynomial(cone(a));
                             const IntPolynomial expected = IntPolynomial{-1, 1} * chi;
                             if (chi_cone != expected) {
                               s.add_violation(describe(g) + ": chi(cA)=" + chi_cone.to_string() +
                                               " but (t-1)chi(A)=" + expected.to_string());
                             } else {
                               ++s.counts["identity_holds"];
                             }
                           });
}

VerifySummary verify_factorization(int n, int k, const ProgressFn& progress) {
  require_range(n, 2, 4, "n");
  require_range(k, 0, 2, "k");
  std::vector<std::uint64_t> codes;
  for (std::uint64_t code = 0; code < digraph_count(n); ++code) {
    if (find_a1_a2_ordering(digraph_from_code(n, code))) codes.push_back(code);
  }
  auto s = run_over_digraphs("factorization n=" + std::to_string(n) + " k=" + std::to_string(k), n, &codes,
                             progress, [k](const Digraph& g, VerifySummary& s) {
                               const IntPolynomial chi_cone = characteristic_polynomial(cone(build_deformation(g, k)));
                               const auto roots = integer_root_split(chi_cone);
                               if (!roots) {
                                 s.add_violation(describe(g) + ": chi(cA)=" + chi_cone.to_string() +
                                                 " does not split over the integers");
                                 return;
                               }
                               if (roots->front() < 0) {
                                 s.add_violation(describe(g) + ": chi(cA)=" + chi_cone.to_string() +
                                                 " has a negative root");
                                 return;
                               }
                               ++s.counts[roots_key(*roots)];
                             });
  s.counts["a1a2_digraphs"] = codes.size();
  return s;
}

VerifySummary verify_localization(int n, int k, bool exhaustive, std::uint64_t samples, const ProgressFn& progress) {
  require_range(n, 3, DigraphSpace::kMaxEnumerable, "n");
  require_range(k, 0, 2, "k");
  std::vector<std::uint64_t> codes;
  const bool all = exhaustive || n <= 4;
  if (!all) {
    std::mt19937_64 rng(0x5eed'b7a1'd0c5ULL + static_cast<std::uint64_t>(n * 16 + k));
    std::uniform_int_distribution<std::uint64_t> pick(0, digraph_count(n) - 1);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < std::min<std::uint64_t>(samples, digraph_count(n))) chosen.insert(pick(rng));
    codes.assign(chosen.begin(), chosen.end());
  }
  auto s = run_over_digraphs(
      "localization n=" + std::to_string(n) + " k=" + std::to_string(k), n, all ? nullptr : &codes, progress,
      [n, k](const Digraph& g, VerifySummary& s) {
        const Arrangement coned = cone(build_deformation(g, k));
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
              const std::string tag = describe(g) + " triple=(" + std::to_string(a) + "," + std::to_string(b) +
                                      "," + std::to_string(c) + ")";
              const Arrangement local = localize_triple(coned, a, b, c);
              const int triple[] = {a, b, c};
              const Arrangement small = cone(build_deformation(induced_subgraph(g, triple), k));

              const int kept[] = {a, b, c, n};
              if (restrict_coordinates(local, kept) != small) {
                s.add_violation(tag + ": localized hyperplanes differ from the coned induced deformation");
                continue;
              }
              ++s.counts["equations_match"];

              const IntPolynomial lhs = characteristic_polynomial(local);
              const IntPolynomial rhs = IntPolynomial::monomial(n - 3) * characteristic_polynomial(small);
              if (lhs != rhs) {
                s.add_violation(tag + ": chi(localized)=" + lhs.to_string() + " but t^" + std::to_string(n - 3) +
                                " chi(cA_H)=" + rhs.to_string());
                continue;
              }
              ++s.counts["chi_match"];
            }
          }
        }
      });
  s.counts["digraphs"] = s.checked;
  return s;
}

std::vector<LiftingCase> classify_lifting_cases() {
  // (|E+|, |E-|) -> case number, with the class counts the case lists give.
  struct Expected {
    int plus, minus, classes, failing;
  };
  static constexpr std::array<Expected, 10> kCases = {{
      {0, 0, 4, 1}, {1, 0, 7, 3}, {0, 1, 7, 3}, {2, 0, 2, 0}, {0, 2, 2, 0},
      {1, 1, 2, 0}, {3, 0, 1, 0}, {0, 3, 1, 0}, {2, 1, 1, 0}, {1, 2, 1, 0},
  }};

  const VertexOrdering ord = VertexOrdering::identity(3);
  const int swap01[] = {1, 0, 2};
  std::array<std::set<std::uint64_t>, 10> classes, failing;

  for (const auto& sg : all_signed_graphs(3)) {
    if (!is_signed_eliminable_under(sg, ord)) continue;
    const int plus = static_cast<int>(sg.plus_edges().size());
    const int minus = static_cast<int>(sg.minus_edges().size());
    const auto it = std::find_if(kCases.begin(), kCases.end(),
                                 [&](const Expected& e) { return e.plus == plus && e.minus == minus; });
    const auto idx = static_cast<std::size_t>(it - kCases.begin());
    for (const Digraph& lift : enumerate_liftings(sg)) {
      const std::uint64_t key = std::min(digraph_code(lift), digraph_code(relabel(lift, swap01)));
      classes[idx].insert(key);
      if (!satisfies_a1_a2_under(lift, ord)) failing[idx].insert(key);
    }
  }

  std::vector<LiftingCase> out;
  for (std::size_t i = 0; i < kCases.size(); ++i) {
    out.push_back({static_cast<int>(i) + 1, kCases[i].plus, kCases[i].minus, static_cast<int>(classes[i].size()),
                   static_cast<int>(failing[i].size()), kCases[i].classes, kCases[i].failing});
  }
  return out;
}

VerifySummary verify_case_classification() {
  VerifySummary s;
  s.name = "lifting-cases";
  for (const auto& c : classify_lifting_cases()) {
    ++s.checked;
    const std::string tag = "case " + std::to_string(c.id) + " (|E+|=" + std::to_string(c.plus) +
                            ", |E-|=" + std::to_string(c.minus) + ")";
    s.counts[tag + " classes"] = static_cast<std::uint64_t>(c.classes);
    s.counts[tag + " failing"] = static_cast<std::uint64_t>(c.failing);
    if (c.classes != c.expected_classes || c.failing != c.expected_failing) {
      s.add_violation(tag + ": " + std::to_string(c.failing) + " of " + std::to_string(c.classes) +
                      " classes fail, expected " + std::to_string(c.expected_failing) + " of " +
                      std::to_string(c.expected_classes));
    }
  }
  // Under the numbering with vertex 2 last, a lifting of a signed eliminable
  // graph fails exactly when it is one of the forbidden patterns.
  const VertexOrdering ord = VertexOrdering::identity(3);
  for (const auto& sg : all_signed_graphs(3)) {
    if (!is_signed_eliminable_under(sg, ord)) continue;
    for (const Digraph& lift : enumerate_liftings(sg)) {
      const bool fails = !satisfies_a1_a2_under(lift, ord);
      const bool forbidden = find_forbidden_triple(lift).has_value();
      if (fails != forbidden) {
        s.add_violation(describe(lift) + ": fails=" + std::to_string(fails) +
                        " forbidden=" + std::to_string(forbidden));
      }
    }
  }
  return s;
}

}  // namespace braidfree
