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

#include "braidfree/digraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace braidfree {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > Digraph::kMaxVertices) {
    throw std::invalid_argument("digraph vertex count out of range: " + std::to_string(n));
  }
}

// Every triple (u, v, apex) with u != v taken from `prefix` satisfies
// (A1) and (A2) with apex numbered last.
bool a1_a2_apex_ok(const Digraph& g, std::span<const int> prefix, int w) {
  for (int u : prefix) {
    const bool uw = g.has_arc(u, w);
    for (int v : prefix) {
      if (u == v) continue;
      const bool uv = g.has_arc(u, v);
      const bool wv = g.has_arc(w, v);
      if (uv && !uw && !wv) return false;  // A1
      if (uw && wv && !uv) return false;   // A2
    }
  }
  return true;
}

constexpr std::array<std::array<int, 3>, 6> kLabelings = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

// Arc bits of the induced subgraph on (i,j,k), in the fixed order
// (i,j) (j,k) (k,i) (i,k) (k,j) (j,i).
unsigned triple_signature(const Digraph& g, int i, int j, int k) {
  return (g.has_arc(i, j) ? 1u : 0u) | (g.has_arc(j, k) ? 2u : 0u) | (g.has_arc(k, i) ? 4u : 0u) |
         (g.has_arc(i, k) ? 8u : 0u) | (g.has_arc(k, j) ? 16u : 0u) | (g.has_arc(j, i) ? 32u : 0u);
}

}  // namespace

Digraph::Digraph(int n) : n_(n) {
  check_vertex_count(n);
  out_.assign(n, 0u);
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
  for (auto [i, j] : arcs) add_arc(i, j);
}

Digraph Digraph::complete(int n) {
  Digraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) g.add_arc(i, j);
    }
  }
  return g;
}

void Digraph::add_arc(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw std::invalid_argument("arc (" + std::to_string(i) + "," + std::to_string(j) +
                                ") out of range for n=" + std::to_string(n_));
  }
  if (i == j) throw std::invalid_argument("loop arc at vertex " + std::to_string(i));
  out_[i] |= 1u << j;
}

int Digraph::arc_count() const {
  int total = 0;
  for (auto row : out_) total += std::popcount(row);
  return total;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (has_arc(i, j)) result.emplace_back(i, j);
    }
  }
  return result;
}

Digraph relabel(const Digraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.size() || !is_permutation_of_range(perm)) {
    throw std::invalid_argument("relabel: not a permutation of the vertex set");
  }
  Digraph out(g.size());
  for (auto [i, j] : g.arcs()) out.add_arc(perm[i], perm[j]);
  return out;
}

Digraph induced_subgraph(const Digraph& g, std::span<const int> vertices) {
  std::vector<char> seen(g.size(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.size()) {
      throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    }
    if (seen[v]) throw std::invalid_argument("induced_subgraph: duplicate vertex " + std::to_string(v));
    seen[v] = 1;
  }
  const int m = static_cast<int>(vertices.size());
  Digraph h(m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b && g.has_arc(vertices[a], vertices[b])) h.add_arc(a, b);
    }
  }
  return h;
}

bool satisfies_a1_a2_under(const Digraph& g, const VertexOrdering& ord) {
  if (ord.size() != g.size()) {
    throw std::invalid_argument("ordering size does not match digraph");
  }
  const auto& seq = ord.sequence();
  for (int p = 0; p < g.size(); ++p) {
    if (!a1_a2_apex_ok(g, std::span<const int>(seq.data(), p), seq[p])) return false;
  }
  return true;
}

std::optional<VertexOrdering> find_a1_a2_ordering(const Digraph& g) {
  return find_lex_smallest_ordering(
      g.size(), [&g](std::span<const int> prefix, int apex) { return a1_a2_apex_ok(g, prefix, apex); });
}

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::Path: return "path";
    case PatternKind::Cycle: return "cycle";
    case PatternKind::CyclePlusChord: return "cycle_plus_chord";
  }
  return "unknown";
}

Digraph pattern_digraph(PatternKind kind) {
  switch (kind) {
    case PatternKind::Path: return Digraph(3, {{0, 1}, {1, 2}});
    case PatternKind::Cycle: return Digraph(3, {{0, 1}, {1, 2}, {2, 0}});
    case PatternKind::CyclePlusChord: return Digraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  }
  throw std::invalid_argument("unknown pattern kind");
}

std::optional<PatternKind> match_pattern(const Digraph& g, int i, int j, int k) {
  switch (triple_signature(g, i, j, k)) {
    case 0b000011: return PatternKind::Path;
    case 0b000111: return PatternKind::Cycle;
    case 0b001111: return PatternKind::CyclePlusChord;
    default: return std::nullopt;
  }
}

std::optional<ForbiddenPattern> find_forbidden_triple(const Digraph& g) {
  const int n = g.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const std::array<int, 3> t = {a, b, c};
        for (const auto& l : kLabelings) {
          const int i = t[l[0]], j = t[l[1]], k = t[l[2]];
          if (auto kind = match_pattern(g, i, j, k)) return ForbiddenPattern{*kind, {i, j, k}};
        }
      }
    }
  }
  return std::nullopt;
}

std::uint64_t digraph_count(int n) {
  if (n < 1 || n > DigraphSpace::kMaxEnumerable) {
    throw std::invalid_argument("digraph enumeration supports 1 <= n <= 5, got " + std::to_string(n));
  }
  return std::uint64_t{1} << (n * (n - 1));
}

Digraph digraph_from_code(int n, std::uint64_t code) {
  Digraph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((code >> bit) & 1u) g.add_arc(i, j);
      ++bit;
    }
  }
  return g;
}

std::uint64_t digraph_code(const Digraph& g) {
  std::uint64_t code = 0;
  int bit = 0;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      if (g.has_arc(i, j)) code |= std::uint64_t{1} << bit;
      ++bit;
    }
  }
  return code;
}

DigraphSpace::DigraphSpace(int n) : n_(n), first_(0), last_(digraph_count(n)) {}

DigraphSpace::DigraphSpace(int n, std::uint64_t first, std::uint64_t last) : n_(n), first_(first), last_(last) {
  if (first > last || last > digraph_count(n)) throw std::invalid_argument("digraph code range out of bounds");
}

DigraphSpace DigraphSpace::slice(std::uint64_t index, std::uint64_t parts) const {
  if (parts == 0 || index >= parts) throw std::invalid_argument("invalid slice");
  const std::uint64_t total = size();
  const std::uint64_t lo = first_ + total * index / parts;
  const std::uint64_t hi = first_ + total * (index + 1) / parts;
  return DigraphSpace(n_, lo, hi);
}

DigraphSpace enumerate_digraphs(int n) { return DigraphSpace(n); }

}  // namespace braidfree
