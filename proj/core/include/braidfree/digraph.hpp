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

#ifndef BRAIDFREE_DIGRAPH_HPP
#define BRAIDFREE_DIGRAPH_HPP

#include <array>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "braidfree/ordering.hpp"

namespace braidfree {

using Arc = std::pair<int, int>;

/// Loop-free digraph on vertices 0..n-1. Both (i,j) and (j,i) may be arcs.
///
/// Adjacency is kept as one out-neighbour bitmask per vertex, so n is capped
/// at kMaxVertices. `has_arc(i, j)` is the indicator eps(i,j) of the
/// deformation.
class Digraph {
 public:
  static constexpr int kMaxVertices = 32;

  Digraph() = default;
  explicit Digraph(int n);
  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  /// Repeated arcs collapse.
  Digraph(int n, std::span<const Arc> arcs);
  Digraph(int n, std::initializer_list<Arc> arcs)
      : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  static Digraph complete(int n);

  int size() const { return n_; }
  bool has_arc(int i, int j) const { return (out_[i] >> j) & 1u; }
  std::uint32_t out_mask(int i) const { return out_[i]; }
  int arc_count() const;
  /// Arcs in row-major order.
  std::vector<Arc> arcs() const;

  void add_arc(int i, int j);

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint32_t> out_;
};

/// Vertex v of `g` becomes perm[v].
Digraph relabel(const Digraph& g, std::span<const int> perm);

/// Induced subgraph on `vertices`; vertex a of the result is vertices[a].
/// Throws std::invalid_argument on duplicate or out-of-range labels.
Digraph induced_subgraph(const Digraph& g, std::span<const int> vertices);

/// (A1) and (A2) for every triple whose largest-numbered vertex is k.
bool satisfies_a1_a2_under(const Digraph& g, const VertexOrdering& ord);

/// Lexicographically smallest vertex sequence satisfying (A1) and (A2).
std::optional<VertexOrdering> find_a1_a2_ordering(const Digraph& g);

enum class PatternKind { Path, Cycle, CyclePlusChord };

std::string_view to_string(PatternKind kind);

/// A three-vertex induced subgraph whose arc set is exactly one of
///   Path           {(i,j),(j,k)}
///   Cycle          {(i,j),(j,k),(k,i)}
///   CyclePlusChord {(i,j),(j,k),(k,i),(i,k)}
/// with `witness` = (i,j,k).
struct ForbiddenPattern {
  PatternKind kind;
  std::array<int, 3> witness;

  friend bool operator==(const ForbiddenPattern&, const ForbiddenPattern&) = default;
};

/// The three patterns as digraphs on {0,1,2}, witness (0,1,2).
Digraph pattern_digraph(PatternKind kind);

/// Exact-match pattern on the induced subgraph of (i,j,k) in that labeling.
std::optional<PatternKind> match_pattern(const Digraph& g, int i, int j, int k);

/// First matching triple, scanning vertex sets {a<b<c} lexicographically and
/// the six labelings of each lexicographically. Absent when n < 3.
std::optional<ForbiddenPattern> find_forbidden_triple(const Digraph& g);

/// Number of labeled digraphs on n vertices, 2^(n(n-1)).
std::uint64_t digraph_count(int n);

/// The digraph whose arc bits, in row-major order over pairs i != j, spell
/// `code` (least significant bit first).
Digraph digraph_from_code(int n, std::uint64_t code);
std::uint64_t digraph_code(const Digraph& g);

/// All digraphs on n labeled vertices, 1 <= n <= 5, in code order.
///
/// A lightweight restartable range; `slice` splits the code space so
/// workers can share an enumeration.
class DigraphSpace {
 public:
  static constexpr int kMaxEnumerable = 5;

  /// Throws std::invalid_argument when n is outside [1, 5].
  explicit DigraphSpace(int n);
  DigraphSpace(int n, std::uint64_t first, std::uint64_t last);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Digraph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int n, std::uint64_t code) : n_(n), code_(code) {}
    Digraph operator*() const { return digraph_from_code(n_, code_); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++code_;
      return tmp;
    }
    std::uint64_t code() const { return code_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.code_ == b.code_; }

   private:
    int n_ = 0;
    std::uint64_t code_ = 0;
  };

  iterator begin() const { return {n_, first_}; }
  iterator end() const { return {n_, last_}; }
  std::uint64_t size() const { return last_ - first_; }
  int vertices() const { return n_; }
  Digraph at(std::uint64_t offset) const { return digraph_from_code(n_, first_ + offset); }

  /// Part `index` of `parts` contiguous, nearly equal slices.
  DigraphSpace slice(std::uint64_t index, std::uint64_t parts) const;

 private:
  int n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

/// Convenience wrapper for DigraphSpace(n).
DigraphSpace enumerate_digraphs(int n);

}  // namespace braidfree

#endif  // BRAIDFREE_DIGRAPH_HPP
