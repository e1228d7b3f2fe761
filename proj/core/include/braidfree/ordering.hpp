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

#ifndef BRAIDFREE_ORDERING_HPP
#define BRAIDFREE_ORDERING_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace braidfree {

/// A numbering of the vertices 0..n-1. Position 0 is the smallest number.
///
/// Stored both ways: `vertex_at(p)` is the vertex numbered p and
/// `position_of(v)` is the number given to v. Orderings compare
/// lexicographically by their vertex sequence.
class VertexOrdering {
 public:
  VertexOrdering() = default;

  static VertexOrdering identity(int n);

  /// `sequence[p]` is the vertex placed at position p. Throws
  /// std::invalid_argument unless `sequence` is a permutation of 0..n-1.
  static VertexOrdering from_sequence(std::vector<int> sequence);

  /// `positions[v]` is the position of vertex v.
  static VertexOrdering from_positions(std::span<const int> positions);

  int size() const { return static_cast<int>(sequence_.size()); }
  int vertex_at(int position) const { return sequence_[position]; }
  int position_of(int vertex) const { return position_[vertex]; }
  const std::vector<int>& sequence() const { return sequence_; }
  const std::vector<int>& positions() const { return position_; }

  /// The ordering that numbers perm[v] the way this one numbers v.
  VertexOrdering relabeled(std::span<const int> perm) const;

  std::string to_string() const;

  friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;
  friend auto operator<=>(const VertexOrdering& a, const VertexOrdering& b) {
    return a.sequence_ <=> b.sequence_;
  }

 private:
  std::vector<int> sequence_;
  std::vector<int> position_;
};

/// Checks whether `perm` is a permutation of 0..perm.size()-1.
bool is_permutation_of_range(std::span<const int> perm);

/// Depth-first search for the lexicographically smallest vertex sequence
/// accepted by a triple condition.
///
/// `apex_ok(prefix, apex)` must return true iff every triple made of `apex`
/// and two distinct vertices of `prefix` satisfies the condition with `apex`
/// as the largest-numbered vertex. A partial sequence is abandoned as soon as
/// its newest vertex fails.
template <class ApexCheck>
std::optional<VertexOrdering> find_lex_smallest_ordering(int n, ApexCheck&& apex_ok) {
  if (n <= 0) return std::nullopt;
  std::vector<int> prefix;
  prefix.reserve(n);
  std::vector<char> used(n, 0);
  std::vector<int> next(n + 1, 0);  // next candidate vertex per depth

  int depth = 0;
  while (depth >= 0) {
    if (depth == n) return VertexOrdering::from_sequence(prefix);
    int v = next[depth];
    while (v < n && used[v]) ++v;
    if (v == n) {
      next[depth] = 0;
      --depth;
      if (depth >= 0) {
        used[prefix.back()] = 0;
        prefix.pop_back();
        ++next[depth];
      }
      continue;
    }
    next[depth] = v;
    if (apex_ok(std::span<const int>(prefix), v)) {
      prefix.push_back(v);
      used[v] = 1;
      ++depth;
      next[depth] = 0;
    } else {
      ++next[depth];
    }
  }
  return std::nullopt;
}

}  // namespace braidfree

#endif  // BRAIDFREE_ORDERING_HPP
