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

#ifndef BRAIDFREE_SIGNED_GRAPH_HPP
#define BRAIDFREE_SIGNED_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "braidfree/digraph.hpp"
#include "braidfree/ordering.hpp"

namespace braidfree {

enum class Sign : std::int8_t { Minus = -1, Neutral = 0, Plus = 1 };

using Pair = std::pair<int, int>;

/// Graph with disjoint positive and negative edge sets over unordered pairs.
/// Pairs in neither set are neutral.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int n);
  /// Throws std::invalid_argument on loops, out-of-range endpoints, or a
  /// pair present in both sets.
  SignedGraph(int n, std::span<const Pair> plus, std::span<const Pair> minus);
  SignedGraph(int n, std::initializer_list<Pair> plus, std::initializer_list<Pair> minus)
      : SignedGraph(n, std::span<const Pair>(plus.begin(), plus.size()),
                    std::span<const Pair>(minus.begin(), minus.size())) {}

  int size() const { return n_; }
  Sign sign(int i, int j) const;
  void set_sign(int i, int j, Sign s);

  /// Pairs (i,j) with i < j, lexicographic.
  std::vector<Pair> plus_edges() const;
  std::vector<Pair> minus_edges() const;
  std::vector<Pair> neutral_pairs() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  std::vector<Pair> edges_with(Sign s) const;

  int n_ = 0;
  std::vector<std::uint32_t> plus_;
  std::vector<std::uint32_t> minus_;
};

/// Both arcs -> plus, exactly one arc -> neutral, no arc -> minus.
SignedGraph sign_map(const Digraph& g);

SignedGraph relabel(const SignedGraph& sg, std::span<const int> perm);

/// SE1 and SE2 for every triple whose largest-numbered vertex is k.
bool is_signed_eliminable_under(const SignedGraph& sg, const VertexOrdering& ord);

/// Lexicographically smallest signed elimination ordering.
std::optional<VertexOrdering> find_elimination_ordering(const SignedGraph& sg);

/// All digraphs g with sign_map(g) == sg.
///
/// Neutral pairs {i<j} are taken in lexicographic order; bit b of the lifting
/// index chooses (j,i) over (i,j) for the b-th neutral pair.
class LiftingRange {
 public:
  explicit LiftingRange(SignedGraph sg);

  std::uint64_t size() const { return std::uint64_t{1} << neutral_.size(); }
  Digraph at(std::uint64_t index) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Digraph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const LiftingRange* range, std::uint64_t index) : range_(range), index_(index) {}
    Digraph operator*() const { return range_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++index_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const LiftingRange* range_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  SignedGraph sg_;
  Digraph base_;
  std::vector<Pair> neutral_;
};

LiftingRange enumerate_liftings(const SignedGraph& sg);

/// Multiplicities of the restriction to the infinite hyperplane: one entry per
/// pair {i<j}, 2k+1+eps(i,j)+eps(j,i).
struct MultiplicityMap {
  int n = 0;
  int k = 0;
  std::vector<std::pair<Pair, int>> mult;

  int at(int i, int j) const;
  long long total() const;
};

/// Throws std::invalid_argument when k < 0.
MultiplicityMap ziegler_multiplicity(const Digraph& g, int k);

/// Every signed graph on n vertices (3^(n(n-1)/2) of them), 1 <= n <= 5.
std::vector<SignedGraph> all_signed_graphs(int n);

std::string to_string(const SignedGraph& sg);

}  // namespace braidfree

#endif  // BRAIDFREE_SIGNED_GRAPH_HPP
