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

#include "braidfree/signed_graph.hpp"

#include <sstream>
#include <stdexcept>

namespace braidfree {

namespace {

bool se_apex_ok(const SignedGraph& sg, std::span<const int> prefix, int k) {
  for (int i : prefix) {
    const Sign ki = sg.sign(k, i);
    if (ki == Sign::Neutral) continue;
    for (int j : prefix) {
      if (i == j) continue;
      const Sign ij = sg.sign(i, j);
      const Sign kj = sg.sign(k, j);
      // SE1: {k,i} in E_mu, {i,j} in E_nu, mu != nu  =>  {k,j} in E_nu
      if (ij != Sign::Neutral && ij != ki && kj != ij) return false;
      // SE2: {k,i}, {k,j} in E_mu  =>  {i,j} in E_mu
      if (kj == ki && ij != ki) return false;
    }
  }
  return true;
}

}  // namespace

SignedGraph::SignedGraph(int n) : n_(n) {
  if (n < 0 || n > Digraph::kMaxVertices) throw std::invalid_argument("signed graph vertex count out of range");
  plus_.assign(n, 0u);
  minus_.assign(n, 0u);
}

SignedGraph::SignedGraph(int n, std::span<const Pair> plus, std::span<const Pair> minus) : SignedGraph(n) {
  for (auto [i, j] : plus) set_sign(i, j, Sign::Plus);
  for (auto [i, j] : minus) {
    if (sign(i, j) == Sign::Plus) {
      throw std::invalid_argument("pair {" + std::to_string(i) + "," + std::to_string(j) +
                                  "} is both positive and negative");
    }
    set_sign(i, j, Sign::Minus);
  }
}

Sign SignedGraph::sign(int i, int j) const {
  if ((plus_[i] >> j) & 1u) return Sign::Plus;
  if ((minus_[i] >> j) & 1u) return Sign::Minus;
  return Sign::Neutral;
}

void SignedGraph::set_sign(int i, int j, Sign s) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::invalid_argument("signed edge endpoint out of range");
  if (i == j) throw std::invalid_argument("signed graph loop at vertex " + std::to_string(i));
  const std::uint32_t bi = 1u << i, bj = 1u << j;
  plus_[i] &= ~bj;
  plus_[j] &= ~bi;
  minus_[i] &= ~bj;
  minus_[j] &= ~bi;
  if (s == Sign::Plus) {
    plus_[i] |= bj;
    plus_[j] |= bi;
  } else if (s == Sign::Minus) {
    minus_[i] |= bj;
    minus_[j] |= bi;
  }
}

std::vector<Pair> SignedGraph::edges_with(Sign s) const {
  std::vector<Pair> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (sign(i, j) == s) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<Pair> SignedGraph::plus_edges() const { return edges_with(Sign::Plus); }
std::vector<Pair> SignedGraph::minus_edges() const { return edges_with(Sign::Minus); }
std::vector<Pair> SignedGraph::neutral_pairs() const { return edges_with(Sign::Neutral); }

SignedGraph sign_map(const Digraph& g) {
  SignedGraph sg(g.size());
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      const int arcs = int(g.has_arc(i, j)) + int(g.has_arc(j, i));
      if (arcs == 2) sg.set_sign(i, j, Sign::Plus);
      else if (arcs == 0) sg.set_sign(i, j, Sign::Minus);
    }
  }
  return sg;
}

SignedGraph relabel(const SignedGraph& sg, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != sg.size() || !is_permutation_of_range(perm)) {
    throw std::invalid_argument("relabel: not a permutation of the vertex set");
  }
  SignedGraph out(sg.size());
  for (int i = 0; i < sg.size(); ++i) {
    for (int j = i + 1; j < sg.size(); ++j) out.set_sign(perm[i], perm[j], sg.sign(i, j));
  }
  return out;
}

bool is_signed_eliminable_under(const SignedGraph& sg, const VertexOrdering& ord) {
  if (ord.size() != sg.size()) throw std::invalid_argument("ordering size does not match signed graph");
  const auto& seq = ord.sequence();
  for (int p = 0; p < sg.size(); ++p) {
    if (!se_apex_ok(sg, std::span<const int>(seq.data(), p), seq[p])) return false;
  }
  return true;
}

std::optional<VertexOrdering> find_elimination_ordering(const SignedGraph& sg) {
  return find_lex_smallest_ordering(
      sg.size(), [&sg](std::span<const int> prefix, int apex) { return se_apex_ok(sg, prefix, apex); });
}

LiftingRange::LiftingRange(SignedGraph sg) : sg_(std::move(sg)), base_(sg_.size()), neutral_(sg_.neutral_pairs()) {
  if (neutral_.size() >= 63) throw std::invalid_argument("too many neutral pairs to enumerate liftings");
  for (auto [i, j] : sg_.plus_edges()) {
    base_.add_arc(i, j);
    base_.add_arc(j, i);
  }
}

Digraph LiftingRange::at(std::uint64_t index) const {
  Digraph g = base_;
  for (std::size_t b = 0; b < neutral_.size(); ++b) {
    auto [i, j] = neutral_[b];
    if ((index >> b) & 1u) g.add_arc(j, i);
    else g.add_arc(i, j);
  }
  return g;
}

LiftingRange enumerate_liftings(const SignedGraph& sg) { return LiftingRange(sg); }

int MultiplicityMap::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& [pair, m] : mult) {
    if (pair == Pair{i, j}) return m;
  }
  throw std::out_of_range("no multiplicity for pair {" + std::to_string(i) + "," + std::to_string(j) + "}");
}

long long MultiplicityMap::total() const {
  long long sum = 0;
  for (const auto& entry : mult) sum += entry.second;
  return sum;
}

MultiplicityMap ziegler_multiplicity(const Digraph& g, int k) {
  if (k < 0) throw std::invalid_argument("level k must be nonnegative");
  MultiplicityMap m{g.size(), k, {}};
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j) {
      m.mult.push_back({{i, j}, 2 * k + 1 + int(g.has_arc(i, j)) + int(g.has_arc(j, i))});
    }
  }
  return m;
}

std::vector<SignedGraph> all_signed_graphs(int n) {
  if (n < 1 || n > DigraphSpace::kMaxEnumerable) throw std::invalid_argument("signed graph enumeration needs 1 <= n <= 5");
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::uint64_t total = 1;
  for (std::size_t p = 0; p < pairs.size(); ++p) total *= 3;

  std::vector<SignedGraph> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    SignedGraph sg(n);
    std::uint64_t rest = code;
    for (auto [i, j] : pairs) {
      sg.set_sign(i, j, static_cast<Sign>(static_cast<int>(rest % 3) - 1));
      rest /= 3;
    }
    out.push_back(std::move(sg));
  }
  return out;
}

std::string to_string(const SignedGraph& sg) {
  std::ostringstream os;
  os << "n=" << sg.size();
  for (auto [i, j] : sg.plus_edges()) os << " +{" << i << ',' << j << '}';
  for (auto [i, j] : sg.minus_edges()) os << " -{" << i << ',' << j << '}';
  return os.str();
}

}  // namespace braidfree
