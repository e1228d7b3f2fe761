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

#include "braidfree/ordering.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidfree {

bool is_permutation_of_range(std::span<const int> perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return from_sequence(std::move(seq));
}

VertexOrdering VertexOrdering::from_sequence(std::vector<int> sequence) {
  if (!is_permutation_of_range(sequence)) {
    throw std::invalid_argument("vertex ordering is not a permutation");
  }
  VertexOrdering ord;
  ord.position_.resize(sequence.size());
  for (std::size_t p = 0; p < sequence.size(); ++p) ord.position_[sequence[p]] = static_cast<int>(p);
  ord.sequence_ = std::move(sequence);
  return ord;
}

VertexOrdering VertexOrdering::from_positions(std::span<const int> positions) {
  if (!is_permutation_of_range(positions)) {
    throw std::invalid_argument("vertex ordering is not a permutation");
  }
  std::vector<int> seq(positions.size());
  for (std::size_t v = 0; v < positions.size(); ++v) seq[positions[v]] = static_cast<int>(v);
  return from_sequence(std::move(seq));
}

VertexOrdering VertexOrdering::relabeled(std::span<const int> perm) const {
  if (perm.size() != sequence_.size() || !is_permutation_of_range(perm)) {
    throw std::invalid_argument("relabeling is not a permutation of the ordered vertices");
  }
  std::vector<int> seq(sequence_.size());
  for (std::size_t p = 0; p < sequence_.size(); ++p) seq[p] = perm[sequence_[p]];
  return from_sequence(std::move(seq));
}

std::string VertexOrdering::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t p = 0; p < sequence_.size(); ++p) {
    if (p) os << ' ';
    os << sequence_[p];
  }
  os << ']';
  return os.str();
}

}  // namespace braidfree
