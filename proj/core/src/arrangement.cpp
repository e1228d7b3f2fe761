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

#include "braidfree/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidfree {

namespace {

__extension__ typedef __int128 Int128;

using Row = std::vector<std::int64_t>;

void normalize(Row& row) {
  std::int64_t g = 0;
  for (auto v : row) g = std::gcd(g, v);
  if (g > 1) {
    for (auto& v : row) v /= g;
  }
}

int leading_column(const Row& row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] != 0) return static_cast<int>(c);
  }
  return -1;
}

// Integer row echelon basis of a span of augmented rows [a | c].
class EchelonBasis {
 public:
  /// Reduces `v` against the basis; the result is zero iff v is in the span.
  Row reduce(Row v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int p = pivots_[r];
      if (v[p] == 0) continue;
      const Int128 lead = rows_[r][p];
      const Int128 factor = v[p];
      for (std::size_t c = 0; c < v.size(); ++c) {
        const Int128 x = lead * v[c] - factor * rows_[r][c];
        if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("flat reduction overflowed 64 bits");
        v[c] = static_cast<std::int64_t>(x);
      }
      normalize(v);
    }
    return v;
  }

  void insert(Row v) {
    v = reduce(std::move(v));
    const int p = leading_column(v);
    if (p < 0) return;
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(v));
  }

  bool in_span(Row v) const { return leading_column(reduce(std::move(v))) < 0; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  std::vector<Row> rows_;
  std::vector<int> pivots_;
};

Row augmented(const Hyperplane& h) {
  Row row = h.normal();
  row.push_back(h.offset());
  return row;
}

void check_distinct_coords(std::span<const int> coords, int dim, const char* what) {
  std::vector<char> seen(dim, 0);
  for (int c : coords) {
    if (c < 0 || c >= dim) throw std::invalid_argument(std::string(what) + ": coordinate out of range");
    if (seen[c]) throw std::invalid_argument(std::string(what) + ": repeated coordinate");
    seen[c] = 1;
  }
}

}  // namespace

Hyperplane::Hyperplane(std::vector<std::int64_t> normal, std::int64_t offset)
    : normal_(std::move(normal)), offset_(offset) {
  const int lead = leading_column(normal_);
  if (lead < 0) throw std::invalid_argument("hyperplane normal must be nonzero");
  std::int64_t g = std::gcd(std::int64_t{0}, offset_);
  for (auto v : normal_) g = std::gcd(g, v);
  const std::int64_t scale = normal_[lead] < 0 ? -g : g;
  for (auto& v : normal_) v /= scale;
  offset_ /= scale;
}

Hyperplane Hyperplane::difference(int dim, int i, int j, std::int64_t c) {
  std::vector<std::int64_t> normal(dim, 0);
  normal.at(i) += 1;
  normal.at(j) -= 1;
  return Hyperplane(std::move(normal), c);
}

Hyperplane Hyperplane::coordinate(int dim, int i) {
  std::vector<std::int64_t> normal(dim, 0);
  normal.at(i) = 1;
  return Hyperplane(std::move(normal), 0);
}

std::string Hyperplane::to_string() const {
  std::ostringstream os;
  os << offset_ << " :";
  for (auto v : normal_) os << ' ' << v;
  return os.str();
}

Arrangement::Arrangement(int dim, std::vector<Hyperplane> hyperplanes, std::optional<Hyperplane> marker)
    : dim_(dim), hyperplanes_(std::move(hyperplanes)), marker_(std::move(marker)) {
  if (dim < 0) throw std::invalid_argument("arrangement dimension must be nonnegative");
  for (const auto& h : hyperplanes_) {
    if (h.dim() != dim) throw std::invalid_argument("hyperplane dimension does not match arrangement");
  }
  std::sort(hyperplanes_.begin(), hyperplanes_.end());
  hyperplanes_.erase(std::unique(hyperplanes_.begin(), hyperplanes_.end()), hyperplanes_.end());
  if (marker_ && !contains(*marker_)) throw std::invalid_argument("marker is not a member of the arrangement");
}

bool Arrangement::contains(const Hyperplane& h) const {
  return std::binary_search(hyperplanes_.begin(), hyperplanes_.end(), h);
}

bool Arrangement::is_central() const {
  return std::all_of(hyperplanes_.begin(), hyperplanes_.end(), [](const Hyperplane& h) { return h.offset() == 0; });
}

Arrangement build_deformation(const Digraph& g, int k) {
  const int n = g.size();
  if (n < 2) throw std::invalid_argument("deformation needs at least 2 vertices");
  if (k < 0) throw std::invalid_argument("level k must be nonnegative");
  std::vector<Hyperplane> hs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::int64_t lo = -k - (g.has_arc(i, j) ? 1 : 0);
      const std::int64_t hi = k + (g.has_arc(j, i) ? 1 : 0);
      for (std::int64_t c = lo; c <= hi; ++c) hs.push_back(Hyperplane::difference(n, i, j, c));
    }
  }
  return Arrangement(n, std::move(hs));
}

Arrangement cone(const Arrangement& a) {
  const int d = a.dim() + 1;
  std::vector<Hyperplane> hs;
  hs.reserve(a.size() + 1);
  for (const auto& h : a.hyperplanes()) {
    auto normal = h.normal();
    normal.push_back(-h.offset());
    hs.emplace_back(std::move(normal), 0);
  }
  auto marker = Hyperplane::coordinate(d, d - 1);
  hs.push_back(marker);
  return Arrangement(d, std::move(hs), std::move(marker));
}

Arrangement general_localize(const Arrangement& a, std::span<const Hyperplane> flat) {
  EchelonBasis basis;
  for (const auto& h : flat) {
    if (h.dim() != a.dim()) throw std::invalid_argument("flat equation dimension does not match arrangement");
    basis.insert(augmented(h));
  }
  const auto& pivots = basis.pivots();
  if (!pivots.empty() && pivots.back() == a.dim()) {
    throw std::invalid_argument("flat equations are inconsistent");
  }
  std::vector<Hyperplane> kept;
  for (const auto& h : a.hyperplanes()) {
    if (basis.in_span(augmented(h))) kept.push_back(h);
  }
  std::optional<Hyperplane> marker;
  if (a.marker() && std::binary_search(kept.begin(), kept.end(), *a.marker())) marker = a.marker();
  return Arrangement(a.dim(), std::move(kept), std::move(marker));
}

Arrangement localize_triple(const Arrangement& ca, int i, int j, int k) {
  if (!ca.marker()) throw std::invalid_argument("localize_triple needs a coned arrangement");
  const int triple[] = {i, j, k};
  check_distinct_coords(triple, ca.dim(), "localize_triple");
  const Hyperplane flat[] = {
      Hyperplane::difference(ca.dim(), i, j, 0),
      Hyperplane::difference(ca.dim(), j, k, 0),
      *ca.marker(),
  };
  return general_localize(ca, flat);
}

Arrangement restrict_coordinates(const Arrangement& a, std::span<const int> coords) {
  check_distinct_coords(coords, a.dim(), "restrict_coordinates");
  std::vector<char> kept(a.dim(), 0);
  for (int c : coords) kept[c] = 1;
  auto restrict_one = [&](const Hyperplane& h) {
    for (int c = 0; c < a.dim(); ++c) {
      if (!kept[c] && h.normal()[c] != 0) {
        throw std::invalid_argument("restrict_coordinates: hyperplane " + h.to_string() +
                                    " involves a dropped coordinate");
      }
    }
    std::vector<std::int64_t> normal;
    normal.reserve(coords.size());
    for (int c : coords) normal.push_back(h.normal()[c]);
    return Hyperplane(std::move(normal), h.offset());
  };
  std::vector<Hyperplane> hs;
  for (const auto& h : a.hyperplanes()) hs.push_back(restrict_one(h));
  std::optional<Hyperplane> marker;
  if (a.marker()) marker = restrict_one(*a.marker());
  return Arrangement(static_cast<int>(coords.size()), std::move(hs), std::move(marker));
}

Arrangement permute_coordinates(const Arrangement& a, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != a.dim() || !is_permutation_of_range(perm)) {
    throw std::invalid_argument("permute_coordinates: not a permutation");
  }
  auto move_one = [&](const Hyperplane& h) {
    std::vector<std::int64_t> normal(a.dim(), 0);
    for (int c = 0; c < a.dim(); ++c) normal[perm[c]] = h.normal()[c];
    return Hyperplane(std::move(normal), h.offset());
  };
  std::vector<Hyperplane> hs;
  for (const auto& h : a.hyperplanes()) hs.push_back(move_one(h));
  std::optional<Hyperplane> marker;
  if (a.marker()) marker = move_one(*a.marker());
  return Arrangement(a.dim(), std::move(hs), std::move(marker));
}

std::string dump(const Arrangement& a) {
  std::string out;
  for (const auto& h : a.hyperplanes()) {
    out += h.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace braidfree
