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

#ifndef BRAIDFREE_ARRANGEMENT_HPP
#define BRAIDFREE_ARRANGEMENT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braidfree/digraph.hpp"

namespace braidfree {

/// The affine hyperplane normal . x = offset, kept in canonical form:
/// gcd(normal, offset) == 1 and the first nonzero normal entry positive.
class Hyperplane {
 public:
  /// Throws std::invalid_argument if `normal` is zero.
  Hyperplane(std::vector<std::int64_t> normal, std::int64_t offset);

  /// x_i - x_j = c in dimension `dim`.
  static Hyperplane difference(int dim, int i, int j, std::int64_t c);
  /// x_i = 0 in dimension `dim`.
  static Hyperplane coordinate(int dim, int i);

  int dim() const { return static_cast<int>(normal_.size()); }
  const std::vector<std::int64_t>& normal() const { return normal_; }
  std::int64_t offset() const { return offset_; }

  std::string to_string() const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;

 private:
  std::vector<std::int64_t> normal_;
  std::int64_t offset_;
};

/// A finite set of distinct hyperplanes in a common ambient dimension, with an
/// optional marked member (the hyperplane at infinity after coning).
class Arrangement {
 public:
  explicit Arrangement(int dim) : dim_(dim) {}
  /// Duplicates collapse. Throws std::invalid_argument on a dimension
  /// mismatch or a marker that is not a member.
  Arrangement(int dim, std::vector<Hyperplane> hyperplanes, std::optional<Hyperplane> marker = std::nullopt);

  int dim() const { return dim_; }
  /// Sorted ascending.
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  std::size_t size() const { return hyperplanes_.size(); }
  bool empty() const { return hyperplanes_.empty(); }
  const std::optional<Hyperplane>& marker() const { return marker_; }
  bool contains(const Hyperplane& h) const;
  bool is_central() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  int dim_;
  std::vector<Hyperplane> hyperplanes_;
  std::optional<Hyperplane> marker_;
};

/// x_i - x_j = c for every pair i < j and every integer c in
/// [-k - eps(i,j), k + eps(j,i)]. Throws std::invalid_argument if n < 2 or
/// k < 0.
Arrangement build_deformation(const Digraph& g, int k);

/// Homogenizes with a new last coordinate z: a . x = c becomes
/// a . x - c z = 0, and z = 0 is added as the marker.
Arrangement cone(const Arrangement& a);

/// Hyperplanes containing the solution set of `flat`. Throws
/// std::invalid_argument if the equations are inconsistent or have the wrong
/// dimension. An empty flat (the whole space) lies in no hyperplane.
Arrangement general_localize(const Arrangement& a, std::span<const Hyperplane> flat);

/// Localization of a coned deformation at {x_i = x_j = x_k} intersected with
/// the marker. Throws std::invalid_argument without a marker, or when the
/// indices are out of range or repeated.
Arrangement localize_triple(const Arrangement& ca, int i, int j, int k);

/// Keeps coordinates `coords` (in that order) and drops the rest. Throws
/// std::invalid_argument if some hyperplane involves a dropped coordinate.
Arrangement restrict_coordinates(const Arrangement& a, std::span<const int> coords);

/// Coordinate c of `a` becomes coordinate perm[c].
Arrangement permute_coordinates(const Arrangement& a, std::span<const int> perm);

/// One line per hyperplane, `c : a_0 a_1 ... a_{d-1}`, in canonical order.
std::string dump(const Arrangement& a);

}  // namespace braidfree

#endif  // BRAIDFREE_ARRANGEMENT_HPP
