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

#include "braidfree/charpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidfree {

namespace {

__extension__ typedef __int128 Int128;

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

std::uint32_t reduce_mod(std::int64_t v, std::uint64_t q) {
  const std::int64_t r = v % static_cast<std::int64_t>(q);
  return static_cast<std::uint32_t>(r < 0 ? r + static_cast<std::int64_t>(q) : r);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q) {
  std::uint64_t result = 1 % q;
  base %= q;
  while (exp) {
    if (exp & 1u) result = result * base % q;
    base = base * base % q;
    exp >>= 1;
  }
  return result;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint64_t q) {
  return static_cast<std::uint32_t>(pow_mod(a, q - 2, q));
}

// Pivot columns of the reduced row echelon form mod q.
std::vector<int> pivot_columns(std::vector<std::vector<std::uint32_t>> rows, std::uint64_t q) {
  std::vector<int> pivots;
  std::size_t top = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  for (int c = 0; c < cols && top < rows.size(); ++c) {
    std::size_t pr = top;
    while (pr < rows.size() && rows[pr][c] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[top], rows[pr]);
    const std::uint64_t inv = inverse_mod(rows[top][c], q);
    for (auto& v : rows[top]) v = static_cast<std::uint32_t>(v * inv % q);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (int cc = 0; cc < cols; ++cc) {
        rows[r][cc] = static_cast<std::uint32_t>((rows[r][cc] + (q - f) * rows[top][cc]) % q);
      }
    }
    pivots.push_back(c);
    ++top;
  }
  return pivots;
}

// Point counter over F_q for one reduced arrangement.
class ComplementCounter {
 public:
  ComplementCounter(const Arrangement& a, std::uint64_t q) : q_(q), dim_(a.dim()) {
    std::vector<std::vector<std::uint32_t>> normals;
    std::vector<std::uint32_t> offsets;
    for (const auto& h : a.hyperplanes()) {
      std::vector<std::uint32_t> row(dim_);
      bool zero = true;
      for (int c = 0; c < dim_; ++c) {
        row[c] = reduce_mod(h.normal()[c], q);
        zero = zero && row[c] == 0;
      }
      const std::uint32_t off = reduce_mod(h.offset(), q);
      if (zero) {
        // 0 = off: either every point or no point lies on it.
        if (off == 0) everything_removed_ = true;
        continue;
      }
      normals.push_back(std::move(row));
      offsets.push_back(off);
    }
    pivots_ = pivot_columns(normals, q);

    // Points differing by a common kernel direction are interchangeable, so
    // the non-pivot coordinates are pinned to zero.
    const int r = static_cast<int>(pivots_.size());
    levels_.resize(r);
    for (std::size_t h = 0; h < normals.size(); ++h) {
      std::vector<std::uint32_t> coef(r);
      int last = -1;
      for (int l = 0; l < r; ++l) {
        coef[l] = normals[h][pivots_[l]];
        if (coef[l] != 0) last = l;
      }
      // A nonzero row-space vector is nonzero on some pivot column.
      Constraint con;
      con.coef.assign(coef.begin(), coef.begin() + last);
      con.rhs = offsets[h];
      con.inv = inverse_mod(coef[last], q);
      levels_[last].push_back(std::move(con));
    }
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

  std::uint64_t count() {
    if (everything_removed_) return 0;
    const int r = rank();
    std::uint64_t scale = 1;
    for (int i = r; i < dim_; ++i) scale *= q_;
    if (r == 0) return scale;
    values_.assign(r, 0);
    marks_.assign(static_cast<std::size_t>(r) * q_, 0);
    stamps_.assign(r, 0);
    return count_from(0) * scale;
  }

 private:
  struct Constraint {
    std::vector<std::uint32_t> coef;  // coefficients of the earlier levels
    std::uint32_t rhs;
    std::uint32_t inv;  // inverse of this level's coefficient
  };

  std::uint64_t count_from(int level) {
    const int r = rank();
    std::uint32_t* mark = &marks_[static_cast<std::size_t>(level) * q_];
    const std::uint32_t stamp = ++stamps_[level];
    std::uint64_t forbidden = 0;
    for (const auto& con : levels_[level]) {
      std::uint64_t partial = 0;
      for (std::size_t l = 0; l < con.coef.size(); ++l) partial += std::uint64_t{con.coef[l]} * values_[l];
      const std::uint64_t residual = (con.rhs + q_ - partial % q_) % q_;
      const auto bad = static_cast<std::uint32_t>(residual * con.inv % q_);
      if (mark[bad] != stamp) {
        mark[bad] = stamp;
        ++forbidden;
      }
    }
    if (level == r - 1) return q_ - forbidden;
    std::uint64_t total = 0;
    for (std::uint32_t v = 0; v < q_; ++v) {
      if (mark[v] == stamp) continue;
      values_[level] = v;
      total += count_from(level + 1);
    }
    return total;
  }

  std::uint64_t q_;
  int dim_;
  bool everything_removed_ = false;
  std::vector<int> pivots_;
  std::vector<std::vector<Constraint>> levels_;
  std::vector<std::uint32_t> values_;
  std::vector<std::uint32_t> marks_;
  std::vector<std::uint32_t> stamps_;
};

// Newton interpolation through the (q, count) points; nullopt unless every
// coefficient is an integer that fits in 64 bits.
std::optional<IntPolynomial> interpolate(const std::vector<PrimeEvaluation>& pts) {
  const std::size_t m = pts.size();
  std::vector<cpp_rational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = cpp_rational(cpp_int(pts[i].count));
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / cpp_rational(cpp_int(pts[i].q) - cpp_int(pts[i - level].q));
      if (i == level) break;
    }
  }
  std::vector<cpp_rational> poly{dd[m - 1]};
  for (std::size_t step = m - 1; step-- > 0;) {
    // poly = poly * (t - x_step) + dd[step]
    std::vector<cpp_rational> next(poly.size() + 1);
    const cpp_rational x(cpp_int(pts[step].q));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * x;
    }
    next[0] += dd[step];
    poly = std::move(next);
  }
  std::vector<std::int64_t> coeffs;
  coeffs.reserve(poly.size());
  const cpp_int lo(std::numeric_limits<std::int64_t>::min());
  const cpp_int hi(std::numeric_limits<std::int64_t>::max());
  for (const auto& c : poly) {
    if (denominator(c) != 1) return std::nullopt;
    const cpp_int v = numerator(c);
    if (v < lo || v > hi) return std::nullopt;
    coeffs.push_back(static_cast<std::int64_t>(v));
  }
  return IntPolynomial(std::move(coeffs));
}

std::vector<std::uint64_t> divisors(std::uint64_t c) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= c; ++d) {
    if (c % d) continue;
    small.push_back(d);
    if (d * d != c) large.push_back(c / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_root(const IntPolynomial& p, std::int64_t r) {
  Int128 acc = 0;
  constexpr Int128 kLimit = static_cast<Int128>(1) << 100;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * r + *it;
    if (acc > kLimit || acc < -kLimit) return false;
  }
  return acc == 0;
}

}  // namespace

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t q) {
  std::uint64_t p = q + 1;
  while (!is_prime(p)) ++p;
  return p;
}

std::uint64_t reduction_bound(const Arrangement& a) {
  std::uint64_t m = 0;
  for (const auto& h : a.hyperplanes()) {
    for (auto v : h.normal()) m = std::max<std::uint64_t>(m, static_cast<std::uint64_t>(std::llabs(v)));
    m = std::max<std::uint64_t>(m, static_cast<std::uint64_t>(std::llabs(h.offset())));
  }
  return std::max<std::uint64_t>(static_cast<std::uint64_t>(a.dim()), 2 * m + 1);
}

PrimeEvaluation count_complement_points(const Arrangement& a, std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
  if (q >= (std::uint64_t{1} << 26)) throw std::invalid_argument("prime too large for the point counter");
  const std::uint64_t bound = reduction_bound(a);
  if (q <= bound) {
    throw std::invalid_argument("prime " + std::to_string(q) + " is not above the reduction bound " +
                                std::to_string(bound));
  }
  ComplementCounter counter(a, q);
  std::uint64_t work = 1;
  for (int i = 0; i < counter.rank(); ++i) {
    work *= q;
    if (work > kPointBudget) {
      throw ResourceError("point count over F_" + std::to_string(q) + " needs " + std::to_string(q) + "^" +
                          std::to_string(counter.rank()) + " points, above the budget");
    }
  }
  return {q, counter.count()};
}

CharpolyTrace characteristic_polynomial_traced(const Arrangement& a) {
  const int d = a.dim();
  std::uint64_t threshold = reduction_bound(a);
  for (int attempt = 0; attempt <= kMaxEscalations; ++attempt) {
    std::vector<PrimeEvaluation> evals;
    std::uint64_t q = threshold;
    for (int i = 0; i < d + 2; ++i) {
      q = next_prime(q);
      evals.push_back(count_complement_points(a, q));
    }
    const PrimeEvaluation check = evals.back();
    evals.pop_back();
    auto chi = interpolate(evals);
    if (chi && chi->degree() == d && chi->is_monic()) {
      bool agrees = false;
      try {
        agrees = chi->evaluate(static_cast<std::int64_t>(check.q)) == static_cast<std::int64_t>(check.count);
      } catch (const std::overflow_error&) {
      }
      if (agrees) return {std::move(*chi), std::move(evals), check, attempt};
    }
    threshold *= 2;
  }
  throw InternalError("bad reduction suspected: characteristic polynomial fit failed verification after " +
                      std::to_string(kMaxEscalations) + " escalations");
}

IntPolynomial characteristic_polynomial(const Arrangement& a) { return characteristic_polynomial_traced(a).chi; }

std::optional<std::vector<std::int64_t>> integer_root_split(const IntPolynomial& p) {
  if (!p.is_monic()) throw std::invalid_argument("integer_root_split needs a monic polynomial, got " + p.to_string());
  std::vector<std::int64_t> roots;
  IntPolynomial rest = p;
  while (rest.degree() > 0 && rest.coeff(0) == 0) {
    roots.push_back(0);
    rest = rest.divide_by_root(0);
  }
  while (rest.degree() > 0) {
    const std::int64_t c = rest.coeff(0);
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    std::optional<std::int64_t> found;
    for (std::uint64_t dv : divisors(mag)) {
      const auto r = static_cast<std::int64_t>(dv);
      if (is_root(rest, r)) {
        found = r;
        break;
      }
      if (is_root(rest, -r)) {
        found = -r;
        break;
      }
    }
    if (!found) return std::nullopt;
    roots.push_back(*found);
    rest = rest.divide_by_root(*found);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace braidfree
