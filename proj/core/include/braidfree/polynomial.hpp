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

#ifndef BRAIDFREE_POLYNOMIAL_HPP
#define BRAIDFREE_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace braidfree {

/// Univariate polynomial in t with int64 coefficients, ascending degree.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
/// Arithmetic throws std::overflow_error rather than wrapping.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> ascending);
  IntPolynomial(std::initializer_list<std::int64_t> ascending)
      : IntPolynomial(std::vector<std::int64_t>(ascending)) {}

  static IntPolynomial monomial(int degree, std::int64_t coeff = 1);
  /// prod (t - r) over `roots`.
  static IntPolynomial from_roots(std::span<const std::int64_t> roots);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::int64_t coeff(int d) const {
    return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : 0;
  }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  std::int64_t evaluate(std::int64_t t) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Quotient by (t - r) when r is a root; throws std::domain_error otherwise.
  IntPolynomial divide_by_root(std::int64_t r) const;

  /// Expanded form, e.g. `t^3 - 5*t^2 + 7*t`.
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace braidfree

#endif  // BRAIDFREE_POLYNOMIAL_HPP
