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

#include "braidfree/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braidfree {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> ascending) : coeffs_(std::move(ascending)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(int degree, std::int64_t coeff) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<std::int64_t> c(degree + 1, 0);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_roots(std::span<const std::int64_t> roots) {
  IntPolynomial p{1};
  for (auto r : roots) p = p * IntPolynomial{-r, 1};
  return p;
}

std::int64_t IntPolynomial::evaluate(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a.coeff(int(i)), b.coeff(int(i)));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a.coeff(int(i)), checked_mul(-1, b.coeff(int(i))));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_by_root(std::int64_t r) const {
  if (is_zero()) return {};
  // Synthetic division from the top coefficient down.
  std::vector<std::int64_t> q(coeffs_.size() - 1, 0);
  std::int64_t carry = 0;
  for (int d = degree(); d >= 1; --d) {
    carry = checked_add(coeffs_[d], checked_mul(carry, r));
    q[d - 1] = carry;
  }
  const std::int64_t remainder = checked_add(coeffs_[0], checked_mul(carry, r));
  if (remainder != 0) throw std::domain_error("divide_by_root: " + std::to_string(r) + " is not a root");
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const std::int64_t c = coeffs_[d];
    if (c == 0) continue;
    // Magnitude as unsigned so INT64_MIN prints correctly.
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

}  // namespace braidfree
