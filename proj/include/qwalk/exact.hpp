// Copyright 2026 The qwalk Authors
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

#pragma once

// Exact arithmetic helpers: rationals, monomial surds c*sqrt(r), rational
// polynomials and characteristic polynomials of rational matrices.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qwalk {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational parse_rational(const std::string& text);
// num/den in lowest terms (gmpxx leaves two-argument construction unreduced).
Rational fraction(const BigInt& num, const BigInt& den);
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Best rational approximation with denominator <= max_den, accepted only if
// it lies within tol of x.
std::optional<Rational> rationalize(double x, std::uint64_t max_den, double tol);

// coef * sqrt(radicand), radicand a square-free positive integer.
struct Surd {
  Rational coef{0};
  std::uint64_t radicand = 1;

  static Surd sqrt_of(const Rational& square);  // square >= 0
  static Surd rational(const Rational& value) { return Surd{value, 1}; }

  bool is_zero() const { return sgn(coef) == 0; }
  double to_double() const;
  Rational squared() const { return coef * coef * radicand; }
};

Surd operator*(const Surd& a, const Surd& b);
Surd operator-(const Surd& a);
// Sum of two surds; nullopt when the radicands differ (the sum is then not a
// monomial surd).
std::optional<Surd> try_add(const Surd& a, const Surd& b);
bool operator==(const Surd& a, const Surd& b);

std::uint64_t square_free_part(std::uint64_t n, std::uint64_t* root = nullptr);

// Dense polynomial over Q, coefficients stored low degree first. The zero
// polynomial has no coefficients.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs);

  static QPolynomial monomial(const Rational& c, std::size_t degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const;
  double eval(double x) const;

  // p(x) -> p(a*x)
  QPolynomial scaled_argument(const Rational& a) const;
  QPolynomial monic() const;

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.c_ == b.c_;
  }

  // Euclidean division; divisor must be nonzero.
  void divmod(const QPolynomial& divisor, QPolynomial& quotient,
              QPolynomial& remainder) const;
  bool divisible_by(const QPolynomial& divisor) const;
  // Largest k with divisor^k | *this.
  int multiplicity_of(const QPolynomial& divisor) const;

  std::vector<std::string> coeff_strings() const;
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<BigInt>>;

// det(xI - Z) for a square integer matrix, computed by Hessenberg reduction
// modulo enough word-sized primes and Chinese remaindering against a
// Hadamard-type coefficient bound.
std::vector<BigInt> integer_charpoly(const IntegerMatrix& z);

// det(xI - R) for a square rational matrix (scaled to an integer matrix).
QPolynomial rational_charpoly(const RationalMatrix& r);

}  // namespace qwalk
