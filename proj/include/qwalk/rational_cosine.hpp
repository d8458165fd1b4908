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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/exact.hpp"

namespace qwalk {

// cos(p*pi/q) with gcd(p, q) = 1, 0 <= p <= q.
struct RationalCosine {
  std::int64_t p = 0;
  std::int64_t q = 1;
  double value() const;
  friend bool operator==(const RationalCosine&, const RationalCosine&) = default;
};

enum class Evidence { NumericOnly, Exact };
std::string to_string(Evidence e);

struct CosineCertificate {
  RationalCosine pq;
  Evidence evidence = Evidence::NumericOnly;
  double residual = 0.0;  // |cos(p pi/q) - theta|
};

double chebyshev_T(std::uint64_t t, double x);
Rational chebyshev_T(std::uint64_t t, const Rational& x);

// Smallest-denominator (p, q), q <= q_max, with |cos(p pi/q) - theta| < tol.
// With an exact context (a rational polynomial having theta as a root) a
// candidate is only accepted if the minimal polynomial of cos(p pi/q)
// divides the context; the evidence is then Exact.
std::optional<CosineCertificate> recognize(double theta, std::uint64_t q_max,
                                           double tol = 1e-9,
                                           const QPolynomial* exact_context = nullptr);

// Monic integer minimal polynomial of 2cos(p pi/q), coefficients low degree
// first. Obtained from the cyclotomic polynomial of the order of e^{i p pi/q}
// by rewriting it in y = x + 1/x.
std::vector<BigInt> min_poly_2cos(std::int64_t p, std::int64_t q);
// Minimal polynomial of cos(p pi/q) itself (monic, rational coefficients).
QPolynomial min_poly_cos(std::int64_t p, std::int64_t q);
std::vector<BigInt> cyclotomic(std::uint64_t n);

// The only rational values of cosines of rational multiples of pi.
bool is_rational_cosine_value(const Rational& x);

// If theta is (numerically) a rational root of `charpoly` whose value is not
// in {0, +-1/2, +-1}, returns that rational: theta is then certified not to
// be a cosine of a rational multiple of pi.
std::optional<Rational> certify_rational_non_cosine(double theta,
                                                    const QPolynomial& charpoly);

struct CosineTerm {
  Rational coef;
  RationalCosine angle;
};

// Exact decision of sum coef_i cos(angle_i) == target for at most two terms.
bool conway_jones_rational_combo(const std::vector<CosineTerm>& terms,
                                 const Rational& target);

// Angle domain inside [0, pi/2] as a fraction of pi, with open/closed ends.
struct AngleDomain {
  Rational lo{0}, hi{1, 2};
  bool lo_open = false, hi_open = false;
  bool contains(const Rational& frac) const;
};

struct TwoCosineSolution {
  Rational alpha, beta;  // fractions of pi; alpha == beta == -1 marks the
                         // one-parameter family alpha = beta (irrational)
};

// All solutions of c1 cos(alpha) + c2 cos(beta) = target with alpha, beta
// rational multiples of pi in the given domains, up to the family
// alpha = beta which is reported once.
std::vector<TwoCosineSolution> solve_two_cosine_equation(
    const Rational& c1, const Rational& c2, const Rational& target,
    const AngleDomain& da, const AngleDomain& db);

}  // namespace qwalk
