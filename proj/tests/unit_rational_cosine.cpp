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


#include <doctest.h>

#include <cmath>
#include <numeric>

#include "qwalk/error.hpp"
#include "qwalk/rational_cosine.hpp"

using namespace qwalk;

TEST_CASE("Chebyshev polynomials") {
  CHECK(chebyshev_T(2, 0.0) == doctest::Approx(-1.0));
  CHECK(chebyshev_T(6, std::sqrt(3.0) / 2) == doctest::Approx(-1.0).epsilon(1e-12));
  for (std::uint64_t n = 0; n < 40; ++n) {
    CHECK(chebyshev_T(n, 1.0) == doctest::Approx(1.0));
    CHECK(chebyshev_T(n, Rational(1)) == 1);
    CHECK(chebyshev_T(n, Rational(-1)) == (n % 2 == 0 ? 1 : -1));
  }
  CHECK(chebyshev_T(3, Rational(1, 2)) == -1);
  CHECK(chebyshev_T(4, Rational(-1, 3)) == Rational(17, 81));
}

TEST_CASE("recognition") {
  auto c = recognize(0.5, 64);
  REQUIRE(c);
  CHECK(c->pq == RationalCosine{1, 3});
  c = recognize((std::sqrt(5.0) - 1) / 4, 64);
  REQUIRE(c);
  CHECK(c->pq == RationalCosine{2, 5});
  CHECK_FALSE(recognize(-0.25, 64));
  CHECK_FALSE(recognize(-0.25, 1000));
  CHECK_THROWS_AS(recognize(1.5, 64), ParameterError);
  CHECK_THROWS_AS(recognize(0.5, 0), ParameterError);
}

TEST_CASE("recognition round-trip for every denominator up to 64") {
  for (std::int64_t q = 1; q <= 64; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      const auto c = recognize(RationalCosine{p, q}.value(), 64);
      REQUIRE(c);
      CHECK(c->pq == RationalCosine{p, q});
    }
  }
}

TEST_CASE("exact context upgrades or refutes a numeric match") {
  // (x - 1/2)(x + 1/2)
  const QPolynomial ctx({Rational(-1, 4), Rational(0), Rational(1)});
  auto c = recognize(0.5, 64, 1e-9, &ctx);
  REQUIRE(c);
  CHECK(c->evidence == Evidence::Exact);
  // cos(2pi/5) is not a root of ctx: the numeric match is rejected.
  CHECK_FALSE(recognize(RationalCosine{2, 5}.value(), 64, 1e-9, &ctx));
}

TEST_CASE("minimal polynomials of 2cos") {
  using V = std::vector<BigInt>;
  CHECK(min_poly_2cos(1, 3) == V{-1, 1});
  CHECK(min_poly_2cos(1, 2) == V{0, 1});
  CHECK(min_poly_2cos(2, 5) == V{-1, 1, 1});
  CHECK(min_poly_2cos(0, 1) == V{-2, 1});
  CHECK(min_poly_2cos(1, 1) == V{2, 1});
  CHECK_THROWS_AS(min_poly_2cos(2, 4), ParameterError);
  // 4x^2 + 2x - 1 annihilates cos(2pi/5).
  const auto mc = min_poly_cos(2, 5);
  CHECK(mc.eval(RationalCosine{2, 5}.value()) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mc == QPolynomial({Rational(-1, 4), Rational(1, 2), Rational(1)}));
  // Every conjugate is a root, and the degree is phi(order)/2.
  for (std::int64_t q = 2; q <= 40; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto m = min_poly_2cos(p, q);
      const std::int64_t order = p % 2 ? 2 * q : q;
      std::int64_t phi = 0;
      for (std::int64_t k = 1; k <= order; ++k) phi += std::gcd(k, order) == 1;
      CHECK(static_cast<std::int64_t>(m.size()) - 1 == phi / 2);
      double v = 0, x = 2 * RationalCosine{p, q}.value(), pw = 1;
      for (const auto& a : m) {
        v += a.get_d() * pw;
        pw *= x;
      }
      CHECK(std::fabs(v) < 1e-6);
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  using V = std::vector<BigInt>;
  CHECK(cyclotomic(1) == V{-1, 1});
  CHECK(cyclotomic(6) == V{1, -1, 1});
  CHECK(cyclotomic(12) == V{1, 0, -1, 0, 1});
  CHECK(cyclotomic(105).size() == 49);
}

TEST_CASE("rational cosine values and certified non-cosines") {
  for (const char* r : {"0", "1", "-1", "1/2", "-1/2"}) CHECK(is_rational_cosine_value(parse_rational(r)));
  CHECK_FALSE(is_rational_cosine_value(Rational(1, 3)));
  // (x - 1)(x + 1/4)
  const QPolynomial p({Rational(-1, 4), Rational(-3, 4), Rational(1)});
  auto r = certify_rational_non_cosine(-0.25, p);
  REQUIRE(r);
  CHECK(*r == Rational(-1, 4));
  CHECK_FALSE(certify_rational_non_cosine(1.0, p));
  CHECK_FALSE(certify_rational_non_cosine(-0.3, p));
}

TEST_CASE("two-cosine relations") {
  using R = Rational;
  CHECK(conway_jones_rational_combo({{R(1), {1, 5}}, {R(-1), {2, 5}}}, R(1, 2)));
  CHECK(conway_jones_rational_combo({{R(1), {1, 3}}}, R(1, 2)));
  CHECK_FALSE(conway_jones_rational_combo({{R(2), {1, 5}}, {R(-1), {2, 5}}}, R(-1)));
  CHECK_FALSE(conway_jones_rational_combo({{R(2), {1, 7}}, {R(-1), {2, 7}}}, R(-1)));
  CHECK(conway_jones_rational_combo({{R(1), {2, 3}}, {R(1), {1, 3}}}, R(0)));
  CHECK(conway_jones_rational_combo({{R(1), {1, 7}}, {R(-1), {13, 7}}}, R(0)));
  CHECK_THROWS_AS(conway_jones_rational_combo({{R(1), {1, 2}}, {R(1), {1, 3}}, {R(1), {1, 5}}}, R(0)),
                  UnsupportedError);

  const AngleDomain open{R(0), R(1, 2), true, true};
  const auto sols = solve_two_cosine_equation(R(1), R(-1), R(1, 2), open, open);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].alpha == R(1, 5));
  CHECK(sols[0].beta == R(2, 5));
  CHECK_THROWS_AS(solve_two_cosine_equation(R(0), R(1), R(0), open, open), ParameterError);
}
