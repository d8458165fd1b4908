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
#include <random>

#include "qwalk/error.hpp"
#include "qwalk/spectral.hpp"
#include "support.hpp"

using namespace qwalk;
using test::eye;
using test::ones;

namespace {

std::vector<std::string> golden_coeffs(const char* key) {
  return test::golden()[key].get<std::vector<std::string>>();
}

void check_idempotent_algebra(const SpectralData& s, const Eigen::MatrixXd& b) {
  const auto n = static_cast<Eigen::Index>(s.dim());
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  std::size_t mult = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& e = s.idempotents[i];
    sum += e;
    mult += s.multiplicities[i];
    CHECK((b * e - s.eigenvalues[i] * e).cwiseAbs().maxCoeff() < 1e-8);
    for (std::size_t j = 0; j < s.size(); ++j) {
      const Eigen::MatrixXd p = e * s.idempotents[j];
      const Eigen::MatrixXd want = i == j ? e : Eigen::MatrixXd::Zero(n, n);
      CHECK((p - want).cwiseAbs().maxCoeff() < 1e-9);
    }
    CHECK(e.diagonal().minCoeff() >= -1e-10);
  }
  CHECK((sum - eye(n)).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(mult == s.dim());
}

}  // namespace

TEST_CASE("decompose K4") {
  const Eigen::MatrixXd b = (ones(4) - eye(4)) / 3.0;
  const auto s = decompose(b);
  REQUIRE(s.size() == 2);
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(s.eigenvalues[1] == doctest::Approx(-1.0 / 3));
  CHECK(s.multiplicities == std::vector<std::size_t>{1, 3});
  CHECK(s.idempotents[0].isApprox(ones(4) / 4.0, 1e-12));
  check_idempotent_algebra(s, b);
}

TEST_CASE("decompose the four-cycle matches the Fourier idempotents") {
  const auto c4 = generate(family::Cycle{4});
  const Eigen::MatrixXd b = c4.adjacency() / 2.0;
  const auto s = decompose(b);
  REQUIRE(s.size() == 3);
  CHECK(s.multiplicities == std::vector<std::size_t>{1, 2, 1});
  // E for cos(2 pi k / 4): entries (1/4) sum over +-k of cos(2 pi k (i - j) / 4).
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(s.idempotents[0](i, j) == doctest::Approx(0.25));
      CHECK(s.idempotents[1](i, j) == doctest::Approx(0.5 * std::cos(M_PI * (i - j) / 2.0)));
      CHECK(s.idempotents[2](i, j) == doctest::Approx(0.25 * ((i - j) % 2 == 0 ? 1 : -1)));
    }
  }
  check_idempotent_algebra(s, b);
}

TEST_CASE("decompose identity") {
  const auto s = decompose(eye(5));
  REQUIRE(s.size() == 1);
  CHECK(s.idempotents[0].isApprox(eye(5)));
}

TEST_CASE("idempotent algebra on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::size_t> nd(2, 12);
    const std::size_t n = nd(rng);
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(0.4);
    for (Vertex i = 0; i < n; ++i) {
      edges.push_back({i, (i + 1) % n});  // keeps every degree positive
      for (Vertex j = i + 2; j < n; ++j)
        if (coin(rng)) edges.push_back({i, j});
    }
    if (n == 2) edges.resize(1);
    const auto w = arc_reversal_walk(MultiGraph(n, edges));
    check_idempotent_algebra(analyze_spectrum(w), w.projected());
  }
}

TEST_CASE("exact characteristic polynomials") {
  CHECK(exact_charpoly(arc_reversal_walk(generate(family::Complete{3}))).coeff_strings() ==
        golden_coeffs("k3_charpoly"));
  CHECK(exact_charpoly(arc_reversal_walk(generate(family::Cycle{4}))).coeff_strings() ==
        golden_coeffs("c4_charpoly"));
  const auto grid = vertex_face_walk(toroidal_grid(4, 4));
  const auto p = exact_charpoly(grid);
  CHECK(p.coeff_strings() == golden_coeffs("grid_4_4_charpoly"));
  for (const char* r : {"1", "0", "-1/2", "-1"}) CHECK(sgn(p.eval(parse_rational(r))) == 0);
  // Surd entries: the path has B(0,1) = 1/sqrt(2).
  const auto path = exact_charpoly(arc_reversal_walk(generate(family::Path{3})));
  CHECK(path.to_string() == "x^3 - x");
}

TEST_CASE("numeric and exact charpolys agree") {
  for (const auto& w : {arc_reversal_walk(generate(family::Figure2Graph{})),
                        arc_reversal_walk(generate(family::Paley{13})),
                        vertex_face_walk(toroidal_grid(3, 5))}) {
    const auto s = analyze_spectrum(w);
    REQUIRE(s.charpoly.has_value());
    const auto num = numeric_charpoly(s);
    REQUIRE(num.size() == s.charpoly->coeffs().size());
    for (std::size_t i = 0; i < num.size(); ++i)
      CHECK(num[i] == doctest::Approx((*s.charpoly)[i].get_d()).epsilon(1e-7));
  }
}

TEST_CASE("spectrum without exact data") {
  std::mt19937 rng(3);
  std::normal_distribution<double> nd;
  Eigen::MatrixXd a(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = nd(rng);
  Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
  const auto w = generic_walk(q.leftCols(2), q.rightCols(2));
  const auto s = analyze_spectrum(w);
  CHECK_FALSE(s.charpoly.has_value());
  CHECK_FALSE(s.exact_note.empty());
}

TEST_CASE("grid charpoly filter") {
  const auto f44 = charpoly_of_U_filter(4, 4);
  CHECK(f44.tr_u == 16);
  CHECK(f44.tr_u2 == 36);
  CHECK(f44.c2 == 110);
  CHECK(f44.integral);
  const auto f33 = charpoly_of_U_filter(3, 3);
  CHECK(f33.c2 == Rational(243, 8));
  CHECK_FALSE(f33.integral);
  const auto f46 = charpoly_of_U_filter(4, 6);
  CHECK(f46.c2 == 261);
  CHECK(f46.integral);
  CHECK_THROWS_AS(charpoly_of_U_filter(2, 5), PreconditionError);
}

TEST_CASE("unitary traces on small grids") {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t m = n; n * m <= 36; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      const auto w = vertex_face_walk(toroidal_grid(n, m));
      const auto [tr, tr2] = exact_unitary_traces(w);
      const auto f = charpoly_of_U_filter(n, m);
      CHECK(tr == f.tr_u);
      CHECK(tr2 == f.tr_u2);
      const Eigen::MatrixXd u = w.unitary();
      CHECK(u.trace() == doctest::Approx(f.tr_u.get_d()).epsilon(1e-10));
      CHECK((u * u).trace() == doctest::Approx(f.tr_u2.get_d()).epsilon(1e-10));
    }
  }
}
