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

#include <Eigen/QR>

#include "qwalk/error.hpp"
#include "qwalk/rational_cosine.hpp"
#include "qwalk/walks.hpp"
#include "support.hpp"

using namespace qwalk;
using test::eye;
using test::ones;

namespace {

Eigen::MatrixXd random_frame(std::mt19937& rng, int rows, int cols) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXd a(rows, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) a(i, j) = nd(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  return q.leftCols(cols);
}

// T_t(B) by diagonalisation, independent of the recurrence used in bt().
Eigen::MatrixXd chebyshev_of(const Eigen::MatrixXd& b, std::size_t t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
  Eigen::VectorXd d = es.eigenvalues();
  for (int i = 0; i < d.size(); ++i) d(i) = chebyshev_T(t, std::clamp(d(i), -1.0, 1.0));
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::MatrixXd golden_matrix(const char* name) {
  return io::matrix_from_json(test::golden()["szegedy"][name]);
}

}  // namespace

TEST_CASE("arc-reversal projected matrices") {
  const auto k4 = arc_reversal_walk(generate(family::Complete{4}));
  CHECK(k4.projected().isApprox((ones(4) - eye(4)) / 3.0, 1e-12));
  for (std::size_t n : {3, 5, 8}) {
    const auto c = generate(family::Cycle{n});
    CHECK(arc_reversal_walk(c).projected().isApprox(c.adjacency() / 2.0, 1e-12));
  }
  const auto k2 = arc_reversal_walk(generate(family::Complete{2}));
  CHECK(k2.projected().isApprox(ones(2) - eye(2), 1e-12));
}

TEST_CASE("vertex-face projected matrices") {
  const auto torus = vertex_face_walk(k4_torus_map());
  CHECK(torus.projected().isApprox((ones(4) - 2.0 * eye(4)) / 2.0, 1e-12));
  const auto planar = vertex_face_walk(k4_planar_map()).projected();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(planar(i, j) == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
  CHECK(vertex_face_walk(toroidal_grid(1, 1)).projected()(0, 0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  for (auto [n, m] : {std::pair{4, 4}, {4, 6}, {2, 3}, {3, 5}}) {
    const auto map = toroidal_grid(n, m);
    const std::size_t nv = n * m;
    Eigen::MatrixXd c(nv, nv);
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t f = 0; f < nv; ++f) c(v, f) = static_cast<double>(map.alpha(v, f));
    CHECK(vertex_face_walk(map).projected().isApprox(c * c.transpose() / 8.0 - eye(nv), 1e-12));
  }
}

TEST_CASE("Szegedy walks match the oracle") {
  using R = Rational;
  const std::vector<std::vector<R>> half{{R(1, 2), R(1, 2)}, {R(1, 2), R(1, 2)}};
  CHECK(szegedy_walk(half, half).projected().isApprox(golden_matrix("uniform"), 1e-12));
  const std::vector<std::vector<R>> swap{{0, 1}, {1, 0}};
  CHECK(szegedy_walk(swap, swap).projected().isApprox(golden_matrix("involution"), 1e-12));
  const std::vector<std::vector<R>> p3{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const std::vector<std::vector<R>> q3{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK(szegedy_walk(p3, q3).projected().isApprox(golden_matrix("cycle3"), 1e-12));
  CHECK(szegedy_walk(q3, q3).projected().isApprox(golden_matrix("cycle3_mismatched"), 1e-12));
  const std::vector<std::vector<R>> one{{1}};
  CHECK(szegedy_walk(one, one).projected()(0, 0) == doctest::Approx(1.0));
  // The floating-point entry point agrees with the exact one.
  const std::vector<std::vector<double>> hd{{0.5, 0.5}, {0.5, 0.5}};
  CHECK(szegedy_walk(hd, hd).projected().isApprox(golden_matrix("uniform"), 1e-12));
  CHECK_THROWS_AS(szegedy_walk(std::vector<std::vector<R>>{{R(1, 2), R(1, 3)}},
                               std::vector<std::vector<R>>{{1}}),
                  ParameterError);
}

TEST_CASE("signed four-cycle walk") {
  const auto w = signed_c4_walk();
  const Eigen::MatrixXd b = w.projected();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
  for (int i = 0; i < 4; ++i) CHECK(std::fabs(es.eigenvalues()(i)) == doctest::Approx(std::sqrt(0.5)));
  CHECK(std::fabs(b(0, 2)) < 1e-12);
  CHECK(std::fabs(b(1, 3)) < 1e-12);
  for (int i = 0; i < 4; ++i) CHECK(std::fabs(b(i, (i + 1) % 4)) == doctest::Approx(0.5));
}

TEST_CASE("generic frames") {
  std::mt19937 rng(7);
  const auto f = random_frame(rng, 6, 3);
  const auto same = generic_walk(f, f);
  CHECK(same.unitary().isApprox(eye(6), 1e-12));

  const auto c4 = arc_reversal_walk(generate(family::Cycle{4}));
  const auto g = generic_walk(c4.n_frame(), c4.m_frame());
  CHECK(g.projected().isApprox(c4.projected(), 1e-12));

  Eigen::MatrixXd bad = f;
  bad(0, 0) += 0.1;
  CHECK_THROWS_AS(generic_walk(bad, f), ParameterError);
  CHECK_THROWS_AS(generic_walk(f, random_frame(rng, 5, 2)), ParameterError);
}

TEST_CASE("random walks: unitarity, spectrum range, and the Chebyshev identity") {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<int> rd(3, 9);
    const int rows = rd(rng);
    std::uniform_int_distribution<int> cd(1, rows - 1);
    const auto w = generic_walk(random_frame(rng, rows, cd(rng)), random_frame(rng, rows, cd(rng)));
    const Eigen::MatrixXd u = w.unitary();
    CHECK((u.transpose() * u - eye(rows)).cwiseAbs().maxCoeff() < 1e-10);
    const Eigen::MatrixXd b = w.projected();
    CHECK((b - b.transpose()).cwiseAbs().maxCoeff() < 1e-14);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
    CHECK(es.eigenvalues().minCoeff() >= -1 - 1e-12);
    CHECK(es.eigenvalues().maxCoeff() <= 1 + 1e-12);
    for (std::size_t t = 0; t <= 8; ++t) {
      CHECK((bt_oracle(w, t) - chebyshev_of(b, t)).cwiseAbs().maxCoeff() < 1e-9);
      CHECK((bt(w, t) - chebyshev_of(b, t)).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("time evolution") {
  for (std::size_t n = 3; n <= 9; ++n) {
    const auto w = arc_reversal_walk(generate(family::Cycle{n}));
    CHECK(bt(w, n).isApprox(eye(n), 1e-10));
    CHECK(bt(w, 0).isApprox(eye(n)));
  }
  const auto c8 = arc_reversal_walk(generate(family::Cycle{8}));
  CHECK(bt(c8, 2)(0, 2) == doctest::Approx(0.5).epsilon(1e-12));
  const Eigen::MatrixXd series = bt_column_series(c8, 0, 10);
  for (std::size_t t = 0; t <= 10; ++t)
    CHECK((series.col(t) - bt(c8, t).col(0)).cwiseAbs().maxCoeff() < 1e-12);

  const auto fig = arc_reversal_walk(generate(family::Figure2Graph{}));
  CHECK(fidelity_gap(fig, 0, 3, 6, 1) == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-9));
  CHECK(fidelity_gap(fig, 2, 2, 0, 1) == doctest::Approx(0.0));
  const auto k2 = arc_reversal_walk(generate(family::Complete{2}));
  CHECK(std::fabs(fidelity_gap(k2, 0, 1, 1, 1)) < 1e-12);
  CHECK_THROWS_AS(fidelity_gap(k2, 0, 2, 1, 1), ParameterError);
  CHECK_THROWS_AS(fidelity_gap(k2, 0, 1, 1, 2), ParameterError);

  // K_2: the star of vertex 0 moves onto the star of vertex 1.
  const Eigen::VectorXd phi1 = evolve(k2, k2.n_frame().col(0), 1);
  CHECK((phi1 - k2.n_frame().col(1)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(evolve(k2, Eigen::VectorXd::Zero(3), 1), ParameterError);
}

TEST_CASE("isolated vertices are a precondition failure") {
  CHECK_THROWS_AS(arc_reversal_walk(MultiGraph(3, {{0, 1}})), PreconditionError);
}

TEST_CASE("exact projected entries") {
  const auto w = arc_reversal_walk(generate(family::Path{3}));
  REQUIRE(w.has_exact_frames());
  const auto e = w.exact_projected();
  CHECK(e[0][1].squared() == Rational(1, 2));
  CHECK(e[0][2].is_zero());
  const auto r = w.rational_similar();
  CHECK(r.size() == 3);
}
