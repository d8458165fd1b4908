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
#include <set>

#include "qwalk/error.hpp"
#include "qwalk/transfer.hpp"
#include "support.hpp"

using namespace qwalk;

namespace {

struct Fixture {
  TwoReflectionWalk walk;
  SpectralData spec;
  explicit Fixture(TwoReflectionWalk w) : walk(std::move(w)), spec(analyze_spectrum(walk)) {}
  TransferVerdict pair(std::size_t u, std::size_t v) const {
    DecideOptions o;
    o.oracle_walk = &walk;
    return decide_pair(spec, u, v, o);
  }
  TransferVerdict period(std::size_t u) const {
    DecideOptions o;
    o.oracle_walk = &walk;
    return decide_periodicity(spec, u, o);
  }
};

Fixture arc(const FamilySpec& f) { return Fixture(arc_reversal_walk(generate(f))); }

bool is_peak(const TransferVerdict& v) {
  return v.kind == VerdictKind::PeakST || v.kind == VerdictKind::PerfectST;
}

// Compares every verdict from the sources in a golden block with the oracle.
void check_against_golden(const Fixture& f, const io::Json& block) {
  std::map<std::pair<std::size_t, std::size_t>, std::pair<int, double>> want;
  for (const auto& p : block["peaks"]) {
    want[{p[0].get<std::size_t>(), p[1].get<std::size_t>()}] = {p[2].get<int>(), p[3].get<double>()};
  }
  for (const auto& [key, val] : block["periods"].items()) {
    const std::size_t u = std::stoul(key);
    const auto pv = f.period(u);
    CAPTURE(u);
    CHECK(pv.oracle.passed);
    if (val.is_null()) {
      CHECK(pv.kind == VerdictKind::NoPeak);
    } else {
      CHECK(pv.kind == VerdictKind::Periodic);
      CHECK(pv.tau == val.get<long>());
    }
    for (std::size_t v = 0; v < f.spec.dim(); ++v) {
      if (v == u) continue;
      CAPTURE(v);
      const auto d = f.pair(u, v);
      CHECK(d.oracle.passed);
      auto it = want.find({u, v});
      if (it == want.end()) {
        CHECK_FALSE(is_peak(d));
      } else {
        CHECK(is_peak(d));
        CHECK(d.tau == it->second.first);
        CHECK(d.amount == doctest::Approx(it->second.second).epsilon(1e-9));
      }
    }
  }
}

}  // namespace

TEST_CASE("mutual support") {
  const auto k3 = arc(family::Complete{3});
  const auto ms = mutual_support(k3.spec, 0, 1);
  REQUIRE(ms.plus.size() == 1);
  REQUIRE(ms.minus.size() == 1);
  CHECK(k3.spec.eigenvalues[ms.plus[0]] == doctest::Approx(1.0));
  CHECK(k3.spec.eigenvalues[ms.minus[0]] == doctest::Approx(-0.5));

  const auto c8 = arc(family::Cycle{8});
  const auto m8 = mutual_support(c8.spec, 0, 2);
  // cos(2 pi k / 8) for even k: 1, 0, -1 with E(0,2) signs +, -, +.
  std::set<long> plus, minus;
  for (auto i : m8.plus) plus.insert(std::lround(c8.spec.eigenvalues[i]));
  for (auto i : m8.minus) minus.insert(std::lround(c8.spec.eigenvalues[i]));
  CHECK(plus == std::set<long>{-1, 1});
  CHECK(minus == std::set<long>{0});

  const Fixture signed_c4(signed_c4_walk());
  CHECK(mutual_support(signed_c4.spec, 0, 2).empty());
  CHECK(mutual_support(signed_c4.spec, 1, 3).empty());
  CHECK_FALSE(mutual_support(signed_c4.spec, 0, 1).empty());
}

TEST_CASE("support sign structure") {
  for (const auto& f : {arc(family::Figure2Graph{}), arc(family::Paley{13}), arc(family::Path{5})}) {
    for (std::size_t u = 0; u < f.spec.dim(); ++u) {
      CHECK(mutual_support(f.spec, u, u).minus.empty());
      for (std::size_t v = u + 1; v < f.spec.dim(); ++v) {
        const auto ms = mutual_support(f.spec, u, v);
        if (!ms.empty()) {
          CHECK_FALSE(ms.plus.empty());
          CHECK_FALSE(ms.minus.empty());
        }
        CHECK(ms.bound() <= 1 + 1e-12);
      }
    }
  }
}

TEST_CASE("strong cospectrality") {
  CHECK(strong_cospectral(arc(family::Cycle{6}).spec, 0, 3));
  CHECK_FALSE(strong_cospectral(arc(family::Cycle{8}).spec, 0, 2));
  CHECK_FALSE(strong_cospectral(arc(family::Complete{4}).spec, 0, 1));
}

TEST_CASE("pair verdicts") {
  const auto c8 = arc(family::Cycle{8}).pair(0, 2);
  CHECK(c8.kind == VerdictKind::PeakST);
  CHECK(c8.tau == 2);
  CHECK(c8.gamma == 1);
  CHECK(c8.amount == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c8.oracle.ran);
  CHECK(c8.oracle.passed);

  const auto c6 = arc(family::Cycle{6}).pair(0, 3);
  CHECK(c6.kind == VerdictKind::PerfectST);
  CHECK(c6.tau == 3);
  CHECK(c6.amount == doctest::Approx(1.0));
  CHECK(c6.grade == EvidenceGrade::Exact);

  const auto fig = arc(family::Figure2Graph{}).pair(0, 3);
  CHECK(fig.kind == VerdictKind::PeakST);
  CHECK(fig.tau == 6);
  CHECK(fig.gamma == 1);
  CHECK(fig.amount == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));

  const auto k3f = arc(family::Complete{3});
  const auto k3 = k3f.pair(0, 1);
  CHECK(k3.kind == VerdictKind::NoPeak);
  CHECK(k3.reason == NoPeakReason::Parity);
  const auto ms = mutual_support(k3f.spec, 0, 1);
  CHECK(k3.amount == doctest::Approx(std::fabs(ms.entries[ms.plus[0]]) +
                                     std::fabs(ms.entries[ms.minus[0]])));

  const auto r = gnm_vertices(2, 3);
  const auto g23 = arc(family::Gnm{2, 3}).pair(r.u, r.w);
  CHECK(g23.kind == VerdictKind::PeakST);
  CHECK(g23.tau == 4);
  CHECK(g23.amount == doctest::Approx(2 * std::sqrt(6.0) / 5).epsilon(1e-12));

  const auto zero = Fixture(signed_c4_walk()).pair(0, 2);
  CHECK(zero.kind == VerdictKind::ZeroST);

  CHECK_THROWS_AS(arc(family::Cycle{5}).pair(1, 1), PreconditionError);
  CHECK_THROWS_AS(arc(family::Cycle{5}).pair(1, 9), ParameterError);
}

TEST_CASE("periodicity verdicts") {
  for (std::size_t n = 3; n <= 10; ++n) {
    const auto p = arc(family::Cycle{n}).period(0);
    CHECK(p.kind == VerdictKind::Periodic);
    CHECK(p.tau == static_cast<long>(n));
  }
  const Fixture grid(vertex_face_walk(toroidal_grid(4, 4)));
  for (std::size_t u = 0; u < 16; ++u) {
    const auto p = grid.period(u);
    CHECK(p.kind == VerdictKind::Periodic);
    CHECK(p.tau == 12);
  }
  const auto k4 = arc(family::Complete{4}).period(0);
  CHECK(k4.kind == VerdictKind::NoPeak);
  CHECK(k4.reason == NoPeakReason::CertifiedNonCosine);
  bool found = false;
  for (const auto& c : k4.certificates)
    if (c.rational_value && *c.rational_value == Rational(-1, 3)) found = true;
  CHECK(found);

  const Fixture torus(vertex_face_walk(k4_torus_map()));
  CHECK(torus.period(0).tau == 2);
}

TEST_CASE("peak bound matrix") {
  const auto p3 = arc(family::Path{3});
  const auto m = peak_bound_matrix(p3.spec);
  CHECK(m(0, 1) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
  for (int i = 0; i < 3; ++i) CHECK(m(i, i) == doctest::Approx(1.0));
  const auto r = gnm_vertices(2, 3);
  CHECK(peak_bound_matrix(arc(family::Gnm{2, 3}).spec)(r.u, r.w) ==
        doctest::Approx(2 * std::sqrt(6.0) / 5));
}

TEST_CASE("peaks recur at odd multiples of the peak time") {
  for (const auto& f : {arc(family::Cycle{8}), arc(family::Figure2Graph{}), arc(family::Gnm{2, 3})}) {
    for (std::size_t v = 1; v < f.spec.dim(); ++v) {
      const auto d = f.pair(0, v);
      if (!is_peak(d)) continue;
      const auto tau = d.tau.get_ui();
      const Eigen::MatrixXd s = bt_column_series(f.walk, 0, 5 * tau);
      for (std::size_t k : {1, 3, 5})
        CHECK(std::fabs(s(v, k * tau)) == doctest::Approx(d.amount).epsilon(1e-9));
      if (d.kind == VerdictKind::PerfectST) CHECK(strong_cospectral(f.spec, 0, v));
    }
  }
}

TEST_CASE("verdicts agree with the numpy oracle") {
  const auto& g = test::golden();
  for (std::size_t n = 3; n <= 16; ++n) {
    CAPTURE(n);
    check_against_golden(arc(family::Cycle{n}), g["cycles"][std::to_string(n)]);
  }
  for (std::size_t n = 2; n <= 10; ++n) {
    CAPTURE(n);
    check_against_golden(arc(family::Complete{n}), g["complete"][std::to_string(n)]);
  }
  check_against_golden(arc(family::Figure2Graph{}), g["figure2"]);
}

TEST_CASE("every peak verdict on the apex graph") {
  const auto f = arc(family::Figure2Graph{});
  std::set<std::pair<std::size_t, std::size_t>> peaks;
  for (std::size_t u = 0; u < 7; ++u)
    for (std::size_t v = u + 1; v < 7; ++v)
      if (is_peak(f.pair(u, v))) peaks.insert({u, v});
  CHECK(peaks == std::set<std::pair<std::size_t, std::size_t>>{{0, 3}, {0, 4}});
}

TEST_CASE("gamma policy") {
  const auto c6 = arc(family::Cycle{6});
  DecideOptions o;
  o.gamma = GammaPolicy::Minus;
  const auto d = decide_pair(c6.spec, 0, 3, o);
  CHECK(d.kind == VerdictKind::NoPeak);
  o.gamma = GammaPolicy::Plus;
  CHECK(decide_pair(c6.spec, 0, 3, o).kind == VerdictKind::PerfectST);
}
