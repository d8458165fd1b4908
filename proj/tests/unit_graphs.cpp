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

#include <numeric>
#include <set>

#include "qwalk/error.hpp"
#include "qwalk/graphs.hpp"
#include "support.hpp"

using namespace qwalk;

TEST_CASE("degree counts loops twice and sums to twice the edge count") {
  MultiGraph g(3, {{0, 1, 2}, {1, 1, 1}, {1, 2}});
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 5);
  CHECK(g.degree(2) == 1);
  CHECK(g.edge_count() == 4);
  const auto& d = g.degrees();
  CHECK(std::accumulate(d.begin(), d.end(), std::size_t{0}) == 2 * g.edge_count());
  CHECK_FALSE(g.is_simple());
  CHECK(g.adjacency()(1, 1) == 2.0);
}

TEST_CASE("edge endpoints and multiplicities are validated") {
  CHECK_THROWS_AS(MultiGraph(2, {{0, 2}}), ParameterError);
  CHECK_THROWS_AS(MultiGraph(2, {{0, 1, 0}}), ParameterError);
  CHECK_THROWS_AS(MultiGraph(2, {{0, 1}}, {"a"}), ParameterError);
}

TEST_CASE("arc space") {
  SUBCASE("single edge") {
    const auto s = build_arc_space(generate(family::Complete{2}));
    REQUIRE(s.size() == 2);
    CHECK(s.reversal[0] == 1);
    CHECK(s.reversal[1] == 0);
    CHECK(s.arcs[0].tail == s.arcs[1].head);
  }
  SUBCASE("four-cycle") {
    CHECK(build_arc_space(generate(family::Cycle{4})).size() == 8);
  }
  SUBCASE("two loops on one vertex") {
    MultiGraph g(1, {{0, 0, 2}});
    const auto s = build_arc_space(g);
    REQUIRE(s.size() == 4);
    for (const auto& a : s.arcs) CHECK(a.tail == 0);
  }
  SUBCASE("reversal is an involution reversing tails and heads") {
    const MultiGraph g(4, {{0, 1, 2}, {1, 2}, {2, 3}, {3, 3}, {0, 3}});
    const auto s = build_arc_space(g);
    CHECK(s.size() == 2 * g.edge_count());
    for (ArcId a = 0; a < s.size(); ++a) {
      CHECK(s.reversal[s.reversal[a]] == a);
      CHECK(s.arcs[s.reversal[a]].tail == s.arcs[a].head);
    }
    const auto out = s.out_arcs(4);
    for (Vertex v = 0; v < 4; ++v) CHECK(out[v].size() == g.degree(v));
  }
}

TEST_CASE("arc_between finds parallel copies") {
  const MultiGraph g(2, {{0, 1, 2}});
  const auto s = build_arc_space(g);
  const ArcId a0 = arc_between(g, 0, 1, 0), a1 = arc_between(g, 0, 1, 1);
  CHECK(a0 != a1);
  CHECK(s.arcs[a0].tail == 0);
  CHECK(s.arcs[a1].head == 1);
  CHECK_THROWS_AS(arc_between(g, 0, 1, 2), ParameterError);
}

TEST_CASE("families") {
  SUBCASE("cycle") {
    const auto g = generate(family::Cycle{6});
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 6);
    for (auto d : g.degrees()) CHECK(d == 2);
  }
  SUBCASE("blow-up of an edge is K_{3,3}") {
    const auto g = generate(family::BlowUp{generate(family::Complete{2}), 3});
    const auto k33 = generate(family::CompleteMultipartite{{3, 3}});
    CHECK(g.adjacency().isApprox(k33.adjacency()));
    // A_G (x) J_m
    const auto base = generate(family::Cycle{5});
    const auto b = generate(family::BlowUp{base, 2});
    Eigen::MatrixXd kron(10, 10);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        kron.block(2 * i, 2 * j, 2, 2).setConstant(base.adjacency()(i, j));
    CHECK(b.adjacency().isApprox(kron));
  }
  SUBCASE("affine plane incidence") {
    const auto g = generate(family::DesignIncidence{9, affine_plane_blocks(3)});
    CHECK(g.vertex_count() == 21);
    for (Vertex v = 0; v < 9; ++v) CHECK(g.degree(v) == 4);
    for (Vertex v = 9; v < 21; ++v) CHECK(g.degree(v) == 3);
  }
  SUBCASE("layered family") {
    const auto g = generate(family::Gnm{2, 3});
    const auto r = gnm_vertices(2, 3);
    CHECK(g.vertex_count() == 8);
    CHECK(g.degree(r.u) == 2);
    CHECK(g.degree(r.v) == 5);
    CHECK(g.degree(r.w) == 3);
    CHECK(g.distances(r.u)[r.w] == 4);
  }
  SUBCASE("Hamming and folded cube") {
    const auto h = generate(family::HammingH33{});
    CHECK(h.vertex_count() == 27);
    for (auto d : h.degrees()) CHECK(d == 6);
    const auto f = generate(family::FoldedCube{8});
    CHECK(f.vertex_count() == 128);
    for (auto d : f.degrees()) CHECK(d == 8);
    const auto dist = f.distances(0);
    CHECK(*std::max_element(dist.begin(), dist.end()) == 4);
  }
  SUBCASE("seven-vertex apex graph") {
    const auto g = generate(family::Figure2Graph{});
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 12);
    CHECK(g.distances(0)[3] == 2);
  }
  SUBCASE("Kneser(5,2) is the Petersen graph") {
    const auto g = generate(family::Kneser{5, 2});
    CHECK(g.vertex_count() == 10);
    for (auto d : g.degrees()) CHECK(d == 3);
  }
  SUBCASE("Paley(13)") {
    const auto g = generate(family::Paley{13});
    for (auto d : g.degrees()) CHECK(d == 6);
    CHECK_THROWS_AS(generate(family::Paley{7}), ParameterError);
  }
}

TEST_CASE("components and disjoint union") {
  const auto g = disjoint_union(generate(family::Cycle{3}), generate(family::Path{2}));
  CHECK(g.vertex_count() == 5);
  CHECK_FALSE(g.connected());
  const auto c = g.components();
  CHECK(c[0] == c[2]);
  CHECK(c[0] != c[3]);
  CHECK(g.distances(0)[4] == SIZE_MAX);
}

TEST_CASE("design validation") {
  CHECK(validate_design(3, {{0, 1}, {0, 2}, {1, 2}}) == DesignParams{3, 3, 2, 2, 1});
  CHECK(validate_design(9, affine_plane_blocks(3)) == DesignParams{9, 12, 4, 3, 1});
  CHECK(validate_design(7, fano_plane_blocks()) == DesignParams{7, 7, 3, 3, 1});
  auto twice = affine_plane_blocks(3);
  const auto copy = twice;
  twice.insert(twice.end(), copy.begin(), copy.end());
  CHECK(validate_design(9, twice) == DesignParams{9, 24, 8, 3, 2});
  CHECK_THROWS_AS(validate_design(4, {{0, 1}, {1, 2}}), ParameterError);
  CHECK_THROWS_AS(validate_design(3, {{0, 0}}), ParameterError);
}
