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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qwalk/error.hpp"
#include "qwalk/io.hpp"
#include "qwalk/report.hpp"
#include "support.hpp"

using namespace qwalk;

TEST_CASE("graph JSON round-trip") {
  const MultiGraph g(3, {{0, 1, 2}, {1, 1}, {1, 2}}, {"a", "b", "c"});
  const auto j = io::graph_to_json(g);
  CHECK(io::graph_from_json(io::parse(j.dump())) == g);
  CHECK(io::graph_from_json(io::parse(R"({"n": 2, "edges": [[0, 1]]})")).edge_count() == 1);
  CHECK_THROWS_AS(io::graph_from_json(io::parse(R"({"n": 2})")), ParseError);
  CHECK_THROWS_AS(io::graph_from_json(io::parse(R"({"n": 2, "edges": [[0]]})")), ParseError);
  CHECK_THROWS_AS(io::graph_from_json(io::parse(R"({"n": -1, "edges": []})")), ParseError);
  CHECK_THROWS_AS(io::parse("{nope"), ParseError);
}

TEST_CASE("map JSON round-trip re-traces the same faces") {
  for (const auto& m : {toroidal_grid(4, 6), toroidal_grid(1, 1), k4_torus_map(), k4_planar_map()}) {
    const auto back = io::map_from_json(io::parse(io::map_to_json(m).dump()));
    CHECK(back.graph() == m.graph());
    CHECK(back.rotation() == m.rotation());
    CHECK(back.layout() == m.layout());
    CHECK(back.faces().size() == m.faces().size());
    CHECK(back.genus() == m.genus());
    CHECK(io::map_to_json(back) == io::map_to_json(m));
  }
}

TEST_CASE("design and matrix JSON") {
  const io::DesignInput d{9, affine_plane_blocks(3)};
  const auto back = io::design_from_json(io::parse(io::design_to_json(d).dump()));
  CHECK(back.v == 9);
  CHECK(back.blocks == d.blocks);

  Eigen::MatrixXd m(2, 3);
  m << 1, 0.5, -2, 0, 1e-3, 7;
  CHECK(io::matrix_from_json(io::parse(io::matrix_to_json(m).dump())) == m);
  const auto r = io::rational_matrix_from_json(io::parse(R"([["1/3", 2], ["0", "-5/4"]])"));
  CHECK(r[0][0] == Rational(1, 3));
  CHECK(r[1][1] == Rational(-5, 4));
  CHECK_THROWS_AS(io::matrix_from_json(io::parse("[[1, 2], [3]]")), ParseError);
  CHECK_THROWS_AS(io::matrix_from_json(io::parse("[]")), ParseError);
}

TEST_CASE("walk inputs") {
  const auto sz = io::szegedy_walk_from_json(
      io::parse(R"({"p": [["1/2", "1/2"], ["1/2", "1/2"]], "q": [["1/2", "1/2"], ["1/2", "1/2"]]})"));
  CHECK(sz.has_exact_frames());
  CHECK(sz.projected()(0, 1) == doctest::Approx(1.0));
  const auto c4 = arc_reversal_walk(generate(family::Cycle{4}));
  io::Json j;
  j["n_frame"] = io::matrix_to_json(c4.n_frame());
  j["m_frame"] = io::matrix_to_json(c4.m_frame());
  const auto g = io::generic_walk_from_json(io::parse(j.dump()));
  CHECK(g.projected().isApprox(c4.projected(), 1e-12));
}

TEST_CASE("verdict and report JSON are stable text") {
  const auto w = arc_reversal_walk(generate(family::Cycle{6}));
  AnalyzeRequest req;
  req.pairs = std::vector<std::pair<std::size_t, std::size_t>>{{0, 3}, {0, 2}};
  req.periodicity = true;
  const auto res = analyze(w, req);
  REQUIRE(res.pairs.size() == 2);
  CHECK(res.pairs[0].kind == VerdictKind::PerfectST);
  const auto rep = report_json(res, w, req, "fnv1a64:0");
  const auto text = rep.dump();
  CHECK(io::parse(text) == rep);
  CHECK(report_json(analyze(w, req), w, req, "fnv1a64:0").dump() == text);
  CHECK(rep["verdicts"][0]["kind"] == "PerfectST");
  CHECK(rep["verdicts"][0]["tau"] == "3");
  CHECK(rep["periodicity"].size() == 6);
  const auto csv = report_csv(res);
  CHECK(csv.rfind("u,v,kind,tau,gamma,amount,grade,reason\n", 0) == 0);
  CHECK(csv.find("0,3,PerfectST,3,") != std::string::npos);

  const auto vj = io::verdict_to_json(res.pairs[1]);
  CHECK(io::parse(vj.dump()) == vj);
  CHECK(io::srg_to_json(srg_analyze({10, 3, 0, 1}))["peak"] == false);
}

TEST_CASE("parallel analysis is deterministic") {
  const auto w = vertex_face_walk(toroidal_grid(3, 4));
  AnalyzeRequest a, b;
  b.jobs = 4;
  const auto ra = report_json(analyze(w, a), w, a, "x");
  auto rb = report_json(analyze(w, b), w, b, "x");
  CHECK(ra["verdicts"] == rb["verdicts"]);
}

TEST_CASE("exact and numeric modes agree on verdict kinds") {
  for (const auto& w : {arc_reversal_walk(generate(family::Figure2Graph{})),
                        arc_reversal_walk(generate(family::Cycle{8})),
                        arc_reversal_walk(generate(family::Complete{5})),
                        vertex_face_walk(toroidal_grid(4, 4)),
                        vertex_face_walk(toroidal_grid(4, 6))}) {
    AnalyzeRequest ex, num;
    ex.periodicity = num.periodicity = true;
    num.spectral.exact = false;
    const auto re = analyze(w, ex), rn = analyze(w, num);
    REQUIRE(re.pairs.size() == rn.pairs.size());
    for (std::size_t i = 0; i < re.pairs.size(); ++i) CHECK(re.pairs[i].kind == rn.pairs[i].kind);
    for (std::size_t i = 0; i < re.periodicity.size(); ++i)
      CHECK(re.periodicity[i].kind == rn.periodicity[i].kind);
  }
}

TEST_CASE("evolution output") {
  const auto k2 = arc_reversal_walk(generate(family::Complete{2}));
  const auto states = evolve_states(k2, 0, 2);
  REQUIRE(states.size() == 3);
  CHECK((states[1] - k2.n_frame().col(1)).cwiseAbs().maxCoeff() < 1e-12);
  const auto csv = evolve_csv(k2, 0, 1);
  CHECK(csv.rfind("t,arc,tail,head,amplitude\n", 0) == 0);

  const auto torus = vertex_face_walk(k4_torus_map());
  const auto ts = evolve_states(torus, 2, 2);
  CHECK((ts[2] - ts[0]).cwiseAbs().maxCoeff() < 1e-12);

  const auto g = geometry_of(toroidal_grid(4, 6));
  const auto svg = svg_frame(g, evolve_states(vertex_face_walk(toroidal_grid(4, 6)), 0, 1)[1], 1);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("#d62728") != std::string::npos);
  CHECK_THROWS_AS(evolve_states(k2, 5, 1), PreconditionError);
}

TEST_CASE("atomic file writes") {
  const auto dir = std::filesystem::temp_directory_path() / "qwalk_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.json").string();
  io::write_file_atomic(path, "{\"n\": 1}\n");
  CHECK(io::read_file(path) == "{\"n\": 1}\n");
  io::write_file_atomic(path, "x");
  CHECK(io::read_file(path) == "x");
  std::filesystem::remove_all(dir);
  CHECK_THROWS(io::read_file(path));
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
}
