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

#include "qwalk/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "qwalk/error.hpp"

namespace qwalk {

RotationMap::RotationMap(MultiGraph graph,
                         std::vector<std::vector<ArcId>> rotation,
                         std::optional<Layout> layout)
    : graph_(std::move(graph)),
      arcs_(build_arc_space(graph_)),
      rotation_(std::move(rotation)),
      layout_(std::move(layout)) {
  const std::size_t n = graph_.vertex_count();
  const std::size_t na = arcs_.size();
  if (rotation_.size() != n) {
    throw ParameterError("rotation lists " + std::to_string(rotation_.size()) +
                         " vertices, graph has " + std::to_string(n));
  }
  if (layout_ && layout_->positions.size() != n) {
    throw ParameterError("layout has " + std::to_string(layout_->positions.size()) +
                         " positions for " + std::to_string(n) + " vertices");
  }
  // succ[a] = next arc after a in the rotation at tail(a).
  std::vector<ArcId> succ(na, na);
  for (Vertex v = 0; v < n; ++v) {
    const auto& cyc = rotation_[v];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      ArcId a = cyc[i];
      if (a >= na) throw ParameterError("rotation references arc " + std::to_string(a) +
                                        " beyond " + std::to_string(na) + " arcs");
      if (arcs_.arcs[a].tail != v) {
        throw ParameterError("arc " + std::to_string(a) + " listed at vertex " +
                             std::to_string(v) + " but its tail is " +
                             std::to_string(arcs_.arcs[a].tail));
      }
      if (succ[a] != na) throw ParameterError("arc " + std::to_string(a) +
                                              " listed twice in the rotation");
      succ[a] = cyc[(i + 1) % cyc.size()];
    }
  }
  for (ArcId a = 0; a < na; ++a) {
    if (succ[a] == na) throw ParameterError("arc " + std::to_string(a) +
                                            " missing from the rotation");
  }
  face_of_.assign(na, na);
  for (ArcId start = 0; start < na; ++start) {
    if (face_of_[start] != na) continue;
    Face f;
    std::map<Vertex, std::size_t> inc;
    ArcId a = start;
    do {
      face_of_[a] = faces_.size();
      f.arcs.push_back(a);
      ++inc[arcs_.arcs[a].tail];
      a = succ[arcs_.reversal[a]];
    } while (a != start);
    f.incidence.assign(inc.begin(), inc.end());
    faces_.push_back(std::move(f));
  }
  const auto comp = graph_.components();
  const std::size_t c =
      n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  const long long euler = static_cast<long long>(n) -
                          static_cast<long long>(graph_.edge_count()) +
                          static_cast<long long>(faces_.size());
  const long long twice_genus = 2 * static_cast<long long>(c) - euler;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw ParameterError("rotation system yields non-integral genus");
  }
  genus_ = static_cast<std::size_t>(twice_genus / 2);
}

std::size_t RotationMap::alpha(Vertex v, std::size_t f) const {
  for (const auto& [x, cnt] : faces_.at(f).incidence)
    if (x == v) return cnt;
  return 0;
}

RotationMap RotationMap::mirrored() const {
  auto rot = rotation_;
  for (auto& cyc : rot) std::reverse(cyc.begin(), cyc.end());
  return RotationMap(graph_, rot, layout_);
}

RotationMap trace_faces(const MultiGraph& g,
                        const std::vector<std::vector<ArcId>>& rotation) {
  return RotationMap(g, rotation);
}

std::vector<std::vector<ArcId>> rotation_from_neighbours(
    const MultiGraph& g, const std::vector<std::vector<Vertex>>& order) {
  if (!g.is_simple()) throw ParameterError("neighbour rotations need a simple graph");
  std::vector<std::vector<ArcId>> rot(order.size());
  for (Vertex v = 0; v < order.size(); ++v)
    for (Vertex w : order[v]) rot[v].push_back(arc_between(g, v, w));
  return rot;
}

Vertex grid_vertex(std::size_t m, std::size_t i, std::size_t j) { return i * m + j; }

RotationMap toroidal_grid(std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw ParameterError("toroidal grid needs n, m >= 1");
  // Raw edge instances: east edge then north edge of every vertex.
  std::vector<std::pair<Vertex, Vertex>> inst;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      inst.emplace_back(grid_vertex(m, i, j), grid_vertex(m, i, (j + 1) % m));
      inst.emplace_back(grid_vertex(m, i, j), grid_vertex(m, (i + 1) % n, j));
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  auto ig = graph_from_instances(n * m, inst, labels);
  auto east = [&](std::size_t i, std::size_t j) { return ig.forward_arc[2 * (i * m + j)]; };
  auto north = [&](std::size_t i, std::size_t j) { return ig.forward_arc[2 * (i * m + j) + 1]; };
  std::vector<std::vector<ArcId>> rot(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const ArcId e = east(i, j);
      const ArcId no = north(i, j);
      const ArcId w = east(i, (j + m - 1) % m) ^ 1U;
      const ArcId s = north((i + n - 1) % n, j) ^ 1U;
      rot[grid_vertex(m, i, j)] = {e, no, w, s};
    }
  }
  Layout layout;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      layout.positions.emplace_back(static_cast<double>(j), static_cast<double>(i));
  layout.period = std::make_pair(static_cast<double>(m), static_cast<double>(n));
  return RotationMap(ig.graph, rot, layout);
}

namespace {

MultiGraph k4() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = i + 1; j < 4; ++j) e.push_back(Edge{i, j, 1});
  return MultiGraph(4, e);
}

Layout diamond_layout() {
  return Layout{{{0.5, 0.0}, {0.0, 0.5}, {0.5, 1.0}, {1.0, 0.5}}, std::nullopt};
}

}  // namespace

RotationMap k4_planar_map() {
  // Vertex 0 in the centre of triangle 1,2,3.
  const MultiGraph g = k4();
  auto rot = rotation_from_neighbours(g, {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
  Layout l{{{0.5, 0.45}, {0.5, 0.0}, {0.0, 0.9}, {1.0, 0.9}}, std::nullopt};
  return RotationMap(g, rot, l);
}

RotationMap k4_torus_map() {
  // Diamond 0 (top), 1 (left), 2 (bottom), 3 (right) drawn in the square
  // torus; 0-2 leaves through the top/bottom sides, 1-3 through left/right.
  // Counter-clockwise rotations read off that drawing.
  const MultiGraph g = k4();
  auto rot = rotation_from_neighbours(g, {{2, 1, 3}, {3, 2, 0}, {0, 3, 1}, {1, 0, 2}});
  return RotationMap(g, rot, diamond_layout());
}

RotationMap cycle_sphere_map(std::size_t n) {
  const MultiGraph g = generate(family::Cycle{n});
  std::vector<std::vector<Vertex>> order(n);
  for (Vertex i = 0; i < n; ++i) order[i] = {(i + 1) % n, (i + n - 1) % n};
  Layout l;
  for (std::size_t i = 0; i < n; ++i) {
    const double ang = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n);
    l.positions.emplace_back(std::cos(ang), std::sin(ang));
  }
  return RotationMap(g, rotation_from_neighbours(g, order), l);
}

}  // namespace qwalk
