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

#include <optional>
#include <utility>
#include <vector>

#include "qwalk/graphs.hpp"

namespace qwalk {

struct Face {
  std::vector<ArcId> arcs;  // boundary walk in order
  // (vertex, alpha) pairs: how often each vertex occurs as a tail on the walk.
  std::vector<std::pair<Vertex, std::size_t>> incidence;
  std::size_t degree() const { return arcs.size(); }
};

// Optional drawing hints carried with a map (used for SVG frames only).
struct Layout {
  std::vector<std::pair<double, double>> positions;
  // When set, coordinates live on a torus of this width/height and arcs are
  // drawn towards the nearest periodic image of their head.
  std::optional<std::pair<double, double>> period;
  friend bool operator==(const Layout&, const Layout&) = default;
};

// Orientable 2-cell embedding given by a rotation system. Faces are derived
// on construction: the arc after `a` on its face is the rotation-successor
// of reversal(a) at head(a).
class RotationMap {
 public:
  RotationMap(MultiGraph graph, std::vector<std::vector<ArcId>> rotation,
              std::optional<Layout> layout = std::nullopt);

  const MultiGraph& graph() const { return graph_; }
  const ArcSpace& arcs() const { return arcs_; }
  const std::vector<std::vector<ArcId>>& rotation() const { return rotation_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<std::size_t>& face_of_arc() const { return face_of_; }
  const std::optional<Layout>& layout() const { return layout_; }
  std::size_t alpha(Vertex v, std::size_t f) const;
  // Total genus: (2c - V + E - F) / 2 over c connected components.
  std::size_t genus() const { return genus_; }

  // Same embedding with every rotation reversed (mirror image).
  RotationMap mirrored() const;

 private:
  MultiGraph graph_;
  ArcSpace arcs_;
  std::vector<std::vector<ArcId>> rotation_;
  std::vector<Face> faces_;
  std::vector<std::size_t> face_of_;
  std::optional<Layout> layout_;
  std::size_t genus_ = 0;
};

// Validates the rotation and traces faces (the constructor does the work;
// provided for symmetry with the JSON path).
RotationMap trace_faces(const MultiGraph& g,
                        const std::vector<std::vector<ArcId>>& rotation);

// Rotation given by cyclic neighbour lists; simple graphs only.
std::vector<std::vector<ArcId>> rotation_from_neighbours(
    const MultiGraph& g, const std::vector<std::vector<Vertex>>& order);

// C_n □ C_m on the torus. Vertex (i, j) has index i*m + j, i in Z_n, j in
// Z_m. At every vertex the rotation is east (j+1), north (i+1), west, south.
RotationMap toroidal_grid(std::size_t n, std::size_t m);
Vertex grid_vertex(std::size_t m, std::size_t i, std::size_t j);

RotationMap k4_planar_map();
RotationMap k4_torus_map();
RotationMap cycle_sphere_map(std::size_t n);

}  // namespace qwalk
