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

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

using Vertex = std::size_t;
using ArcId = std::size_t;

// Unordered edge {u, v} with multiplicity; stored with u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  std::size_t mult = 1;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph with loops. Edges are kept in a canonical sorted
// order with parallel copies merged into a multiplicity, so arc indexing is
// reproducible. A loop contributes 2 to the degree of its vertex.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::size_t n, const std::vector<Edge>& edges,
             std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  // Number of edges counted with multiplicity.
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(Vertex v) const { return degree_.at(v); }
  const std::vector<std::size_t>& degrees() const { return degree_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // A(u,v) = multiplicity for u != v; A(v,v) = 2 * loop multiplicity, so that
  // row sums are degrees.
  Eigen::MatrixXd adjacency() const;
  bool is_simple() const;
  bool connected() const;
  // Component index per vertex.
  std::vector<std::size_t> components() const;
  std::vector<Vertex> neighbours(Vertex v) const;
  // BFS distances from v (SIZE_MAX when unreachable).
  std::vector<std::size_t> distances(Vertex v) const;

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> degree_;
  std::size_t edge_count_ = 0;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  std::size_t edge_instance = 0;  // index over edges counted with multiplicity
};

// Arc 2i runs from the smaller to the larger endpoint of edge instance i
// (for a loop: its first traversal), arc 2i+1 is its reversal. Hence
// reversal(a) = a ^ 1.
struct ArcSpace {
  std::vector<Arc> arcs;
  std::vector<ArcId> reversal;

  std::size_t size() const { return arcs.size(); }
  // Outgoing arcs of every vertex, in increasing arc id.
  std::vector<std::vector<ArcId>> out_arcs(std::size_t n_vertices) const;
};

ArcSpace build_arc_space(const MultiGraph& g);

// Forward arc (tail -> head) of the `copy`-th parallel instance of edge
// {tail, head}; throws if no such instance exists.
ArcId arc_between(const MultiGraph& g, Vertex tail, Vertex head,
                  std::size_t copy = 0);

// Builds a graph from a list of raw edge instances and reports, for every
// raw instance in input order, the arc id traversing it from its first to
// its second endpoint. Used by map constructors that need to address
// particular parallel copies.
struct InstancedGraph {
  MultiGraph graph;
  std::vector<ArcId> forward_arc;
};
InstancedGraph graph_from_instances(std::size_t n,
                                    const std::vector<std::pair<Vertex, Vertex>>& instances,
                                    std::vector<std::string> labels = {});

// --- block designs --------------------------------------------------------

struct DesignParams {
  std::size_t v = 0, b = 0, r = 0, k = 0, lambda = 0;
  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

using Block = std::vector<std::size_t>;

// Validates a 2-(v,k,lambda) design; throws ParameterError naming the first
// violation.
DesignParams validate_design(std::size_t v, const std::vector<Block>& blocks);

// Lines of the affine plane AG(2,q), q prime: q^2 points, q^2+q blocks.
std::vector<Block> affine_plane_blocks(std::size_t q);
// The Fano plane as the difference set {0,1,3} mod 7.
std::vector<Block> fano_plane_blocks();

// --- families -------------------------------------------------------------

namespace family {
struct Cycle { std::size_t n; };
struct Complete { std::size_t n; };
struct CompleteMultipartite { std::vector<std::size_t> parts; };
struct Path { std::size_t n; };
struct BlowUp { MultiGraph base; std::size_t m; };
struct DesignIncidence { std::size_t v; std::vector<Block> blocks; };
// u - {x_1..x_n} - v - {y_1..y_m} - w
struct Gnm { std::size_t n, m; };
struct HammingH33 {};
// Q_{d-1} plus antipodal edges: 2^{d-1} vertices, d-regular.
struct FoldedCube { std::size_t d; };
struct Figure2Graph {};
struct Hamming { std::size_t d, q; };
struct Kneser { std::size_t n, k; };
struct Paley { std::size_t q; };  // q prime, q = 1 mod 4
}  // namespace family

using FamilySpec =
    std::variant<family::Cycle, family::Complete, family::CompleteMultipartite,
                 family::Path, family::BlowUp, family::DesignIncidence,
                 family::Gnm, family::HammingH33, family::FoldedCube,
                 family::Figure2Graph, family::Hamming, family::Kneser,
                 family::Paley>;

MultiGraph generate(const FamilySpec& spec);

// Vertex roles inside generated graphs.
struct GnmVertices {
  Vertex u, v, w;
};
GnmVertices gnm_vertices(std::size_t n, std::size_t m);
struct Figure2Vertices {
  Vertex u = 0, v = 3;
};

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

}  // namespace qwalk
