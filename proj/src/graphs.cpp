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

#include "qwalk/graphs.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "qwalk/error.hpp"

namespace qwalk {

MultiGraph::MultiGraph(std::size_t n, const std::vector<Edge>& edges,
                       std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_) {
    throw ParameterError("label count " + std::to_string(labels_.size()) +
                         " does not match vertex count " + std::to_string(n_));
  }
  std::map<std::pair<Vertex, Vertex>, std::size_t> merged;
  for (const auto& e : edges) {
    if (e.u >= n_ || e.v >= n_) {
      throw ParameterError("edge {" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + "} has an endpoint >= n = " +
                           std::to_string(n_));
    }
    if (e.mult == 0) throw ParameterError("edge multiplicity must be >= 1");
    merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.mult;
  }
  degree_.assign(n_, 0);
  for (const auto& [key, mult] : merged) {
    edges_.push_back(Edge{key.first, key.second, mult});
    edge_count_ += mult;
    if (key.first == key.second) {
      degree_[key.first] += 2 * mult;
    } else {
      degree_[key.first] += mult;
      degree_[key.second] += mult;
    }
  }
}

Eigen::MatrixXd MultiGraph::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& e : edges_) {
    if (e.is_loop()) {
      a(e.u, e.u) += 2.0 * e.mult;
    } else {
      a(e.u, e.v) += e.mult;
      a(e.v, e.u) += e.mult;
    }
  }
  return a;
}

bool MultiGraph::is_simple() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return !e.is_loop() && e.mult == 1; });
}

std::vector<Vertex> MultiGraph::neighbours(Vertex v) const {
  std::set<Vertex> out;
  for (const auto& e : edges_) {
    if (e.u == v) out.insert(e.v);
    if (e.v == v) out.insert(e.u);
  }
  return {out.begin(), out.end()};
}

std::vector<std::size_t> MultiGraph::distances(Vertex v) const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const auto& e : edges_) {
    if (e.is_loop()) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<std::size_t> dist(n_, std::numeric_limits<std::size_t>::max());
  std::queue<Vertex> q;
  dist.at(v) = 0;
  q.push(v);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : adj[x]) {
      if (dist[y] == std::numeric_limits<std::size_t>::max()) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

std::vector<std::size_t> MultiGraph::components() const {
  std::vector<std::size_t> comp(n_, std::numeric_limits<std::size_t>::max());
  std::size_t next = 0;
  for (Vertex s = 0; s < n_; ++s) {
    if (comp[s] != std::numeric_limits<std::size_t>::max()) continue;
    auto d = distances(s);
    for (Vertex x = 0; x < n_; ++x) {
      if (d[x] != std::numeric_limits<std::size_t>::max()) comp[x] = next;
    }
    ++next;
  }
  return comp;
}

bool MultiGraph::connected() const {
  if (n_ == 0) return true;
  auto d = distances(0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) {
    return x == std::numeric_limits<std::size_t>::max();
  });
}

ArcSpace build_arc_space(const MultiGraph& g) {
  ArcSpace s;
  s.arcs.reserve(2 * g.edge_count());
  std::size_t inst = 0;
  for (const auto& e : g.edges()) {
    for (std::size_t c = 0; c < e.mult; ++c, ++inst) {
      s.arcs.push_back(Arc{e.u, e.v, inst});
      s.arcs.push_back(Arc{e.v, e.u, inst});
    }
  }
  s.reversal.resize(s.arcs.size());
  for (ArcId a = 0; a < s.arcs.size(); ++a) s.reversal[a] = a ^ 1U;
  return s;
}

std::vector<std::vector<ArcId>> ArcSpace::out_arcs(std::size_t n) const {
  std::vector<std::vector<ArcId>> out(n);
  for (ArcId a = 0; a < arcs.size(); ++a) out.at(arcs[a].tail).push_back(a);
  return out;
}

ArcId arc_between(const MultiGraph& g, Vertex tail, Vertex head,
                  std::size_t copy) {
  const Vertex a = std::min(tail, head), b = std::max(tail, head);
  std::size_t base = 0;
  for (const auto& e : g.edges()) {
    if (e.u == a && e.v == b) {
      if (copy >= e.mult) break;
      return 2 * (base + copy) + (tail <= head ? 0 : 1);
    }
    base += e.mult;
  }
  throw ParameterError("no edge instance " + std::to_string(copy) + " between " +
                       std::to_string(tail) + " and " + std::to_string(head));
}

InstancedGraph graph_from_instances(
    std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& instances,
    std::vector<std::string> labels) {
  std::vector<Edge> edges;
  edges.reserve(instances.size());
  for (const auto& [a, b] : instances) edges.push_back(Edge{a, b, 1});
  InstancedGraph out{MultiGraph(n, edges, std::move(labels)), {}};
  std::map<std::pair<Vertex, Vertex>, std::size_t> used;
  out.forward_arc.reserve(instances.size());
  for (const auto& [a, b] : instances) {
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    std::size_t copy = used[key]++;
    out.forward_arc.push_back(arc_between(out.graph, a, b, copy));
  }
  return out;
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  std::vector<Edge> edges = a.edges();
  const std::size_t off = a.vertex_count();
  for (const auto& e : b.edges()) edges.push_back(Edge{e.u + off, e.v + off, e.mult});
  return MultiGraph(a.vertex_count() + b.vertex_count(), edges);
}

// ---------------------------------------------------------------------------
// Designs

DesignParams validate_design(std::size_t v, const std::vector<Block>& blocks) {
  if (blocks.empty()) throw ParameterError("design has no blocks");
  const std::size_t k = blocks.front().size();
  if (!(1 < k && k < v)) {
    throw ParameterError("block size k = " + std::to_string(k) +
                         " must satisfy 1 < k < v = " + std::to_string(v));
  }
  std::vector<std::size_t> r(v, 0);
  std::vector<std::vector<std::size_t>> pair(v, std::vector<std::size_t>(v, 0));
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const auto& blk = blocks[j];
    if (blk.size() != k) {
      throw ParameterError("block " + std::to_string(j) + " has size " +
                           std::to_string(blk.size()) + ", expected " +
                           std::to_string(k));
    }
    std::set<std::size_t> seen;
    for (std::size_t x : blk) {
      if (x >= v) {
        throw ParameterError("block " + std::to_string(j) + " contains point " +
                             std::to_string(x) + " >= v");
      }
      if (!seen.insert(x).second) {
        throw ParameterError("block " + std::to_string(j) +
                             " repeats point " + std::to_string(x));
      }
      ++r[x];
    }
    for (std::size_t x : blk) {
      for (std::size_t y : blk) {
        if (x < y) ++pair[x][y];
      }
    }
  }
  for (std::size_t x = 0; x < v; ++x) {
    if (r[x] == 0) {
      throw ParameterError("not a design: point " + std::to_string(x) +
                           " lies in 0 blocks");
    }
  }
  for (std::size_t x = 1; x < v; ++x) {
    if (r[x] != r[0]) {
      throw ParameterError("not a design: point " + std::to_string(x) +
                           " lies in " + std::to_string(r[x]) +
                           " blocks, point 0 in " + std::to_string(r[0]));
    }
  }
  const std::size_t lambda = pair[0][1];
  for (std::size_t x = 0; x < v; ++x) {
    for (std::size_t y = x + 1; y < v; ++y) {
      if (pair[x][y] != lambda) {
        throw ParameterError("not a design: pair {" + std::to_string(x) + "," +
                             std::to_string(y) + "} lies in " +
                             std::to_string(pair[x][y]) + " blocks, expected " +
                             std::to_string(lambda));
      }
    }
  }
  DesignParams p{v, blocks.size(), r[0], k, lambda};
  // Counting identities; they follow from the checks above, kept as guards.
  if (p.v * p.r != p.b * p.k || p.lambda * (p.v - 1) != p.r * (p.k - 1)) {
    throw ParameterError("design counting identities fail");
  }
  return p;
}

std::vector<Block> affine_plane_blocks(std::size_t q) {
  if (q < 2) throw ParameterError("affine plane order must be >= 2");
  for (std::size_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) throw ParameterError("affine plane order must be prime");
  }
  std::vector<Block> out;
  for (std::size_t slope = 0; slope < q; ++slope) {
    for (std::size_t c = 0; c < q; ++c) {
      Block b;
      for (std::size_t x = 0; x < q; ++x) b.push_back(x * q + (slope * x + c) % q);
      std::sort(b.begin(), b.end());
      out.push_back(b);
    }
  }
  for (std::size_t c = 0; c < q; ++c) {
    Block b;
    for (std::size_t y = 0; y < q; ++y) b.push_back(c * q + y);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Block> fano_plane_blocks() {
  std::vector<Block> out;
  for (std::size_t i = 0; i < 7; ++i) {
    Block b{i, (i + 1) % 7, (i + 3) % 7};
    std::sort(b.begin(), b.end());
    out.push_back(b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Families

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

MultiGraph from_pairs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& p) {
  std::vector<Edge> e;
  e.reserve(p.size());
  for (auto [a, b] : p) e.push_back(Edge{a, b, 1});
  return MultiGraph(n, e);
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

struct Generator {
  MultiGraph operator()(const family::Cycle& f) const {
    require(f.n >= 3, "Cycle requires n >= 3");
    std::vector<std::pair<Vertex, Vertex>> p;
    for (Vertex i = 0; i < f.n; ++i) p.emplace_back(i, (i + 1) % f.n);
    return from_pairs(f.n, p);
  }
  MultiGraph operator()(const family::Complete& f) const {
    require(f.n >= 1, "Complete requires n >= 1");
    std::vector<std::pair<Vertex, Vertex>> p;
    for (Vertex i = 0; i < f.n; ++i)
      for (Vertex j = i + 1; j < f.n; ++j) p.emplace_back(i, j);
    return from_pairs(f.n, p);
  }
  MultiGraph operator()(const family::CompleteMultipartite& f) const {
    require(f.parts.size() >= 2, "CompleteMultipartite requires >= 2 parts");
    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < f.parts.size(); ++i) {
      require(f.parts[i] >= 1, "CompleteMultipartite parts must be nonempty");
      part_of.insert(part_of.end(), f.parts[i], i);
    }
    std::vector<std::pair<Vertex, Vertex>> p;
    for (Vertex i = 0; i < part_of.size(); ++i)
      for (Vertex j = i + 1; j < part_of.size(); ++j)
        if (part_of[i] != part_of[j]) p.emplace_back(i, j);
    return from_pairs(part_of.size(), p);
  }
  MultiGraph operator()(const family::Path& f) const {
    require(f.n >= 1, "Path requires n >= 1");
    std::vector<std::pair<Vertex, Vertex>> p;
    for (Vertex i = 0; i + 1 < f.n; ++i) p.emplace_back(i, i + 1);
    return from_pairs(f.n, p);
  }
  MultiGraph operator()(const family::BlowUp& f) const {
    require(f.m >= 1, "BlowUp requires m >= 1");
    std::vector<Edge> e;
    for (const auto& be : f.base.edges()) {
      require(!be.is_loop(), "BlowUp requires a loopless base graph");
      for (std::size_t a = 0; a < f.m; ++a)
        for (std::size_t b = 0; b < f.m; ++b)
          e.push_back(Edge{be.u * f.m + a, be.v * f.m + b, be.mult});
    }
    return MultiGraph(f.base.vertex_count() * f.m, e);
  }
  MultiGraph operator()(const family::DesignIncidence& f) const {
    validate_design(f.v, f.blocks);
    std::vector<std::pair<Vertex, Vertex>> p;
    for (std::size_t j = 0; j < f.blocks.size(); ++j)
      for (std::size_t x : f.blocks[j]) p.emplace_back(x, f.v + j);
    return from_pairs(f.v + f.blocks.size(), p);
  }
  MultiGraph operator()(const family::Gnm& f) const {
    require(f.n >= 1 && f.m >= 1, "Gnm requires n, m >= 1");
    const auto r = gnm_vertices(f.n, f.m);
    std::vector<std::pair<Vertex, Vertex>> p;
    for (std::size_t i = 0; i < f.n; ++i) {
      p.emplace_back(r.u, 1 + i);
      p.emplace_back(1 + i, r.v);
    }
    for (std::size_t j = 0; j < f.m; ++j) {
      p.emplace_back(r.v, r.v + 1 + j);
      p.emplace_back(r.v + 1 + j, r.w);
    }
    return from_pairs(f.n + f.m + 3, p);
  }
  MultiGraph operator()(const family::HammingH33&) const {
    return (*this)(family::Hamming{3, 3});
  }
  MultiGraph operator()(const family::Hamming& f) const {
    require(f.d >= 1 && f.q >= 2, "Hamming requires d >= 1, q >= 2");
    const std::size_t n = ipow(f.q, f.d);
    std::vector<std::pair<Vertex, Vertex>> p;
    for (Vertex x = 0; x < n; ++x) {
      std::size_t place = 1;
      for (std::size_t i = 0; i < f.d; ++i, place *= f.q) {
        const std::size_t digit = (x / place) % f.q;
        for (std::size_t nd = digit + 1; nd < f.q; ++nd)
          p.emplace_back(x, x + (nd - digit) * place);
      }
    }
    return from_pairs(n, p);
  }
  MultiGraph operator()(const family::FoldedCube& f) const {
    require(f.d >= 2 && f.d <= 20, "FoldedCube requires 2 <= d <= 20");
    const std::size_t bits = f.d - 1, n = std::size_t{1} << bits;
    const std::size_t all = n - 1;
    std::vector<std::pair<Vertex, Vertex>> p;
    for (Vertex x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < bits; ++i) {
        Vertex y = x ^ (std::size_t{1} << i);
        if (x < y) p.emplace_back(x, y);
      }
      if (x < (x ^ all)) p.emplace_back(x, x ^ all);
    }
    return from_pairs(n, p);
  }
  MultiGraph operator()(const family::Figure2Graph&) const {
    // Path 4 - 2 - u - 1 - v with u = 0, v = 3, and apexes 5, 6 joined to
    // the four vertices 2, 0, 1, 3.
    std::vector<std::pair<Vertex, Vertex>> p{{4, 2}, {2, 0}, {0, 1}, {1, 3}};
    for (Vertex apex : {5, 6})
      for (Vertex x : {2, 0, 1, 3}) p.emplace_back(apex, x);
    return from_pairs(7, p);
  }
  MultiGraph operator()(const family::Kneser& f) const {
    require(f.n <= 20 && f.k >= 1 && 2 * f.k <= f.n,
            "Kneser requires 1 <= k, 2k <= n <= 20");
    std::vector<std::size_t> sets;
    for (std::size_t s = 0; s < (std::size_t{1} << f.n); ++s)
      if (static_cast<std::size_t>(__builtin_popcountll(s)) == f.k) sets.push_back(s);
    std::vector<std::pair<Vertex, Vertex>> p;
    for (Vertex i = 0; i < sets.size(); ++i)
      for (Vertex j = i + 1; j < sets.size(); ++j)
        if ((sets[i] & sets[j]) == 0) p.emplace_back(i, j);
    return from_pairs(sets.size(), p);
  }
  MultiGraph operator()(const family::Paley& f) const {
    bool prime = f.q >= 5;
    for (std::size_t d = 2; d * d <= f.q; ++d) prime = prime && f.q % d != 0;
    require(prime && f.q % 4 == 1, "Paley requires a prime q = 1 mod 4");
    std::vector<bool> square(f.q, false);
    for (std::size_t x = 1; x < f.q; ++x) square[(x * x) % f.q] = true;
    std::vector<std::pair<Vertex, Vertex>> p;
    for (Vertex i = 0; i < f.q; ++i)
      for (Vertex j = i + 1; j < f.q; ++j)
        if (square[j - i]) p.emplace_back(i, j);
    return from_pairs(f.q, p);
  }
};

}  // namespace

MultiGraph generate(const FamilySpec& spec) { return std::visit(Generator{}, spec); }

GnmVertices gnm_vertices(std::size_t n, std::size_t m) {
  return GnmVertices{0, n + 1, n + m + 2};
}

}  // namespace qwalk
