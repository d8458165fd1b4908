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

#include "qwalk/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::size_t index_of(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json graph_to_json(const MultiGraph& g) {
  Json j;
  j["n"] = g.vertex_count();
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(e.mult == 1 ? Json{e.u, e.v} : Json{e.u, e.v, e.mult});
  }
  j["edges"] = edges;
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

MultiGraph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    const std::size_t n = index_of(field(j, "n"), "n");
    std::vector<Edge> edges;
    for (const auto& e : field(j, "edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) {
        throw ParseError("edge must be [u, v] or [u, v, mult]");
      }
      edges.push_back(Edge{index_of(e[0], "edge endpoint"), index_of(e[1], "edge endpoint"),
                           e.size() == 3 ? index_of(e[2], "multiplicity") : 1});
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return MultiGraph(n, edges, labels);
  });
}

Json map_to_json(const RotationMap& m) {
  Json j;
  j["graph"] = graph_to_json(m.graph());
  j["rotation"] = m.rotation();
  if (const auto& l = m.layout()) {
    Json lj;
    Json pos = Json::array();
    for (const auto& [x, y] : l->positions) pos.push_back({x, y});
    lj["positions"] = pos;
    if (l->period) lj["period"] = {l->period->first, l->period->second};
    j["layout"] = lj;
  }
  return j;
}

RotationMap map_from_json(const Json& j) {
  return guarded("embedding", [&] {
    MultiGraph g = graph_from_json(field(j, "graph"));
    std::vector<std::vector<ArcId>> rotation;
    for (const auto& cyc : field(j, "rotation")) {
      std::vector<ArcId> r;
      for (const auto& a : cyc) r.push_back(index_of(a, "arc id"));
      rotation.push_back(std::move(r));
    }
    std::optional<Layout> layout;
    if (j.contains("layout")) {
      Layout l;
      for (const auto& p : field(j.at("layout"), "positions")) {
        l.positions.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
      }
      if (j.at("layout").contains("period")) {
        const auto& p = j.at("layout").at("period");
        l.period = std::make_pair(p.at(0).get<double>(), p.at(1).get<double>());
      }
      layout = l;
    }
    return RotationMap(std::move(g), std::move(rotation), layout);
  });
}

Json design_to_json(const DesignInput& d) {
  Json j;
  j["v"] = d.v;
  j["blocks"] = d.blocks;
  return j;
}

DesignInput design_from_json(const Json& j) {
  return guarded("design", [&] {
    DesignInput d;
    d.v = index_of(field(j, "v"), "v");
    for (const auto& b : field(j, "blocks")) {
      Block block;
      for (const auto& x : b) block.push_back(index_of(x, "point"));
      d.blocks.push_back(std::move(block));
    }
    return d;
  });
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const Json& j) {
  const auto exact = rational_matrix_from_json(j);
  const auto rows = static_cast<Eigen::Index>(exact.size());
  const auto cols = static_cast<Eigen::Index>(exact.empty() ? 0 : exact[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = exact[i][k].get_d();
  }
  return m;
}

std::vector<std::vector<Rational>> rational_matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    std::vector<std::vector<Rational>> out;
    for (const auto& row : j) {
      if (!row.is_array()) throw ParseError("matrix row must be an array");
      std::vector<Rational> r;
      for (const auto& x : row) {
        if (x.is_string()) {
          r.push_back(parse_rational(x.get<std::string>()));
        } else if (x.is_number_integer()) {
          r.emplace_back(x.get<long>());
        } else if (x.is_number()) {
          r.emplace_back(x.get<double>());  // exact binary value of the double
        } else {
          throw ParseError("matrix entry must be a number or a fraction string");
        }
      }
      if (!out.empty() && r.size() != out[0].size()) throw ParseError("ragged matrix");
      out.push_back(std::move(r));
    }
    return out;
  });
}

TwoReflectionWalk generic_walk_from_json(const Json& j) {
  return guarded("generic walk", [&] {
    return generic_walk(matrix_from_json(field(j, "n_frame")),
                        matrix_from_json(field(j, "m_frame")));
  });
}

TwoReflectionWalk szegedy_walk_from_json(const Json& j) {
  return guarded("szegedy walk", [&] {
    const auto& p = field(j, "p");
    const auto& q = field(j, "q");
    auto all_exact = [](const Json& m) {
      for (const auto& row : m) {
        for (const auto& x : row) {
          if (x.is_number_float()) return false;
        }
      }
      return true;
    };
    if (all_exact(p) && all_exact(q)) {
      return szegedy_walk(rational_matrix_from_json(p), rational_matrix_from_json(q));
    }
    auto dense = [](const Json& m) {
      return m.get<std::vector<std::vector<double>>>();
    };
    return szegedy_walk(dense(p), dense(q));
  });
}

Json spectral_to_json(const SpectralData& s, bool with_idempotents) {
  Json j;
  j["dim"] = s.dim();
  j["eigenvalues"] = s.eigenvalues;
  j["multiplicities"] = s.multiplicities;
  if (s.charpoly) {
    j["charpoly"] = s.charpoly->coeff_strings();
  } else {
    j["charpoly"] = nullptr;
    j["exact_note"] = s.exact_note;
  }
  j["cluster_tol"] = s.cluster_tol;
  if (with_idempotents) {
    Json e = Json::array();
    for (const auto& m : s.idempotents) e.push_back(matrix_to_json(m));
    j["idempotents"] = e;
  }
  return j;
}

Json verdict_to_json(const TransferVerdict& v) {
  Json j;
  j["pair"] = {v.u, v.v};
  j["kind"] = to_string(v.kind);
  j["tau"] = v.tau.get_str();
  j["gamma"] = v.gamma;
  j["amount"] = v.amount;
  Json certs = Json::array();
  for (const auto& c : v.certificates) {
    Json cj;
    cj["theta"] = c.theta;
    if (c.pq) {
      cj["p"] = c.pq->p;
      cj["q"] = c.pq->q;
    } else {
      cj["p"] = nullptr;
      cj["q"] = nullptr;
    }
    cj["evidence"] = to_string(c.evidence);
    if (c.rational_value) cj["rational_non_cosine"] = to_string(*c.rational_value);
    cj["sign"] = c.in_plus ? 1 : -1;
    certs.push_back(cj);
  }
  j["certificates"] = certs;
  j["grade"] = to_string(v.grade);
  if (v.kind == VerdictKind::NoPeak) {
    j["reason"] = to_string(v.reason);
    j["q_max"] = v.q_max;
  }
  if (v.oracle.ran) {
    j["oracle"] = {{"passed", v.oracle.passed}, {"value", v.oracle.value},
                   {"detail", v.oracle.detail}};
  }
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

Json srg_to_json(const SrgVerdict& v) {
  Json j;
  j["params"] = {v.params.n, v.params.k, v.params.a, v.params.c};
  j["branch"] = to_string(v.branch);
  j["peak"] = v.peak;
  if (v.branch == SrgBranch::PrimitiveConference ||
      v.branch == SrgBranch::PrimitiveNonConference) {
    j["theta"] = v.theta;
    j["tau"] = v.tau;
    j["m_theta"] = v.m_theta;
    j["m_tau"] = v.m_tau;
  }
  j["reasoning"] = v.reasoning;
  return j;
}

Json design_verdict_to_json(const DesignVerdict& v) {
  Json j;
  const auto& p = v.params;
  j["params"] = {{"v", p.v}, {"b", p.b}, {"r", p.r}, {"k", p.k}, {"lambda", p.lambda}};
  j["ratio"] = to_string(v.ratio);
  j["peak_from_point"] = v.peak_from_point;
  j["reasoning"] = v.reasoning;
  if (v.concrete) {
    j["peak_targets"] = v.peak_targets;
    if (v.peak_time) j["peak_time"] = *v.peak_time;
    j["idempotents_ok"] = v.idempotents_ok;
    j["max_idempotent_error"] = v.max_idempotent_error;
    Json verdicts = Json::array();
    for (const auto& t : v.point_verdicts) verdicts.push_back(verdict_to_json(t));
    j["verdicts"] = verdicts;
  }
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw PreconditionError("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw PreconditionError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw PreconditionError("cannot rename onto " + path);
  }
}

}  // namespace qwalk::io
