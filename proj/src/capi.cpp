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

#include "qwalk/qwalk.h"

#include <cstring>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/io.hpp"
#include "qwalk/report.hpp"

struct qw_graph {
  qwalk::MultiGraph g;
};
struct qw_map {
  qwalk::RotationMap m;
};
struct qw_walk {
  qwalk::TwoReflectionWalk w;
  std::optional<qwalk::Geometry> geometry;
  std::string digest;
};
struct qw_spectrum {
  qwalk::SpectralData s;
};

namespace {

thread_local std::string g_last_error;

qw_status fail(qw_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

// Maps library exceptions onto status codes.
template <class F>
qw_status call(F&& f) {
  try {
    g_last_error.clear();
    f();
    return QW_OK;
  } catch (const qwalk::ParseError& e) {
    return fail(QW_ERR_PARSE, e.what());
  } catch (const qwalk::ParameterError& e) {
    return fail(QW_ERR_PRECONDITION, e.what());
  } catch (const qwalk::PreconditionError& e) {
    return fail(QW_ERR_PRECONDITION, e.what());
  } catch (const qwalk::UnsupportedError& e) {
    return fail(QW_ERR_UNSUPPORTED, e.what());
  } catch (const std::exception& e) {
    return fail(QW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QW_ERR_INTERNAL, "unknown error");
  }
}

template <class T>
const T& need(const T* p) {
  if (!p) throw qwalk::PreconditionError("null handle");
  return *p;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

qwalk::DecideOptions decide_options(const qw_options* o) {
  qwalk::DecideOptions d;
  if (!o) return d;
  d.q_max = o->q_max;
  d.tol = o->tol;
  d.support_tol = o->support_tol;
  d.cospectral_tol = o->cospectral_tol;
  d.gamma = o->gamma == QW_GAMMA_PLUS    ? qwalk::GammaPolicy::Plus
            : o->gamma == QW_GAMMA_MINUS ? qwalk::GammaPolicy::Minus
                                         : qwalk::GammaPolicy::Auto;
  d.oracle_unitary = o->oracle != 0;
  return d;
}

qwalk::SpectralOptions spectral_options(const qw_options* o) {
  qwalk::SpectralOptions s;
  if (!o) return s;
  s.cluster_tol = o->cluster_tol;
  s.exact = o->exact != 0;
  return s;
}

#define QW_CHECK_OUT(p) \
  if (!(p)) return fail(QW_ERR_ARGUMENT, "null output pointer")

std::size_t param(const int64_t* params, size_t n, size_t i) {
  if (i >= n) throw qwalk::ParameterError("family needs more parameters");
  if (params[i] < 0) throw qwalk::ParameterError("family parameters must be non-negative");
  return static_cast<std::size_t>(params[i]);
}

std::string family_json(const std::string& name, const int64_t* p, size_t n) {
  namespace fam = qwalk::family;
  using qwalk::generate;
  using qwalk::io::graph_to_json;
  using qwalk::io::map_to_json;
  auto expect = [&](size_t count) {
    if (n != count) {
      throw qwalk::ParameterError("family '" + name + "' takes " + std::to_string(count) +
                                  " parameter(s)");
    }
  };
  auto g = [&](const qwalk::FamilySpec& spec) { return graph_to_json(generate(spec)).dump(); };
  if (name == "cycle") return expect(1), g(fam::Cycle{param(p, n, 0)});
  if (name == "complete") return expect(1), g(fam::Complete{param(p, n, 0)});
  if (name == "path") return expect(1), g(fam::Path{param(p, n, 0)});
  if (name == "multipartite") {
    std::vector<std::size_t> parts;
    for (size_t i = 0; i < n; ++i) parts.push_back(param(p, n, i));
    return g(fam::CompleteMultipartite{parts});
  }
  if (name == "gnm") return expect(2), g(fam::Gnm{param(p, n, 0), param(p, n, 1)});
  if (name == "hamming") return expect(2), g(fam::Hamming{param(p, n, 0), param(p, n, 1)});
  if (name == "h33") return expect(0), g(fam::HammingH33{});
  if (name == "folded-cube") return expect(1), g(fam::FoldedCube{param(p, n, 0)});
  if (name == "fig2") return expect(0), g(fam::Figure2Graph{});
  if (name == "kneser") return expect(2), g(fam::Kneser{param(p, n, 0), param(p, n, 1)});
  if (name == "paley") return expect(1), g(fam::Paley{param(p, n, 0)});
  if (name == "blowup-cycle") {
    expect(2);
    return g(fam::BlowUp{generate(fam::Cycle{param(p, n, 0)}), param(p, n, 1)});
  }
  if (name == "blowup-complete") {
    expect(2);
    return g(fam::BlowUp{generate(fam::Complete{param(p, n, 0)}), param(p, n, 1)});
  }
  if (name == "affine-incidence") {
    expect(1);
    const std::size_t q = param(p, n, 0);
    return g(fam::DesignIncidence{q * q, qwalk::affine_plane_blocks(q)});
  }
  if (name == "fano-incidence") return expect(0), g(fam::DesignIncidence{7, qwalk::fano_plane_blocks()});
  if (name == "grid") return expect(2), map_to_json(qwalk::toroidal_grid(param(p, n, 0), param(p, n, 1))).dump();
  if (name == "k4-planar") return expect(0), map_to_json(qwalk::k4_planar_map()).dump();
  if (name == "k4-torus") return expect(0), map_to_json(qwalk::k4_torus_map()).dump();
  if (name == "cycle-map") return expect(1), map_to_json(qwalk::cycle_sphere_map(param(p, n, 0))).dump();
  if (name == "affine-plane") {
    expect(1);
    const std::size_t q = param(p, n, 0);
    return qwalk::io::design_to_json({q * q, qwalk::affine_plane_blocks(q)}).dump();
  }
  if (name == "fano") return expect(0), qwalk::io::design_to_json({7, qwalk::fano_plane_blocks()}).dump();
  if (name == "signed-c4") {
    expect(0);
    const auto w = qwalk::signed_c4_walk();
    qwalk::io::Json j;
    j["n_frame"] = qwalk::io::matrix_to_json(w.n_frame());
    j["m_frame"] = qwalk::io::matrix_to_json(w.m_frame());
    return j.dump();
  }
  throw qwalk::ParameterError("unknown family '" + name + "'");
}

}  // namespace

extern "C" {

void qw_options_init(qw_options* o) {
  if (!o) return;
  o->q_max = 0;
  o->tol = 1e-9;
  o->support_tol = 1e-9;
  o->cluster_tol = 1e-9;
  o->cospectral_tol = 1e-8;
  o->exact = 1;
  o->oracle = 0;
  o->gamma = QW_GAMMA_AUTO;
  o->jobs = 1;
  o->with_idempotents = 0;
}

const char* qw_version(void) { return qwalk::kVersion; }
const char* qw_last_error(void) { return g_last_error.c_str(); }
void qw_string_free(char* s) { std::free(s); }

qw_status qw_walk_kind_parse(const char* name, qw_walk_kind* out) {
  QW_CHECK_OUT(out);
  return call([&] {
    if (!name) throw qwalk::ParameterError("null walk name");
    switch (qwalk::walk_kind_from_string(name)) {
      case qwalk::WalkKind::ArcReversal: *out = QW_WALK_ARC_REVERSAL; break;
      case qwalk::WalkKind::VertexFace: *out = QW_WALK_VERTEX_FACE; break;
      case qwalk::WalkKind::Szegedy: *out = QW_WALK_SZEGEDY; break;
      case qwalk::WalkKind::Generic: *out = QW_WALK_GENERIC; break;
    }
  });
}

qw_status qw_graph_from_json(const char* json, qw_graph** out) {
  QW_CHECK_OUT(out);
  return call([&] {
    if (!json) throw qwalk::ParseError("null JSON text");
    *out = new qw_graph{qwalk::io::graph_from_json(qwalk::io::parse(json))};
  });
}

qw_status qw_graph_to_json(const qw_graph* g, char** out) {
  QW_CHECK_OUT(out);
  return call([&] { *out = dup(qwalk::io::graph_to_json(need(g).g).dump()); });
}

size_t qw_graph_vertex_count(const qw_graph* g) { return g ? g->g.vertex_count() : 0; }
void qw_graph_free(qw_graph* g) { delete g; }

qw_status qw_map_from_json(const char* json, qw_map** out) {
  QW_CHECK_OUT(out);
  return call([&] {
    if (!json) throw qwalk::ParseError("null JSON text");
    *out = new qw_map{qwalk::io::map_from_json(qwalk::io::parse(json))};
  });
}

qw_status qw_map_to_json(const qw_map* m, char** out) {
  QW_CHECK_OUT(out);
  return call([&] { *out = dup(qwalk::io::map_to_json(need(m).m).dump()); });
}

size_t qw_map_face_count(const qw_map* m) { return m ? m->m.faces().size() : 0; }
size_t qw_map_genus(const qw_map* m) { return m ? m->m.genus() : 0; }
void qw_map_free(qw_map* m) { delete m; }

qw_status qw_family_json(const char* name, const int64_t* params, size_t n_params, char** out) {
  QW_CHECK_OUT(out);
  return call([&] {
    if (!name) throw qwalk::ParameterError("null family name");
    if (n_params > 0 && !params) throw qwalk::ParameterError("null parameter array");
    *out = dup(family_json(name, params, n_params));
  });
}

qw_status qw_walk_from_input(const char* json, qw_walk_kind kind, qw_walk** out) {
  QW_CHECK_OUT(out);
  return call([&] {
    if (!json) throw qwalk::ParseError("null JSON text");
    const std::string text(json);
    const qwalk::io::Json j = qwalk::io::parse(text);
    const std::string digest = qwalk::fnv1a_hex(text);
    const bool is_map = j.is_object() && j.contains("rotation");
    switch (kind) {
      case QW_WALK_ARC_REVERSAL: {
        const qwalk::MultiGraph g = is_map ? qwalk::io::map_from_json(j).graph()
                                           : qwalk::io::graph_from_json(j);
        *out = new qw_walk{qwalk::arc_reversal_walk(g), qwalk::geometry_of(g), digest};
        return;
      }
      case QW_WALK_VERTEX_FACE: {
        if (!is_map) throw qwalk::ParseError("vertex-face walk needs an embedding (\"rotation\")");
        const qwalk::RotationMap m = qwalk::io::map_from_json(j);
        *out = new qw_walk{qwalk::vertex_face_walk(m), qwalk::geometry_of(m), digest};
        return;
      }
      case QW_WALK_GENERIC:
        *out = new qw_walk{qwalk::io::generic_walk_from_json(j), std::nullopt, digest};
        return;
      case QW_WALK_SZEGEDY:
        *out = new qw_walk{qwalk::io::szegedy_walk_from_json(j), std::nullopt, digest};
        return;
    }
    throw qwalk::ParameterError("unknown walk kind");
  });
}

qw_status qw_walk_arc_reversal(const qw_graph* g, qw_walk** out) {
  QW_CHECK_OUT(out);
  return call([&] {
    const auto& graph = need(g).g;
    *out = new qw_walk{qwalk::arc_reversal_walk(graph), qwalk::geometry_of(graph),
                       qwalk::fnv1a_hex(qwalk::io::graph_to_json(graph).dump())};
  });
}

qw_status qw_walk_vertex_face(const qw_map* m, qw_walk** out) {
  QW_CHECK_OUT(out);
  return call([&] {
    const auto& map = need(m).m;
    *out = new qw_walk{qwalk::vertex_face_walk(map), qwalk::geometry_of(map),
                       qwalk::fnv1a_hex(qwalk::io::map_to_json(map).dump())};
  });
}

size_t qw_walk_dim(const qw_walk* w) { return w ? w->w.dim() : 0; }
size_t qw_walk_arc_count(const qw_walk* w) { return w ? w->w.state_dim() : 0; }

qw_status qw_walk_bt(const qw_walk* w, uint64_t t, double* out) {
  QW_CHECK_OUT(out);
  return call([&] {
    const Eigen::MatrixXd b = qwalk::bt(need(w).w, t);
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        out, b.rows(), b.cols()) = b;
  });
}

void qw_walk_free(qw_walk* w) { delete w; }

qw_status qw_spectrum_compute(const qw_walk* w, const qw_options* opts, qw_spectrum** out) {
  QW_CHECK_OUT(out);
  return call([&] { *out = new qw_spectrum{qwalk::analyze_spectrum(need(w).w, spectral_options(opts))}; });
}

size_t qw_spectrum_size(const qw_spectrum* s) { return s ? s->s.size() : 0; }

double qw_spectrum_eigenvalue(const qw_spectrum* s, size_t i) {
  return (s && i < s->s.size()) ? s->s.eigenvalues[i] : 0.0;
}

qw_status qw_spectrum_to_json(const qw_spectrum* s, int with_idempotents, char** out) {
  QW_CHECK_OUT(out);
  return call([&] { *out = dup(qwalk::io::spectral_to_json(need(s).s, with_idempotents != 0).dump()); });
}

void qw_spectrum_free(qw_spectrum* s) { delete s; }

qw_status qw_decide_pair(const qw_spectrum* s, const qw_walk* oracle, size_t u, size_t v,
                         const qw_options* opts, char** out) {
  QW_CHECK_OUT(out);
  return call([&] {
    qwalk::DecideOptions d = decide_options(opts);
    d.oracle_walk = oracle ? &oracle->w : nullptr;
    *out = dup(qwalk::io::verdict_to_json(qwalk::decide_pair(need(s).s, u, v, d)).dump());
  });
}

qw_status qw_decide_periodicity(const qw_spectrum* s, const qw_walk* oracle, size_t u,
                                const qw_options* opts, char** out) {
  QW_CHECK_OUT(out);
  return call([&] {
    if (u >= need(s).s.dim()) throw qwalk::PreconditionError("vertex out of range");
    qwalk::DecideOptions d = decide_options(opts);
    d.oracle_walk = oracle ? &oracle->w : nullptr;
    *out = dup(qwalk::io::verdict_to_json(qwalk::decide_periodicity(s->s, u, d)).dump());
  });
}

qw_status qw_analyze(const qw_walk* w, const qw_options* opts, const size_t* pairs,
                     size_t n_pairs, int periodicity, int csv, char** out) {
  QW_CHECK_OUT(out);
  return call([&] {
    const qw_walk& walk = need(w);
    qwalk::AnalyzeRequest req;
    req.decide = decide_options(opts);
    req.spectral = spectral_options(opts);
    req.oracle = opts && opts->oracle;
    req.with_idempotents = opts && opts->with_idempotents;
    req.jobs = opts ? opts->jobs : 1;
    req.periodicity = periodicity != 0;
    if (n_pairs > 0) {
      if (!pairs) throw qwalk::ParameterError("null pair array");
      req.pairs.emplace();
      for (size_t i = 0; i < n_pairs; ++i) req.pairs->emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    } else if (req.periodicity) {
      req.pairs.emplace();  // periodicity only
    }
    const qwalk::AnalyzeResult r = qwalk::analyze(walk.w, req);
    *out = dup(csv ? qwalk::report_csv(r)
                   : qwalk::report_json(r, walk.w, req, walk.digest).dump(2) + "\n");
  });
}

qw_status qw_evolve_csv(const qw_walk* w, size_t start, uint64_t t_max, char** out) {
  QW_CHECK_OUT(out);
  return call([&] {
    const qw_walk& walk = need(w);
    *out = dup(qwalk::evolve_csv(walk.w, start, t_max,
                                 walk.geometry ? &*walk.geometry : nullptr));
  });
}

qw_status qw_svg_frames(const qw_walk* w, size_t start, uint64_t t_max, const char* dir) {
  return call([&] {
    const qw_walk& walk = need(w);
    if (!dir) throw qwalk::ParameterError("null directory");
    if (!walk.geometry) throw qwalk::UnsupportedError("frames need a graph-based walk");
    std::filesystem::create_directories(dir);
    const auto states = qwalk::evolve_states(walk.w, start, t_max);
    for (std::size_t t = 0; t < states.size(); ++t) {
      char name[32];
      std::snprintf(name, sizeof name, "frame_%04zu.svg", t);
      qwalk::io::write_file_atomic((std::filesystem::path(dir) / name).string(),
                                   qwalk::svg_frame(*walk.geometry, states[t], t));
    }
  });
}

qw_status qw_srg_analyze(int64_t n, int64_t k, int64_t a, int64_t c, char** out) {
  QW_CHECK_OUT(out);
  return call([&] { *out = dup(qwalk::io::srg_to_json(qwalk::srg_analyze({n, k, a, c})).dump()); });
}

qw_status qw_design_analyze(const char* json, const qw_options* opts, char** out) {
  QW_CHECK_OUT(out);
  return call([&] {
    if (!json) throw qwalk::ParseError("null JSON text");
    const auto d = qwalk::io::design_from_json(qwalk::io::parse(json));
    const qwalk::DesignParams params = qwalk::validate_design(d.v, d.blocks);
    *out = dup(qwalk::io::design_verdict_to_json(
                   qwalk::design_analyze(params, &d.blocks, decide_options(opts)))
                   .dump());
  });
}

}  // extern "C"
