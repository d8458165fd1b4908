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

#include "qwalk/report.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "qwalk/error.hpp"

namespace qwalk {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

namespace {

// Runs f(i) for i in [0, count) on `jobs` threads; results land by index so
// the output does not depend on scheduling.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += jobs) f(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

AnalyzeResult analyze(const TwoReflectionWalk& w, const AnalyzeRequest& req) {
  AnalyzeResult out;
  out.spectrum = analyze_spectrum(w, req.spectral);
  const SpectralData& s = out.spectrum;
  const std::size_t n = s.dim();
  DecideOptions opts = req.decide;
  out.oracle_ran = req.oracle || n <= kOracleAutoDim;
  opts.oracle_walk = out.oracle_ran ? &w : nullptr;
  opts.oracle_unitary = req.oracle;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  bool periodicity = req.periodicity;
  if (req.pairs) {
    pairs = *req.pairs;
    for (const auto& [u, v] : pairs) {
      if (u >= n || v >= n) throw PreconditionError("pair vertex out of range");
      if (u == v) throw PreconditionError("pair needs distinct vertices");
    }
  } else if (!req.periodicity) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    periodicity = true;
  }
  out.pairs.resize(pairs.size());
  parallel_for(pairs.size(), req.jobs, [&](std::size_t i) {
    out.pairs[i] = decide_pair(s, pairs[i].first, pairs[i].second, opts);
  });
  if (periodicity) {
    out.periodicity.resize(n);
    parallel_for(n, req.jobs, [&](std::size_t u) { out.periodicity[u] = decide_periodicity(s, u, opts); });
  }
  return out;
}

io::Json report_json(const AnalyzeResult& r, const TwoReflectionWalk& w,
                     const AnalyzeRequest& req, const std::string& input_digest) {
  io::Json j;
  j["tool"] = "qwalk";
  j["version"] = kVersion;
  j["input_digest"] = "fnv1a64:" + input_digest;
  j["walk"] = to_string(w.kind());
  j["dim"] = w.dim();
  j["arcs"] = w.state_dim();
  j["tolerances"] = {{"cluster_tol", req.spectral.cluster_tol},
                     {"tol", req.decide.tol},
                     {"support_tol", req.decide.support_tol},
                     {"q_max", req.decide.effective_q_max(w.dim())},
                     {"exact", req.spectral.exact}};
  j["spectrum"] = io::spectral_to_json(r.spectrum, req.with_idempotents);
  std::map<std::string, std::size_t> counts;
  std::size_t ran = 0, passed = 0;
  io::Json failed = io::Json::array();
  auto collect = [&](const std::vector<TransferVerdict>& list, const char* key) {
    io::Json arr = io::Json::array();
    for (const auto& v : list) {
      arr.push_back(io::verdict_to_json(v));
      ++counts[to_string(v.kind)];
      if (v.oracle.ran) {
        ++ran;
        if (v.oracle.passed) {
          ++passed;
        } else {
          failed.push_back({v.u, v.v});
        }
      }
    }
    j[key] = arr;
  };
  collect(r.pairs, "verdicts");
  collect(r.periodicity, "periodicity");
  io::Json summary;
  for (const auto& [k, c] : counts) summary[k] = c;
  j["summary"] = summary;
  j["oracle"] = {{"enabled", r.oracle_ran}, {"checked", ran}, {"passed", passed},
                 {"failed", failed}};
  return j;
}

std::string report_csv(const AnalyzeResult& r) {
  std::ostringstream out;
  out << "u,v,kind,tau,gamma,amount,grade,reason\n";
  out.precision(12);
  auto row = [&](const TransferVerdict& v) {
    out << v.u << ',' << v.v << ',' << to_string(v.kind) << ',' << v.tau.get_str() << ','
        << v.gamma << ',' << v.amount << ',' << to_string(v.grade) << ','
        << (v.kind == VerdictKind::NoPeak ? to_string(v.reason) : "") << '\n';
  };
  for (const auto& v : r.pairs) row(v);
  for (const auto& v : r.periodicity) row(v);
  return out.str();
}

// --- geometry and frames ----------------------------------------------------

namespace {

std::vector<std::pair<double, double>> circular(std::size_t n) {
  std::vector<std::pair<double, double>> pos;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pos.emplace_back(1.0 + std::sin(a), 1.0 - std::cos(a));
  }
  return pos;
}

}  // namespace

Geometry geometry_of(const MultiGraph& g) {
  return Geometry{circular(g.vertex_count()), std::nullopt, build_arc_space(g)};
}

Geometry geometry_of(const RotationMap& m) {
  Geometry out = geometry_of(m.graph());
  out.arcs = m.arcs();
  if (const auto& l = m.layout(); l && l->positions.size() == m.graph().vertex_count()) {
    out.positions = l->positions;
    out.period = l->period;
  }
  return out;
}

std::vector<Eigen::VectorXd> evolve_states(const TwoReflectionWalk& w, std::size_t start,
                                           std::size_t t_max) {
  if (start >= w.dim()) throw PreconditionError("start vertex out of range");
  std::vector<Eigen::VectorXd> states;
  Eigen::VectorXd x = w.n_frame().col(static_cast<Eigen::Index>(start));
  states.push_back(x);
  for (std::size_t t = 0; t < t_max; ++t) {
    x = w.apply(x);
    states.push_back(x);
  }
  return states;
}

std::string evolve_csv(const TwoReflectionWalk& w, std::size_t start, std::size_t t_max,
                       const Geometry* geometry) {
  if (geometry && geometry->arcs.arcs.size() != w.state_dim()) {
    throw PreconditionError("geometry does not match the walk's arc space");
  }
  std::ostringstream out;
  out.precision(15);
  out << "t,arc,tail,head,amplitude\n";
  const auto states = evolve_states(w, start, t_max);
  for (std::size_t t = 0; t < states.size(); ++t) {
    for (std::size_t a = 0; a < w.state_dim(); ++a) {
      double amp = states[t](static_cast<Eigen::Index>(a));
      if (std::fabs(amp) < 1e-15) amp = 0.0;
      out << t << ',' << a << ',';
      if (geometry) out << geometry->arcs.arcs[a].tail << ',' << geometry->arcs.arcs[a].head;
      else out << ',';
      out << ',' << amp << '\n';
    }
  }
  return out.str();
}

std::string svg_frame(const Geometry& g, const Eigen::VectorXd& state, std::size_t t) {
  if (static_cast<std::size_t>(state.size()) != g.arcs.arcs.size()) {
    throw PreconditionError("state size does not match the arc space");
  }
  double minx = 0, miny = 0, maxx = 1, maxy = 1;
  if (g.period) {
    maxx = g.period->first;
    maxy = g.period->second;
  } else if (!g.positions.empty()) {
    minx = maxx = g.positions[0].first;
    miny = maxy = g.positions[0].second;
    for (const auto& [x, y] : g.positions) {
      minx = std::min(minx, x), maxx = std::max(maxx, x);
      miny = std::min(miny, y), maxy = std::max(maxy, y);
    }
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-9});
  const double scale = 400.0 / span, margin = 40.0;
  auto px = [&](double x) { return margin + (x - minx) * scale; };
  auto py = [&](double y) { return margin + (maxy - y) * scale; };
  const double width = 2 * margin + (maxx - minx) * scale;
  const double height = 2 * margin + (maxy - miny) * scale;
  const double peak = std::max(state.cwiseAbs().maxCoeff(), 1e-300);

  std::ostringstream out;
  out.precision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<title>t = " << t << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t a = 0; a < g.arcs.arcs.size(); ++a) {
    const auto& arc = g.arcs.arcs[a];
    auto [x0, y0] = g.positions[arc.tail];
    auto [x1, y1] = g.positions[arc.head];
    if (g.period) {  // nearest periodic image of the head
      x1 -= g.period->first * std::round((x1 - x0) / g.period->first);
      y1 -= g.period->second * std::round((y1 - y0) / g.period->second);
    }
    const double amp = state(static_cast<Eigen::Index>(a));
    const char* colour = amp > 0 ? "#d62728" : "#1f77b4";
    const double opacity = std::fabs(amp) / peak;
    if (opacity < 1e-9) continue;
    if (arc.tail == arc.head && std::fabs(x1 - x0) < 1e-12 && std::fabs(y1 - y0) < 1e-12) {
      // Loop without a periodic image: small circle beside the vertex.
      out << "<circle cx=\"" << px(x0) + 10 << "\" cy=\"" << py(y0) - 10
          << "\" r=\"8\" fill=\"none\" stroke=\"" << colour << "\" stroke-opacity=\""
          << opacity << "\" stroke-width=\"3\"/>\n";
      continue;
    }
    // Half-edge from the tail, offset sideways so opposite arcs separate.
    const double dx = x1 - x0, dy = y1 - y0, len = std::hypot(dx, dy);
    const double ox = -dy / len * 0.03 * span, oy = dx / len * 0.03 * span;
    out << "<line x1=\"" << px(x0 + ox) << "\" y1=\"" << py(y0 + oy) << "\" x2=\""
        << px(x0 + 0.45 * dx + ox) << "\" y2=\"" << py(y0 + 0.45 * dy + oy)
        << "\" stroke=\"" << colour << "\" stroke-opacity=\"" << opacity
        << "\" stroke-width=\"4\" stroke-linecap=\"round\"/>\n";
  }
  for (std::size_t v = 0; v < g.positions.size(); ++v) {
    out << "<circle cx=\"" << px(g.positions[v].first) << "\" cy=\""
        << py(g.positions[v].second) << "\" r=\"4\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace qwalk
