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

// qwalk command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/qwalk.h"

namespace {

int g_log_level = 0;

void log(int level, const std::string& msg) {
  if (level <= g_log_level) std::cerr << "[qwalk] " << msg << '\n';
}

struct Failure {
  int code;
  std::string message;
};

int exit_code(qw_status s) {
  switch (s) {
    case QW_OK: return 0;
    case QW_ERR_PARSE: return 2;
    case QW_ERR_PRECONDITION: return 3;
    case QW_ERR_UNSUPPORTED: return 4;
    default: return 1;
  }
}

void check(qw_status s) {
  if (s != QW_OK) throw Failure{exit_code(s), qw_last_error()};
}

// Owns a string returned by the C API.
std::string take(char* s) {
  std::string out(s ? s : "");
  qw_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{2, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const std::filesystem::path tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) throw Failure{3, "cannot write " + path};
  }
  std::filesystem::rename(tmp, path);
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};

struct CommonFlags {
  std::uint64_t q_max = 0;
  double tol = 1e-9, support_tol = 1e-9, cluster_tol = 1e-9;
  bool exact = true, oracle = false, idempotents = false;
  std::string gamma = "auto";
  unsigned jobs = 1;

  void attach(CLI::App* app) {
    app->add_option("--q-max", q_max, "largest denominator tried when recognizing cosines (0: auto)");
    app->add_option("--tol", tol, "recognition tolerance");
    app->add_option("--support-tol", support_tol, "idempotent entries below this are zero");
    app->add_option("--cluster-tol", cluster_tol, "eigenvalue clustering tolerance");
    app->add_flag("--exact,!--no-exact", exact, "compute the exact characteristic polynomial");
    app->add_flag("--oracle", oracle, "force the time-evolution cross-check, including U^t");
    app->add_flag("--idempotents", idempotents, "include idempotent matrices in the report");
    app->add_option("--gamma", gamma, "phase policy")->check(CLI::IsMember({"auto", "plus", "minus"}));
    app->add_option("--jobs,-j", jobs, "threads for the all-pairs loop")->check(CLI::Range(1u, 256u));
  }

  qw_options options() const {
    qw_options o;
    qw_options_init(&o);
    o.q_max = q_max;
    o.tol = tol;
    o.support_tol = support_tol;
    o.cluster_tol = cluster_tol;
    o.exact = exact;
    o.oracle = oracle;
    o.with_idempotents = idempotents;
    o.gamma = gamma == "plus" ? QW_GAMMA_PLUS : gamma == "minus" ? QW_GAMMA_MINUS : QW_GAMMA_AUTO;
    o.jobs = jobs;
    return o;
  }
};

// Walk kind implied by the input's top-level keys when --walk is not given.
std::string infer_kind(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_object()) {
    if (j.contains("rotation")) return "vertex-face";
    if (j.contains("n_frame")) return "generic";
    if (j.contains("p") && j.contains("q")) return "szegedy";
  }
  return "arc-reversal";
}

qw_walk* load_walk(const std::string& input, std::string kind_name) {
  const std::string text = read_input(input);
  if (kind_name.empty()) kind_name = infer_kind(text);
  qw_walk_kind kind;
  check(qw_walk_kind_parse(kind_name.c_str(), &kind));
  qw_walk* w = nullptr;
  check(qw_walk_from_input(text.c_str(), kind, &w));
  log(1, "walk " + kind_name + ": " + std::to_string(qw_walk_dim(w)) + " vertices, " +
             std::to_string(qw_walk_arc_count(w)) + " arcs");
  return w;
}

// "all", or pairs "u,v" separated by ';' or given repeatedly.
std::vector<size_t> parse_pairs(const std::vector<std::string>& specs, bool& all) {
  std::vector<size_t> out;
  all = false;
  for (const auto& spec : specs) {
    std::stringstream items(spec);
    std::string item;
    while (std::getline(items, item, ';')) {
      if (item == "all") {
        all = true;
        continue;
      }
      const auto comma = item.find(',');
      try {
        if (comma == std::string::npos) throw std::invalid_argument(item);
        std::size_t used = 0;
        const unsigned long u = std::stoul(item.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(item);
        const std::string rest = item.substr(comma + 1);
        const unsigned long v = std::stoul(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(item);
        out.push_back(u);
        out.push_back(v);
      } catch (const std::logic_error&) {
        throw Failure{2, "bad pair '" + item + "' (expected u,v or all)"};
      }
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("QWALK_LOG")) {
    const std::string lvl(env);
    g_log_level = lvl == "debug" || lvl == "2" ? 2 : lvl == "info" || lvl == "1" ? 1 : 0;
  }

  CLI::App app{"qwalk: state transfer in two-reflection quantum walks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("qwalk ") + qw_version());

  // analyze
  auto* analyze = app.add_subcommand("analyze", "decide peak/perfect/zero transfer and periodicity");
  std::string input, walk;
  std::vector<std::string> pair_specs;
  bool periodicity = false, csv = false;
  CommonFlags flags;
  analyze->add_option("input", input, "graph/embedding/frames JSON ('-' for stdin)")->required();
  analyze->add_option("--walk,-w", walk, "arc-reversal | vertex-face | generic | szegedy (default: from the input)");
  analyze->add_option("--pairs,-p", pair_specs, "'all' or u,v pairs");
  analyze->add_flag("--periodicity", periodicity, "periodicity at every vertex");
  analyze->add_flag("--csv", csv, "CSV instead of JSON");
  flags.attach(analyze);

  // evolve
  auto* evolve = app.add_subcommand("evolve", "amplitudes per arc per step");
  std::size_t start = 0;
  std::uint64_t t_max = 0;
  std::string frames;
  evolve->add_option("input", input, "graph/embedding/frames JSON ('-' for stdin)")->required();
  evolve->add_option("--walk,-w", walk, "walk kind (default: from the input)");
  evolve->add_option("--start,-s", start, "start vertex")->required();
  evolve->add_option("--t-max,-t", t_max, "last step")->required();
  evolve->add_option("--frames", frames, "directory for SVG frames");

  // families
  auto* families = app.add_subcommand("families", "write a generated graph, embedding or design");
  std::string family;
  std::vector<std::int64_t> params;
  std::string output;
  families->add_option("family", family, "family name (see README)")->required();
  families->add_option("params", params, "integer parameters");
  families->add_option("-o,--output", output, "output file (default stdout)");

  // srg
  auto* srg = app.add_subcommand("srg", "classify a strongly regular parameter set");
  std::vector<std::int64_t> srg_params;
  bool json_out = false;
  srg->add_option("params", srg_params, "n k a c")->required()->expected(4);
  srg->add_flag("--json", json_out, "full JSON verdict");

  // design
  auto* design = app.add_subcommand("design", "point-started transfer in a block design");
  CommonFlags design_flags;
  design->add_option("input", input, "design JSON {v, blocks}")->required();
  design->add_flag("--json", json_out, "full JSON verdict");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (analyze->parsed()) {
      Handle<qw_walk, qw_walk_free> w{load_walk(input, walk)};
      bool all = false;
      const std::vector<size_t> pairs = parse_pairs(pair_specs, all);
      if (all && (!pairs.empty() || periodicity)) {
        throw Failure{2, "--pairs all cannot be combined with explicit pairs or --periodicity"};
      }
      if (!all && pairs.empty() && !periodicity) {
        throw Failure{2, "nothing to analyze: give --pairs or --periodicity"};
      }
      const qw_options o = flags.options();
      char* out = nullptr;
      check(qw_analyze(w.p, &o, pairs.data(), pairs.size() / 2, periodicity, csv, &out));
      std::cout << take(out);
      log(1, "analysis finished");
    } else if (evolve->parsed()) {
      Handle<qw_walk, qw_walk_free> w{load_walk(input, walk)};
      char* out = nullptr;
      check(qw_evolve_csv(w.p, start, t_max, &out));
      std::cout << take(out);
      if (!frames.empty()) {
        check(qw_svg_frames(w.p, start, t_max, frames.c_str()));
        log(1, "frames written to " + frames);
      }
    } else if (families->parsed()) {
      char* out = nullptr;
      check(qw_family_json(family.c_str(), params.data(), params.size(), &out));
      write_output(output, take(out) + "\n");
    } else if (srg->parsed()) {
      char* out = nullptr;
      check(qw_srg_analyze(srg_params[0], srg_params[1], srg_params[2], srg_params[3], &out));
      const std::string text = take(out);
      if (json_out) {
        std::cout << text << '\n';
      } else {
        const auto j = nlohmann::json::parse(text);
        std::cout << (j["peak"].get<bool>() ? "peak state transfer" : "no peak state transfer")
                  << " (" << j["branch"].get<std::string>() << ")\n";
      }
    } else if (design->parsed()) {
      const std::string text = read_input(input);
      const qw_options o = design_flags.options();
      char* out = nullptr;
      check(qw_design_analyze(text.c_str(), &o, &out));
      const std::string result = take(out);
      if (json_out) {
        std::cout << result << '\n';
      } else {
        const auto j = nlohmann::json::parse(result);
        const auto& p = j["params"];
        std::cout << '(' << p["v"] << ',' << p["k"] << ',' << p["lambda"] << "): ";
        if (j["peak_from_point"].get<bool>()) {
          std::cout << "peak from each point to its " << j["peak_targets"].size()
                    << " non-incident blocks at t=" << j["peak_time"] << '\n';
        } else {
          std::cout << "no peak from points ((r-lambda)/(rk) = " << j["ratio"].get<std::string>()
                    << ")\n";
        }
      }
    }
  } catch (const Failure& f) {
    std::cerr << "qwalk: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "qwalk: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
