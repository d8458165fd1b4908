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

// Reports, amplitude CSV and SVG frames built on top of the analysis API.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/io.hpp"

namespace qwalk {

inline constexpr const char* kVersion = "0.1.0";

std::string fnv1a_hex(const std::string& bytes);

struct AnalyzeRequest {
  // nullopt: every unordered pair plus periodicity at every vertex.
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> pairs;
  bool periodicity = false;  // periodicity at every vertex
  DecideOptions decide;      // oracle_walk is filled in by analyze()
  SpectralOptions spectral;
  bool oracle = false;       // force the oracle (and N^T U^t N) on any size
  bool with_idempotents = false;
  unsigned jobs = 1;
};

// Walks above this dimension skip the Chebyshev oracle unless forced.
inline constexpr std::size_t kOracleAutoDim = 48;

struct AnalyzeResult {
  SpectralData spectrum;
  std::vector<TransferVerdict> pairs;
  std::vector<TransferVerdict> periodicity;
  bool oracle_ran = false;
};

AnalyzeResult analyze(const TwoReflectionWalk& w, const AnalyzeRequest& req);
io::Json report_json(const AnalyzeResult& r, const TwoReflectionWalk& w,
                     const AnalyzeRequest& req, const std::string& input_digest);
std::string report_csv(const AnalyzeResult& r);

// Drawing data for a walk on the arcs of a graph.
struct Geometry {
  std::vector<std::pair<double, double>> positions;
  std::optional<std::pair<double, double>> period;
  ArcSpace arcs;
};
Geometry geometry_of(const MultiGraph& g);   // circular layout
Geometry geometry_of(const RotationMap& m);  // stored layout, else circular

// Rows "t,arc,tail,head,amplitude" for t = 0..t_max starting from N e_start.
// Without geometry the tail/head columns are empty.
std::string evolve_csv(const TwoReflectionWalk& w, std::size_t start, std::size_t t_max,
                       const Geometry* geometry = nullptr);
std::vector<Eigen::VectorXd> evolve_states(const TwoReflectionWalk& w, std::size_t start,
                                           std::size_t t_max);
// One frame: red arcs for positive, blue for negative amplitudes, opacity
// proportional to |amplitude| relative to the largest in the frame.
std::string svg_frame(const Geometry& g, const Eigen::VectorXd& state, std::size_t t);

}  // namespace qwalk
