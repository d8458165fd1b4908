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

// JSON serialization for graphs, maps, designs, walks, spectra and verdicts.
// Every *_from_json throws ParseError on malformed input and lets
// ParameterError from the constructors propagate.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qwalk/embeddings.hpp"
#include "qwalk/graphs.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/transfer.hpp"
#include "qwalk/walks.hpp"

namespace qwalk::io {

using Json = nlohmann::ordered_json;

Json graph_to_json(const MultiGraph& g);
MultiGraph graph_from_json(const Json& j);

Json map_to_json(const RotationMap& m);
RotationMap map_from_json(const Json& j);

struct DesignInput {
  std::size_t v = 0;
  std::vector<Block> blocks;
};
Json design_to_json(const DesignInput& d);
DesignInput design_from_json(const Json& j);

Json matrix_to_json(const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_json(const Json& j);
// Entries may be numbers or exact strings such as "1/3".
std::vector<std::vector<Rational>> rational_matrix_from_json(const Json& j);

// Walk inputs that are not graphs: {"n_frame": M, "m_frame": M} and
// {"p": M, "q": M} (Szegedy, rows stochastic).
TwoReflectionWalk generic_walk_from_json(const Json& j);
TwoReflectionWalk szegedy_walk_from_json(const Json& j);

Json spectral_to_json(const SpectralData& s, bool with_idempotents = false);
Json verdict_to_json(const TransferVerdict& v);
Json srg_to_json(const SrgVerdict& v);
Json design_verdict_to_json(const DesignVerdict& v);

Json parse(const std::string& text);
std::string read_file(const std::string& path);
// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::string& path, const std::string& text);

}  // namespace qwalk::io
