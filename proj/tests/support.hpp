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

#include <fstream>
#include <sstream>
#include <string>

#include "qwalk/io.hpp"

namespace qwalk::test {

// Values frozen from tools/oracle/derive_golden.py.
inline const io::Json& golden() {
  static const io::Json j = [] {
    std::ifstream in(QWALK_TEST_DATA "/golden.json");
    std::stringstream ss;
    ss << in.rdbuf();
    return io::parse(ss.str());
  }();
  return j;
}

inline Eigen::MatrixXd ones(std::size_t n) { return Eigen::MatrixXd::Ones(n, n); }
inline Eigen::MatrixXd eye(std::size_t n) { return Eigen::MatrixXd::Identity(n, n); }

}  // namespace qwalk::test
