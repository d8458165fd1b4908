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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/embeddings.hpp"
#include "qwalk/exact.hpp"
#include "qwalk/graphs.hpp"

namespace qwalk {

enum class WalkKind { Generic, ArcReversal, VertexFace, Szegedy };
std::string to_string(WalkKind k);
WalkKind walk_kind_from_string(const std::string& s);

// Frame with entries of the form c*sqrt(r); stored sparsely.
struct ExactFrame {
  struct Entry {
    std::size_t row, col;
    Surd value;
  };
  std::size_t rows = 0, cols = 0;
  std::vector<Entry> entries;

  Eigen::MatrixXd to_dense() const;
};

// Tries to read every entry of a dense frame as +-sqrt(a/b) with b <= max_den.
std::optional<ExactFrame> exact_frame_from_dense(const Eigen::MatrixXd& f,
                                                 std::uint64_t max_den = 10000);

// U = (2MM^T - I)(2NN^T - I) on the arc/state space. N has one column per
// index x, M one per index y. Immutable once constructed.
class TwoReflectionWalk {
 public:
  TwoReflectionWalk(Eigen::MatrixXd n_frame, Eigen::MatrixXd m_frame,
                    WalkKind kind = WalkKind::Generic,
                    std::optional<ExactFrame> exact_n = std::nullopt,
                    std::optional<ExactFrame> exact_m = std::nullopt);

  WalkKind kind() const { return kind_; }
  std::size_t state_dim() const { return n_.rows(); }
  std::size_t dim() const { return n_.cols(); }
  const Eigen::MatrixXd& n_frame() const { return n_; }
  const Eigen::MatrixXd& m_frame() const { return m_; }
  const Eigen::MatrixXd& discriminant() const { return d_; }
  const Eigen::MatrixXd& projected() const { return b_; }
  bool has_exact_frames() const { return exact_n_.has_value() && exact_m_.has_value(); }
  const std::optional<ExactFrame>& exact_n() const { return exact_n_; }
  const std::optional<ExactFrame>& exact_m() const { return exact_m_; }

  // Dense U; |A| x |A|.
  Eigen::MatrixXd unitary() const;
  // U x without forming U.
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;

  // Exact entries of B (requires exact frames); throws UnsupportedError when
  // an entry is not a monomial surd.
  std::vector<std::vector<Surd>> exact_projected() const;
  // A rational matrix diagonally similar to B, when one exists.
  RationalMatrix rational_similar() const;

 private:
  WalkKind kind_;
  Eigen::MatrixXd n_, m_, d_, b_;
  std::optional<ExactFrame> exact_n_, exact_m_;
};

TwoReflectionWalk arc_reversal_walk(const MultiGraph& g);
TwoReflectionWalk vertex_face_walk(const RotationMap& map);
// p[y] is a distribution over X, q[x] a distribution over Y; entries exact.
TwoReflectionWalk szegedy_walk(const std::vector<std::vector<Rational>>& p,
                               const std::vector<std::vector<Rational>>& q);
TwoReflectionWalk szegedy_walk(const std::vector<std::vector<double>>& p,
                               const std::vector<std::vector<double>>& q);
TwoReflectionWalk generic_walk(const Eigen::MatrixXd& n_frame,
                               const Eigen::MatrixXd& m_frame);
TwoReflectionWalk generic_walk(const ExactFrame& n_frame, const ExactFrame& m_frame);

// The signed 4-cycle frames (8 x 4 each) with zero transfer between
// antipodal vertices.
TwoReflectionWalk signed_c4_walk();

Eigen::VectorXd evolve(const TwoReflectionWalk& w, const Eigen::VectorXd& phi0,
                       std::size_t t);
// T_t(B) via the three-term recurrence.
Eigen::MatrixXd bt(const TwoReflectionWalk& w, std::size_t t);
// Column v of T_t(B) for t = 0..t_max (column t of the result).
Eigen::MatrixXd bt_column_series(const TwoReflectionWalk& w, std::size_t v,
                                 std::size_t t_max);
// N^T U^t N by repeated application of U (oracle path).
Eigen::MatrixXd bt_oracle(const TwoReflectionWalk& w, std::size_t t);
// 2 - 2 gamma B_t(v, u).
double fidelity_gap(const TwoReflectionWalk& w, std::size_t u, std::size_t v,
                    std::size_t t, int gamma);

}  // namespace qwalk
