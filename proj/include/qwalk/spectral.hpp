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

#include "qwalk/exact.hpp"
#include "qwalk/walks.hpp"

namespace qwalk {

struct SpectralData {
  std::vector<double> eigenvalues;        // distinct, descending
  std::vector<std::size_t> multiplicities;
  std::vector<Eigen::MatrixXd> idempotents;  // E_theta, same order
  std::optional<QPolynomial> charpoly;    // det(xI - B) over Q
  std::string exact_note;                 // why charpoly is absent, if it is
  double cluster_tol = 1e-9;
  WalkKind kind = WalkKind::Generic;
  bool connected = true;  // support graph of B connected

  std::size_t dim() const {
    return idempotents.empty() ? 0 : static_cast<std::size_t>(idempotents[0].rows());
  }
  std::size_t size() const { return eigenvalues.size(); }
};

// Eigendecomposition of a symmetric matrix with eigenvalues within
// cluster_tol merged into one (value = mean over the cluster).
SpectralData decompose(const Eigen::MatrixXd& b, double cluster_tol = 1e-9);

// det(xI - B) over Q via a rational matrix diagonally similar to B. Throws
// UnsupportedError when the walk carries no exact frame data.
QPolynomial exact_charpoly(const TwoReflectionWalk& w);

struct SpectralOptions {
  double cluster_tol = 1e-9;
  bool exact = true;
};

// decompose(B) plus, when available and requested, the exact charpoly.
SpectralData analyze_spectrum(const TwoReflectionWalk& w, const SpectralOptions& opts = {});

// Coefficients of prod (x - theta)^mult from the numeric spectrum.
std::vector<double> numeric_charpoly(const SpectralData& s);

struct CharpolyFilter {
  Rational tr_u, tr_u2, c2;
  bool integral = false;
};

// Closed forms for the vertex-face walk on the (n,m) toroidal grid, n,m >= 3:
// tr U = nm, tr U^2 = 9nm/4, c2 = (tr(U)^2 - tr(U^2)) / 2.
CharpolyFilter charpoly_of_U_filter(std::size_t n, std::size_t m);

// tr U and tr U^2 computed exactly from the frames of a walk (sparse rational
// arithmetic; requires frames whose reflections are rational).
std::pair<Rational, Rational> exact_unitary_traces(const TwoReflectionWalk& w);

}  // namespace qwalk
