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

#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

bool support_connected(const Eigen::MatrixXd& b) {
  const Eigen::Index n = b.rows();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<Eigen::Index> q;
  q.push(0);
  seen[0] = true;
  Eigen::Index count = 1;
  while (!q.empty()) {
    const Eigen::Index i = q.front();
    q.pop();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!seen[j] && std::fabs(b(i, j)) > 1e-12) {
        seen[j] = true;
        ++count;
        q.push(j);
      }
    }
  }
  return count == n;
}

}  // namespace

SpectralData decompose(const Eigen::MatrixXd& b, double cluster_tol) {
  if (b.rows() != b.cols()) throw ParameterError("decompose: matrix is not square");
  if (b.rows() == 0) throw ParameterError("decompose: empty matrix");
  if ((b - b.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ParameterError("decompose: matrix is not symmetric within 1e-10");
  }
  if (!(cluster_tol >= 0)) throw ParameterError("cluster_tol must be >= 0");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b);
  if (es.info() != Eigen::Success) throw Error("eigensolver failed to converge");
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  const Eigen::MatrixXd& vec = es.eigenvectors();
  const Eigen::Index n = b.rows();

  SpectralData out;
  out.cluster_tol = cluster_tol;
  out.connected = support_connected(b);
  // Walk from the largest eigenvalue down, chaining neighbours within tol.
  Eigen::Index hi = n - 1;
  while (hi >= 0) {
    Eigen::Index lo = hi;
    while (lo > 0 && ev(lo) - ev(lo - 1) <= cluster_tol) --lo;
    const Eigen::Index cnt = hi - lo + 1;
    const Eigen::MatrixXd block = vec.middleCols(lo, cnt);
    out.eigenvalues.push_back(ev.segment(lo, cnt).mean());
    out.multiplicities.push_back(static_cast<std::size_t>(cnt));
    Eigen::MatrixXd e = block * block.transpose();
    out.idempotents.push_back(0.5 * (e + e.transpose()));
    hi = lo - 1;
  }
  return out;
}

QPolynomial exact_charpoly(const TwoReflectionWalk& w) {
  return rational_charpoly(w.rational_similar());
}

SpectralData analyze_spectrum(const TwoReflectionWalk& w, const SpectralOptions& opts) {
  SpectralData s = decompose(w.projected(), opts.cluster_tol);
  s.kind = w.kind();
  if (!opts.exact) {
    s.exact_note = "exact path disabled";
  } else if (!w.has_exact_frames()) {
    s.exact_note = "frames have no exact (rational-square) form";
  } else {
    try {
      s.charpoly = exact_charpoly(w);
    } catch (const UnsupportedError& e) {
      s.exact_note = e.what();
    }
  }
  return s;
}

std::vector<double> numeric_charpoly(const SpectralData& s) {
  std::vector<double> c{1.0};
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t k = 0; k < s.multiplicities[i]; ++k) {
      std::vector<double> next(c.size() + 1, 0.0);
      for (std::size_t j = 0; j < c.size(); ++j) {
        next[j + 1] += c[j];
        next[j] -= s.eigenvalues[i] * c[j];
      }
      c = std::move(next);
    }
  }
  return c;
}

CharpolyFilter charpoly_of_U_filter(std::size_t n, std::size_t m) {
  if (n < 3 || m < 3) {
    throw PreconditionError("charpoly filter needs n, m >= 3");
  }
  const Rational nm(static_cast<unsigned long>(n * m));
  CharpolyFilter f;
  f.tr_u = nm;
  f.tr_u2 = Rational(9, 4) * nm;
  f.c2 = (f.tr_u * f.tr_u - f.tr_u2) / 2;
  f.integral = (f.c2.get_den() == 1);
  return f;
}

namespace {

using SparseRow = std::map<std::size_t, Rational>;

// 2FF^T - I as sparse rational rows.
std::vector<SparseRow> exact_reflection(const ExactFrame& f) {
  std::vector<std::vector<std::pair<std::size_t, Surd>>> cols(f.cols);
  for (const auto& e : f.entries) cols[e.col].emplace_back(e.row, e.value);
  std::vector<std::map<std::size_t, Surd>> acc(f.rows);
  for (const auto& col : cols) {
    for (const auto& [a, s] : col) {
      for (const auto& [b, t] : col) {
        auto sum = try_add(acc[a][b], s * t);
        if (!sum) throw UnsupportedError("reflection entries are not monomial surds");
        acc[a][b] = *sum;
      }
    }
  }
  std::vector<SparseRow> out(f.rows);
  for (std::size_t a = 0; a < f.rows; ++a) {
    for (const auto& [b, s] : acc[a]) {
      if (s.is_zero()) continue;
      if (s.radicand != 1) throw UnsupportedError("reflection has irrational entries");
      out[a][b] += 2 * s.coef;
    }
    out[a][a] -= 1;
  }
  return out;
}

}  // namespace

std::pair<Rational, Rational> exact_unitary_traces(const TwoReflectionWalk& w) {
  if (!w.has_exact_frames()) throw UnsupportedError("walk has no exact frame data");
  const auto rn = exact_reflection(*w.exact_n());
  const auto rm = exact_reflection(*w.exact_m());
  const std::size_t na = rn.size();
  std::vector<SparseRow> u(na);
  for (std::size_t a = 0; a < na; ++a) {
    for (const auto& [b, x] : rm[a]) {
      if (sgn(x) == 0) continue;
      for (const auto& [c, y] : rn[b]) u[a][c] += x * y;
    }
  }
  Rational tr = 0, tr2 = 0;
  for (std::size_t a = 0; a < na; ++a) {
    auto it = u[a].find(a);
    if (it != u[a].end()) tr += it->second;
    for (const auto& [c, x] : u[a]) {
      auto back = u[c].find(a);
      if (back != u[c].end()) tr2 += x * back->second;
    }
  }
  return {tr, tr2};
}

}  // namespace qwalk
