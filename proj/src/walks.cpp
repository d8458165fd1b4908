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

#include "qwalk/walks.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <type_traits>

#include "qwalk/error.hpp"

namespace qwalk {

std::string to_string(WalkKind k) {
  switch (k) {
    case WalkKind::Generic: return "generic";
    case WalkKind::ArcReversal: return "arc-reversal";
    case WalkKind::VertexFace: return "vertex-face";
    case WalkKind::Szegedy: return "szegedy";
  }
  return "generic";
}

WalkKind walk_kind_from_string(const std::string& s) {
  if (s == "generic") return WalkKind::Generic;
  if (s == "arc-reversal") return WalkKind::ArcReversal;
  if (s == "vertex-face") return WalkKind::VertexFace;
  if (s == "szegedy") return WalkKind::Szegedy;
  throw ParameterError("unknown walk kind '" + s + "'");
}

Eigen::MatrixXd ExactFrame::to_dense() const {
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(rows, cols);
  for (const auto& e : entries) f(e.row, e.col) += e.value.to_double();
  return f;
}

std::optional<ExactFrame> exact_frame_from_dense(const Eigen::MatrixXd& f,
                                                 std::uint64_t max_den) {
  ExactFrame out;
  out.rows = f.rows();
  out.cols = f.cols();
  for (Eigen::Index j = 0; j < f.cols(); ++j) {
    for (Eigen::Index i = 0; i < f.rows(); ++i) {
      const double x = f(i, j);
      if (x == 0.0) continue;
      auto sq = rationalize(x * x, max_den, 1e-13);
      if (!sq || sgn(*sq) <= 0) return std::nullopt;
      Surd s;
      try {
        s = Surd::sqrt_of(*sq);
      } catch (const UnsupportedError&) {
        return std::nullopt;
      }
      if (x < 0) s = -s;
      if (std::fabs(s.to_double() - x) > 1e-12) return std::nullopt;
      out.entries.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), s});
    }
  }
  return out;
}

namespace {

using SurdRows = std::vector<std::vector<std::pair<std::size_t, Surd>>>;

SurdRows by_row(const ExactFrame& f) {
  SurdRows rows(f.rows);
  for (const auto& e : f.entries) rows[e.row].emplace_back(e.col, e.value);
  return rows;
}

void accumulate(Surd& target, const Surd& add) {
  auto s = try_add(target, add);
  if (!s) throw UnsupportedError("frame data leaves the monomial-surd field");
  target = *s;
}

// Exact Gram matrix F^T F == I ?
bool exact_orthonormal(const ExactFrame& f) {
  std::vector<std::vector<Surd>> g(f.cols, std::vector<Surd>(f.cols));
  for (const auto& row : by_row(f)) {
    for (const auto& [x, s] : row)
      for (const auto& [y, t] : row) accumulate(g[x][y], s * t);
  }
  for (std::size_t x = 0; x < f.cols; ++x)
    for (std::size_t y = 0; y < f.cols; ++y)
      if (!(g[x][y] == Surd::rational(x == y ? 1 : 0))) return false;
  return true;
}

bool numeric_orthonormal(const Eigen::MatrixXd& f, double tol) {
  const Eigen::MatrixXd g = f.transpose() * f;
  return (g - Eigen::MatrixXd::Identity(f.cols(), f.cols())).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

TwoReflectionWalk::TwoReflectionWalk(Eigen::MatrixXd n_frame,
                                     Eigen::MatrixXd m_frame, WalkKind kind,
                                     std::optional<ExactFrame> exact_n,
                                     std::optional<ExactFrame> exact_m)
    : kind_(kind),
      n_(std::move(n_frame)),
      m_(std::move(m_frame)),
      exact_n_(std::move(exact_n)),
      exact_m_(std::move(exact_m)) {
  if (n_.rows() != m_.rows()) {
    throw ParameterError("frame row counts differ: " + std::to_string(n_.rows()) +
                         " vs " + std::to_string(m_.rows()));
  }
  if (n_.cols() == 0 || m_.cols() == 0 || n_.rows() == 0) {
    throw ParameterError("frames must be non-empty");
  }
  if (n_.cols() > n_.rows() || m_.cols() > m_.rows()) {
    throw ParameterError("a frame has more columns than rows");
  }
  if (!n_.allFinite() || !m_.allFinite()) throw ParameterError("frame has non-finite entries");
  bool exact_ok = false;
  if (exact_n_ && exact_m_) {
    try {
      exact_ok = exact_orthonormal(*exact_n_) && exact_orthonormal(*exact_m_);
    } catch (const UnsupportedError&) {
      exact_ok = false;
    }
    if (!exact_ok) {
      exact_n_.reset();
      exact_m_.reset();
    }
  }
  if (!exact_ok && !(numeric_orthonormal(n_, 1e-12) && numeric_orthonormal(m_, 1e-12))) {
    throw ParameterError("frame columns are not orthonormal within 1e-12");
  }
  d_ = n_.transpose() * m_;
  b_ = 2.0 * d_ * d_.transpose() - Eigen::MatrixXd::Identity(dim(), dim());
  b_ = 0.5 * (b_ + b_.transpose());
}

Eigen::MatrixXd TwoReflectionWalk::unitary() const {
  const auto na = static_cast<Eigen::Index>(state_dim());
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(na, na);
  return (2.0 * m_ * m_.transpose() - id) * (2.0 * n_ * n_.transpose() - id);
}

Eigen::VectorXd TwoReflectionWalk::apply(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y = 2.0 * (n_ * (n_.transpose() * x)) - x;
  return 2.0 * (m_ * (m_.transpose() * y)) - y;
}

Eigen::MatrixXd TwoReflectionWalk::apply(const Eigen::MatrixXd& x) const {
  Eigen::MatrixXd y = 2.0 * (n_ * (n_.transpose() * x)) - x;
  return 2.0 * (m_ * (m_.transpose() * y)) - y;
}

std::vector<std::vector<Surd>> TwoReflectionWalk::exact_projected() const {
  if (!has_exact_frames()) throw UnsupportedError("walk has no exact frame data");
  const std::size_t nx = exact_n_->cols, ny = exact_m_->cols;
  std::vector<std::vector<Surd>> d(nx, std::vector<Surd>(ny));
  const auto nrows = by_row(*exact_n_);
  const auto mrows = by_row(*exact_m_);
  for (std::size_t a = 0; a < nrows.size(); ++a)
    for (const auto& [x, s] : nrows[a])
      for (const auto& [y, t] : mrows[a]) accumulate(d[x][y], s * t);
  std::vector<std::vector<std::pair<std::size_t, Surd>>> cols(ny);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      if (!d[x][y].is_zero()) cols[y].emplace_back(x, d[x][y]);
  std::vector<std::vector<Surd>> b(nx, std::vector<Surd>(nx));
  const Surd two = Surd::rational(2);
  for (const auto& col : cols)
    for (const auto& [x, s] : col)
      for (const auto& [x2, t] : col) accumulate(b[x][x2], two * s * t);
  for (std::size_t x = 0; x < nx; ++x) accumulate(b[x][x], Surd::rational(-1));
  return b;
}

RationalMatrix TwoReflectionWalk::rational_similar() const {
  const auto b = exact_projected();
  const std::size_t n = b.size();
  // s_i = sqrt(sigma_i); need s_i B_ij / s_j rational.
  std::vector<std::uint64_t> sigma(n, 0);
  auto propagate = [](std::uint64_t si, std::uint64_t r) {
    const std::uint64_t g = std::gcd(si, r);
    return (si / g) * (r / g);
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (sigma[root] != 0) continue;
    sigma[root] = 1;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (b[i][j].is_zero() || sigma[j] != 0) continue;
        sigma[j] = propagate(sigma[i], b[i][j].radicand);
        q.push(j);
      }
    }
  }
  RationalMatrix r(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b[i][j].is_zero()) continue;
      if (propagate(sigma[i], b[i][j].radicand) != sigma[j]) {
        throw UnsupportedError("projected matrix is not diagonally similar to a rational matrix");
      }
      const std::uint64_t g = std::gcd(sigma[i], b[i][j].radicand);
      r[i][j] = b[i][j].coef * Rational(static_cast<unsigned long>(g));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

TwoReflectionWalk from_exact(const ExactFrame& n, const ExactFrame& m, WalkKind kind) {
  return TwoReflectionWalk(n.to_dense(), m.to_dense(), kind, n, m);
}

ExactFrame arc_vertex_frame(const MultiGraph& g, const ArcSpace& arcs) {
  ExactFrame n;
  n.rows = arcs.size();
  n.cols = g.vertex_count();
  for (ArcId a = 0; a < arcs.size(); ++a) {
    const Vertex t = arcs.arcs[a].tail;
    n.entries.push_back({a, t, Surd::sqrt_of(Rational(1, g.degree(t)))});
  }
  return n;
}

void require_no_isolated(const MultiGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) {
      throw PreconditionError("vertex " + std::to_string(v) +
                              " is isolated; the arc-vertex frame is undefined");
    }
  }
}

}  // namespace

TwoReflectionWalk arc_reversal_walk(const MultiGraph& g) {
  require_no_isolated(g);
  const ArcSpace arcs = build_arc_space(g);
  ExactFrame m;
  m.rows = arcs.size();
  m.cols = g.edge_count();
  const Surd half = Surd::sqrt_of(Rational(1, 2));
  for (ArcId a = 0; a < arcs.size(); ++a) m.entries.push_back({a, arcs.arcs[a].edge_instance, half});
  return from_exact(arc_vertex_frame(g, arcs), m, WalkKind::ArcReversal);
}

TwoReflectionWalk vertex_face_walk(const RotationMap& map) {
  const MultiGraph& g = map.graph();
  require_no_isolated(g);
  if (map.faces().empty()) throw PreconditionError("map has no traced faces");
  const ArcSpace& arcs = map.arcs();
  ExactFrame m;
  m.rows = arcs.size();
  m.cols = map.faces().size();
  for (ArcId a = 0; a < arcs.size(); ++a) {
    const std::size_t f = map.face_of_arc()[a];
    m.entries.push_back({a, f, Surd::sqrt_of(Rational(1, map.faces()[f].degree()))});
  }
  return from_exact(arc_vertex_frame(g, arcs), m, WalkKind::VertexFace);
}

namespace {

template <typename T>
void check_stochastic(const std::vector<std::vector<T>>& dists, std::size_t len,
                      const char* name) {
  for (std::size_t i = 0; i < dists.size(); ++i) {
    if (dists[i].size() != len) {
      throw ParameterError(std::string(name) + "[" + std::to_string(i) + "] has length " +
                           std::to_string(dists[i].size()) + ", expected " +
                           std::to_string(len));
    }
    T sum = 0;
    for (const auto& x : dists[i]) {
      if (x < 0) throw ParameterError(std::string(name) + " has a negative entry");
      sum += x;
    }
    bool ok;
    if constexpr (std::is_same_v<T, double>) {
      ok = std::fabs(sum - 1.0) <= 1e-12;
    } else {
      ok = (sum == 1);
    }
    if (!ok) throw ParameterError(std::string(name) + "[" + std::to_string(i) +
                                  "] does not sum to 1");
  }
}

}  // namespace

TwoReflectionWalk szegedy_walk(const std::vector<std::vector<Rational>>& p,
                               const std::vector<std::vector<Rational>>& q) {
  const std::size_t ny = p.size(), nx = q.size();
  if (nx == 0 || ny == 0) throw ParameterError("szegedy walk needs nonempty X and Y");
  check_stochastic(p, nx, "p");
  check_stochastic(q, ny, "q");
  ExactFrame n, m;
  n.rows = m.rows = nx * ny;
  n.cols = nx;
  m.cols = ny;
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      const std::size_t a = x * ny + y;
      if (sgn(q[x][y]) > 0) n.entries.push_back({a, x, Surd::sqrt_of(q[x][y])});
      if (sgn(p[y][x]) > 0) m.entries.push_back({a, y, Surd::sqrt_of(p[y][x])});
    }
  }
  return from_exact(n, m, WalkKind::Szegedy);
}

TwoReflectionWalk szegedy_walk(const std::vector<std::vector<double>>& p,
                               const std::vector<std::vector<double>>& q) {
  const std::size_t ny = p.size(), nx = q.size();
  if (nx == 0 || ny == 0) throw ParameterError("szegedy walk needs nonempty X and Y");
  check_stochastic(p, nx, "p");
  check_stochastic(q, ny, "q");
  Eigen::MatrixXd n = Eigen::MatrixXd::Zero(nx * ny, nx);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(nx * ny, ny);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      n(x * ny + y, x) = std::sqrt(q[x][y]);
      m(x * ny + y, y) = std::sqrt(p[y][x]);
    }
  }
  auto en = exact_frame_from_dense(n, 1000000);
  auto em = exact_frame_from_dense(m, 1000000);
  return TwoReflectionWalk(n, m, WalkKind::Szegedy, en, em);
}

TwoReflectionWalk generic_walk(const Eigen::MatrixXd& n_frame,
                               const Eigen::MatrixXd& m_frame) {
  auto en = exact_frame_from_dense(n_frame);
  auto em = exact_frame_from_dense(m_frame);
  if (!en || !em) {
    en.reset();
    em.reset();
  }
  return TwoReflectionWalk(n_frame, m_frame, WalkKind::Generic, en, em);
}

TwoReflectionWalk generic_walk(const ExactFrame& n_frame, const ExactFrame& m_frame) {
  return from_exact(n_frame, m_frame, WalkKind::Generic);
}

TwoReflectionWalk signed_c4_walk() {
  const Surd h = Surd::sqrt_of(Rational(1, 2));
  ExactFrame n, m;
  n.rows = m.rows = 8;
  n.cols = m.cols = 4;
  for (std::size_t a = 0; a < 8; ++a) n.entries.push_back({a, a / 2, h});
  // (row, column, sign)
  const int layout[8][2] = {{0, 1}, {3, 1}, {1, 1}, {0, -1}, {2, 1}, {1, 1}, {3, 1}, {2, 1}};
  for (std::size_t a = 0; a < 8; ++a) {
    m.entries.push_back({a, static_cast<std::size_t>(layout[a][0]), layout[a][1] > 0 ? h : -h});
  }
  return generic_walk(n, m);
}

// ---------------------------------------------------------------------------
// Evolution

Eigen::VectorXd evolve(const TwoReflectionWalk& w, const Eigen::VectorXd& phi0,
                       std::size_t t) {
  if (static_cast<std::size_t>(phi0.size()) != w.state_dim()) {
    throw ParameterError("state vector length does not match the arc space");
  }
  Eigen::VectorXd phi = phi0;
  for (std::size_t s = 0; s < t; ++s) phi = w.apply(phi);
  return phi;
}

Eigen::MatrixXd bt(const TwoReflectionWalk& w, std::size_t t) {
  const auto n = static_cast<Eigen::Index>(w.dim());
  Eigen::MatrixXd prev = Eigen::MatrixXd::Identity(n, n);
  if (t == 0) return prev;
  const Eigen::MatrixXd& b = w.projected();
  Eigen::MatrixXd cur = b;
  for (std::size_t s = 1; s < t; ++s) {
    Eigen::MatrixXd next = 2.0 * b * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Eigen::MatrixXd bt_column_series(const TwoReflectionWalk& w, std::size_t v,
                                 std::size_t t_max) {
  const auto n = static_cast<Eigen::Index>(w.dim());
  if (v >= w.dim()) throw ParameterError("vertex index out of range");
  Eigen::MatrixXd out(n, static_cast<Eigen::Index>(t_max + 1));
  out.col(0) = Eigen::VectorXd::Unit(n, static_cast<Eigen::Index>(v));
  if (t_max >= 1) out.col(1) = w.projected().col(static_cast<Eigen::Index>(v));
  for (std::size_t s = 2; s <= t_max; ++s) {
    const auto k = static_cast<Eigen::Index>(s);
    out.col(k) = 2.0 * w.projected() * out.col(k - 1) - out.col(k - 2);
  }
  return out;
}

Eigen::MatrixXd bt_oracle(const TwoReflectionWalk& w, std::size_t t) {
  Eigen::MatrixXd x = w.n_frame();
  for (std::size_t s = 0; s < t; ++s) x = w.apply(x);
  return w.n_frame().transpose() * x;
}

double fidelity_gap(const TwoReflectionWalk& w, std::size_t u, std::size_t v,
                    std::size_t t, int gamma) {
  if (u >= w.dim() || v >= w.dim()) throw ParameterError("vertex index out of range");
  if (gamma != 1 && gamma != -1) throw ParameterError("gamma must be +1 or -1");
  const Eigen::MatrixXd series = bt_column_series(w, u, t);
  return 2.0 - 2.0 * gamma * series(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(t));
}

}  // namespace qwalk
