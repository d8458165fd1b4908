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

// Parameter-level analyzers (strongly regular graphs, block designs,
// blow-ups) and the (4,n)-grid peak catalogue, each with a concrete
// cross-check through decide_pair.

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/error.hpp"
#include "qwalk/transfer.hpp"

namespace qwalk {

std::string to_string(SrgBranch b) {
  switch (b) {
    case SrgBranch::Disconnected: return "disconnected";
    case SrgBranch::CompleteMultipartite: return "complete multipartite";
    case SrgBranch::PrimitiveNonConference: return "primitive";
    case SrgBranch::PrimitiveConference: return "primitive conference";
  }
  return "primitive";
}

namespace {

bool is_peak(VerdictKind k) { return k == VerdictKind::PeakST || k == VerdictKind::PerfectST; }

// Rational cosine value -> (p, q); only called on values in {0, +-1/2, +-1}.
RationalCosine angle_of(const Rational& x) {
  if (x == 1) return {0, 1};
  if (x == Rational(1, 2)) return {1, 3};
  if (x == 0) return {1, 2};
  if (x == Rational(-1, 2)) return {2, 3};
  return {1, 1};
}

// Parity test for a pair whose support is given as (eigenvalue, sign of E).
bool parity_peak(const std::vector<std::pair<Rational, int>>& support) {
  BigInt tau = 1;
  for (const auto& [x, sign] : support) {
    mpz_lcm_ui(tau.get_mpz_t(), tau.get_mpz_t(), static_cast<unsigned long>(angle_of(x).q));
  }
  for (int gamma : {1, -1}) {
    bool ok = true;
    for (const auto& [x, sign] : support) {
      const RationalCosine a = angle_of(x);
      BigInt t = tau / static_cast<unsigned long>(a.q) * static_cast<long>(a.p);
      const bool even = mpz_even_p(t.get_mpz_t()) != 0;
      if (even != (sign == gamma)) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

std::string fmt(const char* label, const std::string& value) {
  return std::string(label) + value;
}

}  // namespace

SrgVerdict srg_analyze(const SrgParams& p) {
  const std::int64_t n = p.n, k = p.k, a = p.a, c = p.c;
  if (n < 2 || k < 1 || k >= n || a < 0 || c < 0 || a >= k || c > k) {
    throw ParameterError("srg parameters out of range");
  }
  SrgVerdict out;
  out.params = p;
  auto& why = out.reasoning;

  if (k == n - 1) {
    if (a != n - 2) throw ParameterError("infeasible srg parameters: K_n needs a = n-2");
    out.branch = SrgBranch::CompleteMultipartite;
    out.peak = n == 2;
    why.push_back("complete graph K_" + std::to_string(n) + " (parts of size 1)");
    why.push_back(out.peak ? "K_2: perfect state transfer at time 1"
                           : "complete graphs other than K_2 admit no peak state transfer");
    return out;
  }
  if (k * (k - a - 1) != (n - k - 1) * c) {
    throw ParameterError("infeasible srg parameters: k(k-a-1) != (n-k-1)c");
  }
  if (c == 0) {
    if (a != k - 1 || n % (k + 1) != 0) throw ParameterError("infeasible srg parameters");
    out.branch = SrgBranch::Disconnected;
    out.peak = k == 1;
    why.push_back("c = 0: disjoint union of " + std::to_string(n / (k + 1)) + " copies of K_" +
                  std::to_string(k + 1));
    why.push_back("zero transfer between components; inside a component peak iff K_2");
    return out;
  }
  if (n - 2 * k + a == 0) {
    const std::int64_t s = n - k;
    if (n % s != 0) throw ParameterError("infeasible srg parameters");
    const std::int64_t r = n / s;
    out.branch = SrgBranch::CompleteMultipartite;
    out.peak = r == 2 || r == 3;
    why.push_back("complement disconnected: complete multipartite with " + std::to_string(r) +
                  " parts of size " + std::to_string(s));
    why.push_back(out.peak ? "blow-up of K_2 or K_3: peak state transfer"
                           : "blow-up of K_r with r > 3: no periodicity, no peak");
    return out;
  }

  // Primitive.
  out.branch = SrgBranch::PrimitiveNonConference;
  const std::int64_t delta = (a - c) * (a - c) + 4 * (k - c);
  const double sq = std::sqrt(static_cast<double>(delta));
  out.theta = ((a - c) + sq) / 2;
  out.tau = ((a - c) - sq) / 2;
  const std::int64_t numer = 2 * k + (n - 1) * (a - c);
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), BigInt(static_cast<long>(delta)).get_mpz_t());
  Rational m_theta, m_tau;
  if (root * root == delta) {
    const Rational shift = fraction(static_cast<long>(numer), root);
    m_theta = (Rational(n - 1) - shift) / 2;
    m_tau = (Rational(n - 1) + shift) / 2;
  } else if (numer == 0) {
    m_theta = m_tau = fraction(n - 1, 2);
  } else {
    throw ParameterError("infeasible srg parameters: irrational multiplicities");
  }
  if (m_theta.get_den() != 1 || m_tau.get_den() != 1 || sgn(m_theta) <= 0 || sgn(m_tau) <= 0) {
    throw ParameterError("infeasible srg parameters: multiplicities " + to_string(m_theta) +
                         ", " + to_string(m_tau));
  }
  out.m_theta = to_string(m_theta);
  out.m_tau = to_string(m_tau);
  std::ostringstream ev;
  ev << "eigenvalues k=" << k << ", theta=" << out.theta << " (x" << out.m_theta
     << "), tau=" << out.tau << " (x" << out.m_tau << ")";
  why.push_back(ev.str());
  why.push_back("all idempotent entries nonzero: support {1, theta/k, tau/k} for every pair");

  if (m_theta == m_tau) {
    out.branch = SrgBranch::PrimitiveConference;
    why.push_back("conference graph: need cos(alpha) + gamma cos(beta) = 2/(n-1)");
    const Rational target = fraction(2, n - 1);
    const AngleDomain da{Rational(0), Rational(1, 2), false, true};
    const AngleDomain db{Rational(0), Rational(1, 2), true, false};
    bool any = false;
    for (int gamma : {1, -1}) {
      for (const auto& sol : solve_two_cosine_equation(Rational(1), Rational(gamma),
                                                       target, da, db)) {
        any = true;
        why.push_back("solution gamma=" + std::to_string(gamma) + ": alpha=" +
                      to_string(sol.alpha) + " pi, beta=" + to_string(sol.beta) + " pi");
      }
    }
    if (any) {
      why.push_back("solutions only possible for n in {3,5}; the primitive srg on 5 vertices "
                    "is C_5, which has no peak");
    } else {
      why.push_back("no rational-angle solutions: no peak");
    }
    out.peak = false;
    return out;
  }

  // Integral eigenvalues: theta/k and tau/k are rational.
  const Rational th_c = fraction(static_cast<long>(std::llround(out.theta)), static_cast<long>(k));
  const Rational ta_c = fraction(static_cast<long>(std::llround(out.tau)), static_cast<long>(k));
  const bool th_ok = is_rational_cosine_value(th_c), ta_ok = is_rational_cosine_value(ta_c);
  if (!th_ok || !ta_ok) {
    why.push_back(fmt("theta/k = ", to_string(th_c)) + ", tau/k = " + to_string(ta_c) +
                  ": not both in {0, +-1/2, +-1}; no peak");
    out.peak = false;
    return out;
  }
  // Parity guard on the idempotent signs for adjacent and non-adjacent pairs.
  const Rational T = th_c * k, U = ta_c * k;  // theta, tau as rationals
  const Rational gap = T - U;
  const Rational q_theta1 = (Rational(n - k) + U) / gap, q_theta2 = (U - k) / gap;
  const Rational q_tau1 = (Rational(k - n) - T) / gap, q_tau2 = (Rational(k) - T) / gap;
  bool peak = false;
  for (const auto& [e_th, e_ta] : {std::pair{q_theta1, q_tau1}, std::pair{q_theta2, q_tau2}}) {
    std::vector<std::pair<Rational, int>> support{{Rational(1), 1}};
    if (sgn(e_th) != 0) support.push_back({th_c, sgn(e_th)});
    if (sgn(e_ta) != 0) support.push_back({ta_c, sgn(e_ta)});
    peak = peak || parity_peak(support);
  }
  why.push_back(peak ? "rational cosines pass the parity test"
                     : "rational cosines but the parity test fails; no peak");
  out.peak = peak;
  return out;
}

std::optional<SrgParams> srg_parameters_of(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || !g.is_simple()) return std::nullopt;
  const std::size_t k = g.degree(0);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  if (k == 0) return std::nullopt;
  const Eigen::MatrixXd adj = g.adjacency();
  const Eigen::MatrixXd common = adj * adj;
  std::optional<long> a, c;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto iu = static_cast<Eigen::Index>(u), iv = static_cast<Eigen::Index>(v);
      const long x = std::lround(common(iu, iv));
      auto& slot = adj(iu, iv) > 0.5 ? a : c;
      if (slot && *slot != x) return std::nullopt;
      slot = x;
    }
  }
  return SrgParams{static_cast<std::int64_t>(n), static_cast<std::int64_t>(k), a.value_or(0),
                   c.value_or(0)};
}

SrgCrossCheck srg_cross_check(const SrgParams& p, const MultiGraph& g,
                              const DecideOptions& opts) {
  const auto actual = srg_parameters_of(g);
  if (!actual || actual->n != p.n || actual->k != p.k || actual->a != p.a ||
      (p.k != p.n - 1 && actual->c != p.c)) {
    throw ParameterError("graph is not strongly regular with the given parameters");
  }
  SrgCrossCheck out;
  out.verdict = srg_analyze(p);
  const TwoReflectionWalk w = arc_reversal_walk(g);
  const SpectralData s = analyze_spectrum(w);
  DecideOptions o = opts;
  o.oracle_walk = &w;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      TransferVerdict t = decide_pair(s, u, v, o);
      if (is_peak(t.kind)) {
        out.concrete_peak = true;
        out.peaks.push_back(std::move(t));
      }
    }
  }
  out.agrees = out.concrete_peak == out.verdict.peak;
  return out;
}

// --- designs --------------------------------------------------------------

DesignVerdict design_analyze(const DesignParams& params, const std::vector<Block>* blocks,
                             const DecideOptions& opts) {
  const auto& [v, b, r, k, lambda] = params;
  if (!(k > 1 && k < v)) throw ParameterError("design needs 1 < k < v");
  if (lambda == 0 || v * r != b * k || r * (k - 1) != lambda * (v - 1) || r <= lambda) {
    throw ParameterError("invalid design parameters");
  }
  DesignVerdict out;
  out.params = params;
  out.ratio = fraction(static_cast<long>(r - lambda), static_cast<long>(r * k));
  const std::vector<Rational> allowed{Rational(0), Rational(1, 4), Rational(1, 2),
                                      Rational(3, 4), Rational(1)};
  const bool member = std::find(allowed.begin(), allowed.end(), out.ratio) != allowed.end();
  out.peak_from_point = out.ratio == Rational(1, 4);
  out.reasoning.push_back("(r-lambda)/(rk) = " + to_string(out.ratio) +
                          (member ? " is in {0,1/4,1/2,3/4,1}" : " is not in {0,1/4,1/2,3/4,1}"));
  if (member && !out.peak_from_point) {
    out.reasoning.push_back("only 1/4 fits 0 < (r-lambda)/(rk) < 1/k <= 1/2");
  }
  out.reasoning.push_back(out.peak_from_point
                              ? "eigenvalues of B are 0, +-1/2, +-1: peak from a point at time 3"
                              : "sqrt((r-lambda)/(rk)) is not a rational cosine: no peak from a point");
  if (!blocks) return out;

  if (validate_design(v, *blocks) != params) {
    throw ParameterError("blocks do not realise the given design parameters");
  }
  out.concrete = true;
  const MultiGraph g = generate(family::DesignIncidence{v, *blocks});
  const TwoReflectionWalk w = arc_reversal_walk(g);
  const SpectralData s = analyze_spectrum(w);
  DecideOptions o = opts;
  o.oracle_walk = &w;
  for (std::size_t y = 1; y < g.vertex_count(); ++y) {
    TransferVerdict t = decide_pair(s, 0, y, o);
    if (is_peak(t.kind)) {
      out.peak_targets.push_back(y);
      const std::int64_t time = t.tau.get_si();
      if (!out.peak_time || *out.peak_time > time) out.peak_time = time;
    }
    out.point_verdicts.push_back(std::move(t));
  }

  // Closed-form idempotents of A (hence of B) checked entrywise.
  const auto V = static_cast<Eigen::Index>(v), Bn = static_cast<Eigen::Index>(b);
  Eigen::MatrixXd N = Eigen::MatrixXd::Zero(V, Bn);
  for (std::size_t j = 0; j < b; ++j) {
    for (std::size_t x : (*blocks)[j]) N(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(j)) = 1;
  }
  const double dr = static_cast<double>(r), dk = static_cast<double>(k),
               dl = static_cast<double>(lambda), dv = static_cast<double>(v),
               db = static_cast<double>(b);
  const Eigen::MatrixXd Jv = Eigen::MatrixXd::Ones(V, V), Jb = Eigen::MatrixXd::Ones(Bn, Bn),
                        Jvb = Eigen::MatrixXd::Ones(V, Bn);
  const Eigen::MatrixXd NtN = N.transpose() * N;
  const double srk = std::sqrt(dr * dk), srl = std::sqrt(dr - dl);
  std::vector<std::pair<double, Eigen::MatrixXd>> formulas;
  for (int sign : {1, -1}) {
    Eigen::MatrixXd e(V + Bn, V + Bn);
    e << Jv / dv, sign * dk / (dv * srk) * Jvb, sign * dk / (dv * srk) * Jvb.transpose(), Jb / db;
    formulas.emplace_back(sign * 1.0, 0.5 * e);
    Eigen::MatrixXd f(V + Bn, V + Bn);
    const Eigen::MatrixXd off = sign / srl * (N - dk / dv * Jvb);
    f << Eigen::MatrixXd::Identity(V, V) - Jv / dv, off, off.transpose(),
        (NtN - dr * dk / db * Jb) / (dr - dl);
    formulas.emplace_back(sign * srl / srk, 0.5 * f);
  }
  if (v < b) {
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(V + Bn, V + Bn);
    z.bottomRightCorner(Bn, Bn) =
        Eigen::MatrixXd::Identity(Bn, Bn) - (NtN - dl * dv / db * Jb) / (dr - dl);
    formulas.emplace_back(0.0, z);
  }
  bool matched = formulas.size() == s.size();
  double err = 0;
  for (const auto& [mu, e] : formulas) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (std::fabs(s.eigenvalues[i] - mu) < std::fabs(s.eigenvalues[best] - mu)) best = i;
    }
    if (std::fabs(s.eigenvalues[best] - mu) > 1e-8) matched = false;
    err = std::max(err, (s.idempotents[best] - e).cwiseAbs().maxCoeff());
  }
  out.max_idempotent_error = err;
  out.idempotents_ok = matched && err <= 1e-9;
  std::ostringstream line;
  line << "concrete incidence graph: " << out.peak_targets.size()
       << " peak targets from point 0; closed-form idempotents "
       << (out.idempotents_ok ? "match" : "do not match") << " (max error " << err << ")";
  out.reasoning.push_back(line.str());
  return out;
}

// --- blow-ups -------------------------------------------------------------

BlowupPrediction blowup_predict(const SpectralData& base, std::size_t m,
                                const DecideOptions& opts) {
  if (m <= 1) throw ParameterError("blow-up needs m > 1");
  if (base.dim() < 2 || !base.connected) {
    throw PreconditionError("blow-up prediction needs a connected base with >= 2 vertices");
  }
  BlowupPrediction out;
  out.m = m;
  for (std::size_t u = 0; u < base.dim(); ++u) {
    BlowupVertexPrediction pred;
    pred.u = u;
    const TransferVerdict per = decide_periodicity(base, u, opts);
    if (per.kind != VerdictKind::Periodic) {
      pred.rule = "not periodic at u in the base: no periodicity, no mate peak";
      out.vertices.push_back(pred);
      continue;
    }
    const BigInt& tau = per.tau;
    pred.periodic = true;
    mpz_lcm_ui(pred.period.get_mpz_t(), tau.get_mpz_t(), 4);
    const bool four_divides = mpz_divisible_ui_p(tau.get_mpz_t(), 4) != 0;
    if (!four_divides) {
      pred.mate_peak = true;
      pred.rule = "(a) 4 does not divide tau";
    } else if (mpz_fdiv_ui(tau.get_mpz_t(), 8) == 4) {
      // theta = cos(2 r pi / s) with r/s = p/(2q).
      bool even = true;
      for (const auto& c : per.certificates) {
        if (std::fabs(c.theta) <= opts.support_tol) continue;
        const Rational x = fraction(tau * static_cast<long>(c.pq->p), 2 * c.pq->q);
        if (x.get_den() != 1 || mpz_odd_p(x.get_num_mpz_t())) even = false;
      }
      pred.mate_peak = even;
      pred.rule = even ? "(b) tau = 4 mod 8 and tau r/s even on the support"
                       : "tau = 4 mod 8 but tau r/s is odd for some theta";
    } else {
      pred.rule = "8 divides tau";
    }
    if (pred.mate_peak) pred.mate_time = pred.period / 2;
    out.vertices.push_back(pred);
  }
  for (std::size_t u = 0; u < base.dim(); ++u) {
    for (std::size_t v = u + 1; v < base.dim(); ++v) {
      const TransferVerdict t = decide_pair(base, u, v, opts);
      BlowupPairPrediction pp{u, v, t.kind, t.tau};
      // Amounts scale by 1/m, so perfect transfer becomes peak transfer.
      if (t.kind == VerdictKind::PerfectST) pp.kind = VerdictKind::PeakST;
      out.pairs.push_back(pp);
    }
  }
  return out;
}

// --- (4,n) grids ----------------------------------------------------------

std::vector<GridPeakCase> grid_peak_suite(std::size_t n, const DecideOptions& opts) {
  if (n < 1) throw ParameterError("grid_peak_suite needs n >= 1");
  std::vector<GridPeakCase> cases;
  auto add = [&](char rule, std::size_t j, std::int64_t time) {
    for (std::size_t i : {std::size_t{1}, std::size_t{3}}) {
      GridPeakCase c;
      c.rule = rule;
      c.target_i = i;
      c.target_j = j % n;
      c.expected_tau = time;
      cases.push_back(c);
    }
  };
  if (n % 2 == 1) {
    add('a', 0, static_cast<std::int64_t>(n));
  } else {
    add('b', n / 2, static_cast<std::int64_t>(n / 2));
    if (n % 4 == 0) {
      const std::size_t k = n / 4;
      add('c', k, static_cast<std::int64_t>(k));
      add('c', n - k, static_cast<std::int64_t>(k));
    }
  }
  const RotationMap map = toroidal_grid(4, n);
  const TwoReflectionWalk w = vertex_face_walk(map);
  const SpectralData s = analyze_spectrum(w);
  DecideOptions o = opts;
  o.oracle_walk = &w;
  for (auto& c : cases) {
    c.verdict = decide_pair(s, grid_vertex(n, c.source_i, c.source_j),
                            grid_vertex(n, c.target_i, c.target_j), o);
    c.agrees = is_peak(c.verdict.kind) && c.verdict.tau == c.expected_tau &&
               (!c.verdict.oracle.ran || c.verdict.oracle.passed);
  }
  return cases;
}

}  // namespace qwalk
