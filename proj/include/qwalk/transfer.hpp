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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/exact.hpp"
#include "qwalk/rational_cosine.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walks.hpp"

namespace qwalk {

struct MutualSupport {
  std::size_t u = 0, v = 0;
  std::vector<std::size_t> plus;   // indices into SpectralData::eigenvalues
  std::vector<std::size_t> minus;
  std::vector<double> entries;     // E_theta(u, v) for every theta
  std::vector<std::size_t> borderline;  // support entries within 1e3*tol

  bool empty() const { return plus.empty() && minus.empty(); }
  std::vector<std::size_t> all() const;  // plus and minus, ascending index
  double bound() const;                  // sum |E_theta(u, v)|
};

MutualSupport mutual_support(const SpectralData& s, std::size_t u, std::size_t v,
                             double support_tol = 1e-9);

bool strong_cospectral(const SpectralData& s, std::size_t u, std::size_t v,
                       double tol = 1e-8);

enum class VerdictKind { PerfectST, PeakST, Periodic, ZeroST, NoPeak };
std::string to_string(VerdictKind k);

// Why a NoPeak verdict was reached.
enum class NoPeakReason {
  None,
  Unrecognized,        // some theta not recognized up to q_max
  CertifiedNonCosine,  // some theta is a rational eigenvalue outside {0,+-1/2,+-1}
  Parity,              // all theta are rational cosines but the parity test fails
};
std::string to_string(NoPeakReason r);

enum class EvidenceGrade { Exact, NumericOnly };
std::string to_string(EvidenceGrade g);

enum class GammaPolicy { Auto, Plus, Minus };

struct DecideOptions {
  std::uint64_t q_max = 0;  // 0: max(64, 2 dim)
  double tol = 1e-9;        // recognition tolerance
  double support_tol = 1e-9;
  double cospectral_tol = 1e-8;
  GammaPolicy gamma = GammaPolicy::Auto;
  // Oracle cross-check with the Chebyshev recurrence on B; requires the walk
  // and is skipped for times above oracle_max_time.
  const TwoReflectionWalk* oracle_walk = nullptr;
  std::uint64_t oracle_max_time = 20000;
  // Additionally compare against N^T U^t N (dense evolution).
  bool oracle_unitary = false;

  std::uint64_t effective_q_max(std::size_t dim) const;
};

struct ThetaCertificate {
  double theta = 0;
  std::optional<RationalCosine> pq;
  Evidence evidence = Evidence::NumericOnly;
  std::optional<Rational> rational_value;  // set for certified non-cosines
  bool in_plus = true;                     // sign class within the support
};

struct OracleCheck {
  bool ran = false;
  bool passed = true;
  double value = 0;  // B_tau(u, v) (or B_period(u, u))
  std::string detail;
};

struct TransferVerdict {
  VerdictKind kind = VerdictKind::NoPeak;
  std::size_t u = 0, v = 0;
  BigInt tau = 0;  // first peak time or period; 0 when none
  int gamma = 1;
  double amount = 0;  // sum |E_theta(u, v)|
  std::vector<ThetaCertificate> certificates;
  EvidenceGrade grade = EvidenceGrade::NumericOnly;
  NoPeakReason reason = NoPeakReason::None;
  std::uint64_t q_max = 0;
  OracleCheck oracle;
  std::vector<std::string> notes;
};

TransferVerdict decide_pair(const SpectralData& s, std::size_t u, std::size_t v,
                            const DecideOptions& opts = {});
TransferVerdict decide_periodicity(const SpectralData& s, std::size_t u,
                                   const DecideOptions& opts = {});

// M(u, v) = sum_theta |E_theta(u, v)|.
Eigen::MatrixXd peak_bound_matrix(const SpectralData& s);

// ---------------------------------------------------------------------------
// Strongly regular graphs

struct SrgParams {
  std::int64_t n = 0, k = 0, a = 0, c = 0;
};

enum class SrgBranch { Disconnected, CompleteMultipartite, PrimitiveNonConference,
                       PrimitiveConference };
std::string to_string(SrgBranch b);

struct SrgVerdict {
  SrgParams params;
  SrgBranch branch = SrgBranch::PrimitiveNonConference;
  bool peak = false;
  double theta = 0, tau = 0;  // restricted eigenvalues of A
  std::string m_theta, m_tau;  // multiplicities (exact strings)
  std::vector<std::string> reasoning;
};

SrgVerdict srg_analyze(const SrgParams& p);

struct SrgCrossCheck {
  SrgVerdict verdict;
  bool concrete_peak = false;
  bool agrees = false;
  std::vector<TransferVerdict> peaks;  // concrete peak verdicts found
};

// Checks that `g` is strongly regular with parameters p, then runs
// decide_pair on all pairs of its arc-reversal walk.
SrgCrossCheck srg_cross_check(const SrgParams& p, const MultiGraph& g,
                              const DecideOptions& opts = {});
std::optional<SrgParams> srg_parameters_of(const MultiGraph& g);

// ---------------------------------------------------------------------------
// Designs

struct DesignVerdict {
  DesignParams params;
  Rational ratio;  // (r - lambda) / (rk)
  bool peak_from_point = false;
  std::vector<std::string> reasoning;
  // Filled when incidence is supplied.
  bool concrete = false;
  std::vector<TransferVerdict> point_verdicts;  // from point 0 to every other vertex
  std::vector<std::size_t> peak_targets;        // vertices with a peak from point 0
  std::optional<std::int64_t> peak_time;
  double max_idempotent_error = 0;
  bool idempotents_ok = false;
};

DesignVerdict design_analyze(const DesignParams& params,
                             const std::vector<Block>* blocks = nullptr,
                             const DecideOptions& opts = {});

// ---------------------------------------------------------------------------
// Blow-ups G[K_m-bar]

struct BlowupVertexPrediction {
  std::size_t u = 0;
  bool periodic = false;
  BigInt period = 0;        // lcm(tau, 4)
  bool mate_peak = false;   // (u,a) -> (u,b) peak
  BigInt mate_time = 0;     // period / 2
  std::string rule;
};

struct BlowupPairPrediction {
  std::size_t u = 0, v = 0;  // base vertices, u != v
  VerdictKind kind = VerdictKind::NoPeak;
  BigInt tau = 0;
};

struct BlowupPrediction {
  std::size_t m = 0;
  std::vector<BlowupVertexPrediction> vertices;
  std::vector<BlowupPairPrediction> pairs;
};

// Predicts verdicts on G[K_m-bar] from the arc-reversal spectrum of a
// connected base graph G with >= 2 vertices.
BlowupPrediction blowup_predict(const SpectralData& base, std::size_t m,
                                const DecideOptions& opts = {});

// ---------------------------------------------------------------------------
// (4, n) toroidal grids

struct GridPeakCase {
  char rule = 'a';  // 'a' odd n, 'b' n = 2m, 'c' n = 4k
  std::size_t source_i = 0, source_j = 0, target_i = 0, target_j = 0;
  std::int64_t expected_tau = 0;
  TransferVerdict verdict;
  bool agrees = false;
};

std::vector<GridPeakCase> grid_peak_suite(std::size_t n, const DecideOptions& opts = {});

}  // namespace qwalk
