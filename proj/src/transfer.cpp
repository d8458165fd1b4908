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

#include "qwalk/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qwalk/error.hpp"

namespace qwalk {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::PerfectST: return "PerfectST";
    case VerdictKind::PeakST: return "PeakST";
    case VerdictKind::Periodic: return "Periodic";
    case VerdictKind::ZeroST: return "ZeroST";
    case VerdictKind::NoPeak: return "NoPeak";
  }
  return "NoPeak";
}

std::string to_string(NoPeakReason r) {
  switch (r) {
    case NoPeakReason::None: return "none";
    case NoPeakReason::Unrecognized: return "unrecognized up to q_max";
    case NoPeakReason::CertifiedNonCosine: return "certified rational non-cosine";
    case NoPeakReason::Parity: return "parity condition fails";
  }
  return "none";
}

std::string to_string(EvidenceGrade g) {
  return g == EvidenceGrade::Exact ? "Exact" : "NumericOnly";
}

std::uint64_t DecideOptions::effective_q_max(std::size_t dim) const {
  if (q_max != 0) return q_max;
  return std::max<std::uint64_t>(64, 2 * static_cast<std::uint64_t>(dim));
}

std::vector<std::size_t> MutualSupport::all() const {
  std::vector<std::size_t> out(plus);
  out.insert(out.end(), minus.begin(), minus.end());
  std::sort(out.begin(), out.end());
  return out;
}

double MutualSupport::bound() const {
  double s = 0;
  for (std::size_t i : all()) s += std::fabs(entries[i]);
  return s;
}

MutualSupport mutual_support(const SpectralData& s, std::size_t u, std::size_t v,
                             double support_tol) {
  if (u >= s.dim() || v >= s.dim()) throw ParameterError("vertex index out of range");
  MutualSupport ms;
  ms.u = u;
  ms.v = v;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double e = s.idempotents[i](static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v));
    ms.entries.push_back(e);
    if (e > support_tol) ms.plus.push_back(i);
    if (e < -support_tol) ms.minus.push_back(i);
    if (std::fabs(e) > support_tol && std::fabs(e) < 1e3 * support_tol) {
      ms.borderline.push_back(i);
    }
  }
  return ms;
}

bool strong_cospectral(const SpectralData& s, std::size_t u, std::size_t v, double tol) {
  if (u >= s.dim() || v >= s.dim()) throw ParameterError("vertex index out of range");
  const auto iu = static_cast<Eigen::Index>(u), iv = static_cast<Eigen::Index>(v);
  for (const auto& e : s.idempotents) {
    const double minus = (e.col(iu) - e.col(iv)).cwiseAbs().maxCoeff();
    const double plus = (e.col(iu) + e.col(iv)).cwiseAbs().maxCoeff();
    if (minus > tol && plus > tol) return false;
  }
  return true;
}

Eigen::MatrixXd peak_bound_matrix(const SpectralData& s) {
  const auto n = static_cast<Eigen::Index>(s.dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : s.idempotents) m += e.cwiseAbs();
  return m;
}

namespace {

struct Recognition {
  std::vector<ThetaCertificate> certs;
  bool all_recognized = true;
  bool certified_failure = false;
  bool all_exact = true;
  BigInt lcm_q = 1;
};

Recognition recognize_support(const SpectralData& s, const std::vector<std::size_t>& idx,
                              const std::vector<std::size_t>& plus, std::uint64_t q_max,
                              double tol) {
  Recognition r;
  const QPolynomial* ctx = s.charpoly ? &*s.charpoly : nullptr;
  for (std::size_t i : idx) {
    ThetaCertificate c;
    c.theta = s.eigenvalues[i];
    c.in_plus = std::binary_search(plus.begin(), plus.end(), i);
    if (auto cert = recognize(c.theta, q_max, tol, ctx)) {
      c.pq = cert->pq;
      c.evidence = cert->evidence;
      mpz_lcm_ui(r.lcm_q.get_mpz_t(), r.lcm_q.get_mpz_t(),
                 static_cast<unsigned long>(cert->pq.q));
      if (c.evidence != Evidence::Exact) r.all_exact = false;
    } else {
      r.all_recognized = false;
      r.all_exact = false;
      if (ctx) {
        if (auto rv = certify_rational_non_cosine(c.theta, *ctx)) {
          c.rational_value = rv;
          c.evidence = Evidence::Exact;
          r.certified_failure = true;
        }
      }
    }
    r.certs.push_back(c);
  }
  return r;
}

// tau * p / q, an integer because q | tau.
BigInt scaled_numerator(const BigInt& tau, const RationalCosine& pq) {
  BigInt out = tau / static_cast<unsigned long>(pq.q);
  out *= static_cast<long>(pq.p);
  return out;
}

bool fits_time(const BigInt& t, std::uint64_t limit) {
  return t.fits_ulong_p() && t.get_ui() <= limit;
}

}  // namespace

TransferVerdict decide_pair(const SpectralData& s, std::size_t u, std::size_t v,
                            const DecideOptions& opts) {
  if (u == v) throw PreconditionError("decide_pair needs distinct vertices");
  TransferVerdict out;
  out.u = u;
  out.v = v;
  out.q_max = opts.effective_q_max(s.dim());
  const MutualSupport ms = mutual_support(s, u, v, opts.support_tol);
  out.amount = ms.bound();
  if (!ms.borderline.empty()) {
    out.notes.push_back("support entries within 1e3*support_tol; grade lowered");
  }
  const auto* w = opts.oracle_walk;

  if (ms.empty()) {
    out.kind = VerdictKind::ZeroST;
    out.tau = 0;
    out.grade = ms.borderline.empty() ? EvidenceGrade::Exact : EvidenceGrade::NumericOnly;
    if (w) {
      const std::size_t horizon = 2 * s.dim();
      const Eigen::MatrixXd series = bt_column_series(*w, u, horizon);
      const double worst = series.row(static_cast<Eigen::Index>(v)).cwiseAbs().maxCoeff();
      out.oracle = {true, worst < 1e-8, worst, "max_t<=2dim |B_t(u,v)|"};
    }
    return out;
  }

  Recognition rec = recognize_support(s, ms.all(), ms.plus, out.q_max, opts.tol);
  out.certificates = rec.certs;
  auto bound_oracle = [&]() {
    if (!w) return;
    const std::size_t horizon = 4 * s.dim();
    const Eigen::MatrixXd series = bt_column_series(*w, u, horizon);
    const double worst = series.row(static_cast<Eigen::Index>(v)).cwiseAbs().maxCoeff();
    out.oracle = {true, worst <= out.amount + 1e-7, worst, "max_t<=4dim |B_t(u,v)| <= bound"};
  };
  if (!rec.all_recognized) {
    out.kind = VerdictKind::NoPeak;
    out.reason = rec.certified_failure ? NoPeakReason::CertifiedNonCosine
                                       : NoPeakReason::Unrecognized;
    out.grade = rec.certified_failure ? EvidenceGrade::Exact : EvidenceGrade::NumericOnly;
    bound_oracle();
    return out;
  }

  std::vector<int> gammas;
  switch (opts.gamma) {
    case GammaPolicy::Auto: gammas = {1, -1}; break;
    case GammaPolicy::Plus: gammas = {1}; break;
    case GammaPolicy::Minus: gammas = {-1}; break;
  }
  const BigInt tau = rec.lcm_q;
  std::optional<int> found;
  for (int gamma : gammas) {
    bool ok = true;
    for (const auto& c : out.certificates) {
      const bool even = mpz_even_p(scaled_numerator(tau, *c.pq).get_mpz_t()) != 0;
      const bool in_gamma = (gamma == 1) ? c.in_plus : !c.in_plus;
      if (even != in_gamma) {
        ok = false;
        break;
      }
    }
    if (ok) {
      found = gamma;
      break;
    }
  }
  const bool exact = rec.all_exact && ms.borderline.empty();
  out.grade = exact ? EvidenceGrade::Exact : EvidenceGrade::NumericOnly;
  if (!found) {
    out.kind = VerdictKind::NoPeak;
    out.reason = NoPeakReason::Parity;
    bound_oracle();
    return out;
  }
  if (s.kind == WalkKind::ArcReversal && s.connected && opts.gamma == GammaPolicy::Auto &&
      *found != 1) {
    throw std::logic_error("arc-reversal walk on a connected graph produced gamma = -1");
  }
  out.gamma = *found;
  out.tau = tau;
  out.kind = strong_cospectral(s, u, v, opts.cospectral_tol) ? VerdictKind::PerfectST
                                                             : VerdictKind::PeakST;
  if (w) {
    if (fits_time(2 * tau, opts.oracle_max_time)) {
      const std::size_t t = tau.get_ui();
      const Eigen::MatrixXd series = bt_column_series(*w, u, 2 * t);
      const double at_tau = series(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(t));
      const double at_2tau =
          series(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(2 * t));
      bool passed = std::fabs(out.gamma * at_tau - out.amount) <= 1e-7;
      if (!ms.minus.empty()) passed = passed && std::fabs(at_2tau) < out.amount - 1e-9;
      std::string detail = "B_tau(u,v) vs amount";
      if (opts.oracle_unitary) {
        const double via_u = bt_oracle(*w, t)(static_cast<Eigen::Index>(u),
                                              static_cast<Eigen::Index>(v));
        passed = passed && std::fabs(via_u - at_tau) <= 1e-8;
        detail += "; N^T U^tau N agrees";
      }
      out.oracle = {true, passed, at_tau, detail};
    } else {
      out.notes.push_back("oracle skipped: tau exceeds oracle_max_time");
    }
  }
  return out;
}

TransferVerdict decide_periodicity(const SpectralData& s, std::size_t u,
                                   const DecideOptions& opts) {
  TransferVerdict out;
  out.u = out.v = u;
  out.q_max = opts.effective_q_max(s.dim());
  const MutualSupport ms = mutual_support(s, u, u, opts.support_tol);
  out.amount = ms.bound();
  if (!ms.minus.empty()) throw Error("negative diagonal idempotent entry");
  Recognition rec = recognize_support(s, ms.plus, ms.plus, out.q_max, opts.tol);
  out.certificates = rec.certs;
  if (!rec.all_recognized) {
    out.kind = VerdictKind::NoPeak;
    out.reason = rec.certified_failure ? NoPeakReason::CertifiedNonCosine
                                       : NoPeakReason::Unrecognized;
    out.grade = rec.certified_failure ? EvidenceGrade::Exact : EvidenceGrade::NumericOnly;
    return out;
  }
  const BigInt tau = rec.lcm_q;
  bool any_even = false, any_odd = false;
  BigInt lcm_s = 1;  // theta = cos(2 r pi / s) form
  for (const auto& c : out.certificates) {
    if (mpz_even_p(scaled_numerator(tau, *c.pq).get_mpz_t())) {
      any_even = true;
    } else {
      any_odd = true;
    }
    const long sden = c.pq->p % 2 == 0 ? c.pq->q : 2 * c.pq->q;
    mpz_lcm_ui(lcm_s.get_mpz_t(), lcm_s.get_mpz_t(), static_cast<unsigned long>(sden));
  }
  out.kind = VerdictKind::Periodic;
  if (any_even && any_odd) {
    out.tau = 2 * tau;
    out.gamma = 1;
  } else {
    out.tau = tau;
    out.gamma = any_odd ? -1 : 1;
  }
  out.grade = (rec.all_exact && ms.borderline.empty()) ? EvidenceGrade::Exact
                                                        : EvidenceGrade::NumericOnly;
  if (s.kind == WalkKind::ArcReversal || s.kind == WalkKind::VertexFace) {
    if (out.gamma != 1 || out.tau != lcm_s) {
      out.notes.push_back("period differs from the lcm of s(theta) expected for this walk kind");
    }
  }
  if (const auto* w = opts.oracle_walk) {
    if (fits_time(out.tau, opts.oracle_max_time)) {
      const std::size_t period = out.tau.get_ui();
      const Eigen::MatrixXd series = bt_column_series(*w, u, period);
      const auto iu = static_cast<Eigen::Index>(u);
      const double at = series(iu, static_cast<Eigen::Index>(period));
      bool passed = std::fabs(out.gamma * at - 1.0) <= 1e-7;
      for (std::size_t t = 1; t < period; ++t) {
        if (std::fabs(series(iu, static_cast<Eigen::Index>(t))) >= 1.0 - 1e-7) passed = false;
      }
      out.oracle = {true, passed, at, "B_period(u,u) = gamma, |B_t(u,u)| < 1 before"};
    } else {
      out.notes.push_back("oracle skipped: period exceeds oracle_max_time");
    }
  }
  return out;
}

}  // namespace qwalk
