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

#include "qwalk/rational_cosine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "qwalk/error.hpp"

namespace qwalk {

double RationalCosine::value() const {
  return std::cos(static_cast<double>(p) * M_PI / static_cast<double>(q));
}

std::string to_string(Evidence e) { return e == Evidence::Exact ? "Exact" : "NumericOnly"; }

double chebyshev_T(std::uint64_t t, double x) {
  if (t == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (std::uint64_t s = 1; s < t; ++s) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Rational chebyshev_T(std::uint64_t t, const Rational& x) {
  if (t == 0) return Rational(1);
  Rational prev = 1, cur = x;
  for (std::uint64_t s = 1; s < t; ++s) {
    Rational next = 2 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Minimal polynomials

namespace {

using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  IntPoly q(num.size() - dd, BigInt(0));
  for (std::size_t k = num.size(); k-- > dd;) {
    const BigInt f = num[k];
    q[k - dd] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= f * den[j];
  }
  trim(num);
  if (!num.empty()) throw Error("cyclotomic division left a remainder");
  return q;
}

std::mutex cyclo_mutex;
std::map<std::uint64_t, IntPoly> cyclo_cache;

}  // namespace

std::vector<BigInt> cyclotomic(std::uint64_t n) {
  if (n == 0) throw ParameterError("cyclotomic(0) is undefined");
  {
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    auto it = cyclo_cache.find(n);
    if (it != cyclo_cache.end()) return it->second;
  }
  // x^n - 1 = prod_{d | n} Phi_d
  IntPoly p(n + 1, BigInt(0));
  p[0] = -1;
  p[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, cyclotomic(d));
  }
  std::lock_guard<std::mutex> lock(cyclo_mutex);
  cyclo_cache.emplace(n, p);
  return p;
}

std::vector<BigInt> min_poly_2cos(std::int64_t p, std::int64_t q) {
  if (q <= 0 || p < 0) throw ParameterError("min_poly_2cos needs p >= 0, q > 0");
  if (std::gcd(p, q) != 1) {
    throw ParameterError("min_poly_2cos needs coprime p, q; got " + std::to_string(p) +
                         "/" + std::to_string(q));
  }
  // e^{i p pi / q} has order 2q for odd p and q for even p.
  const std::uint64_t n = static_cast<std::uint64_t>(p % 2 == 1 ? 2 * q : q);
  if (n == 1) return {BigInt(-2), BigInt(1)};  // 2cos 0 = 2
  if (n == 2) return {BigInt(2), BigInt(1)};   // 2cos pi = -2
  const IntPoly phi = cyclotomic(n);
  const std::size_t d = (phi.size() - 1) / 2;
  // x^{-d} Phi(x) = a_d + sum_j a_{d+j} (x^j + x^{-j}), and
  // x^j + x^{-j} = V_j(x + 1/x) with V_0 = 2, V_1 = y, V_{j+1} = y V_j - V_{j-1}.
  IntPoly psi(d + 1, BigInt(0));
  psi[0] = phi[d];
  IntPoly v_prev{BigInt(2)}, v_cur{BigInt(0), BigInt(1)};
  for (std::size_t j = 1; j <= d; ++j) {
    const BigInt& c = phi[d + j];
    for (std::size_t k = 0; k < v_cur.size(); ++k) psi[k] += c * v_cur[k];
    IntPoly v_next(v_cur.size() + 1, BigInt(0));
    for (std::size_t k = 0; k < v_cur.size(); ++k) v_next[k + 1] += v_cur[k];
    for (std::size_t k = 0; k < v_prev.size(); ++k) v_next[k] -= v_prev[k];
    v_prev = std::move(v_cur);
    v_cur = std::move(v_next);
  }
  trim(psi);
  return psi;
}

QPolynomial min_poly_cos(std::int64_t p, std::int64_t q) {
  const auto m = min_poly_2cos(p, q);
  std::vector<Rational> c;
  BigInt pw = 1;
  for (const auto& x : m) {
    c.emplace_back(x * pw);
    pw *= 2;
  }
  return QPolynomial(std::move(c)).monic();
}

// ---------------------------------------------------------------------------
// Recognition

std::optional<CosineCertificate> recognize(double theta, std::uint64_t q_max,
                                           double tol,
                                           const QPolynomial* exact_context) {
  if (!std::isfinite(theta) || theta < -1.0 - tol || theta > 1.0 + tol) {
    throw ParameterError("recognize: theta = " + std::to_string(theta) +
                         " lies outside [-1, 1]");
  }
  if (q_max < 1) throw ParameterError("recognize: q_max must be >= 1");
  const double phi = std::acos(std::clamp(theta, -1.0, 1.0)) / M_PI;
  // Every denominator is tried in increasing order; near theta = +-1 the
  // arccos amplifies noise, which can hide the true fraction from the
  // continued-fraction convergents, so the scan is exhaustive up to q_max.
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    const auto qi = static_cast<std::int64_t>(q);
    const auto centre = static_cast<std::int64_t>(std::llround(phi * static_cast<double>(q)));
    for (std::int64_t p = centre - 1; p <= centre + 1; ++p) {
      if (p < 0 || p > qi || std::gcd(p, qi) != 1) continue;
      const RationalCosine rc{p, qi};
      const double res = std::fabs(rc.value() - theta);
      if (res >= tol) continue;
      CosineCertificate cert{rc, Evidence::NumericOnly, res};
      if (exact_context == nullptr || exact_context->is_zero()) return cert;
      const QPolynomial mp = min_poly_cos(p, qi);
      if (mp.degree() <= exact_context->degree() && exact_context->divisible_by(mp)) {
        cert.evidence = Evidence::Exact;
        return cert;
      }
      // Numerically close but algebraically refuted: keep searching.
    }
  }
  return std::nullopt;
}

bool is_rational_cosine_value(const Rational& x) {
  return x == 0 || x == 1 || x == -1 || x == Rational(1, 2) || x == Rational(-1, 2);
}

std::optional<Rational> certify_rational_non_cosine(double theta,
                                                    const QPolynomial& charpoly) {
  auto r = rationalize(theta, 1000000, 1e-9);
  if (!r || charpoly.is_zero() || sgn(charpoly.eval(*r)) != 0) return std::nullopt;
  if (is_rational_cosine_value(*r)) return std::nullopt;
  return r;
}

// ---------------------------------------------------------------------------
// Two-term rational relations between cosines

namespace {

// Reduce cos(frac * pi) to sign * cos(base * pi), base in [0, 1/2].
std::pair<int, Rational> reduce_angle(const Rational& frac_in) {
  Rational frac = frac_in;
  // frac mod 2 into [0, 2)
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), frac.get_num_mpz_t(), frac.get_den_mpz_t());
  BigInt shift = fl - (fl % 2 + 2) % 2;  // largest even integer <= frac
  frac -= Rational(shift);
  if (frac > 1) frac = Rational(2) - frac;
  int sign = 1;
  if (frac > Rational(1, 2)) {
    sign = -1;
    frac = Rational(1) - frac;
  }
  return {sign, frac};
}

std::optional<Rational> rational_value(const Rational& base) {
  if (base == 0) return Rational(1);
  if (base == Rational(1, 3)) return Rational(1, 2);
  if (base == Rational(1, 2)) return Rational(0);
  return std::nullopt;
}

}  // namespace

bool conway_jones_rational_combo(const std::vector<CosineTerm>& terms,
                                 const Rational& target) {
  if (terms.size() > 2) {
    throw UnsupportedError("only combinations of at most two cosines are decided");
  }
  Rational rest = target;
  rest.canonicalize();
  std::map<Rational, Rational> irr;  // base angle -> coefficient
  for (const auto& t : terms) {
    if (t.angle.q <= 0) throw ParameterError("angle denominator must be positive");
    auto [sign, base] = reduce_angle(fraction(t.angle.p, t.angle.q));
    if (auto rv = rational_value(base)) {
      rest -= t.coef * sign * *rv;
    } else {
      irr[base] += t.coef * sign;
    }
  }
  for (auto it = irr.begin(); it != irr.end();) {
    it = (sgn(it->second) == 0) ? irr.erase(it) : std::next(it);
  }
  if (irr.empty()) return sgn(rest) == 0;
  if (irr.size() == 1) return false;  // nonzero multiple of an irrational
  // Two distinct irrational cosines: only cos(pi/5) - cos(2pi/5) = 1/2.
  auto a = irr.find(Rational(1, 5));
  auto b = irr.find(Rational(2, 5));
  if (a == irr.end() || b == irr.end()) return false;
  return a->second == -b->second && rest == a->second / 2;
}

bool AngleDomain::contains(const Rational& f) const {
  const bool above = lo_open ? f > lo : f >= lo;
  const bool below = hi_open ? f < hi : f <= hi;
  return above && below;
}

std::vector<TwoCosineSolution> solve_two_cosine_equation(
    const Rational& c1, const Rational& c2, const Rational& target,
    const AngleDomain& da, const AngleDomain& db) {
  if (sgn(c1) == 0 || sgn(c2) == 0) {
    throw ParameterError("two-cosine equation needs nonzero coefficients");
  }
  // Any solution has both cosines rational (angles 0, 1/3, 1/2) or both
  // irrational; then either the angles coincide with cancelling
  // coefficients, or the pair is {1/5, 2/5}.
  const std::vector<Rational> cand{Rational(0), Rational(1, 3), Rational(1, 2),
                                   Rational(1, 5), Rational(2, 5)};
  std::vector<TwoCosineSolution> out;
  for (const auto& a : cand) {
    if (!da.contains(a)) continue;
    for (const auto& b : cand) {
      if (!db.contains(b)) continue;
      const RationalCosine ra{a.get_num().get_si(), a.get_den().get_si()};
      const RationalCosine rb{b.get_num().get_si(), b.get_den().get_si()};
      if (conway_jones_rational_combo({{c1, ra}, {c2, rb}}, target)) {
        out.push_back({a, b});
      }
    }
  }
  const bool overlap = da.lo < db.hi && db.lo < da.hi;
  if (c1 + c2 == 0 && sgn(target) == 0 && overlap) {
    out.push_back({Rational(-1), Rational(-1)});
  }
  return out;
}

}  // namespace qwalk
