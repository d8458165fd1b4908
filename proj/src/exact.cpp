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

#include "qwalk/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <cctype>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  }
  if (t.empty()) throw ParseError("empty rational literal");
  if (t[0] == '+') t.erase(0, 1);
  Rational q;
  if (q.set_str(t, 10) != 0 || (t.find('/') != std::string::npos &&
                                 BigInt(q.get_den()) == 0)) {
    throw ParseError("invalid rational literal '" + text + "'");
  }
  q.canonicalize();
  return q;
}

Rational fraction(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ParameterError("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

std::optional<Rational> rationalize(double x, std::uint64_t max_den,
                                    double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  BigInt h_prev = 1, h = static_cast<long>(std::floor(x));
  BigInt k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  std::optional<Rational> best;
  for (int iter = 0; iter < 64; ++iter) {
    Rational cand(h, k);
    cand.canonicalize();
    if (std::fabs(cand.get_d() - x) <= tol) {
      best = cand;
      break;
    }
    if (frac < 1e-300) break;
    double inv = 1.0 / frac;
    double a = std::floor(inv);
    frac = inv - a;
    BigInt ai = static_cast<long>(a);
    BigInt h_next = ai * h + h_prev;
    BigInt k_next = ai * k + k_prev;
    if (k_next > BigInt(std::to_string(max_den))) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return best;
}

std::uint64_t square_free_part(std::uint64_t n, std::uint64_t* root) {
  if (n == 0) throw ParameterError("square_free_part of 0");
  std::uint64_t free = 1, r = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (d > 20000000ULL) throw UnsupportedError("radicand too large to factor");
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) r *= d;
    if (e % 2 == 1) free *= d;
  }
  free *= n;  // remaining prime factor (or 1)
  if (root) *root = r;
  return free;
}

namespace {

std::uint64_t to_u64(const BigInt& z) {
  if (z < 0 || !z.fits_ulong_p()) {
    throw UnsupportedError("surd radicand exceeds 64 bits");
  }
  return z.get_ui();
}

}  // namespace

Surd Surd::sqrt_of(const Rational& square) {
  if (square < 0) throw ParameterError("square root of a negative rational");
  if (square == 0) return Surd{};
  BigInt a = square.get_num(), b = square.get_den();
  std::uint64_t root = 1;
  std::uint64_t free = square_free_part(to_u64(a * b), &root);
  Rational coef(BigInt(static_cast<unsigned long>(root)), b);
  coef.canonicalize();
  return Surd{coef, free};
}

double Surd::to_double() const {
  return coef.get_d() * std::sqrt(static_cast<double>(radicand));
}

Surd operator*(const Surd& a, const Surd& b) {
  if (a.is_zero() || b.is_zero()) return Surd{};
  std::uint64_t g = std::gcd(a.radicand, b.radicand);
  // sqrt(ra) sqrt(rb) = g sqrt(ra/g * rb/g); the cofactors are coprime and
  // square-free, so their product is square-free.
  BigInt prod = BigInt(static_cast<unsigned long>(a.radicand / g)) *
                BigInt(static_cast<unsigned long>(b.radicand / g));
  Rational coef = a.coef * b.coef * Rational(static_cast<unsigned long>(g));
  return Surd{coef, to_u64(prod)};
}

Surd operator-(const Surd& a) { return Surd{-a.coef, a.radicand}; }

std::optional<Surd> try_add(const Surd& a, const Surd& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.radicand != b.radicand) return std::nullopt;
  Surd s{a.coef + b.coef, a.radicand};
  if (s.is_zero()) s.radicand = 1;
  return s;
}

bool operator==(const Surd& a, const Surd& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.coef == b.coef && a.radicand == b.radicand;
}

// ---------------------------------------------------------------------------
// QPolynomial

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

QPolynomial QPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational QPolynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double QPolynomial::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

QPolynomial QPolynomial::scaled_argument(const Rational& a) const {
  std::vector<Rational> v(c_);
  Rational pw = 1;
  for (auto& c : v) {
    c *= pw;
    pw *= a;
  }
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> v(c_);
  Rational lead = c_.back();
  for (auto& c : v) c /= lead;
  return QPolynomial(std::move(v));
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return QPolynomial(std::move(v));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return QPolynomial(std::move(v));
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPolynomial(std::move(v));
}

void QPolynomial::divmod(const QPolynomial& divisor, QPolynomial& quotient,
                         QPolynomial& remainder) const {
  if (divisor.is_zero()) throw ParameterError("polynomial division by zero");
  std::vector<Rational> r(c_);
  const int dd = divisor.degree();
  const Rational lead = divisor.leading();
  std::vector<Rational> q(
      std::max(0, degree() - dd + 1), Rational(0));
  for (int k = degree(); k >= dd; --k) {
    if (sgn(r[k]) == 0) continue;
    Rational f = r[k] / lead;
    q[k - dd] = f;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * divisor.c_[j];
  }
  quotient = QPolynomial(std::move(q));
  remainder = QPolynomial(std::move(r));
}

bool QPolynomial::divisible_by(const QPolynomial& divisor) const {
  QPolynomial q, r;
  divmod(divisor, q, r);
  return r.is_zero();
}

int QPolynomial::multiplicity_of(const QPolynomial& divisor) const {
  if (divisor.degree() < 1 || is_zero()) return 0;
  int k = 0;
  QPolynomial cur = *this;
  while (true) {
    QPolynomial q, r;
    cur.divmod(divisor, q, r);
    if (!r.is_zero()) return k;
    ++k;
    cur = q;
  }
}

std::vector<std::string> QPolynomial::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.get_str());
  return out;
}

std::string QPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || k == 0) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Characteristic polynomials

namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// det(xI - A) mod p, coefficients low degree first. A is consumed.
std::vector<u64> charpoly_mod(std::vector<std::vector<u64>> a, u64 p) {
  const std::size_t n = a.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = n;
    for (std::size_t i = j + 1; i < n; ++i) {
      if (a[i][j] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(a[piv], a[j + 1]);
      for (std::size_t k = 0; k < n; ++k) std::swap(a[k][piv], a[k][j + 1]);
    }
    const u64 inv = inv_mod(a[j + 1][j], p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (a[i][j] == 0) continue;
      const u64 u = mul_mod(a[i][j], inv, p);
      for (std::size_t k = 0; k < n; ++k) {
        a[i][k] = (a[i][k] + p - mul_mod(u, a[j + 1][k], p)) % p;
      }
      for (std::size_t k = 0; k < n; ++k) {
        a[k][j + 1] = (a[k][j + 1] + mul_mod(u, a[k][i], p)) % p;
      }
    }
  }
  // Hessenberg recurrence: polys[m] = charpoly of the leading m x m block.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> cur(m + 1, 0);
    const auto& prev = polys[m - 1];
    const u64 h = a[m - 1][m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = (cur[k + 1] + prev[k]) % p;
      cur[k] = (cur[k] + p - mul_mod(h, prev[k], p)) % p;
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = mul_mod(t, a[i][i - 1], p);
      if (t == 0) break;
      const u64 f = mul_mod(t, a[i - 1][m - 1], p);
      if (f == 0) continue;
      const auto& pi = polys[i - 1];
      for (std::size_t k = 0; k < pi.size(); ++k) {
        cur[k] = (cur[k] + p - mul_mod(f, pi[k], p)) % p;
      }
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

double log2_abs(const BigInt& z) {
  if (z == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double m = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(std::fabs(m)) + static_cast<double>(exp);
}

}  // namespace

std::vector<BigInt> integer_charpoly(const IntegerMatrix& z) {
  const std::size_t n = z.size();
  for (const auto& row : z) {
    if (row.size() != n) throw ParameterError("charpoly of a non-square matrix");
  }
  if (n == 0) return {BigInt(1)};
  // |coefficient| <= prod_i (1 + ||row_i||_2)  (Hadamard on principal minors)
  double log_bound = 0;
  for (const auto& row : z) {
    double max_log = -1e300;
    for (const auto& e : row) max_log = std::max(max_log, log2_abs(e));
    double s = 0;
    if (max_log > -1e299) {
      for (const auto& e : row) {
        if (e != 0) s += std::exp2(2 * (log2_abs(e) - max_log));
      }
      log_bound += std::log2(1 + std::exp2(max_log) * std::sqrt(s) + 1e-9);
    }
  }
  const double needed_bits = log_bound + 2 + 8;  // sign + safety margin

  std::vector<BigInt> acc(n + 1, BigInt(0));
  BigInt modulus = 1;
  double bits = 0;
  u64 cand = (1ULL << 31) - 1;
  while (bits < needed_bits) {
    while (!is_prime(cand)) --cand;
    const u64 p = cand--;
    std::vector<std::vector<u64>> a(n, std::vector<u64>(n));
    BigInt tmp;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpz_fdiv_r_ui(tmp.get_mpz_t(), z[i][j].get_mpz_t(), p);
        a[i][j] = tmp.get_ui();
      }
    }
    std::vector<u64> c = charpoly_mod(std::move(a), p);
    // Incremental CRT: acc = acc + modulus * ((c - acc) * modulus^{-1} mod p)
    mpz_fdiv_r_ui(tmp.get_mpz_t(), modulus.get_mpz_t(), p);
    const u64 minv = inv_mod(tmp.get_ui(), p);
    for (std::size_t k = 0; k <= n; ++k) {
      mpz_fdiv_r_ui(tmp.get_mpz_t(), acc[k].get_mpz_t(), p);
      const u64 diff = (c[k] + p - tmp.get_ui()) % p;
      const u64 f = mul_mod(diff, minv, p);
      acc[k] += modulus * static_cast<unsigned long>(f);
    }
    modulus *= static_cast<unsigned long>(p);
    bits += std::log2(static_cast<double>(p));
  }
  const BigInt half = modulus / 2;
  for (auto& c : acc) {
    if (c > half) c -= modulus;
  }
  return acc;
}

QPolynomial rational_charpoly(const RationalMatrix& r) {
  const std::size_t n = r.size();
  BigInt l = 1;
  for (const auto& row : r) {
    if (row.size() != n) throw ParameterError("charpoly of a non-square matrix");
    for (const auto& e : row) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
    }
  }
  IntegerMatrix z(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled = r[i][j] * l;
      z[i][j] = scaled.get_num();
    }
  }
  std::vector<BigInt> c = integer_charpoly(z);
  // det(xI - Z/L) = L^{-n} det(Lx I - Z)  =>  coef_k = c_k L^{k-n}
  std::vector<Rational> out(n + 1);
  BigInt lpow = 1;  // L^{n-k}, starting at k = n
  for (std::size_t k = n + 1; k-- > 0;) {
    out[k] = Rational(c[k], lpow);
    out[k].canonicalize();
    lpow *= l;
  }
  return QPolynomial(std::move(out));
}

}  // namespace qwalk
