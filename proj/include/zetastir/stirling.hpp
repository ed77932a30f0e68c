#pragma once

// Signed Stirling numbers of the first kind and the generalized Stirling
// numbers of the second kind S_n^p, computed by three independent routes
// (explicit alternating sum, recurrence in p, index-shifted alternate form),
// plus the g_n(x) = (-1)^n/(x)_{n+1} family and its partial sums.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "zetastir/ball.hpp"
#include "zetastir/rational.hpp"

namespace zetastir {

// Triangular table of signed s(n,k), built by
// s(n+1,k) = s(n,k-1) - n*s(n,k).
class StirlingFirstTable {
 public:
  explicit StirlingFirstTable(std::size_t nmax) : nmax_(nmax), rows_(nmax + 1) {
    rows_[0] = {mpz_class(1)};
    for (std::size_t n = 0; n < nmax; ++n) {
      rows_[n + 1].resize(n + 2);
      for (std::size_t k = 0; k <= n + 1; ++k) {
        mpz_class v = k >= 1 ? rows_[n][k - 1] : mpz_class(0);
        if (k <= n) v -= static_cast<long>(n) * rows_[n][k];
        rows_[n + 1][k] = v;
      }
      if (rows_[n + 1][n + 1] != 1 || (n + 1 >= 1 && rows_[n + 1][0] != 0))
        throw std::logic_error("StirlingFirstTable: boundary invariant violated");
    }
  }

  std::size_t nmax() const { return nmax_; }

  const mpz_class& at(std::size_t n, std::size_t k) const {
    if (n > nmax_ || k > n) throw std::out_of_range("StirlingFirstTable: index outside triangle");
    return rows_[n][k];
  }
  Rational at_q(std::size_t n, std::size_t k) const { return Rational(at(n, k)); }

 private:
  std::size_t nmax_;
  std::vector<std::vector<mpz_class>> rows_;
};

namespace detail {

// Upper bound for |s(n+1,m+1)|, extended to m = 0 where |s(n+1,1)| = n!
// exactly. Used by the certified series tails.
inline Rational stirling1_abs_upper(long n, long m) {
  if (n < 1 || m < 0 || m > n) throw std::invalid_argument("stirling1_abs_upper: bad range");
  Rational nfact = factorial(static_cast<unsigned long>(n));
  if (m == 0) return nfact;
  // n!/m! * (L^m + m L^{m-1}) with L >= ln n; increasing in L.
  Rational lup = log_ball(Rational(n), Rational(1, 1000000)).upper();
  Rational lm1 = pow(lup, m - 1);
  return nfact / factorial(static_cast<unsigned long>(m)) * (lm1 * lup + Rational(m) * lm1);
}

}  // namespace detail

// Certified rational B >= |s(n+1, m+1)|, from n!(ln n)^m/m! (1 + m/ln n)
// with ln n replaced by a rational upper enclosure. Requires n >= 2,
// 1 <= m <= n-1.
inline Rational stirling1_bound(long n, long m) {
  if (n < 2) throw std::invalid_argument("stirling1_bound: n must be >= 2");
  if (m < 1 || m > n - 1) throw std::invalid_argument("stirling1_bound: m out of range");
  return detail::stirling1_abs_upper(n, m);
}

inline StirlingFirstTable stirling1_table(std::size_t nmax) { return StirlingFirstTable(nmax); }

// S_n^p by the explicit alternating sum
// ((-1)^n/n!) sum_k (-1)^k C(n,k)/(k+1)^p, with incremental binomials.
inline Rational gen_stirling_explicit(unsigned long n, unsigned long p) {
  if (p < 1) throw std::invalid_argument("gen_stirling_explicit: p must be >= 1");
  mpz_class binom = 1;
  Rational sum(0);
  for (unsigned long k = 0; k <= n; ++k) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), k + 1, p);
    Rational term{(k % 2 == 0) ? binom : mpz_class(-binom), den};
    sum += term;
    if (k < n) {
      binom *= static_cast<long>(n - k);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
    }
  }
  Rational lead = Rational(1) / factorial(n);
  return (n % 2 == 0) ? lead * sum : -lead * sum;
}

// Same numbers through the index-shifted form
// ((-1)^{n+1}/(n+1)!) sum_{k=1}^{n+1} (-1)^k C(n+1,k)/k^{p-1}.
inline Rational gen_stirling_butzer(unsigned long n, unsigned long p) {
  if (p < 1) throw std::invalid_argument("gen_stirling_butzer: p must be >= 1");
  mpz_class binom = static_cast<long>(n) + 1;  // C(n+1,1)
  Rational sum(0);
  for (unsigned long k = 1; k <= n + 1; ++k) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), k, p - 1);
    Rational term{(k % 2 == 0) ? binom : mpz_class(-binom), den};
    sum += term;
    if (k < n + 1) {
      binom *= static_cast<long>(n + 1 - k);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
    }
  }
  Rational lead = Rational(1) / factorial(n + 1);
  return (n % 2 == 0) ? -lead * sum : lead * sum;
}

// Row S_0^p .. S_nmax^p for fixed p.
struct GenStirlingRow {
  unsigned long p = 1;
  std::vector<Rational> values;  // values[n] = S_n^p

  std::size_t nmax() const { return values.empty() ? 0 : values.size() - 1; }
};

// Builds the row iteratively in p from S_n^1 = (-1)^n/(n+1)! using
// (n+1) S_n^{p+1} = S_n^p - S_{n-1}^{p+1}, checking sign and the 1/n! bound
// along the way.
inline GenStirlingRow gen_stirling_row(unsigned long p, std::size_t nmax) {
  if (p < 1) throw std::invalid_argument("gen_stirling_row: p must be >= 1");
  std::vector<Rational> cur(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) {
    Rational v = Rational(1) / factorial(n + 1);
    cur[n] = (n % 2 == 0) ? v : -v;
  }
  for (unsigned long q = 1; q < p; ++q) {
    std::vector<Rational> next(nmax + 1);
    next[0] = Rational(1);
    for (std::size_t n = 1; n <= nmax; ++n)
      next[n] = (cur[n] - next[n - 1]) / Rational(static_cast<long>(n) + 1);
    cur = std::move(next);
  }
  for (std::size_t n = 0; n <= nmax; ++n) {
    bool sign_ok = (n % 2 == 0) ? cur[n].sign() > 0 : cur[n].sign() < 0;
    if (!sign_ok || cur[n].abs() > Rational(1) / factorial(n))
      throw std::logic_error("gen_stirling_row: sign/bound invariant violated");
  }
  return GenStirlingRow{p, std::move(cur)};
}

// g_n(x) = (-1)^n / (x)_{n+1}; poles at x in {0,-1,...,-n}.
inline Rational g_value(unsigned long n, const Rational& x) {
  Rational denom = pochhammer(x, n + 1);
  if (denom.is_zero()) throw std::domain_error("g_value: x hits a pole of 1/(x)_{n+1}");
  Rational v = denom.reciprocal();
  return (n % 2 == 0) ? v : -v;
}

// Partial-fraction form ((-1)^n/n!) sum_k (-1)^k C(n,k)/(k+x); equals
// g_value on the common domain.
inline Rational g_partial_fraction(unsigned long n, const Rational& x) {
  mpz_class binom = 1;
  Rational sum(0);
  for (unsigned long k = 0; k <= n; ++k) {
    Rational shift = x + Rational(static_cast<long>(k));
    if (shift.is_zero()) throw std::domain_error("g_partial_fraction: x hits a pole");
    Rational term = Rational(binom) / shift;
    sum += (k % 2 == 0) ? term : -term;
    if (k < n) {
      binom *= static_cast<long>(n - k);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
    }
  }
  Rational lead = Rational(1) / factorial(n);
  return (n % 2 == 0) ? lead * sum : -lead * sum;
}

// Partial sum sum_{p=0}^{pmax} S_n^{p+1} t^p of the fixed-n generating
// function; converges to g_value(n, 1-t) for 0 < t < 1 with tail bounded by
// (2^n/n!) t^{pmax+1}/(1-t).
inline Rational vertical_gf_partial(unsigned long n, const Rational& t, std::size_t pmax) {
  if (t.sign() <= 0 || t >= Rational(1))
    throw std::invalid_argument("vertical_gf_partial: t must be in (0,1)");
  std::vector<Rational> cur(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    Rational v = Rational(1) / factorial(m + 1);
    cur[m] = (m % 2 == 0) ? v : -v;
  }
  Rational sum(0);
  Rational tpow(1);
  for (std::size_t p = 0;; ++p) {
    sum += cur[n] * tpow;
    if (p == pmax) break;
    tpow *= t;
    std::vector<Rational> next(n + 1);
    next[0] = Rational(1);
    for (std::size_t m = 1; m <= n; ++m)
      next[m] = (cur[m] - next[m - 1]) / Rational(static_cast<long>(m) + 1);
    cur = std::move(next);
  }
  return sum;
}

}  // namespace zetastir
