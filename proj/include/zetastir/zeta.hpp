#pragma once

// The rational approximant zeta_N(p), the split representation it truncates,
// the four-term error decomposition of the difference zeta(p) - zeta_N(p),
// and an independent high-precision zeta oracle for acceptance.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "zetastir/ball.hpp"
#include "zetastir/rational.hpp"
#include "zetastir/series.hpp"
#include "zetastir/stirling.hpp"

namespace zetastir {

// zeta_N(p) split into its two defining sums. Exact; no transcendental
// arithmetic anywhere in this path.
struct ZetaApproxResult {
  long p = 0;
  long N = 0;
  Rational value;
  Rational first_sum;   // 4N+1 terms
  Rational second_sum;  // N-p+1 terms
};

// zeta_N with caller-chosen truncation limits; the defining limits are
// L1 = 4N and L2 = N-p (see zeta_n_approx).
inline ZetaApproxResult zeta_n_limits(long p, long N, long limit1, long limit2) {
  if (p < 2) throw std::invalid_argument("zeta_n_approx: p must be >= 2");
  if (N < p) throw std::invalid_argument("zeta_n_approx: N must be >= p");
  if (limit1 < 0 || limit2 < -1) throw std::invalid_argument("zeta_n_approx: bad limits");
  std::size_t nmax1 = static_cast<std::size_t>(limit1);
  GenStirlingRow row = gen_stirling_row(static_cast<unsigned long>(p), nmax1);
  Rational Nq(N);
  Rational first(0);
  Rational npow = Nq;  // N^{n+1}
  for (std::size_t n = 0; n <= nmax1; ++n) {
    first += row.values[n] * npow / Rational(static_cast<long>(n) + 1);
    npow *= Nq;
  }
  Rational second(0);
  if (limit2 >= 0) {
    StirlingFirstTable table(static_cast<std::size_t>(limit2 + p - 1));
    Rational npow2 = pow(Nq, p - 1);  // N^{n+p-1}
    for (long n = 0; n <= limit2; ++n) {
      long m = n + p - 1;
      Rational s = table.at_q(static_cast<std::size_t>(m), static_cast<std::size_t>(p - 1));
      if (n % 2 == 1) s = -s;
      second += s / (Rational(m) * npow2);
      npow2 *= Nq;
    }
  }
  return ZetaApproxResult{p, N, first + second, first, second};
}

inline ZetaApproxResult zeta_n_approx(long p, long N) {
  return zeta_n_limits(p, N, 4 * N, N - p);
}

// Direct-series enclosure of zeta(p): partial sum plus the integral-test
// tail interval. Independent of the accelerated oracle.
inline Ball zeta_direct_enclosure(long p, unsigned long kmax) {
  if (p < 2) throw std::invalid_argument("zeta_direct_enclosure: p must be >= 2");
  if (kmax < 1) throw std::invalid_argument("zeta_direct_enclosure: kmax must be >= 1");
  Rational sum(0);
  for (unsigned long k = 1; k <= kmax; ++k) {
    mpz_class kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), k, static_cast<unsigned long>(p));
    sum += Rational(kp).reciprocal();
  }
  mpz_class lo_den, hi_den;
  mpz_ui_pow_ui(hi_den.get_mpz_t(), kmax, static_cast<unsigned long>(p - 1));
  mpz_ui_pow_ui(lo_den.get_mpz_t(), kmax + 1, static_cast<unsigned long>(p - 1));
  Rational lo = sum + Rational(1) / (Rational(p - 1) * Rational(lo_den));
  Rational hi = sum + Rational(1) / (Rational(p - 1) * Rational(hi_den));
  return Ball::from_endpoints(lo, hi);
}

namespace detail {

// Integer weights c_0..c_{n-1} and divisor d for the Chebyshev-accelerated
// alternating sum: with P(x) the degree-n Chebyshev polynomial mapped onto
// [0,1] and d = P(-1), (d - P(x))/(1+x) = sum c_k x^k. For coefficients
// a_k that are moments of a positive measure of mass <= 1 on [0,1],
// |sum (-1)^k a_k - (1/d) sum c_k a_k| <= 1/d since |P| <= 1 on [0,1].
struct AlternatingWeights {
  std::vector<mpz_class> c;
  mpz_class d;
};

inline AlternatingWeights alternating_weights(std::size_t n) {
  // T_j(1-2x) by the three-term recurrence, ascending coefficients.
  std::vector<mpz_class> t0{1}, t1{1, -2};
  if (n == 0) t1 = t0;
  for (std::size_t j = 2; j <= n; ++j) {
    std::vector<mpz_class> t2(t1.size() + 1);
    for (std::size_t i = 0; i < t1.size(); ++i) {
      t2[i] += 2 * t1[i];
      t2[i + 1] -= 4 * t1[i];
    }
    for (std::size_t i = 0; i < t0.size(); ++i) t2[i] -= t0[i];
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  mpz_class d = 0;
  for (std::size_t i = 0; i < t1.size(); ++i) d += (i % 2 == 0) ? t1[i] : mpz_class(-t1[i]);
  // (d - P(x)) / (1+x), exact synthetic division.
  std::vector<mpz_class> num(t1.size());
  for (std::size_t i = 0; i < t1.size(); ++i) num[i] = -t1[i];
  num[0] += d;
  std::vector<mpz_class> q(num.size() - 1);
  for (std::size_t i = num.size() - 1; i >= 1; --i) {
    q[i - 1] = num[i];
    num[i - 1] -= num[i];
  }
  if (num[0] != 0) throw std::logic_error("alternating_weights: division not exact");
  return AlternatingWeights{std::move(q), std::move(d)};
}

}  // namespace detail

// Enclosure of zeta(p) with radius <= eps, via the accelerated alternating
// series for eta(p) = sum (-1)^{k-1} k^{-p} and zeta = eta/(1 - 2^{1-p}).
// The remainder bound 1/d is exact-rational; no step of the approximant's
// own machinery is reused here.
inline Ball zeta_oracle(long p, const Rational& eps) {
  if (p < 2) throw std::invalid_argument("zeta_oracle: p must be >= 2");
  if (eps.sign() <= 0) throw std::invalid_argument("zeta_oracle: eps must be > 0");
  Rational scale = (Rational(1) - pow(Rational(2), 1 - p)).reciprocal();
  // d grows like 5.828^n; pick n from eps and verify exactly.
  double digits = -std::log10(std::max(1e-300, (eps / scale).to_double()));
  std::size_t n = static_cast<std::size_t>(digits / 0.7655) + 2;
  for (;;) {
    detail::AlternatingWeights w = detail::alternating_weights(n);
    Rational radius = scale / Rational(w.d);
    if (radius > eps) {
      n += 2;
      continue;
    }
    Rational acc(0);
    for (std::size_t k = 0; k < w.c.size(); ++k) {
      mpz_class kp;
      mpz_ui_pow_ui(kp.get_mpz_t(), k + 1, static_cast<unsigned long>(p));
      acc += Rational(w.c[k], kp);
    }
    Rational eta = acc / Rational(w.d);
    return Ball(eta * scale, radius);
  }
}

// Enclosure of the split representation
//   sum_{n<=nmax1} S_n^p R^{n+1}/(n+1)
//   + sum_{n<=nmax2} |s(n+p-1,p-1)|/((n+p-1)(n+p-1)!)
//       * (gamma(n+p,R)/R^{n+p-1} + e^{-R}),
// whose full sums equal zeta(p) for every R > 0. Both truncation tails are
// certified: the first by the factorial bound, the second by the first-kind
// upper bound folded into closed-form log-power integrals.
namespace detail {

// I_q(M, r) >= int_M^inf (ln u)^q / u^r du, exact rational with an upper
// log enclosure; recursion I_q = L^q/((r-1)M^{r-1}) + q/(r-1) I_{q-1}.
inline Rational log_power_integral(unsigned long q, const Rational& lup, long M, long r) {
  Rational mpow = pow(Rational(M), r - 1) * Rational(r - 1);
  Rational acc = pow(lup, static_cast<long>(q)) / mpow;
  Rational coef(1);
  for (unsigned long i = q; i >= 1; --i) {
    coef = coef * Rational(static_cast<long>(i)) / Rational(r - 1);
    acc += coef * pow(lup, static_cast<long>(i) - 1) / mpow;
  }
  return acc;
}

// Upper bound for sum_{m >= M} ((ln m)^q + q (ln m)^{q-1}) / m^r, valid when
// the summand is decreasing (needs ln(M-1) > q/r; asserted).
inline Rational log_power_sum_tail(unsigned long q, long M, long r) {
  if (M < 30) throw std::invalid_argument("log_power_sum_tail: M too small");
  Rational lup = log_ball(Rational(M - 1), Rational(1, 1u << 20)).upper();
  if (Rational(static_cast<long>(q)) >= Rational(r) * log_ball(Rational(M - 1), Rational(1, 64)).center())
    throw std::invalid_argument("log_power_sum_tail: monotonicity condition fails");
  Rational tail = log_power_integral(q, lup, M - 1, r);
  if (q >= 1) tail += Rational(static_cast<long>(q)) * log_power_integral(q - 1, lup, M - 1, r);
  return tail;
}

// sum_{m >= M} |s(m,p-1)|/(m m!) * m^{-extra} <= this, via
// |s(m,p-1)|/(m m!) <= ((ln m)^{p-2} + (p-2)(ln m)^{p-3})/((p-2)! m^2).
inline Rational stirling_ratio_tail(unsigned long p, long M, long extra) {
  unsigned long q = p - 2;
  return log_power_sum_tail(q, M, 2 + extra) / factorial(q);
}

}  // namespace detail

inline Ball zeta_split_eval(long p, const Rational& R, std::size_t nmax1, std::size_t nmax2,
                            const Rational& eps) {
  if (p < 2) throw std::invalid_argument("zeta_split_eval: p must be >= 2");
  if (R.sign() <= 0) throw std::invalid_argument("zeta_split_eval: R must be > 0");
  if (eps.sign() <= 0) throw std::invalid_argument("zeta_split_eval: eps must be > 0");
  if (Rational(2) * R >= Rational(static_cast<long>(nmax1) + 3))
    throw std::invalid_argument("zeta_split_eval: nmax1 too small for the tail bound");

  // First series: exact partial sum; alternating tail bounded by
  // sum_{m>=nmax1+2} R^m/m!.
  GenStirlingRow row = gen_stirling_row(static_cast<unsigned long>(p), nmax1);
  Rational first(0);
  Rational rpow = R;
  Rational fterm = R;  // R^{n+1}/(n+1)!
  for (std::size_t n = 0; n <= nmax1; ++n) {
    first += row.values[n] * rpow / Rational(static_cast<long>(n) + 1);
    rpow *= R;
    fterm = fterm * R / Rational(static_cast<long>(n) + 2);
  }
  Rational tail1 = fterm / (Rational(1) - R / Rational(static_cast<long>(nmax1) + 3));

  // Second series: positive terms |s(m,p-1)|/(m m!) (m!(1-E S_{m+1})/R^m + E),
  // with one shared high-precision enclosure E of e^{-R}.
  StirlingFirstTable table(nmax2 + static_cast<std::size_t>(p) - 1);
  std::vector<Rational> s_sums(nmax2 + 1), r_pows(nmax2 + 1);
  Rational amp(0);
  {
    Rational s_a = detail::exp_partial_sum(R, static_cast<unsigned long>(p));  // S_{m+1}, m = p-1
    Rational rp = pow(R, p - 1);
    Rational term_r = pow(R, p - 1) / factorial(static_cast<unsigned long>(p) - 1);
    for (std::size_t n = 0; n <= nmax2; ++n) {
      long m = static_cast<long>(n) + p - 1;
      s_sums[n] = s_a;
      r_pows[n] = rp;
      Rational abs_s = table.at_q(static_cast<std::size_t>(m), static_cast<std::size_t>(p - 1)).abs();
      amp += abs_s * (s_a / (Rational(m) * rp) + (Rational(m) * factorial(static_cast<unsigned long>(m))).reciprocal());
      term_r = term_r * R / Rational(m + 1);
      s_a += term_r;
      rp *= R;
    }
  }
  Ball E = exp_ball(-R, eps / (Rational(2) * amp));
  Ball second(Rational(0));
  for (std::size_t n = 0; n <= nmax2; ++n) {
    long m = static_cast<long>(n) + p - 1;
    Rational abs_s = table.at_q(static_cast<std::size_t>(m), static_cast<std::size_t>(p - 1)).abs();
    Ball gamma_ratio = (Rational(1) - E * s_sums[n]) / r_pows[n];  // gamma(m+1,R)/(m! R^m)
    second = second + (gamma_ratio + E / factorial(static_cast<unsigned long>(m))) * (abs_s / Rational(m));
  }
  // Certified tail: gamma(m+1,R)/R^m <= R/(m+1) < R/m adds one power of m.
  long M = static_cast<long>(nmax2) + p;  // first excluded m
  Rational e_up = E.upper();
  Rational tail2 = R * detail::stirling_ratio_tail(static_cast<unsigned long>(p), M, 1) +
                   e_up * detail::stirling_ratio_tail(static_cast<unsigned long>(p), M, 0);

  Ball total = Ball(first, tail1) + second + Ball(tail2 / 2, tail2 / 2);
  return total;
}

// Numeric enclosures of the four proof terms of zeta(p) - zeta_N(p),
// plus the proved bound e^{-N}/sqrt(N) for the first of them. eps3's series
// has no certified closed tail; its reported estimate (folded into the
// radius) follows the geometric ratio-series bound and the first-kind upper
// bound, both loose but safe.
struct EpsilonBreakdown {
  long p = 0;
  long N = 0;
  Ball eps1, eps2, eps3, eps4;
  Rational eps1_paper_bound;   // upper enclosure of e^{-N}/sqrt(N)
  Rational eps3_tail_estimate; // reported, already inside eps3.radius
};

inline EpsilonBreakdown epsilon_breakdown(long p, long N) {
  if (p < 2) throw std::invalid_argument("epsilon_breakdown: p must be >= 2");
  if (N < p) throw std::invalid_argument("epsilon_breakdown: N must be >= p");
  const long K3 = 200;  // extra terms kept of eps3's infinite series
  const long K4 = 300;  // terms kept of eps4's infinite series
  Rational Nq(N);

  // eps1: sum_{n=4N+1}^{8N} S_n^p N^{n+1}/(n+1), remainder by the factorial
  // bound (alternating signs, so the ball is centered at the partial sum).
  GenStirlingRow row = gen_stirling_row(static_cast<unsigned long>(p), static_cast<std::size_t>(8 * N));
  Rational e1(0);
  Rational npow = pow(Nq, 4 * N + 2);
  Rational fterm = npow / factorial(static_cast<unsigned long>(4 * N + 2));
  for (long n = 4 * N + 1; n <= 8 * N; ++n) {
    e1 += row.values[static_cast<std::size_t>(n)] * npow / Rational(n + 1);
    npow *= Nq;
    fterm = fterm * Nq / Rational(n + 2);
  }
  // fterm = N^{8N+2}/(8N+2)!
  Rational tail1 = fterm / (Rational(1) - Nq / Rational(8 * N + 3));
  Ball eps1(e1, tail1);

  StirlingFirstTable table(static_cast<std::size_t>(std::max(N + K3, K4 + p - 1)));

  // Shared enclosure of e^{-N}; precision from the worst amplification of
  // its radius across eps2/eps3/eps4.
  long n3_hi = N - p + K3;
  Rational amp(0);
  std::vector<Rational> s_sums(static_cast<std::size_t>(n3_hi) + 1);
  std::vector<Rational> n_pows(static_cast<std::size_t>(n3_hi) + 1);
  {
    Rational s_a = detail::exp_partial_sum(Nq, static_cast<unsigned long>(p));
    Rational np = pow(Nq, p - 1);
    Rational term_n = pow(Nq, p - 1) / factorial(static_cast<unsigned long>(p) - 1);
    for (long n = 0; n <= n3_hi; ++n) {
      long m = n + p - 1;
      s_sums[static_cast<std::size_t>(n)] = s_a;
      n_pows[static_cast<std::size_t>(n)] = np;
      amp += table.at_q(static_cast<std::size_t>(m), static_cast<std::size_t>(p - 1)).abs() * s_a /
             (Rational(m) * np);
      term_n = term_n * Nq / Rational(m + 1);
      s_a += term_n;
      np *= Nq;
    }
    for (long n = 0; n < K4; ++n) {
      long m = n + p - 1;
      amp += table.at_q(static_cast<std::size_t>(m), static_cast<std::size_t>(p - 1)).abs() /
             (Rational(m) * factorial(static_cast<unsigned long>(m)));
    }
  }
  Ball E = exp_ball(-Nq, pow10(-25) / amp);

  // eps2 = sum_{n=0}^{N-p} |s|/((n+p-1) N^{n+p-1}) e^{-N} S_{n+p}.
  Ball e2(Rational(0));
  for (long n = 0; n <= N - p; ++n) {
    long m = n + p - 1;
    Rational abs_s = table.at_q(static_cast<std::size_t>(m), static_cast<std::size_t>(p - 1)).abs();
    e2 = e2 + E * (abs_s * s_sums[static_cast<std::size_t>(n)] /
                   (Rational(m) * n_pows[static_cast<std::size_t>(n)]));
  }

  // eps3 partial + reported tail.
  Ball e3(Rational(0));
  for (long n = N - p + 1; n <= n3_hi; ++n) {
    long m = n + p - 1;
    Rational abs_s = table.at_q(static_cast<std::size_t>(m), static_cast<std::size_t>(p - 1)).abs();
    e3 = e3 + (Rational(1) - E * s_sums[static_cast<std::size_t>(n)]) *
                  (abs_s / (Rational(m) * n_pows[static_cast<std::size_t>(n)]));
  }
  long M3 = N + K3;  // first excluded m
  Rational factor3 = Rational(M3 + 1) / Rational(M3 + 1 - N);
  Rational tail3 = Nq * E.upper() * factor3 *
                   detail::stirling_ratio_tail(static_cast<unsigned long>(p), M3, 0);
  e3 = e3 + Ball(tail3 / 2, tail3 / 2);

  // eps4 = e^{-N} sum_n |s|/((n+p-1)(n+p-1)!), certified tail.
  Rational s4(0);
  for (long n = 0; n < K4; ++n) {
    long m = n + p - 1;
    s4 += table.at_q(static_cast<std::size_t>(m), static_cast<std::size_t>(p - 1)).abs() /
          (Rational(m) * factorial(static_cast<unsigned long>(m)));
  }
  long M4 = K4 + p - 1;  // first excluded m
  Rational tail4 = detail::stirling_ratio_tail(static_cast<unsigned long>(p), M4, 0);
  Ball e4 = E * Ball(s4 + tail4 / 2, tail4 / 2);

  Rational bound = exp_ball(-Nq, pow10(-30)).upper() / sqrt_ball(Nq, 64).lower();
  return EpsilonBreakdown{p, N, eps1, e2, e3, e4, bound, tail3};
}

// One point of the decay experiment.
struct SweepRecord {
  long p = 0;
  long N = 0;
  Rational zeta_n;    // exact zeta_N(p)
  Ball oracle;        // zeta(p) enclosure, radius <= min(1e-40, N e^-N / 1e6)
  Rational abs_err;   // distance to the oracle interval plus its radius
  Rational ratio;     // abs_err * e^N / N, upper enclosure
};

inline std::vector<SweepRecord> error_sweep(long p, const std::vector<long>& Ns) {
  if (Ns.empty()) throw std::invalid_argument("error_sweep: empty N list");
  Rational oracle_eps = pow10(-40);
  for (long N : Ns) {
    if (N < p) throw std::invalid_argument("error_sweep: every N must be >= p");
    Rational cap = Rational(N) * exp_ball(Rational(-N), pow10(-60)).upper() / pow10(6);
    oracle_eps = min(oracle_eps, cap);
  }
  Ball oracle = zeta_oracle(p, oracle_eps);
  std::vector<SweepRecord> out;
  out.reserve(Ns.size());
  for (long N : Ns) {
    ZetaApproxResult z = zeta_n_approx(p, N);
    Rational gap = (z.value - oracle.center()).abs() - oracle.radius();
    Rational dist = gap.sign() > 0 ? gap : Rational(0);
    Rational abs_err = dist + oracle.radius();
    Rational e_up = exp_ball(Rational(N), pow10(-6)).upper();
    out.push_back(SweepRecord{p, N, z.value, oracle, abs_err, abs_err * e_up / Rational(N)});
  }
  return out;
}

// Least-squares slope of ln(abs_err) against N.
inline Rational regression_slope_ln_abs_err(const std::vector<SweepRecord>& records) {
  if (records.size() < 2) throw std::invalid_argument("regression needs >= 2 records");
  std::vector<Rational> ys;
  Rational xbar(0), ybar(0);
  for (const SweepRecord& r : records) {
    if (r.abs_err.sign() <= 0) throw std::domain_error("regression: abs_err must be positive");
    ys.push_back(log_ball(r.abs_err, pow10(-12)).center());
    xbar += Rational(r.N);
    ybar += ys.back();
  }
  Rational count(static_cast<long>(records.size()));
  xbar /= count;
  ybar /= count;
  Rational num(0), den(0);
  for (std::size_t i = 0; i < records.size(); ++i) {
    Rational dx = Rational(records[i].N) - xbar;
    num += dx * (ys[i] - ybar);
    den += dx * dx;
  }
  if (den.is_zero()) throw std::invalid_argument("regression: degenerate N values");
  return num / den;
}

}  // namespace zetastir
