#pragma once

// Certified evaluation of the transcendental series: pFp[1,...,1;2,...,2;t],
// integer-parameter lower incomplete gamma, polylogarithm partial sums, and
// the cross-identity checks between them. Truncation indices come from
// analytic tail bounds evaluated in exact rationals, never from "term got
// small".

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zetastir/ball.hpp"
#include "zetastir/rational.hpp"
#include "zetastir/stirling.hpp"

namespace zetastir {

// A truncated series with its enclosure. tail_bound is the part of the
// radius that accounts for truncation (for the delta expansion it is a
// reported estimate, see delta_expansion_partial).
struct SeriesEnclosure {
  Ball value;
  std::size_t terms_used = 0;
  Rational tail_bound;
};

namespace detail {

inline Rational rational_from_double(double d) {
  mpq_class q(d);
  return Rational(mpz_class(q.get_num()), mpz_class(q.get_den()));
}

}  // namespace detail

// Enclosure of pFp[1,...,1;2,...,2;t] = sum_k t^k/(k!(k+1)^p) for t >= 0,
// radius <= eps via the factorial tail bound term_k <= t^k/k!.
inline SeriesEnclosure pfp_ones_twos(unsigned long p, const Rational& t, const Rational& eps) {
  if (p < 1) throw std::invalid_argument("pfp_ones_twos: p must be >= 1");
  if (t.sign() < 0) throw std::invalid_argument("pfp_ones_twos: t must be >= 0");
  if (eps.sign() <= 0) throw std::invalid_argument("pfp_ones_twos: eps must be > 0");
  Rational sum(0);
  Rational fterm(1);  // t^k/k!
  unsigned long k = 0;
  for (;;) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), k + 1, p);
    sum += fterm / Rational(den);
    Rational fnext = fterm * t / Rational(static_cast<long>(k) + 1);
    if (Rational(2) * t < Rational(static_cast<long>(k) + 2)) {
      Rational tail = fnext / (Rational(1) - t / Rational(static_cast<long>(k) + 2));
      if (tail <= eps) return SeriesEnclosure{Ball(sum, tail), k + 1, tail};
    }
    fterm = fnext;
    ++k;
  }
}

// Enclosure of sum_{n=0}^{nmax} S_n^p t^n with tail bound sum_{n>nmax} t^n/n!
// (from |S_n^p| <= 1/n!). Intersects exp_ball(-t) * pfp_ones_twos(p,t).
inline SeriesEnclosure horizontal_gf_partial(unsigned long p, const Rational& t, std::size_t nmax) {
  if (t.sign() < 0) throw std::invalid_argument("horizontal_gf_partial: t must be >= 0");
  if (Rational(2) * t >= Rational(static_cast<long>(nmax) + 2))
    throw std::invalid_argument("horizontal_gf_partial: nmax too small for the tail bound");
  GenStirlingRow row = gen_stirling_row(p, nmax);
  Rational sum(0);
  Rational tpow(1);
  Rational fterm(1);  // t^n/n!
  for (std::size_t n = 0; n <= nmax; ++n) {
    sum += row.values[n] * tpow;
    tpow *= t;
    fterm = fterm * t / Rational(static_cast<long>(n) + 1);
  }
  // fterm = t^{nmax+1}/(nmax+1)!
  Rational tail = fterm / (Rational(1) - t / Rational(static_cast<long>(nmax) + 2));
  return SeriesEnclosure{Ball(sum, tail), nmax + 1, tail};
}

namespace detail {

// gamma(a,x) = (a-1)! (1 - E * S_a) where E encloses e^{-x} and
// S_a = sum_{j<a} x^j/j!. The closed form is exact; only E carries radius.
inline Ball lower_gamma_from_exp(unsigned long a, const Ball& E, const Rational& s_a,
                                 const Rational& fact_am1) {
  return (Rational(1) - E * s_a) * fact_am1;
}

inline Rational exp_partial_sum(const Rational& x, unsigned long a) {
  Rational s(0), term(1);
  for (unsigned long j = 0; j < a; ++j) {
    s += term;
    term = term * x / Rational(static_cast<long>(j) + 1);
  }
  return s;
}

}  // namespace detail

// Enclosure of the lower incomplete gamma gamma(a,x) for integer a >= 1,
// x >= 0, radius <= eps; the only transcendental ingredient is e^{-x}.
inline Ball lower_gamma_int(unsigned long a, const Rational& x, const Rational& eps) {
  if (a < 1) throw std::invalid_argument("lower_gamma_int: a must be >= 1");
  if (x.sign() < 0) throw std::invalid_argument("lower_gamma_int: x must be >= 0");
  if (eps.sign() <= 0) throw std::invalid_argument("lower_gamma_int: eps must be > 0");
  if (x.is_zero()) return Ball(Rational(0));
  Rational fact = factorial(a - 1);
  Rational s_a = detail::exp_partial_sum(x, a);
  Ball E = exp_ball(-x, eps / (fact * s_a));
  return detail::lower_gamma_from_exp(a, E, s_a, fact);
}

// Both sides of the ratio identity
//   gamma(n+p,N)/(n+p-1)! = e^{-N} N^{n+p} sum_j N^j/(n+p+j)!,
// each as an enclosure; jmax < 0 picks the truncation from the certified
// geometric tail. Throws if a caller-supplied jmax leaves the tail divergent.
inline std::pair<Ball, Ball> gamma_temme_check(unsigned long n, unsigned long p, unsigned long N,
                                               long jmax, const Rational& eps) {
  if (p < 2) throw std::invalid_argument("gamma_temme_check: p must be >= 2");
  if (eps.sign() <= 0) throw std::invalid_argument("gamma_temme_check: eps must be > 0");
  unsigned long a = n + p;
  Rational fact = factorial(a - 1);
  Ball lhs = lower_gamma_int(a, Rational(static_cast<long>(N)), eps) / fact;
  if (N == 0) return {lhs, Ball(Rational(0))};

  Rational Nq(static_cast<long>(N));
  Rational npow = pow(Nq, static_cast<long>(a));  // N^{n+p}
  // Truncation: N^j/(a+j)! <= N^{J+1}/(a+J+1)! * (N/(a+J+2))^{j-J-1}.
  auto tail_at = [&](unsigned long J, const Rational& term_next) -> Rational {
    return term_next / (Rational(1) - Nq / Rational(static_cast<long>(a + J) + 2));
  };
  unsigned long J;
  Rational partial(0);
  Rational term = Rational(1) / fact / Rational(static_cast<long>(a));  // N^0/a!
  Rational tail;
  if (jmax >= 0) {
    if (Nq >= Rational(static_cast<long>(a) + jmax + 2))
      throw std::domain_error("gamma_temme_check: divergent tail at this jmax");
    for (J = 0; J <= static_cast<unsigned long>(jmax); ++J) {
      partial += term;
      term = term * Nq / Rational(static_cast<long>(a + J) + 1);
    }
    tail = tail_at(static_cast<unsigned long>(jmax), term);
  } else {
    for (J = 0;; ++J) {
      partial += term;
      term = term * Nq / Rational(static_cast<long>(a + J) + 1);
      if (Rational(2) * Nq < Rational(static_cast<long>(a + J) + 2)) {
        tail = tail_at(J, term);
        if (npow * tail <= eps) break;  // e^{-N} < 1 only tightens this
      }
    }
  }
  Rational sum_hi = partial + tail;
  Ball E = exp_ball(-Nq, eps / (Rational(2) * npow * sum_hi));
  Ball series = Ball(partial + tail / 2, tail / 2);
  Ball rhs = E * (npow * series);
  return {lhs, rhs};
}

// Partial sum of e^t sum_n |s(n+p-1,p-1)| gamma(n+p,t) / ((n+p-1)! t^{n+p}),
// which converges to pFp[1,...,1;2,...,2;t]. The series has no usable closed
// remainder; the radius includes a reported heuristic tail estimate
// (twice the next term, scaled by the observed 1/n decay of the partials)
// and the result is verified against pfp_ones_twos in the test suites.
inline SeriesEnclosure delta_expansion_partial(unsigned long p, const Rational& t,
                                               std::size_t nmax, const Rational& eps) {
  if (p < 2) throw std::invalid_argument("delta_expansion_partial: p must be >= 2");
  if (t.sign() <= 0) throw std::domain_error("delta_expansion_partial: t must be > 0");
  if (eps.sign() <= 0) throw std::invalid_argument("delta_expansion_partial: eps must be > 0");
  StirlingFirstTable table(nmax + p);
  // gamma(a,t)/(a-1)! = 1 - E S_a; term_n = |s(a-1,p-1)| (1 - E S_a) / t^a.
  // Amplification of E's radius, for choosing its precision.
  std::vector<Rational> s_vals(nmax + 2), t_pows(nmax + 2);
  Rational amp(0);
  {
    Rational s_a = detail::exp_partial_sum(t, p);  // S_{p} for n = 0
    Rational tp = pow(t, static_cast<long>(p));
    Rational term_t = pow(t, static_cast<long>(p) - 1) / factorial(p - 1);  // t^{a-1}/(a-1)!
    for (std::size_t n = 0; n <= nmax + 1; ++n) {
      unsigned long a = static_cast<unsigned long>(n) + p;
      s_vals[n] = s_a;
      t_pows[n] = tp;
      amp += table.at_q(a - 1, p - 1).abs() * s_a / tp;
      term_t = term_t * t / Rational(static_cast<long>(a));
      s_a += term_t;  // t^a/a! joins S_{a+1}
      tp *= t;
    }
  }
  Ball E = exp_ball(-t, eps / (Rational(2) * amp));
  Ball inner(Rational(0));
  for (std::size_t n = 0; n <= nmax; ++n) {
    unsigned long a = static_cast<unsigned long>(n) + p;
    Rational abs_s = table.at_q(a - 1, p - 1).abs();
    inner = inner + (Rational(1) - E * s_vals[n]) * (abs_s / t_pows[n]);
  }
  // Heuristic truncation estimate: the terms decay like 1/n^2, so the tail
  // is about (nmax+2) times the next term; factor 2 for slack.
  Rational next_term =
      (table.at_q(nmax + p, p - 1).abs() / t_pows[nmax + 1] *
       (Rational(1) - E * s_vals[nmax + 1]))
          .upper();
  Rational tail_est = Rational(2) * Rational(static_cast<long>(nmax) + 2) * next_term;
  inner = inner + Ball(tail_est / 2, tail_est / 2);
  Ball e_t = exp_ball(t, eps / (Rational(2) * (inner.center().abs() + Rational(1))));
  Ball value = e_t * inner;
  return SeriesEnclosure{value, nmax + 1, tail_est / 2 * e_t.lower()};
}

// Enclosure of Li_p(x) = sum_{k>=1} x^k/k^p truncated at kmax, |x| <= 1.
inline SeriesEnclosure polylog_partial(unsigned long p, const Rational& x, unsigned long kmax) {
  if (p < 1) throw std::invalid_argument("polylog_partial: p must be >= 1");
  if (kmax < 1) throw std::invalid_argument("polylog_partial: kmax must be >= 1");
  Rational ax = x.abs();
  if (ax > Rational(1)) throw std::invalid_argument("polylog_partial: |x| must be <= 1");
  if (ax == Rational(1) && p == 1) throw std::domain_error("polylog_partial: divergent at |x|=1, p=1");
  Rational sum(0);
  Rational xpow(1);
  for (unsigned long k = 1; k <= kmax; ++k) {
    xpow *= x;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), k, p);
    sum += xpow / Rational(den);
  }
  Rational tail;
  mpz_class kp1_p;
  mpz_ui_pow_ui(kp1_p.get_mpz_t(), kmax + 1, p);
  if (ax < Rational(1)) {
    tail = pow(ax, static_cast<long>(kmax) + 1) / Rational(kp1_p) / (Rational(1) - ax);
  } else if (x.sign() > 0) {
    // integral-test bound at x = 1
    mpz_class kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), kmax, p - 1);
    tail = Rational(1) / (Rational(static_cast<long>(p) - 1) * Rational(kp));
  } else {
    // alternating at x = -1: first omitted term
    tail = Rational(kp1_p).reciprocal();
  }
  return SeriesEnclosure{Ball(sum, tail), kmax, tail};
}

// The Laplace transform of pFp[1..1;2..2;t] against e^{-st}, integrated
// termwise: sum_k s^{-(k+1)}/(k+1)^p. Returns that partial sum and
// polylog_partial(p, 1/s, kmax); the two enclose the same number Li_p(1/s).
inline std::pair<Ball, Ball> laplace_identity_check(unsigned long p, const Rational& s,
                                                    unsigned long kmax) {
  if (s <= Rational(1)) throw std::invalid_argument("laplace_identity_check: s must be > 1");
  Rational inv_s = s.reciprocal();
  Rational sum(0);
  Rational spow(1);  // s^{-k}
  for (unsigned long k = 0; k <= kmax; ++k) {
    spow *= inv_s;  // s^{-(k+1)}
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), k + 1, p);
    sum += spow / Rational(den);
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), kmax + 2, p);
  Rational tail = spow * inv_s / Rational(den) / (Rational(1) - inv_s);
  Ball lhs(sum, tail);
  return {lhs, polylog_partial(p, inv_s, kmax).value};
}

// Test-support quadrature of int_0^inf (1-e^{-t})^n e^{-t} t^{p-1} dt
// (= n!(p-1)!|S_n^p|) by Richardson-refined composite Simpson in doubles.
// Precision class 1e-8..1e-12; heuristic radius.
inline Ball quadrature_integral_rep(unsigned long n, unsigned long p, const Rational& tol) {
  if (p < 1) throw std::invalid_argument("quadrature_integral_rep: p must be >= 1");
  if (tol < pow10(-12))
    throw std::invalid_argument("quadrature_integral_rep: tol below the quadrature class");
  double tol_d = tol.to_double();
  // Cut the domain where the analytic tail int_T^inf e^{-t} t^{p-1} dt,
  // an upper bound for the integrand's tail, drops below tol/4.
  double T = 1.0;
  // (p-1)! e^{-x} sum_{j<p} x^j/j!, the upper incomplete gamma at integer p.
  auto upper_tail = [&](double x) {
    double s = 0.0, term = 1.0;
    for (unsigned long j = 0; j < p; ++j) {
      s += term;
      term *= x / static_cast<double>(j + 1);
    }
    double fact = 1.0;
    for (unsigned long j = 2; j + 1 <= p; ++j) fact *= static_cast<double>(j);
    return fact * std::exp(-x) * s;
  };
  while (upper_tail(T) > tol_d / 4 && T < 400.0) T += 1.0;
  auto f = [&](double t) {
    double base = 1.0 - std::exp(-t);
    double v = std::exp(-t) * std::pow(t, static_cast<double>(p - 1));
    return v * std::pow(base, static_cast<double>(n));
  };
  auto simpson = [&](std::size_t m) {
    double h = T / static_cast<double>(m);
    double acc = f(0.0) + f(T);
    for (std::size_t i = 1; i < m; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * f(h * static_cast<double>(i));
    return acc * h / 3.0;
  };
  std::size_t m = 64;
  double prev = simpson(m);
  for (;;) {
    m *= 2;
    double cur = simpson(m);
    double diff = std::abs(cur - prev);
    if (diff / 15.0 <= tol_d / 4 || m >= (1u << 22)) {
      double value = cur + (cur - prev) / 15.0;
      double radius = diff / 15.0 + tol_d / 2 + 1e-15 * (1.0 + std::abs(value));
      if (m >= (1u << 22) && diff / 15.0 > tol_d / 4)
        throw std::runtime_error("quadrature_integral_rep: failed to converge at this tol");
      return Ball(detail::rational_from_double(value), detail::rational_from_double(radius));
    }
    prev = cur;
  }
}

}  // namespace zetastir
