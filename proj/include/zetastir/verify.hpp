#pragma once

// Runnable verification suites: each check exercises one of the library's
// defining identities over a fixed grid and reports pass/fail with a short
// diagnostic. Used by the CLI `verify` command and by the test harness.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zetastir/series.hpp"
#include "zetastir/stirling.hpp"
#include "zetastir/zeta.hpp"

namespace zetastir {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline void add_check(std::vector<CheckResult>& out, std::string name, bool passed,
                      std::string detail = {}) {
  out.push_back(CheckResult{std::move(name), passed, std::move(detail)});
}

}  // namespace detail

// Exact-arith spot checks, part of `verify --suite all`.
inline std::vector<CheckResult> verify_arith() {
  std::vector<CheckResult> out;
  {
    bool ok = true;
    std::mt19937_64 rng(0xa717);
    std::uniform_int_distribution<long> dn(-1000, 1000), dd(1, 60);
    for (int i = 0; i < 100 && ok; ++i) {
      Rational a(dn(rng), dd(rng)), b(dn(rng), dd(rng));
      ok = (a + b) - b == a && (b.is_zero() || (a * b) / b == a);
      Rational x(dn(rng), dd(rng));
      ok = ok && pochhammer(x, 25) == pochhammer(x, 10) * pochhammer(x + Rational(10), 15);
    }
    detail::add_check(out, "rational field identities and the Pochhammer splitting rule", ok);
  }
  {
    bool ok = true;
    for (long num : {-30L, -11L, -1L, 0L, 2L, 5L})
      for (long e : {-10L, -30L}) {
        Rational eps = pow10(e);
        Ball b = exp_ball(Rational(num), eps);
        ok = ok && b.radius() <= eps &&
             (exp_ball(Rational(num), eps) * exp_ball(Rational(-num), eps)).contains(Rational(1));
      }
    detail::add_check(out, "exp enclosure: radius <= eps on the grid and e^x e^-x contains 1", ok);
  }
  {
    bool ok = decimal_render(Rational(1, 8), 2) == "0.12" &&
              decimal_render(Rational(-3, 4), 2) == "-0.75" &&
              decimal_render(Rational(1, 3), 5) == "0.33333";
    detail::add_check(out, "decimal rendering is exact and rounds half to even", ok);
  }
  return out;
}

inline std::vector<CheckResult> verify_stirling() {
  std::vector<CheckResult> out;

  {
    bool ok = true;
    for (unsigned long p = 1; p <= 8 && ok; ++p) {
      GenStirlingRow row = gen_stirling_row(p, 150);
      for (unsigned long n = 0; n <= 150 && ok; ++n)
        ok = row.values[n] == gen_stirling_explicit(n, p) &&
             row.values[n] == gen_stirling_butzer(n, p);
    }
    detail::add_check(out, "S_n^p triple-route equality (explicit/recurrence/shifted), n<=150 p<=8", ok);
  }
  {
    bool ok = true;
    for (unsigned long p = 1; p <= 8 && ok; ++p) {
      GenStirlingRow row = gen_stirling_row(p, 150);
      Rational prev;
      for (unsigned long n = 0; n <= 150 && ok; ++n) {
        Rational scaled = row.values[n].abs() * factorial(n);
        ok = (n % 2 == 0 ? row.values[n].sign() > 0 : row.values[n].sign() < 0) &&
             scaled <= Rational(1) && (p < 2 || n < 1 || scaled < prev);
        prev = scaled;
      }
    }
    detail::add_check(out, "sign (-1)^n and |S_n^p| <= 1/n!, with n!|S_n^p| decreasing for p>=2", ok);
  }
  {
    StirlingFirstTable t(25);
    bool ok = true;
    for (std::size_t n = 0; n <= 25 && ok; ++n) {
      for (long m = 0; m <= 10 && ok; ++m) {
        Rational sum(0), mpow(1), ff(1);
        for (std::size_t k = 0; k <= n; ++k) {
          sum += t.at_q(n, k) * mpow;
          mpow *= Rational(m);
        }
        for (std::size_t i = 0; i < n; ++i) ff *= Rational(m - static_cast<long>(i));
        ok = sum == ff;
      }
    }
    detail::add_check(out, "first-kind rows reproduce falling factorials at integer points, n<=25", ok);
  }
  {
    StirlingFirstTable t(61);
    bool ok = true;
    for (long n = 2; n <= 60 && ok; ++n)
      for (long m = 1; m <= n - 1 && ok; ++m)
        ok = stirling1_bound(n, m) >=
             t.at_q(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(m) + 1).abs();
    detail::add_check(out, "log-power upper bound dominates |s(n+1,m+1)|, 2<=n<=60", ok);
  }
  {
    // coefficient extraction from truncated powers of ln(1+t)
    constexpr std::size_t nmax = 12;
    std::vector<Rational> log1p(nmax + 1, Rational(0));
    for (std::size_t m = 1; m <= nmax; ++m) log1p[m] = Rational(m % 2 == 1 ? 1 : -1, static_cast<long>(m));
    std::vector<Rational> power(nmax + 1, Rational(0));
    power[0] = Rational(1);
    StirlingFirstTable t(nmax);
    bool ok = true;
    for (std::size_t k = 0; k <= nmax; ++k) {
      for (std::size_t n = k; n <= nmax && ok; ++n)
        ok = power[n] * factorial(n) / factorial(k) == t.at_q(n, k);
      std::vector<Rational> next(nmax + 1, Rational(0));
      for (std::size_t i = 0; i <= nmax; ++i) {
        if (power[i].is_zero()) continue;
        for (std::size_t j = 1; i + j <= nmax; ++j) next[i + j] += power[i] * log1p[j];
      }
      power = std::move(next);
    }
    detail::add_check(out, "first-kind table matches log-power series coefficients, n<=12", ok);
  }
  {
    GenStirlingRow row = gen_stirling_row(1, 50);
    bool ok = true;
    for (unsigned long n = 0; n <= 50 && ok; ++n) ok = row.values[n] == g_value(n, Rational(1));
    detail::add_check(out, "S_n^1 equals g_n(1), n<=50", ok);
  }
  {
    std::mt19937_64 rng(0x5712573);
    std::uniform_int_distribution<long> dn(1, 500), dd(2, 48);
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
      Rational x(rng() % 2 == 0 ? dn(rng) : -dn(rng), dd(rng));
      if (x.is_integer()) continue;
      for (unsigned long n : {0ul, 3ul, 11ul, 20ul})
        ok = ok && g_partial_fraction(n, x) == g_value(n, x);
    }
    detail::add_check(out, "g_n Pochhammer form equals partial-fraction form at 50 sample points", ok);
  }
  return out;
}

inline std::vector<CheckResult> verify_gf() {
  std::vector<CheckResult> out;
  {
    bool ok = true;
    for (unsigned long p : {2ul, 3ul, 4ul})
      for (Rational t : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
        auto lhs = horizontal_gf_partial(p, t, 60);
        Ball rhs = exp_ball(-t, pow10(-27)) * pfp_ones_twos(p, t, pow10(-27)).value;
        ok = ok && lhs.value.radius() + rhs.radius() <= pow10(-25) && lhs.value.intersects(rhs);
      }
    detail::add_check(out, "horizontal gf: sum S_n^p t^n meets e^-t pFp[1..1;2..2;t] at 1e-25", ok);
  }
  {
    bool ok = true;
    Rational t(1, 2);
    for (unsigned long n : {1ul, 5ul, 10ul}) {
      Rational partial = vertical_gf_partial(n, t, 80);
      Rational limit = g_value(n, Rational(1) - t);
      Rational bound =
          pow(Rational(2), static_cast<long>(n)) / factorial(n) * pow(t, 81) / (Rational(1) - t);
      ok = ok && (partial - limit).abs() <= bound;
    }
    detail::add_check(out, "vertical gf: sum_p S_n^{p+1} t^p within the analytic tail of (-1)^n/(1-t)_{n+1}", ok);
  }
  {
    bool ok = true;
    for (unsigned long p : {2ul, 3ul})
      for (long t : {2L, 5L}) {
        auto lhs = delta_expansion_partial(p, Rational(t), 60, pow10(-15));
        auto rhs = pfp_ones_twos(p, Rational(t), pow10(-10));
        ok = ok && lhs.value.intersects(rhs.value);
      }
    detail::add_check(out, "incomplete-gamma expansion of pFp agrees within its reported tail", ok);
  }
  return out;
}

inline std::vector<CheckResult> verify_gamma() {
  std::vector<CheckResult> out;
  {
    bool ok = true;
    for (unsigned long a : {1ul, 2ul, 5ul}) {
      Rational prev(-1);
      for (long x : {1L, 2L, 4L, 8L, 16L}) {
        Ball g = lower_gamma_int(a, Rational(x), pow10(-30));
        ok = ok && g.lower() > Rational(0) && g.upper() < factorial(a - 1) && g.center() > prev;
        prev = g.center();
      }
    }
    detail::add_check(out, "gamma(a,x) closed form stays in (0,(a-1)!) and increases along x", ok);
  }
  {
    bool ok = true;
    for (unsigned long n = 0; n <= 5 && ok; ++n)
      for (unsigned long p : {2ul, 3ul})
        for (unsigned long N : {5ul, 10ul}) {
          auto [lhs, rhs] = gamma_temme_check(n, p, N, -1, pow10(-18));
          ok = ok && lhs.intersects(rhs);
        }
    detail::add_check(out, "gamma(n+p,N)/(n+p-1)! equals its e^-N N^{n+p} ratio series at 1e-18", ok);
  }
  {
    bool ok = true;
    for (unsigned long p : {2ul, 3ul, 4ul})
      for (long s : {2L, 3L}) {
        auto [lhs, rhs] = laplace_identity_check(p, Rational(s), 200);
        ok = ok && lhs.intersects(rhs);
      }
    detail::add_check(out, "termwise-integrated Laplace series equals Li_p(1/s)", ok);
  }
  return out;
}

inline std::vector<CheckResult> verify_integral() {
  std::vector<CheckResult> out;
  bool ok = true;
  Rational tol = pow10(-8);
  Rational worst(0);
  for (unsigned long p = 1; p <= 5 && ok; ++p) {
    for (unsigned long n = 0; n <= 10 && ok; ++n) {
      Ball q = quadrature_integral_rep(n, p, tol);
      Rational target = factorial(n) * factorial(p - 1) * gen_stirling_explicit(n, p).abs();
      Rational err = (q.center() - target).abs();
      worst = max(worst, err);
      ok = err <= Rational(10) * tol;
    }
  }
  detail::add_check(out, "quadrature of (1-e^-t)^n e^-t t^(p-1) matches n!(p-1)!|S_n^p|, n<=10 p<=5",
                    ok, "worst |error| " + decimal_render(worst, 12));
  return out;
}

inline std::vector<CheckResult> verify_zeta() {
  std::vector<CheckResult> out;
  {
    bool ok = true;
    for (long p : {2L, 3L, 4L, 5L, 7L})
      ok = ok && zeta_oracle(p, pow10(-30)).intersects(zeta_direct_enclosure(p, 600));
    detail::add_check(out, "zeta oracle: accelerated and direct-series enclosures intersect at 1e-30", ok);
  }
  {
    bool ok = true;
    for (auto [p, R] : {std::pair<long, long>{2, 1}, {3, 1}, {2, 5}, {3, 5}}) {
      Ball oracle = zeta_oracle(p, pow10(-12));
      ok = ok && zeta_split_eval(p, Rational(R), 150, 400, pow10(-12)).contains(oracle);
    }
    detail::add_check(out, "split representation (two-series form) contains zeta(p) at R in {1,5}", ok);
  }
  {
    bool ok = true;
    std::string cs;
    for (long p : {2L, 3L, 5L}) {
      auto records = error_sweep(p, {6, 10, 14, 18, 22});
      Rational cmax(0);
      for (std::size_t i = 0; i < records.size(); ++i) {
        if (i + 1 < records.size()) ok = ok && records[i].abs_err > records[i + 1].abs_err;
        Rational envelope = Rational(50) * Rational(records[i].N) *
                            exp_ball(Rational(-records[i].N), pow10(-50)).upper();
        ok = ok && records[i].abs_err <= envelope;
        cmax = max(cmax, records[i].ratio);
      }
      Rational slope = regression_slope_ln_abs_err(records);
      ok = ok && slope <= Rational(-9, 10);
      cs += " p=" + std::to_string(p) + ": C<=" + decimal_render(cmax, 4) +
            " slope=" + decimal_render(slope, 4);
    }
    detail::add_check(out, "decay law: |zeta(p)-zeta_N(p)| strictly decreasing, <= 50 N e^-N, slope <= -0.9",
                      ok, cs);
  }
  {
    bool ok = true;
    std::string ds;
    for (long N : {10L, 20L}) {
      auto eb = epsilon_breakdown(3, N);
      ok = ok && eb.eps1.upper() <= eb.eps1_paper_bound;
      ds += " N=" + std::to_string(N) + ": eps1<=" +
            decimal_render(eb.eps1.upper().abs(), 24);
    }
    detail::add_check(out, "eps1 upper end <= e^-N/sqrt(N) at p=3, N in {10,20}", ok, ds);
  }
  {
    bool ok = true;
    for (long p : {2L, 3L})
      for (long N : {10L, 15L}) {
        auto eb = epsilon_breakdown(p, N);
        Ball combo = eb.eps1 - eb.eps2 + eb.eps3 + eb.eps4;
        Ball diff = zeta_oracle(p, pow10(-40)) - zeta_n_approx(p, N).value;
        ok = ok && combo.contains(diff);
      }
    detail::add_check(out, "decomposition eps1-eps2+eps3+eps4 encloses zeta(p)-zeta_N(p)", ok);
  }
  return out;
}

inline std::vector<CheckResult> verify_all() {
  std::vector<CheckResult> out = verify_arith();
  for (auto&& c : verify_stirling()) out.push_back(std::move(c));
  for (auto&& c : verify_gf()) out.push_back(std::move(c));
  for (auto&& c : verify_gamma()) out.push_back(std::move(c));
  for (auto&& c : verify_integral()) out.push_back(std::move(c));
  for (auto&& c : verify_zeta()) out.push_back(std::move(c));
  return out;
}

}  // namespace zetastir
