#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "zetastir/stirling.hpp"

using zetastir::Rational;
using zetastir::StirlingFirstTable;

namespace {

// Brute-force oracle: s(n,k) as n!/k! times the t^n coefficient of the k-th
// power of the degree-truncated series of ln(1+t). Independent of the
// triangular recurrence.
std::vector<std::vector<Rational>> stirling1_from_log_series(std::size_t nmax) {
  std::vector<Rational> log1p(nmax + 1, Rational(0));
  for (std::size_t m = 1; m <= nmax; ++m)
    log1p[m] = Rational(m % 2 == 1 ? 1 : -1, static_cast<long>(m));
  auto polymul = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(nmax + 1, Rational(0));
    for (std::size_t i = 0; i <= nmax; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= nmax; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  };
  std::vector<Rational> power(nmax + 1, Rational(0));
  power[0] = Rational(1);
  std::vector<std::vector<Rational>> out(nmax + 1, std::vector<Rational>(nmax + 1, Rational(0)));
  for (std::size_t k = 0; k <= nmax; ++k) {
    for (std::size_t n = 0; n <= nmax; ++n)
      out[n][k] = power[n] * zetastir::factorial(n) / zetastir::factorial(k);
    if (k < nmax) power = polymul(power, log1p);
  }
  return out;
}

Rational falling_factorial(long m, std::size_t n) {
  Rational r(1);
  for (std::size_t i = 0; i < n; ++i) r *= Rational(m - static_cast<long>(i));
  return r;
}

}  // namespace

TEST_CASE("first-kind table basic entries") {
  StirlingFirstTable t(6);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(3, 2) == -3);
  CHECK(t.at(4, 2) == 11);
  CHECK(t.at(5, 5) == 1);
  CHECK(t.at(4, 0) == 0);
  CHECK_THROWS_AS(t.at(2, 3), std::out_of_range);
  CHECK_THROWS_AS(t.at(7, 0), std::out_of_range);
}

TEST_CASE("first-kind table matches the log-series oracle up to n=12") {
  StirlingFirstTable t(12);
  auto oracle = stirling1_from_log_series(12);
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::size_t k = 0; k <= n; ++k) CHECK(t.at_q(n, k) == oracle[n][k]);
}

TEST_CASE("first-kind rows evaluate to falling factorials") {
  StirlingFirstTable t(25);
  for (std::size_t n = 0; n <= 25; ++n) {
    for (long m = 0; m <= 10; ++m) {
      Rational sum(0);
      Rational mpow(1);
      for (std::size_t k = 0; k <= n; ++k) {
        sum += t.at_q(n, k) * mpow;
        mpow *= Rational(m);
      }
      CHECK(sum == falling_factorial(m, n));
    }
  }
}

TEST_CASE("first-kind sign pattern") {
  StirlingFirstTable t(30);
  for (std::size_t n = 0; n <= 30; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      int sgn = mpz_sgn(t.at(n, k).get_mpz_t());
      if (sgn != 0) CHECK(((n - k) % 2 == 0 ? 1 : -1) == sgn);
    }
}

TEST_CASE("stirling1_bound dominates the table exhaustively") {
  StirlingFirstTable t(61);
  CHECK(zetastir::stirling1_bound(2, 1) >= Rational(3));  // |s(3,2)| = 3
  CHECK(zetastir::stirling1_bound(9, 2) >= t.at_q(10, 3).abs());
  for (long n = 2; n <= 60; ++n)
    for (long m = 1; m <= n - 1; ++m)
      CHECK(zetastir::stirling1_bound(n, m) >=
            t.at_q(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(m) + 1).abs());
  CHECK_THROWS_AS(zetastir::stirling1_bound(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(zetastir::stirling1_bound(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(zetastir::stirling1_bound(1, 1), std::invalid_argument);
}

TEST_CASE("generalized Stirling explicit values") {
  CHECK(zetastir::gen_stirling_explicit(0, 3) == Rational(1));
  CHECK(zetastir::gen_stirling_explicit(0, 7) == Rational(1));
  CHECK(zetastir::gen_stirling_explicit(1, 2) == Rational(-3, 4));
  for (unsigned long p = 1; p <= 6; ++p)
    CHECK(zetastir::gen_stirling_explicit(1, p) ==
          zetastir::pow(Rational(1, 2), static_cast<long>(p)) - Rational(1));
  for (unsigned long n = 0; n <= 30; ++n) {
    Rational expect = Rational(1) / zetastir::factorial(n + 1);
    if (n % 2 == 1) expect = -expect;
    CHECK(zetastir::gen_stirling_explicit(n, 1) == expect);
  }
}

TEST_CASE("three routes agree exactly") {
  CHECK(zetastir::gen_stirling_butzer(1, 2) == Rational(-3, 4));
  CHECK(zetastir::gen_stirling_butzer(0, 4) == Rational(1));
  CHECK(zetastir::gen_stirling_butzer(5, 3) == zetastir::gen_stirling_explicit(5, 3));
  for (unsigned long p = 1; p <= 5; ++p) {
    auto row = zetastir::gen_stirling_row(p, 60);
    for (unsigned long n = 0; n <= 60; ++n) {
      CHECK(row.values[n] == zetastir::gen_stirling_explicit(n, p));
      CHECK(row.values[n] == zetastir::gen_stirling_butzer(n, p));
    }
  }
}

TEST_CASE("row recurrence base and consistency") {
  auto row1 = zetastir::gen_stirling_row(1, 3);
  CHECK(row1.values == std::vector<Rational>{Rational(1), Rational(-1, 2), Rational(1, 6), Rational(-1, 24)});
  // 2 S_1^2 = S_1^1 - S_0^2
  auto row2 = zetastir::gen_stirling_row(2, 1);
  CHECK(Rational(2) * row2.values[1] == row1.values[1] - row2.values[0]);
  CHECK(row2.values[1] == Rational(-3, 4));
}

TEST_CASE("sign and factorial bound on the full grid") {
  for (unsigned long p = 1; p <= 8; ++p) {
    auto row = zetastir::gen_stirling_row(p, 150);
    Rational prev_scaled;
    for (unsigned long n = 0; n <= 150; ++n) {
      const Rational& v = row.values[n];
      CHECK((n % 2 == 0 ? v.sign() > 0 : v.sign() < 0));
      Rational scaled = v.abs() * zetastir::factorial(n);  // = n! |S_n^p| <= 1
      CHECK(scaled <= Rational(1));
      if (p >= 2 && n >= 1) CHECK(scaled < prev_scaled);
      prev_scaled = scaled;
    }
  }
}

TEST_CASE("g_value against direct products") {
  CHECK(zetastir::g_value(0, Rational(5)) == Rational(1, 5));
  CHECK(zetastir::g_value(0, Rational(7, 3)) == Rational(3, 7));
  CHECK(zetastir::g_value(1, Rational(1)) == Rational(-1, 2));
  CHECK(zetastir::g_value(2, Rational(1, 2)) == Rational(8, 15));  // 1/((1/2)(3/2)(5/2))
  CHECK_THROWS_AS(zetastir::g_value(3, Rational(-2)), std::domain_error);
  CHECK_THROWS_AS(zetastir::g_value(0, Rational(0)), std::domain_error);
}

TEST_CASE("g partial fraction equals Pochhammer form") {
  CHECK(zetastir::g_partial_fraction(0, Rational(7, 3)) == Rational(3, 7));
  CHECK(zetastir::g_partial_fraction(4, Rational(2)) == zetastir::g_value(4, Rational(2)));
  // -1/(x(x+1)) at a few x
  for (long a : {1L, 3L, 10L}) {
    Rational x(a, 2);
    CHECK(zetastir::g_partial_fraction(1, x) == -(x * (x + Rational(1))).reciprocal());
  }
  std::mt19937_64 rng(0x9c0ffee);
  std::uniform_int_distribution<long> dn(1, 400), dd(2, 40);
  for (int i = 0; i < 50; ++i) {
    long num = dn(rng), den = dd(rng);
    Rational x(rng() % 2 == 0 ? num : -num, den);
    if (x.is_integer()) continue;  // only integers can hit poles
    for (unsigned long n : {0ul, 1ul, 5ul, 20ul})
      CHECK(zetastir::g_partial_fraction(n, x) == zetastir::g_value(n, x));
  }
  CHECK_THROWS_AS(zetastir::g_partial_fraction(3, Rational(-1)), std::domain_error);
}

TEST_CASE("S_n^1 equals g_value at 1") {
  auto row = zetastir::gen_stirling_row(1, 50);
  for (unsigned long n = 0; n <= 50; ++n) CHECK(row.values[n] == zetastir::g_value(n, Rational(1)));
}

TEST_CASE("vertical generating function partial sums") {
  // pmax = 0 collapses to S_n^1
  for (unsigned long n : {0ul, 1ul, 4ul}) {
    Rational expect = Rational(1) / zetastir::factorial(n + 1);
    if (n % 2 == 1) expect = -expect;
    CHECK(zetastir::vertical_gf_partial(n, Rational(1, 2), 0) == expect);
  }
  // n = 1: coefficients are S_1^{p+1} = 1/2^{p+1} - 1, limit -4/3 at t = 1/2
  Rational t(1, 2);
  Rational direct(0);
  for (long p = 0; p <= 30; ++p)
    direct += (zetastir::pow(Rational(1, 2), p + 1) - Rational(1)) * zetastir::pow(t, p);
  CHECK(zetastir::vertical_gf_partial(1, t, 30) == direct);
  CHECK(zetastir::g_value(1, Rational(1) - t) == Rational(-4, 3));
  // tail bound (2^n/n!) t^{pmax+1}/(1-t) against the closed-form limit
  for (unsigned long n : {1ul, 5ul, 10ul}) {
    Rational partial = zetastir::vertical_gf_partial(n, t, 80);
    Rational limit = zetastir::g_value(n, Rational(1) - t);
    Rational bound = zetastir::pow(Rational(2), static_cast<long>(n)) / zetastir::factorial(n) *
                     zetastir::pow(t, 81) / (Rational(1) - t);
    CHECK((partial - limit).abs() <= bound);
  }
  CHECK_THROWS_AS(zetastir::vertical_gf_partial(2, Rational(0), 5), std::invalid_argument);
  CHECK_THROWS_AS(zetastir::vertical_gf_partial(2, Rational(3, 2), 5), std::invalid_argument);
}
