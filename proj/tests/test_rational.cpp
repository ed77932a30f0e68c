#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zetastir/rational.hpp"

using zetastir::Rational;

namespace {

// Deterministic rational sampler for property checks.
struct RationalGen {
  std::mt19937_64 rng{0x5eed5001};
  Rational operator()(long num_range = 1000, long den_range = 60) {
    std::uniform_int_distribution<long> dn(-num_range, num_range);
    std::uniform_int_distribution<long> dd(1, den_range);
    return Rational(dn(rng), dd(rng));
  }
};

}  // namespace

TEST_CASE("factorial small values") {
  CHECK(zetastir::factorial(0) == Rational(1));
  CHECK(zetastir::factorial(5) == Rational(120));
  CHECK(zetastir::factorial(10) == Rational(3628800));
}

TEST_CASE("binomial values and out-of-range convention") {
  CHECK(zetastir::binomial(4, 2) == Rational(6));
  for (unsigned long n = 0; n < 12; ++n) CHECK(zetastir::binomial(n, 0) == Rational(1));
  CHECK(zetastir::binomial(3, 5) == Rational(0));
  CHECK(zetastir::binomial(3, -1) == Rational(0));
}

TEST_CASE("pochhammer") {
  RationalGen gen;
  for (int i = 0; i < 20; ++i) CHECK(zetastir::pochhammer(gen(), 0) == Rational(1));
  for (unsigned long n = 0; n <= 12; ++n)
    CHECK(zetastir::pochhammer(Rational(1), n) == zetastir::factorial(n));
  CHECK(zetastir::pochhammer(Rational(1, 2), 2) == Rational(3, 4));
}

TEST_CASE("pochhammer splitting identity") {
  // (x)_{m+n} = (x)_m (x+m)_n
  RationalGen gen;
  for (int i = 0; i < 50; ++i) {
    Rational x = gen();
    for (unsigned long m : {0ul, 1ul, 7ul, 20ul}) {
      for (unsigned long n : {0ul, 3ul, 20ul}) {
        CHECK(zetastir::pochhammer(x, m + n) ==
              zetastir::pochhammer(x, m) * zetastir::pochhammer(x + Rational(static_cast<long>(m)), n));
      }
    }
  }
}

TEST_CASE("field axioms hold exactly") {
  RationalGen gen;
  for (int i = 0; i < 200; ++i) {
    Rational a = gen(), b = gen();
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("canonical form") {
  Rational q(2, -6);
  CHECK(q.num() == mpz_class(-1));
  CHECK(q.den() == mpz_class(3));
  CHECK(Rational(4, 2) == Rational(2));
  CHECK(Rational(0, 7).fraction_str() == "0");
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("pow with negative exponents") {
  CHECK(zetastir::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(zetastir::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(zetastir::pow(Rational(5), 0) == Rational(1));
  CHECK(zetastir::pow10(-3) == Rational(1, 1000));
}

TEST_CASE("decimal_render basics") {
  CHECK(zetastir::decimal_render(Rational(1, 3), 5) == "0.33333");
  CHECK(zetastir::decimal_render(Rational(-3, 4), 2) == "-0.75");
  CHECK(zetastir::decimal_render(Rational(2, 3), 4) == "0.6667");
  CHECK(zetastir::decimal_render(Rational(5), 2) == "5.00");
}

TEST_CASE("decimal_render round-half-even") {
  CHECK(zetastir::decimal_render(Rational(1, 8), 2) == "0.12");   // 0.125 -> even
  CHECK(zetastir::decimal_render(Rational(3, 8), 2) == "0.38");   // 0.375 -> even
  CHECK(zetastir::decimal_render(Rational(-1, 8), 2) == "-0.12");
  CHECK(zetastir::decimal_render(Rational(15, 100), 1) == "0.2");
  CHECK(zetastir::decimal_render(Rational(25, 100), 1) == "0.2");
}

TEST_CASE("decimal_render never renders negative zero") {
  CHECK(zetastir::decimal_render(Rational(-1, 10000), 2) == "0.00");
}
