#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zetastir/ball.hpp"

using zetastir::Ball;
using zetastir::Rational;

namespace {

struct Sampler {
  std::mt19937_64 rng{0xba11ba11};
  Rational rational(long num_range = 200, long den_range = 40) {
    std::uniform_int_distribution<long> dn(-num_range, num_range);
    std::uniform_int_distribution<long> dd(1, den_range);
    return Rational(dn(rng), dd(rng));
  }
  Ball ball() {
    std::uniform_int_distribution<long> dr(0, 50);
    return Ball(rational(), Rational(dr(rng), 17));
  }
  // A point of the interval: center + radius * t, t in [-1, 1].
  Rational point_in(const Ball& b) {
    std::uniform_int_distribution<long> dt(-16, 16);
    return b.center() + b.radius() * Rational(dt(rng), 16);
  }
};

}  // namespace

TEST_CASE("interval endpoints and containment") {
  Ball b = Ball::from_endpoints(Rational(1), Rational(3));
  CHECK(b.center() == Rational(2));
  CHECK(b.radius() == Rational(1));
  CHECK(b.contains(Rational(1)));
  CHECK(b.contains(Rational(3)));
  CHECK_FALSE(b.contains(Rational(7, 2)));
  CHECK(b.intersects(Ball::from_endpoints(Rational(3), Rational(5))));
  CHECK_FALSE(b.intersects(Ball::from_endpoints(Rational(4), Rational(5))));
  CHECK_THROWS_AS(Ball(Rational(0), Rational(-1)), std::invalid_argument);
}

TEST_CASE("arithmetic containment (randomized)") {
  Sampler s;
  for (int i = 0; i < 300; ++i) {
    Ball X = s.ball(), Y = s.ball();
    Rational x = s.point_in(X), y = s.point_in(Y);
    CHECK((X + Y).contains(x + y));
    CHECK((X - Y).contains(x - y));
    CHECK((X * Y).contains(x * y));
    if (!Y.straddles_zero()) {
      CHECK((X / Y).contains(x / y));
    }
  }
}

TEST_CASE("exact balls round-trip through arithmetic") {
  Ball a{Rational(3, 7)}, b{Rational(-2, 5)};
  CHECK((a + b).is_exact());
  CHECK((a * b).is_exact());
  CHECK((a * b).center() == Rational(3, 7) * Rational(-2, 5));
  CHECK((a / b).is_exact());
}

TEST_CASE("reciprocal requires a sign") {
  CHECK_THROWS_AS(Ball::from_endpoints(Rational(-1), Rational(1)).reciprocal(), std::domain_error);
  Ball r = Ball::from_endpoints(Rational(2), Rational(4)).reciprocal();
  CHECK(r.contains(Rational(1, 3)));
  CHECK(r.lower() == Rational(1, 4));
  CHECK(r.upper() == Rational(1, 2));
}

TEST_CASE("coarsened only grows the radius") {
  Ball b(Rational(22, 7), Rational(355, 113000000));
  Ball c = b.coarsened(24);
  CHECK(c.center() == b.center());
  CHECK(c.radius() >= b.radius());
  CHECK(c.contains(b));
}

TEST_CASE("exp_ball at zero is exact") {
  Ball e0 = zetastir::exp_ball(Rational(0), zetastir::pow10(-10));
  CHECK(e0.is_exact());
  CHECK(e0.center() == Rational(1));
}

namespace {

// Window of values whose decimal expansion starts with the given digits.
Ball digit_window(const std::string& digits, long frac_digits) {
  Rational lo = Rational(digits) / zetastir::pow10(frac_digits);
  return Ball::from_endpoints(lo, lo + zetastir::pow10(-frac_digits));
}

}  // namespace

TEST_CASE("exp_ball hits reference windows") {
  // e^-1 = 0.36787944117...
  Ball em1 = zetastir::exp_ball(Rational(-1), zetastir::pow10(-10));
  CHECK(em1.radius() <= zetastir::pow10(-10));
  CHECK(em1.intersects(digit_window("36787944117", 11)));
  // e = 2.71828182845904523536...
  Ball e1 = zetastir::exp_ball(Rational(1), zetastir::pow10(-20));
  CHECK(e1.radius() <= zetastir::pow10(-20));
  CHECK(e1.intersects(digit_window("271828182845904523536", 20)));
}

TEST_CASE("exp_ball radius contract on a grid") {
  for (long num : {-30L, -17L, -5L, -1L, 0L, 2L, 5L}) {
    for (long eexp : {-10L, -30L}) {
      Rational eps = zetastir::pow10(eexp);
      Ball b = zetastir::exp_ball(Rational(num), eps);
      CHECK(b.radius() <= eps);
      b = zetastir::exp_ball(Rational(2 * num + 1, 3), eps);
      CHECK(b.radius() <= eps);
    }
  }
}

TEST_CASE("exp_ball(x) * exp_ball(-x) contains 1") {
  for (long num : {-12L, -3L, 1L, 7L, 30L}) {
    Rational x(num, 4);
    Rational eps = zetastir::pow10(-15);
    Ball prod = zetastir::exp_ball(x, eps) * zetastir::exp_ball(-x, eps);
    CHECK(prod.contains(Rational(1)));
  }
}

TEST_CASE("exp_ball rejects bad eps") {
  CHECK_THROWS_AS(zetastir::exp_ball(Rational(1), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(zetastir::exp_ball(Rational(1), Rational(-1, 10)), std::invalid_argument);
}

TEST_CASE("log_ball digits and identities") {
  // ln 2 = 0.693147180559945309...
  Ball l2 = zetastir::log_ball(Rational(2), zetastir::pow10(-18));
  CHECK(l2.radius() <= zetastir::pow10(-18));
  CHECK(l2.intersects(digit_window("693147180559945309", 18)));
  CHECK(zetastir::log_ball(Rational(1), zetastir::pow10(-10)).is_exact());
  CHECK_THROWS_AS(zetastir::log_ball(Rational(0), Rational(1, 10)), std::domain_error);
  CHECK_THROWS_AS(zetastir::log_ball(Rational(-3), Rational(1, 10)), std::domain_error);
}

TEST_CASE("log_ball inverts exp_ball (containment)") {
  for (long n : {2L, 10L, 97L}) {
    Rational eps = zetastir::pow10(-25);
    Ball ln_n = zetastir::log_ball(Rational(n), eps);
    // e^{ln n} must contain n: evaluate exp at both endpoints.
    Ball lo = zetastir::exp_ball(ln_n.lower(), eps);
    Ball hi = zetastir::exp_ball(ln_n.upper(), eps);
    CHECK(Ball::from_endpoints(lo.lower(), hi.upper()).contains(Rational(n)));
  }
}

TEST_CASE("sqrt_ball encloses") {
  Ball s2 = zetastir::sqrt_ball(Rational(2), 80);
  CHECK((s2 * s2).contains(Rational(2)));
  CHECK(zetastir::sqrt_ball(Rational(16)).is_exact());
  CHECK(zetastir::sqrt_ball(Rational(16)).center() == Rational(4));
  CHECK(zetastir::sqrt_ball(Rational(9, 4)).center() == Rational(3, 2));
  CHECK_THROWS_AS(zetastir::sqrt_ball(Rational(-1)), std::domain_error);
}
