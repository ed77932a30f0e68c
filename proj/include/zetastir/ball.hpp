#pragma once

// Ball (center +/- radius) arithmetic over exact rationals. Every operation
// is outward-conservative: the result interval contains all pointwise
// results of the operands. Radius 0 balls stay exact through arithmetic.

#include <stdexcept>

#include "zetastir/rational.hpp"

namespace zetastir {

class Ball {
 public:
  Ball() : c_(0), r_(0) {}
  explicit Ball(Rational center) : c_(std::move(center)), r_(0) {}
  Ball(Rational center, Rational radius) : c_(std::move(center)), r_(std::move(radius)) {
    if (r_.sign() < 0) throw std::invalid_argument("Ball: negative radius");
  }
  static Ball from_endpoints(const Rational& lo, const Rational& hi) {
    if (hi < lo) throw std::invalid_argument("Ball: empty interval");
    return Ball((lo + hi) / 2, (hi - lo) / 2);
  }

  const Rational& center() const { return c_; }
  const Rational& radius() const { return r_; }
  Rational lower() const { return c_ - r_; }
  Rational upper() const { return c_ + r_; }
  bool is_exact() const { return r_.is_zero(); }

  bool contains(const Rational& q) const { return (q - c_).abs() <= r_; }
  bool contains(const Ball& b) const { return (b.c_ - c_).abs() + b.r_ <= r_; }
  bool intersects(const Ball& b) const { return (b.c_ - c_).abs() <= r_ + b.r_; }
  bool straddles_zero() const { return contains(Rational(0)); }

  Ball operator-() const { return Ball(-c_, r_); }

  friend Ball operator+(const Ball& a, const Ball& b) { return Ball(a.c_ + b.c_, a.r_ + b.r_); }
  friend Ball operator-(const Ball& a, const Ball& b) { return Ball(a.c_ - b.c_, a.r_ + b.r_); }
  friend Ball operator*(const Ball& a, const Ball& b) {
    // |xy - c1 c2| <= |c1| r2 + |c2| r1 + r1 r2 for x,y in the operands
    return Ball(a.c_ * b.c_, a.c_.abs() * b.r_ + b.c_.abs() * a.r_ + a.r_ * b.r_);
  }
  friend Ball operator+(const Ball& a, const Rational& q) { return Ball(a.c_ + q, a.r_); }
  friend Ball operator+(const Rational& q, const Ball& a) { return a + q; }
  friend Ball operator-(const Ball& a, const Rational& q) { return Ball(a.c_ - q, a.r_); }
  friend Ball operator-(const Rational& q, const Ball& a) { return Ball(q - a.c_, a.r_); }
  friend Ball operator*(const Ball& a, const Rational& q) { return Ball(a.c_ * q, a.r_ * q.abs()); }
  friend Ball operator*(const Rational& q, const Ball& a) { return a * q; }

  Ball reciprocal() const {
    if (straddles_zero()) throw std::domain_error("Ball: reciprocal of interval containing zero");
    Rational lo = lower(), hi = upper();
    return from_endpoints(hi.reciprocal(), lo.reciprocal());
  }
  friend Ball operator/(const Ball& a, const Ball& b) { return a * b.reciprocal(); }
  friend Ball operator/(const Ball& a, const Rational& q) {
    if (q.is_zero()) throw std::domain_error("Ball: division by zero");
    return Ball(a.c_ / q, a.r_ / q.abs());
  }

  // Rounds the radius up to a dyadic with ~bits significant bits, keeping the
  // center exact. Containment is preserved; denominators stop growing.
  Ball coarsened(unsigned bits = 64) const {
    if (r_.is_zero()) return *this;
    long mag = static_cast<long>(mpz_sizeinbase(r_.num().get_mpz_t(), 2)) -
               static_cast<long>(mpz_sizeinbase(r_.den().get_mpz_t(), 2));
    long k = static_cast<long>(bits) - mag;
    if (k <= 0) k = 0;
    mpz_class two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
    mpz_class up;
    mpz_cdiv_q(up.get_mpz_t(), mpz_class(r_.num() * two_k).get_mpz_t(), r_.den().get_mpz_t());
    return Ball(c_, Rational(up, two_k));
  }

 private:
  Rational c_, r_;
};

namespace detail {

// Tail of sum_{k>K} x^k/k! for x >= 0, bounded geometrically; valid (and
// finite) once x < K+2.
inline Rational exp_tail_bound(const Rational& x, unsigned long K, const Rational& term_next) {
  Rational ratio = x / Rational(static_cast<long>(K) + 2);
  return term_next / (Rational(1) - ratio);
}

inline Ball exp_ball_nonneg(const Rational& x, const Rational& eps) {
  Rational sum(0);
  Rational term(1);  // x^k/k!
  unsigned long k = 0;
  // Truncation index from the factorial tail bound, not from term size.
  for (;;) {
    sum += term;
    Rational term_next = term * x / Rational(static_cast<long>(k) + 1);
    if (Rational(2) * x < Rational(static_cast<long>(k) + 2)) {
      Rational tail = exp_tail_bound(x, k, term_next);
      if (tail <= eps) return Ball(sum + tail / 2, tail / 2);
    }
    term = term_next;
    ++k;
  }
}

}  // namespace detail

// Enclosure of e^x with radius <= eps. Negative x goes through the
// reciprocal of e^{|x|}, which only shrinks the radius (e^{|x|} >= 1).
inline Ball exp_ball(const Rational& x, const Rational& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("exp_ball: eps must be > 0");
  if (x.is_zero()) return Ball(Rational(1));
  if (x.sign() > 0) return detail::exp_ball_nonneg(x, eps);
  return detail::exp_ball_nonneg(-x, eps).reciprocal();
}

namespace detail {

// 2*atanh(u) = 2*sum u^(2k+1)/(2k+1) with certified geometric tail,
// for |u| <= 1/3.
inline Ball two_atanh(const Rational& u, const Rational& eps) {
  Rational u2 = u * u;
  Rational sum(0);
  Rational upow = u;  // u^(2k+1)
  unsigned long k = 0;
  for (;;) {
    sum += upow / Rational(2 * static_cast<long>(k) + 1);
    Rational next = upow * u2;
    Rational tail = Rational(2) * next.abs() /
                    (Rational(2 * static_cast<long>(k) + 3) * (Rational(1) - u2));
    if (tail <= eps) return Ball(Rational(2) * sum, tail);
    upow = next;
    ++k;
  }
}

inline Ball ln2_ball(const Rational& eps) { return two_atanh(Rational(1, 3), eps); }

}  // namespace detail

// Enclosure of ln(x) for rational x > 0, radius <= eps. Range-reduces to
// m in [1,2) so the atanh series argument stays <= 1/3.
inline Ball log_ball(const Rational& x, const Rational& eps) {
  if (x.sign() <= 0) throw std::domain_error("log_ball: argument must be > 0");
  if (eps.sign() <= 0) throw std::invalid_argument("log_ball: eps must be > 0");
  if (x == Rational(1)) return Ball(Rational(0));
  long e = static_cast<long>(mpz_sizeinbase(x.num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 2));
  Rational m = x / pow(Rational(2), e);
  while (m < Rational(1)) { m *= Rational(2); --e; }
  while (m >= Rational(2)) { m /= Rational(2); ++e; }
  Rational half = eps / 2;
  Ball lnm = detail::two_atanh((m - Rational(1)) / (m + Rational(1)), half);
  if (e == 0) return lnm;
  long ae = e < 0 ? -e : e;
  Ball l2 = detail::ln2_ball(half / Rational(ae));
  return lnm + l2 * Rational(e);
}

// Enclosure of sqrt(x), x >= 0, via integer square roots on a 2^-bits grid.
inline Ball sqrt_ball(const Rational& x, unsigned bits = 64) {
  if (x.sign() < 0) throw std::domain_error("sqrt_ball: negative argument");
  if (x.is_zero()) return Ball(Rational(0));
  mpz_class four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, bits);
  mpz_class prod = x.num() * x.den() * four_k;
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), prod.get_mpz_t());
  mpz_class two_k;
  mpz_ui_pow_ui(two_k.get_mpz_t(), 2, bits);
  mpz_class denom = x.den() * two_k;
  if (s * s == prod) return Ball(Rational(s, denom));
  return Ball::from_endpoints(Rational(s, denom), Rational(s + 1, denom));
}

}  // namespace zetastir
