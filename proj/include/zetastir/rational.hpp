#pragma once

// Exact rational arithmetic on top of GMP, plus the integer combinatorics
// primitives used everywhere else: factorials, binomials, Pochhammer
// products and exact decimal rendering.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace zetastir {

// Arbitrary-precision fraction, always in lowest terms with positive
// denominator. Arithmetic is exact; division by zero throws.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit on purpose
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_set_num(v_.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(v_.get_mpq_t(), den.get_mpz_t());
    v_.canonicalize();
  }
  // Accepts "123", "-7/3".
  explicit Rational(const std::string& s) {
    if (v_.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal: " + s);
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return mpq_sgn(v_.get_mpq_t()); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const {
    Rational r;
    mpq_abs(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }
  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  // "n/d", or just "n" when the value is an integer.
  std::string fraction_str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  double to_double() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// b^e for integer e (negative e inverts; 0^e with e<0 throws).
inline Rational pow(const Rational& b, long e) {
  if (e < 0) return pow(b.reciprocal(), -e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), b.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), b.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

inline Rational pow10(long e) { return pow(Rational(10), e); }

inline Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

// C(n,k); 0 outside 0 <= k <= n.
inline Rational binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, static_cast<unsigned long>(k));
  return Rational(b);
}

// Shifted factorial (x)_n = x(x+1)...(x+n-1), (x)_0 = 1.
inline Rational pochhammer(const Rational& x, unsigned long n) {
  Rational r(1);
  Rational f = x;
  for (unsigned long i = 0; i < n; ++i) {
    r *= f;
    f += Rational(1);
  }
  return r;
}

// Decimal string of q with `digits` fractional digits, round-half-even.
// No floating point anywhere; a zero result never carries a sign.
inline std::string decimal_render(const Rational& q, unsigned digits) {
  if (digits < 1) throw std::invalid_argument("decimal_render: digits must be >= 1");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class a = ::abs(q.num()) * scale;
  const mpz_class& d = q.den();
  mpz_class quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  mpz_class twice = 2 * rem;
  if (twice > d || (twice == d && mpz_odd_p(quo.get_mpz_t()))) quo += 1;
  std::string sign = (q.sign() < 0 && quo != 0) ? "-" : "";
  mpz_class ip = quo / scale;
  mpz_class fp = quo % scale;
  std::string frac = fp.get_str();
  frac.insert(0, digits - frac.size(), '0');
  return sign + ip.get_str() + "." + frac;
}

}  // namespace zetastir
