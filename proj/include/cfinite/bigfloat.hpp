#pragma once

#include <mpfr.h>

#include <string>

#include "cfinite/rational.hpp"

namespace cfinite {

// Decimal digits -> MPFR bits, with a few guard bits.
mpfr_prec_t digits_to_bits(unsigned digits);

/// RAII MPFR value with an explicit per-object precision. Results of binary
/// operations take the larger operand precision, so no global default
/// precision is involved and values are safe to use from several threads.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 64);
  BigFloat(long v, mpfr_prec_t bits);
  BigFloat(const Rational& q, mpfr_prec_t bits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  static BigFloat pi(mpfr_prec_t bits);
  // 10^e at the given precision
  static BigFloat pow10(long e, mpfr_prec_t bits);

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Exact value of the binary float.
  Rational to_rational() const;
  std::string to_string(unsigned digits) const;

  friend BigFloat abs(const BigFloat& x);
  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat cos(const BigFloat& x);
  friend BigFloat sin(const BigFloat& x);
  friend BigFloat atan2(const BigFloat& y, const BigFloat& x);
  friend BigFloat root(const BigFloat& x, unsigned long k);
  friend BigFloat round(const BigFloat& x);
  friend BigFloat hypot(const BigFloat& x, const BigFloat& y);

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat root(const BigFloat& x, unsigned long k);
BigFloat round(const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);

/// Complex number over BigFloat; only what root finding needs.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t bits = 64) : re(bits), im(bits) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return re.precision(); }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }

  BigFloat abs() const { return hypot(re, im); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::string to_string(unsigned digits) const;

  static BigComplex polar(const BigFloat& r, const BigFloat& theta);
  // Principal k-th root.
  BigComplex root(unsigned k) const;
};

}  // namespace cfinite
