#include "cfinite/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace cfinite {

mpfr_prec_t digits_to_bits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 16;
}

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  // Leave the source as a valid minimal-precision zero.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow10(long e, mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(std::labs(e)), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
  return r;
}

namespace {

void widen(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(v_, o.v_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(v_, o.v_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(v_, o.v_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen(v_, o.v_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Rational BigFloat::to_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string BigFloat::to_string(unsigned digits) const {
  std::vector<char> buf(digits + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", static_cast<int>(digits), v_);
  return buf.data();
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cos(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sin(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat root(const BigFloat& x, unsigned long k) {
  BigFloat r(x.precision());
  mpfr_rootn_ui(r.v_, x.v_, k, MPFR_RNDN);
  return r;
}

BigFloat round(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_round(r.v_, x.v_);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re * o.re - im * o.im;
  BigFloat i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  // Smith's algorithm avoids overflow and keeps relative accuracy.
  if (cfinite::abs(o.re) >= cfinite::abs(o.im)) {
    BigFloat ratio = o.im / o.re;
    BigFloat den = o.re + o.im * ratio;
    BigFloat r = (re + im * ratio) / den;
    BigFloat i = (im - re * ratio) / den;
    re = std::move(r);
    im = std::move(i);
  } else {
    BigFloat ratio = o.re / o.im;
    BigFloat den = o.re * ratio + o.im;
    BigFloat r = (re * ratio + im) / den;
    BigFloat i = (im * ratio - re) / den;
    re = std::move(r);
    im = std::move(i);
  }
  return *this;
}

std::string BigComplex::to_string(unsigned digits) const {
  std::string s = re.to_string(digits);
  if (im.sign() < 0) {
    s += " - " + (-im).to_string(digits) + "*I";
  } else {
    s += " + " + im.to_string(digits) + "*I";
  }
  return s;
}

BigComplex BigComplex::polar(const BigFloat& r, const BigFloat& theta) {
  return {r * cos(theta), r * sin(theta)};
}

BigComplex BigComplex::root(unsigned k) const {
  if (is_zero()) return *this;
  BigFloat mag = cfinite::root(abs(), k);
  BigFloat arg = atan2(im, re) / BigFloat(static_cast<long>(k), precision());
  return polar(mag, arg);
}

}  // namespace cfinite
