#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cfinite/rational.hpp"

namespace cfinite {

/// Dense univariate polynomial over the rationals; coeffs()[k] multiplies x^k.
/// The zero polynomial has no coefficients, so degree() is -1 for it.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RationalVec coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int power);

  const RationalVec& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of x^k, zero outside the stored range.
  Rational operator[](int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial pow(unsigned e) const;

  // Keeps only the terms of degree < n.
  Polynomial truncated(int n) const;

  // Euclidean division over Q; throws on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  // Scales to integer coefficients with content 1 and positive leading
  // coefficient. The zero polynomial is returned unchanged.
  Polynomial primitive_part() const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  RationalVec coeffs_;
};

// Monic gcd; gcd(0, 0) = 0. Computed with a primitive pseudo-remainder
// sequence over Z, which keeps intermediate coefficients small.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Exact quotient; throws InvariantViolation if the division leaves a remainder.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

}  // namespace cfinite
