#include "cfinite/polynomial.hpp"

#include <sstream>

#include "cfinite/errors.hpp"

namespace cfinite {

Polynomial::Polynomial(RationalVec coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(RationalVec{c}); }

Polynomial Polynomial::monomial(const Rational& c, int power) {
  RationalVec v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator[](int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  RationalVec out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::truncated(int n) const {
  if (n <= 0) return {};
  if (n > degree()) return *this;
  return Polynomial(RationalVec(coeffs_.begin(), coeffs_.begin() + n));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
  RationalVec rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial{}, *this};
  RationalVec quot(static_cast<std::size_t>(degree() - dd) + 1);
  const Rational& lead = divisor.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  const Rational scale(common_denominator(coeffs_), 1);
  RationalVec scaled(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) scaled[i] = coeffs_[i] * scale;
  Integer g = numerator_gcd(scaled);
  if (scaled.back() < 0) g = -g;
  for (auto& c : scaled) c /= g;
  return Polynomial(std::move(scaled));
}

namespace {

// Pseudo-remainder of integer polynomials: lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  RationalVec r = a.coeffs();
  const int db = b.degree();
  const Rational lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational top = r[static_cast<std::size_t>(k)];
    for (auto& c : r) c *= lead;
    if (top == 0) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k - db + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return Polynomial(std::move(r));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  Polynomial x = a.primitive_part();
  Polynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x * Rational(1 / x.leading());
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw InvariantViolation("exact_quotient: nonzero remainder");
  return q;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0) {
      out << cfinite::to_string(mag);
    } else if (mag == 1) {
      out << power;
    } else {
      out << cfinite::to_string(mag) << '*' << power;
    }
  }
  return out.str();
}

}  // namespace cfinite
