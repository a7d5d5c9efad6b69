#include "cfinite/gf.hpp"

#include <algorithm>

#include "cfinite/errors.hpp"

namespace cfinite {

RationalGF::RationalGF(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw PreconditionError("generating function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  const Rational d0 = den_[0];
  if (d0 == 0) throw PreconditionError("denominator vanishes at 0: not a power series");
  const Rational inv = 1 / d0;
  num_ *= inv;
  den_ *= inv;
}

RationalGF c_to_r(const CFiniteSeq& seq) {
  const std::size_t L = seq.order();
  RationalVec d(L + 1);
  d[0] = 1;
  for (std::size_t i = 1; i <= L; ++i) d[i] = -seq.rec()[i - 1];
  Polynomial den(std::move(d));
  Polynomial num = (Polynomial(seq.init()) * den).truncated(static_cast<int>(L));
  return RationalGF(std::move(num), std::move(den));
}

CFiniteSeq r_to_c(const RationalGF& gf) {
  const Polynomial& num = gf.numerator();
  const Polynomial& den = gf.denominator();
  if (num.is_zero()) return CFiniteSeq::zero();
  const std::size_t L = static_cast<std::size_t>(std::max(num.degree() + 1, den.degree()));
  RationalVec rec(L);
  for (std::size_t i = 1; i <= L; ++i) rec[i - 1] = -den[static_cast<int>(i)];
  return CFiniteSeq(taylor(gf, L), std::move(rec));
}

RationalVec taylor(const RationalGF& gf, std::size_t count) {
  const Polynomial& num = gf.numerator();
  const Polynomial& den = gf.denominator();
  const Rational inv_d0 = 1 / den[0];
  const int dd = den.degree();
  RationalVec out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    Rational acc = num[static_cast<int>(n)];
    const std::size_t upper = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(dd, 0)));
    for (std::size_t i = 1; i <= upper; ++i) {
      const Rational& di = den.coeffs()[i];
      if (di != 0) acc -= di * out[n - i];
    }
    out.push_back(acc * inv_d0);
  }
  return out;
}

}  // namespace cfinite
