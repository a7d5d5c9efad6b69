#pragma once

#include <cstddef>
#include <string>

#include "cfinite/polynomial.hpp"
#include "cfinite/sequence.hpp"

namespace cfinite {

/// Ordinary generating function numerator(z) / denominator(z).
///
/// Always normalized: gcd cancelled and denominator(0) == 1, so two equal
/// power series compare equal structurally.
class RationalGF {
 public:
  // Normalizes; throws PreconditionError if the reduced denominator vanishes
  // at 0 (not a power series) or is the zero polynomial.
  RationalGF(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  friend bool operator==(const RationalGF& a, const RationalGF& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

RationalGF c_to_r(const CFiniteSeq& seq);

// Order is max(deg numerator + 1, deg denominator), so a polynomial part is
// absorbed into the initial terms.
CFiniteSeq r_to_c(const RationalGF& gf);

RationalVec taylor(const RationalGF& gf, std::size_t count);

}  // namespace cfinite
