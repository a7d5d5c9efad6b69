#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfinite/roots.hpp"
#include "cfinite/sequence.hpp"

namespace cfinite {

/// Horizontal and vertical domino weights.
struct DimerWeights {
  Rational horizontal = 1;
  Rational vertical = 1;
};

constexpr unsigned kMaxDimerWidth = 10;

// Weighted perfect-matching counts of the m x n grid for n = 1..N.
// Throws ResourceError for m > kMaxDimerWidth.
RationalVec dimer_terms(unsigned m, std::size_t n_terms, const DimerWeights& w = {}, bool parallel = true);

// Minimal recurrence of n -> count(m, n), n >= 1. For odd m the odd-n terms
// vanish and the sequence n -> count(m, 2n), n >= 1, is used instead.
CFiniteSeq dimer_seq(unsigned m, const DimerWeights& w = {});

// Closed-form product for the number of tilings, rounded. Throws
// PreconditionError when m*n is odd or m, n > 32, PrecisionInsufficient
// when the product is not within 1e-5 of an integer.
Integer kasteleyn_count(unsigned m, unsigned n);

struct DimerReport {
  unsigned width = 0;
  DimerWeights weights;
  CFiniteSeq sequence = CFiniteSeq::zero();
  bool applicable = false;
  std::string reason;  // set when not applicable
  std::optional<ProductVerdict> verdict;

  bool yes() const { return applicable && verdict && verdict->yes; }
  std::string to_string() const;
};

// Product test of dimer_seq(m) against k factors of order 2, where 2^k is
// its minimal order. Orders that are not a power of two and degenerate
// roots are reported as inapplicable.
DimerReport dimer_product_report(unsigned m, unsigned digits = kDefaultDigits, const DimerWeights& w = {});

}  // namespace cfinite
