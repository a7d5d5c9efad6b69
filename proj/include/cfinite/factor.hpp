#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

#include "cfinite/bigfloat.hpp"
#include "cfinite/guess.hpp"
#include "cfinite/roots.hpp"
#include "cfinite/sequence.hpp"

namespace cfinite {

/// seq = left * right (termwise), exactly verified.
///
/// Factorizations are unique only up to (left, right) -> (k left, right / k),
/// root rescaling by a rational s (left(n) s^n, right(n) s^-n) and swapping
/// factors of equal order. The canonical representative has
///   - left normalized: integer input gives content 1 with first nonzero term
///     positive; otherwise the first nonzero initial term is 1,
///   - the factors ordered by (order, rec, init) when the orders agree.
struct FactorPair {
  CFiniteSeq left;
  CFiniteSeq right;
  std::string normalization;
  ProofCertificate certificate;
};

// Closest rational with denominator <= max_den, accepted only when within
// rel_tol * max(1, |x|).
std::optional<Rational> reconstruct_rational(const BigFloat& x, const Integer& max_den, const BigFloat& rel_tol);

inline const Integer kReconstructionDenominatorBound = 1000000;

// Splits the L1*L2 characteristic roots into a multiplicative L1 x L2 grid,
// recovers rational factor recurrences and initial values, and verifies the
// product exactly. Retries at 2x and 4x the requested digits when rational
// reconstruction fails; throws PrecisionInsufficient if it never succeeds.
std::optional<FactorPair> factorize_roots(const CFiniteSeq& seq, std::size_t l1, std::size_t l2,
                                          unsigned digits = kDefaultDigits);

struct IntegerSearch {
  std::size_t bound = 3;
  std::chrono::duration<double> budget = std::chrono::seconds(60);
  bool parallel = true;
};

struct IntegerSearchStats {
  std::size_t candidates = 0;        // (rec, init) pairs screened
  std::size_t enumeration_size = 0;  // size of the candidate space
};

// Left candidates: integer recurrences with entries in [-bound, bound],
// c_L1 != 0, initial values in the same range with content 1 and first
// nonzero positive, in lexicographic order over the value order
// 0, 1, -1, 2, -2, ... (for L1 = 1 the units c_1 = +-1 are tried last).
// Throws BudgetExhausted when time runs out.
std::optional<FactorPair> factorize_integer(const CFiniteSeq& seq, std::size_t l1, std::size_t l2,
                                            const IntegerSearch& search = {}, IntegerSearchStats* stats = nullptr);

}  // namespace cfinite
