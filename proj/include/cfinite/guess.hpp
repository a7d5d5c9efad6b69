#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfinite/gf.hpp"
#include "cfinite/sequence.hpp"

namespace cfinite {

struct GuessConfig {
  std::size_t max_order = 256;
  // Extra equations beyond the 2L needed to pin down an order-L fit.
  std::size_t safety_terms = 4;
  // Extra terms compared by prove_equal beyond the order bound.
  std::size_t verify_extra = 10;
};

/// Record of a finite-check equality proof: two objects known a priori to
/// differ by something determined by `order_bound` values agree on
/// `terms_checked` of them.
struct ProofCertificate {
  std::size_t order_bound = 0;
  std::size_t terms_checked = 0;
  std::string statement;
  bool verified = false;
  // Index of the first disagreement when not verified.
  std::optional<std::size_t> first_difference;
};

/// Polynomial relation P(a(n), a(n-1), ..., a(n-order)) = 0 with integer
/// coefficients. exponents[k][j] is the power of a(n-j) in monomial k.
struct PolyRelation {
  std::size_t order = 0;
  std::size_t degree = 0;
  std::vector<std::vector<unsigned>> exponents;
  std::vector<Rational> coefficients;

  // Value of the relation at index n (n >= order) of `terms`.
  Rational evaluate(std::span<const Rational> terms, std::size_t n) const;
  std::string to_string() const;
};

// Shortest recurrence fitting every supplied term, minimized; nullopt when no
// order up to min(max_order, (len - safety) / 2) fits. Throws
// PreconditionError with fewer than 4 terms.
std::optional<CFiniteSeq> guess_rec(std::span<const Rational> terms, const GuessConfig& cfg = {});

// Closure operations. Each samples enough terms to determine any sequence of
// the known order bound, guesses, and throws InvariantViolation if the guess
// fails at that bound.
CFiniteSeq add(const CFiniteSeq& a, const CFiniteSeq& b, const GuessConfig& cfg = {});
CFiniteSeq mul(const CFiniteSeq& a, const CFiniteSeq& b, const GuessConfig& cfg = {});
CFiniteSeq binomial_transform(const CFiniteSeq& s, const GuessConfig& cfg = {});
CFiniteSeq partial_sums(const CFiniteSeq& s, const GuessConfig& cfg = {});
CFiniteSeq subsequence(const CFiniteSeq& s, std::size_t step, std::size_t offset, const GuessConfig& cfg = {});

ProofCertificate prove_equal(const CFiniteSeq& a, const CFiniteSeq& b, const GuessConfig& cfg = {});

// Finds the relation of the requested shape with the smallest leading
// monomial (lexicographic, a(n) > a(n-1) > ...), which is the relation that
// depends least on the newest terms. The result is re-indexed so that its
// newest variable is a(n); `order` reports the order actually used.
std::optional<PolyRelation> guess_nlr(std::span<const Rational> terms, std::size_t order, std::size_t degree);

// Number of monomials of total degree <= degree in order+1 variables.
std::size_t nlr_monomial_count(std::size_t order, std::size_t degree);

// Fewest terms guess_nlr accepts: order + 2 * monomials + 4.
std::size_t nlr_min_terms(std::size_t order, std::size_t degree);

using ParamPoint = std::vector<Rational>;
using SeqBuilder = std::function<CFiniteSeq(const ParamPoint&)>;
using GfBuilder = std::function<RationalGF(const ParamPoint&)>;

struct IdentityCheck {
  SeqBuilder lhs;
  GfBuilder rhs;
  // degree bound of every series coefficient in each parameter
  std::vector<std::size_t> param_degrees;
  // grid values per parameter; empty means {0, 1, ..., degree + 2}
  std::vector<std::vector<Rational>> points;
  std::size_t series_terms = 20;
};

// Exact comparison of both sides at every point of the Cartesian grid. With
// at least degree+1 distinct values per parameter, agreement proves the
// coefficient identity up to series_terms. Grid points are checked in
// parallel; a failure report always names the lowest failing grid index.
ProofCertificate verify_parametric_identity(const IdentityCheck& check);

}  // namespace cfinite
