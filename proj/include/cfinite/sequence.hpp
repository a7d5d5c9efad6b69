#pragma once

#include <cstddef>
#include <string>

#include "cfinite/polynomial.hpp"
#include "cfinite/rational.hpp"

namespace cfinite {

/// A C-finite sequence a(n) = c_1 a(n-1) + ... + c_L a(n-L), stored as the
/// pair [[d_1..d_L],[c_1..c_L]] with a(0) = d_1, ..., a(L-1) = d_L.
///
/// Values are immutable once built. c_L = 0 is allowed (padded input); use
/// minimize() for the canonical shortest form.
class CFiniteSeq {
 public:
  // Throws PreconditionError unless init and rec are non-empty and of equal
  // length.
  CFiniteSeq(RationalVec init, RationalVec rec);

  static CFiniteSeq zero() { return CFiniteSeq({0}, {1}); }

  std::size_t order() const { return rec_.size(); }
  const RationalVec& init() const { return init_; }
  const RationalVec& rec() const { return rec_; }

  // z^L - c_1 z^(L-1) - ... - c_L
  Polynomial characteristic_polynomial() const;

  bool is_zero() const;

  friend bool operator==(const CFiniteSeq& a, const CFiniteSeq& b) {
    return a.init_ == b.init_ && a.rec_ == b.rec_;
  }

 private:
  RationalVec init_;
  RationalVec rec_;
};

RationalVec eval_terms(const CFiniteSeq& seq, std::size_t count);

// Single term by binary powering of the companion matrix.
Rational eval_at(const CFiniteSeq& seq, std::size_t n);

// Shortest representation of the same sequence (via the reduced generating
// function). The zero sequence minimizes to [[0],[1]].
CFiniteSeq minimize(const CFiniteSeq& seq);

// Order of minimize(seq).
std::size_t minimal_order(const CFiniteSeq& seq);

CFiniteSeq shift(const CFiniteSeq& seq, std::size_t k);
CFiniteSeq scale(const CFiniteSeq& seq, const Rational& r);

// Lexicographic by (order, rec, init); used to order factor pairs.
bool canonical_less(const CFiniteSeq& a, const CFiniteSeq& b);

}  // namespace cfinite
