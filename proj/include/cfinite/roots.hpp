#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfinite/bigfloat.hpp"
#include "cfinite/sequence.hpp"

namespace cfinite {

/// Characteristic roots of a recurrence at a stated decimal precision, with
/// optional Binet coefficients (a(n) = sum_i coefficients[i] * roots[i]^n).
struct BinetForm {
  std::vector<BigComplex> roots;
  std::vector<BigComplex> coefficients;  // empty unless requested
  unsigned precision_digits = 100;
  // Some pair of roots is closer than 10^(-digits/2) (relative): the
  // characteristic polynomial is numerically not squarefree.
  bool near_multiple = false;
  std::vector<bool> root_near_multiple;
  // max_i |p(root_i)|
  BigFloat max_residual;
};

/// Sorted (ascending) multiset of ratio-class sizes.
struct RepetitionProfile {
  std::vector<std::size_t> multiplicities;

  std::size_t total() const;
  friend bool operator==(const RepetitionProfile&, const RepetitionProfile&) = default;
};

constexpr unsigned kDefaultDigits = 100;

// Aberth-Ehrlich iteration (fixed-seed start on the Cauchy-bound circle,
// double-precision warm-up, then MPFR refinement). Throws PreconditionError
// if c_L = 0 and PrecisionInsufficient if the residual bound is not met.
BinetForm char_roots(const CFiniteSeq& seq, unsigned digits = kDefaultDigits, bool with_coefficients = false);

// Generic profile of a Hadamard product of sequences of the given orders,
// computed combinatorially.
RepetitionProfile prod_indicator(const std::vector<std::size_t>& orders);

// Single-linkage clustering of the L^2 root ratios. rel_tol defaults to
// 10^(-digits/2). Throws PreconditionError for roots of magnitude below
// 10^(-digits/2).
RepetitionProfile ratio_profile(const BinetForm& bf, std::optional<BigFloat> rel_tol = std::nullopt);

// Placement of roots in an l1 x l2 table: grid[i][j] indexes the root
// alpha_i * beta_j.
using RootGrid = std::vector<std::vector<std::size_t>>;

// All tables with root 0 in the corner and
// root[grid[i][j]] = root[grid[i][0]] * root[grid[0][j]] / root[0]
// within rel_tol; stops after max_grids.
std::vector<RootGrid> multiplicative_grids(const std::vector<BigComplex>& roots, std::size_t l1, std::size_t l2,
                                           const BigFloat& rel_tol, std::size_t max_grids = 20000);

// True when the roots are, within rel_tol, the pairwise products of root
// sets of the given sizes (the root set of a product sequence).
bool is_root_tensor(const std::vector<BigComplex>& roots, const std::vector<std::size_t>& orders,
                    const BigFloat& rel_tol);

struct ProductVerdict {
  bool yes = false;
  // Every factor but one has order 1: true without any numerical evidence.
  bool trivial = false;
  std::vector<std::size_t> orders;
  // Observed profile equals the generic one.
  bool profile_match = false;
  // Set when the profiles differ only by extra coincidences and the roots
  // were checked to form a multiplicative grid directly.
  bool grid_match = false;
  RepetitionProfile expected;
  RepetitionProfile observed;
  unsigned digits = kDefaultDigits;
  std::string tolerance;  // relative clustering tolerance used
  std::string clustering = "single-linkage, relative tolerance";

  std::string to_string() const;
};

// Empirical product test: yes when the ratio profile equals the generic
// product profile, or when it is coarser (extra root coincidences) and the
// roots still form a multiplicative grid. Throws OrderMismatch when the minimal order is not
// the product of `orders`, DegenerateRoots for near-multiple roots.
ProductVerdict is_prod_g(const CFiniteSeq& seq, const std::vector<std::size_t>& orders,
                         unsigned digits = kDefaultDigits);
ProductVerdict is_prod(const CFiniteSeq& seq, std::size_t l1, std::size_t l2, unsigned digits = kDefaultDigits);

}  // namespace cfinite
