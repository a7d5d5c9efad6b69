#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP version used by the
// library and a serial reference kept for tests and benchmarks; both return
// identical results.

#include <cstddef>
#include <functional>
#include <optional>

#include "cfinite/rational.hpp"

namespace cfinite::kernels {

using IndexPredicate = std::function<bool(std::size_t)>;

// Lowest i in [0, n) with pred(i) true. The parallel version may evaluate
// pred on indices above the answer but never reports them. An exception
// thrown by pred is rethrown after the loop (the one from the lowest index).
std::optional<std::size_t> first_match_serial(std::size_t n, const IndexPredicate& pred);
std::optional<std::size_t> first_match_omp(std::size_t n, const IndexPredicate& pred);

// One row of the domino transfer matrix of a width-m strip applied to a state
// vector of length 2^m. A state bit marks a cell already covered by a
// vertical domino from the row above. Horizontal dominoes carry weight h,
// vertical ones weight v (charged in the row where they start).
RationalVec transfer_step_serial(unsigned width, const RationalVec& state, const Rational& h, const Rational& v);
RationalVec transfer_step_omp(unsigned width, const RationalVec& state, const Rational& h, const Rational& v);

int max_threads();

}  // namespace cfinite::kernels
