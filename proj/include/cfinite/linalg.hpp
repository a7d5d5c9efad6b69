#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cfinite/rational.hpp"

namespace cfinite::linalg {

using Matrix = std::vector<RationalVec>;

// Row-echelon form over Z produced by Bareiss fraction-free elimination.
// Every row of the input is first scaled to integers, so `rows` describes the
// same row space (and the same solution set) as the input.
struct Echelon {
  std::vector<std::vector<Integer>> rows;  // all input rows; zero below the rank
  std::vector<std::size_t> pivot_cols;     // strictly increasing
  std::size_t cols = 0;
};

// `pivot_limit` restricts pivot search to the first columns (used to keep an
// augmented right-hand side out of the pivot set).
Echelon bareiss(const Matrix& a, std::size_t pivot_limit);

// Solution of a x = b with every free variable set to 0, or nullopt when the
// system is inconsistent.
std::optional<RationalVec> solve(const Matrix& a, const RationalVec& b);

// Kernel basis: one vector per free column, in increasing column order; the
// vector for column f has a 1 at f, zeros at the other free columns.
std::vector<RationalVec> nullspace(const Matrix& a, std::size_t cols);

std::size_t rank(const Matrix& a);

}  // namespace cfinite::linalg
