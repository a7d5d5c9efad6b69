#include "cfinite/linalg.hpp"

#include <algorithm>

#include "cfinite/errors.hpp"

namespace cfinite::linalg {

namespace {

std::vector<Integer> integer_row(const RationalVec& row) {
  const Integer den = common_denominator(row);
  std::vector<Integer> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) out[j] = row[j].get_num() * (den / row[j].get_den());
  return out;
}

// Back substitution on an echelon form. Free entries of x are read as given;
// pivot entries are overwritten. With `augmented`, column nvars is the rhs.
void back_substitute(const Echelon& e, std::size_t nvars, bool augmented, RationalVec& x) {
  for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
    const auto& row = e.rows[r];
    const std::size_t p = e.pivot_cols[r];
    Rational acc = augmented ? Rational(row[nvars]) : Rational(0);
    for (std::size_t j = p + 1; j < nvars; ++j) {
      if (row[j] != 0 && x[j] != 0) acc -= Rational(row[j]) * x[j];
    }
    x[p] = acc / Rational(row[p]);
  }
}

}  // namespace

Echelon bareiss(const Matrix& a, std::size_t pivot_limit) {
  Echelon e;
  e.cols = a.empty() ? 0 : a.front().size();
  std::vector<std::vector<Integer>> m;
  m.reserve(a.size());
  for (const auto& row : a) m.push_back(integer_row(row));

  const std::size_t nrows = m.size();
  Integer prev = 1;
  Integer t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < std::min(pivot_limit, e.cols) && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && m[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < e.cols; ++j) {
        t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()))
          throw InvariantViolation("bareiss: inexact division");
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rows = std::move(m);
  return e;
}

std::optional<RationalVec> solve(const Matrix& a, const RationalVec& b) {
  if (a.size() != b.size()) throw PreconditionError("solve: row count mismatch");
  if (a.empty()) return RationalVec{};
  const std::size_t n = a.front().size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = bareiss(aug, n);
  for (std::size_t r = e.pivot_cols.size(); r < e.rows.size(); ++r) {
    if (e.rows[r][n] != 0) return std::nullopt;
  }
  RationalVec x(n);
  back_substitute(e, n, true, x);
  return x;
}

std::vector<RationalVec> nullspace(const Matrix& a, std::size_t cols) {
  std::vector<RationalVec> basis;
  if (a.empty()) {
    for (std::size_t f = 0; f < cols; ++f) {
      RationalVec v(cols);
      v[f] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  Echelon e = bareiss(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivot_cols) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVec v(cols);
    v[f] = 1;
    back_substitute(e, cols, false, v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& a) {
  if (a.empty()) return 0;
  return bareiss(a, a.front().size()).pivot_cols.size();
}

}  // namespace cfinite::linalg
