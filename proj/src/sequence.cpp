#include "cfinite/sequence.hpp"

#include <algorithm>

#include "cfinite/errors.hpp"
#include "cfinite/gf.hpp"

namespace cfinite {

CFiniteSeq::CFiniteSeq(RationalVec init, RationalVec rec) : init_(std::move(init)), rec_(std::move(rec)) {
  if (rec_.empty()) throw PreconditionError("C-finite sequence needs order >= 1");
  if (init_.size() != rec_.size())
    throw PreconditionError("initial terms and recurrence must have equal length (got " +
                            std::to_string(init_.size()) + " and " + std::to_string(rec_.size()) + ")");
}

Polynomial CFiniteSeq::characteristic_polynomial() const {
  const std::size_t L = order();
  RationalVec c(L + 1);
  c[L] = 1;
  for (std::size_t i = 1; i <= L; ++i) c[L - i] = -rec_[i - 1];
  return Polynomial(std::move(c));
}

bool CFiniteSeq::is_zero() const {
  return std::all_of(init_.begin(), init_.end(), [](const Rational& r) { return r == 0; });
}

RationalVec eval_terms(const CFiniteSeq& seq, std::size_t count) {
  const std::size_t L = seq.order();
  RationalVec out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    if (n < L) {
      out.push_back(seq.init()[n]);
      continue;
    }
    Rational acc = 0;
    for (std::size_t i = 1; i <= L; ++i) {
      const Rational& c = seq.rec()[i - 1];
      if (c != 0) acc += c * out[n - i];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

namespace {

using Square = std::vector<RationalVec>;

Square multiply(const Square& a, const Square& b) {
  const std::size_t n = a.size();
  Square c(n, RationalVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

Rational eval_at(const CFiniteSeq& seq, std::size_t n) {
  const std::size_t L = seq.order();
  if (n < L) return seq.init()[n];
  // State (a(k), ..., a(k+L-1)) advances by the companion matrix.
  Square companion(L, RationalVec(L));
  for (std::size_t i = 0; i + 1 < L; ++i) companion[i][i + 1] = 1;
  for (std::size_t j = 0; j < L; ++j) companion[L - 1][j] = seq.rec()[L - 1 - j];

  Square power(L, RationalVec(L));
  for (std::size_t i = 0; i < L; ++i) power[i][i] = 1;
  std::size_t e = n;
  while (e) {
    if (e & 1u) power = multiply(power, companion);
    e >>= 1u;
    if (e) companion = multiply(companion, companion);
  }
  Rational acc = 0;
  for (std::size_t j = 0; j < L; ++j) acc += power[0][j] * seq.init()[j];
  return acc;
}

CFiniteSeq minimize(const CFiniteSeq& seq) {
  CFiniteSeq out = r_to_c(c_to_r(seq));
  const std::size_t check = 2 * seq.order();
  if (eval_terms(out, check) != eval_terms(seq, check))
    throw InvariantViolation("minimize changed the sequence");
  return out;
}

std::size_t minimal_order(const CFiniteSeq& seq) { return minimize(seq).order(); }

CFiniteSeq shift(const CFiniteSeq& seq, std::size_t k) {
  if (k == 0) return seq;
  RationalVec terms = eval_terms(seq, k + seq.order());
  return CFiniteSeq(RationalVec(terms.begin() + static_cast<std::ptrdiff_t>(k), terms.end()), seq.rec());
}

CFiniteSeq scale(const CFiniteSeq& seq, const Rational& r) {
  RationalVec init = seq.init();
  for (auto& x : init) x *= r;
  return CFiniteSeq(std::move(init), seq.rec());
}

bool canonical_less(const CFiniteSeq& a, const CFiniteSeq& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  if (int c = compare(a.rec(), b.rec()); c != 0) return c < 0;
  return compare(a.init(), b.init()) < 0;
}

}  // namespace cfinite
