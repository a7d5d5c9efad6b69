#include "cfinite/kernels.hpp"

#include <atomic>
#include <bit>
#include <exception>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cfinite/errors.hpp"

namespace cfinite::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::optional<std::size_t> first_match_serial(std::size_t n, const IndexPredicate& pred) {
  for (std::size_t i = 0; i < n; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

std::optional<std::size_t> first_match_omp(std::size_t n, const IndexPredicate& pred) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i > best.load(std::memory_order_relaxed)) continue;
    try {
      if (pred(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (...) {
      errors[i] = std::current_exception();
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }

  const std::size_t hit = best.load();
  if (hit == kNone) return std::nullopt;
  if (errors[hit]) std::rethrow_exception(errors[hit]);
  return hit;
}

namespace {

struct TransferTables {
  unsigned width;
  std::size_t states;
  std::vector<bool> tileable;  // mask is a disjoint union of adjacent pairs
  std::vector<Rational> hpow;
  std::vector<Rational> vpow;
};

TransferTables make_tables(unsigned width, const Rational& h, const Rational& v) {
  if (width == 0 || width > 20) throw PreconditionError("transfer step: unsupported width");
  TransferTables t{width, std::size_t{1} << width, {}, {}, {}};
  t.tileable.assign(t.states, false);
  for (std::size_t mask = 0; mask < t.states; ++mask) {
    bool ok = true;
    unsigned run = 0;
    for (unsigned b = 0; b <= width; ++b) {
      if (b < width && (mask >> b) & 1u) {
        ++run;
      } else {
        if (run % 2) ok = false;
        run = 0;
      }
    }
    t.tileable[mask] = ok;
  }
  t.hpow.resize(width / 2 + 1);
  t.vpow.resize(width + 1);
  t.hpow[0] = 1;
  t.vpow[0] = 1;
  for (std::size_t k = 1; k < t.hpow.size(); ++k) t.hpow[k] = t.hpow[k - 1] * h;
  for (std::size_t k = 1; k < t.vpow.size(); ++k) t.vpow[k] = t.vpow[k - 1] * v;
  return t;
}

}  // namespace

RationalVec transfer_step_serial(unsigned width, const RationalVec& state, const Rational& h, const Rational& v) {
  const TransferTables t = make_tables(width, h, v);
  if (state.size() != t.states) throw PreconditionError("transfer step: state vector has wrong length");
  const std::size_t full = t.states - 1;
  RationalVec out(t.states);
  for (std::size_t from = 0; from < t.states; ++from) {
    if (state[from] == 0) continue;
    const std::size_t open = full & ~from;
    // every subset `down` of the open cells starts a vertical domino
    for (std::size_t down = open;; down = (down - 1) & open) {
      const std::size_t rest = open & ~down;
      if (t.tileable[rest]) {
        const auto nh = static_cast<std::size_t>(std::popcount(rest)) / 2;
        const auto nv = static_cast<std::size_t>(std::popcount(down));
        out[down] += state[from] * t.hpow[nh] * t.vpow[nv];
      }
      if (down == 0) break;
    }
  }
  return out;
}

RationalVec transfer_step_omp(unsigned width, const RationalVec& state, const Rational& h, const Rational& v) {
  const TransferTables t = make_tables(width, h, v);
  if (state.size() != t.states) throw PreconditionError("transfer step: state vector has wrong length");
  const std::size_t full = t.states - 1;
  RationalVec out(t.states);
  const auto count = static_cast<std::ptrdiff_t>(t.states);

  // Pull form: each target state is owned by exactly one iteration.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const auto down = static_cast<std::size_t>(k);
    const auto nv = static_cast<std::size_t>(std::popcount(down));
    const std::size_t candidates = full & ~down;
    Rational acc = 0;
    for (std::size_t from = candidates;; from = (from - 1) & candidates) {
      if (state[from] != 0) {
        const std::size_t rest = full & ~from & ~down;
        if (t.tileable[rest]) {
          const auto nh = static_cast<std::size_t>(std::popcount(rest)) / 2;
          acc += state[from] * t.hpow[nh];
        }
      }
      if (from == 0) break;
    }
    out[down] = acc * t.vpow[nv];
  }
  return out;
}

}  // namespace cfinite::kernels
