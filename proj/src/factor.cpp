#include "cfinite/factor.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "cfinite/errors.hpp"
#include "cfinite/kernels.hpp"
#include "cfinite/linalg.hpp"
#include "cfinite/text.hpp"

namespace cfinite {

std::optional<Rational> reconstruct_rational(const BigFloat& x, const Integer& max_den, const BigFloat& rel_tol) {
  Rational q = x.to_rational();
  // Convergents h/k of the continued fraction of q.
  Integer h_prev = 1, h = 0, k_prev = 0, k = 1;
  Rational best_h = 0;
  bool have = false;
  Rational rest = q;
  for (int step = 0; step < 4096; ++step) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    Integer h_next = a * h_prev + h;
    Integer k_next = a * k_prev + k;
    if (k_next > max_den) break;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    best_h = make_rational(h_prev, k_prev);
    have = true;
    Rational frac = rest - Rational(a);
    if (frac == 0) break;
    rest = 1 / frac;
  }
  if (!have) return std::nullopt;
  const mpfr_prec_t bits = x.precision();
  BigFloat scale = abs(x);
  const BigFloat one(1, bits);
  if (scale < one) scale = one;
  if (abs(BigFloat(best_h, bits) - x) > rel_tol * scale) return std::nullopt;
  return best_h;
}

namespace {

// Rational content: gcd of numerators over lcm of denominators, sign +.
Rational content(const RationalVec& v) {
  Integer g = numerator_gcd(v);
  if (g == 0) return 1;
  return make_rational(g, common_denominator(v));
}

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> out;
  if (n < 0) n = -n;
  for (unsigned long p = 2; p < 1000000 && Integer(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    out.emplace_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

long valuation(const Integer& n, const Integer& p) {
  if (n == 0) return 0;
  Integer m = abs(n);
  long v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

long ceil_div(long x, long k) { return x >= 0 ? (x + k - 1) / k : -((-x) / k); }

Rational rational_pow(const Rational& t, long e) {
  Rational r = 1;
  const Rational b = e >= 0 ? t : Rational(1 / t);
  for (long i = 0; i < std::labs(e); ++i) r *= b;
  return r;
}

// Root rescaling that makes the left monic polynomial integral with the
// smallest possible coefficients and a nonnegative leading trace.
Rational integral_gauge(const RationalVec& left_monic) {
  std::vector<Integer> primes;
  Integer num_gcd = 0;
  for (std::size_t k = 1; k < left_monic.size(); ++k) {
    const Rational& a = left_monic[k];
    if (a == 0) continue;
    for (auto& p : prime_factors(a.get_den())) primes.push_back(p);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), a.get_num_mpz_t());
  }
  for (auto& p : prime_factors(num_gcd)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  Rational t = 1;
  for (const auto& p : primes) {
    long e = std::numeric_limits<long>::min();
    for (std::size_t k = 1; k < left_monic.size(); ++k) {
      const Rational& a = left_monic[k];
      if (a == 0) continue;
      long v = valuation(a.get_num(), p) - valuation(a.get_den(), p);
      e = std::max(e, ceil_div(-v, static_cast<long>(k)));
    }
    t *= rational_pow(Rational(p), e);
  }
  for (std::size_t k = 1; k < left_monic.size(); k += 2) {
    if (left_monic[k] == 0) continue;
    if (left_monic[k] > 0) t = -t;
    break;
  }
  return t;
}

RationalVec rescale_monic(const RationalVec& monic, const Rational& t) {
  RationalVec out(monic.size());
  Rational pw = 1;
  for (std::size_t k = 0; k < monic.size(); ++k) {
    out[k] = monic[k] * pw;
    pw *= t;
  }
  return out;
}

RationalVec rec_from_monic(const RationalVec& monic) {
  RationalVec rec(monic.size() - 1);
  for (std::size_t k = 1; k < monic.size(); ++k) rec[k - 1] = -monic[k];
  return rec;
}

// Puts (left, right) in canonical form; returns false if a factor is zero.
bool canonicalize(CFiniteSeq& left, CFiniteSeq& right, bool integer_mode, std::string& note) {
  auto normalize_left = [&](CFiniteSeq& l, CFiniteSeq& r) {
    if (l.is_zero()) return false;
    Rational lambda;
    if (integer_mode && all_integers(eval_terms(l, 2 * l.order() + 2)) && all_integers(l.rec())) {
      lambda = 1 / content(l.init());
      auto first = std::find_if(l.init().begin(), l.init().end(), [](const Rational& x) { return x != 0; });
      if (*first < 0) lambda = -lambda;
    } else {
      auto first = std::find_if(l.init().begin(), l.init().end(), [](const Rational& x) { return x != 0; });
      lambda = 1 / *first;
    }
    l = scale(l, lambda);
    r = scale(r, 1 / lambda);
    note = "left scaled by " + to_string(lambda);
    return true;
  };
  if (!normalize_left(left, right)) return false;
  if (left.order() == right.order() && canonical_less(right, left)) {
    std::swap(left, right);
    if (!normalize_left(left, right)) return false;
    note += " after swapping factors";
  }
  return true;
}

// Solves seq(n) = x(n) y(n) for initial values, given both recurrences.
std::optional<FactorPair> pair_from_recurrences(const CFiniteSeq& target, const RationalVec& rec_left,
                                                const RationalVec& rec_right, bool integer_mode) {
  const std::size_t l1 = rec_left.size(), l2 = rec_right.size();
  const std::size_t unknowns = l1 * l2;
  const std::size_t rows = unknowns + 4;
  std::vector<RationalVec> u, v;
  for (std::size_t i = 0; i < l1; ++i) {
    RationalVec e(l1);
    e[i] = 1;
    u.push_back(eval_terms(CFiniteSeq(e, rec_left), rows));
  }
  for (std::size_t j = 0; j < l2; ++j) {
    RationalVec e(l2);
    e[j] = 1;
    v.push_back(eval_terms(CFiniteSeq(e, rec_right), rows));
  }
  const RationalVec t = eval_terms(target, rows);
  linalg::Matrix m(rows, RationalVec(unknowns));
  for (std::size_t n = 0; n < rows; ++n)
    for (std::size_t i = 0; i < l1; ++i)
      for (std::size_t j = 0; j < l2; ++j) m[n][i * l2 + j] = u[i][n] * v[j][n];
  auto z = linalg::solve(m, t);
  if (!z) return std::nullopt;

  auto at = [&](std::size_t i, std::size_t j) -> const Rational& { return (*z)[i * l2 + j]; };
  auto nz = std::find_if(z->begin(), z->end(), [](const Rational& x) { return x != 0; });
  if (nz == z->end()) return std::nullopt;
  const std::size_t i0 = static_cast<std::size_t>(nz - z->begin()) / l2;
  const std::size_t j0 = static_cast<std::size_t>(nz - z->begin()) % l2;
  RationalVec x(l1), y(l2);
  for (std::size_t i = 0; i < l1; ++i) x[i] = at(i, j0);
  for (std::size_t j = 0; j < l2; ++j) y[j] = at(i0, j) / at(i0, j0);
  for (std::size_t i = 0; i < l1; ++i)
    for (std::size_t j = 0; j < l2; ++j)
      if (at(i, j) != x[i] * y[j]) return std::nullopt;  // not rank one

  FactorPair pair{CFiniteSeq(x, rec_left), CFiniteSeq(y, rec_right), {}, {}};
  if (!canonicalize(pair.left, pair.right, integer_mode, pair.normalization)) return std::nullopt;
  pair.certificate = prove_equal(mul(pair.left, pair.right), target);
  if (!pair.certificate.verified) return std::nullopt;
  return pair;
}

std::vector<BigComplex> monic_from_roots(const std::vector<BigComplex>& roots, mpfr_prec_t bits) {
  std::vector<BigComplex> c{BigComplex(BigFloat(1, bits), BigFloat(bits))};
  for (const auto& r : roots) {
    std::vector<BigComplex> next(c.size() + 1, BigComplex(bits));
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j];
      next[j + 1] -= r * c[j];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

std::optional<FactorPair> factorize_roots(const CFiniteSeq& seq, std::size_t l1, std::size_t l2, unsigned digits) {
  if (l1 < 1 || l2 < 1) throw PreconditionError("factorize_roots: orders must be >= 1");
  const CFiniteSeq m = minimize(seq);
  if (m.order() != l1 * l2)
    throw OrderMismatch("minimal order " + std::to_string(m.order()) + " != " + std::to_string(l1) + "*" +
                        std::to_string(l2));
  const bool integer_mode = all_integers(eval_terms(m, 50));

  for (unsigned d : {digits, 2 * digits, 4 * digits}) {
    const BinetForm bf = char_roots(m, d);
    if (bf.near_multiple) throw DegenerateRoots("factorize_roots: near-multiple characteristic roots");
    const mpfr_prec_t bits = bf.roots.front().precision();
    const BigFloat tol = BigFloat::pow10(-static_cast<long>(d / 2), bits);
    const BigFloat one(1, bits);
    const std::vector<RootGrid> grids = multiplicative_grids(bf.roots, l1, l2, tol);
    if (grids.empty()) return std::nullopt;

    bool reconstruction_failed = false;
    for (const RootGrid& g : grids) {
      std::vector<BigComplex> alpha, beta;
      for (std::size_t i = 0; i < l1; ++i) alpha.push_back(bf.roots[g[i][0]]);
      for (std::size_t j = 0; j < l2; ++j) beta.push_back(bf.roots[g[0][j]] / bf.roots[g[0][0]]);
      const auto a = monic_from_roots(alpha, bits);
      const auto b = monic_from_roots(beta, bits);

      std::size_t k = 1;
      while (k < a.size() && a[k].abs() <= tol) ++k;
      if (k == a.size()) continue;
      // s^k * a_k = 1 fixes the root gauge up to a k-th root of unity.
      const BigComplex base = (BigComplex(one, BigFloat(bits)) / a[k]).root(static_cast<unsigned>(k));
      const BigFloat two_pi = BigFloat::pi(bits) * BigFloat(2, bits);
      for (std::size_t branch = 0; branch < k; ++branch) {
        BigComplex s = base * BigComplex::polar(one, two_pi * BigFloat(static_cast<long>(branch), bits) /
                                                          BigFloat(static_cast<long>(k), bits));
        BigComplex s_inv = BigComplex(one, BigFloat(bits)) / s;
        auto to_rational = [&](const std::vector<BigComplex>& c, const BigComplex& factor) -> std::optional<RationalVec> {
          RationalVec out(c.size());
          BigComplex pw(one, BigFloat(bits));
          for (std::size_t i = 0; i < c.size(); ++i) {
            BigComplex v = c[i] * pw;
            pw *= factor;
            BigFloat scale = v.abs();
            if (scale < one) scale = one;
            if (abs(v.im) > tol * scale) return std::nullopt;
            auto q = reconstruct_rational(v.re, kReconstructionDenominatorBound, tol);
            if (!q) return std::nullopt;
            out[i] = *q;
          }
          return out;
        };
        auto left = to_rational(a, s);
        auto right = to_rational(b, s_inv);
        if (!left || !right) {
          reconstruction_failed = true;
          continue;
        }
        const Rational t = integral_gauge(*left);
        RationalVec lm = rescale_monic(*left, t);
        RationalVec rm = rescale_monic(*right, 1 / t);
        if (auto pair = pair_from_recurrences(m, rec_from_monic(lm), rec_from_monic(rm), integer_mode)) {
          pair->normalization += "; roots rescaled by " + to_string(t) + " (left) and " + to_string(Rational(1 / t)) +
                                 " (right); " + std::to_string(d) + " digits";
          return pair;
        }
      }
    }
    if (!reconstruction_failed) return std::nullopt;
  }
  throw PrecisionInsufficient("factorize_roots: rational reconstruction failed up to " + std::to_string(4 * digits) +
                              " digits");
}

// ---------------------------------------------------------------------------
// Brute force over small integer left factors

namespace {

std::vector<Rational> value_order(std::size_t bound) {
  std::vector<Rational> v{0};
  for (std::size_t b = 1; b <= bound; ++b) {
    v.emplace_back(static_cast<long>(b));
    v.emplace_back(-static_cast<long>(b));
  }
  return v;
}

// Advances a mixed-radix counter over indices into `values`; false on wrap.
bool next_tuple(std::vector<std::size_t>& idx, std::size_t radix, std::size_t from) {
  for (std::size_t i = idx.size(); i-- > from;) {
    if (++idx[i] < radix) return true;
    idx[i] = 0;
  }
  return false;
}

struct IntegerContext {
  const CFiniteSeq& target;
  RationalVec target_terms;
  std::size_t l1, l2;
  std::vector<Rational> values;
  std::chrono::steady_clock::time_point deadline;
  bool integer_mode = true;
};

std::optional<FactorPair> try_candidate(const IntegerContext& ctx, const CFiniteSeq& left) {
  const std::size_t n = ctx.target_terms.size();
  const RationalVec x = eval_terms(left, n);
  RationalVec y(n);
  std::optional<std::size_t> last_zero;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) {
      if (ctx.target_terms[i] != 0) return std::nullopt;
      last_zero = i;
      continue;
    }
    y[i] = ctx.target_terms[i] / x[i];
    if (!is_integer(y[i])) return std::nullopt;
  }
  const std::size_t start = last_zero ? *last_zero + 1 : 0;
  if (n - start < 2 * ctx.l2 + 4) return std::nullopt;
  GuessConfig cfg;
  cfg.max_order = ctx.l2;
  auto guessed = guess_rec(std::span<const Rational>(y).subspan(start), cfg);
  if (!guessed || guessed->order() != ctx.l2 || guessed->rec().back() == 0) return std::nullopt;

  // Run the right factor backwards over the positions where left vanished.
  const RationalVec& c = guessed->rec();
  const std::size_t l2 = ctx.l2;
  RationalVec tail(y.begin() + static_cast<std::ptrdiff_t>(start),
                   y.begin() + static_cast<std::ptrdiff_t>(start + l2));
  for (std::size_t s = start; s-- > 0;) {
    // a(s + l2) = sum_i c_i a(s + l2 - i)  =>  solve for a(s)
    Rational acc = tail[l2 - 1];
    for (std::size_t i = 1; i < l2; ++i) acc -= c[i - 1] * tail[l2 - 1 - i];
    tail.insert(tail.begin(), acc / c[l2 - 1]);
    tail.pop_back();
  }
  FactorPair pair{left, CFiniteSeq(tail, c), {}, {}};
  if (!canonicalize(pair.left, pair.right, ctx.integer_mode, pair.normalization)) return std::nullopt;
  pair.certificate = prove_equal(mul(pair.left, pair.right), ctx.target);
  if (!pair.certificate.verified) return std::nullopt;
  return pair;
}

std::optional<FactorPair> search_block(const IntegerContext& ctx, std::size_t lead, std::size_t& counter) {
  const std::size_t radix = ctx.values.size();
  std::vector<std::size_t> rec_idx(ctx.l1, 0);
  rec_idx[0] = lead;
  do {
    if (ctx.values[rec_idx.back()] == 0) continue;
    RationalVec rec(ctx.l1);
    for (std::size_t i = 0; i < ctx.l1; ++i) rec[i] = ctx.values[rec_idx[i]];
    std::vector<std::size_t> init_idx(ctx.l1, 0);
    while (next_tuple(init_idx, radix, 0)) {
      RationalVec init(ctx.l1);
      for (std::size_t i = 0; i < ctx.l1; ++i) init[i] = ctx.values[init_idx[i]];
      auto first = std::find_if(init.begin(), init.end(), [](const Rational& v) { return v != 0; });
      if (*first < 0 || numerator_gcd(init) != 1) continue;
      if (std::chrono::steady_clock::now() > ctx.deadline)
        throw BudgetExhausted("factorize_integer: time budget exhausted");
      ++counter;
      if (auto pair = try_candidate(ctx, CFiniteSeq(init, rec))) return pair;
    }
  } while (next_tuple(rec_idx, radix, 1));
  return std::nullopt;
}

}  // namespace

std::optional<FactorPair> factorize_integer(const CFiniteSeq& seq, std::size_t l1, std::size_t l2,
                                            const IntegerSearch& search, IntegerSearchStats* stats) {
  if (l1 < 1 || l2 < 1) throw PreconditionError("factorize_integer: orders must be >= 1");
  if (!all_integers(eval_terms(seq, 50)) || !all_integers(seq.rec()))
    throw PreconditionError("factorize_integer: sequence is not an integer sequence");
  const CFiniteSeq m = minimize(seq);
  if (m.order() != l1 * l2)
    throw OrderMismatch("minimal order " + std::to_string(m.order()) + " != " + std::to_string(l1) + "*" +
                        std::to_string(l2));

  IntegerContext ctx{m, eval_terms(m, 2 * l1 * l2 + 2 * l2 + 8), l1, l2, value_order(search.bound),
                     std::chrono::steady_clock::now() +
                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(search.budget)};
  const std::size_t radix = ctx.values.size();
  const std::size_t blocks = radix;
  // Blocks are keyed by the first recurrence coefficient. An order-1 left
  // factor with c_1 = +-1 only moves a sign, so those blocks go last.
  std::vector<std::size_t> lead(radix);
  for (std::size_t i = 0; i < radix; ++i) lead[i] = i;
  if (l1 == 1 && radix >= 3) std::rotate(lead.begin() + 1, lead.begin() + 3, lead.end());

  std::size_t rec_space = 1, init_space = 1;
  for (std::size_t i = 0; i + 1 < l1; ++i) rec_space *= radix;
  rec_space *= radix - 1;
  for (std::size_t i = 0; i < l1; ++i) init_space *= radix;
  init_space = (init_space - 1) / 2;

  std::vector<std::optional<FactorPair>> found(blocks);
  std::vector<std::size_t> counters(blocks, 0);
  auto pred = [&](std::size_t b) {
    found[b] = search_block(ctx, lead[b], counters[b]);
    return found[b].has_value();
  };
  auto hit = search.parallel ? kernels::first_match_omp(blocks, pred) : kernels::first_match_serial(blocks, pred);
  if (stats) {
    stats->enumeration_size = rec_space * init_space;
    stats->candidates = 0;
    for (auto c : counters) stats->candidates += c;
  }
  if (!hit) return std::nullopt;
  return found[*hit];
}

}  // namespace cfinite
