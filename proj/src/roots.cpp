#include "cfinite/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <sstream>

#include "cfinite/errors.hpp"
#include "cfinite/text.hpp"

namespace cfinite {

namespace {

constexpr unsigned kSeed = 0x5eedu;

// Monic coefficients, highest power first: 1, -c_1, ..., -c_L.
RationalVec monic_descending(const CFiniteSeq& seq) {
  RationalVec a(seq.order() + 1);
  a[0] = 1;
  for (std::size_t k = 1; k <= seq.order(); ++k) a[k] = -seq.rec()[k - 1];
  return a;
}

using Cd = std::complex<double>;

// Double-precision Aberth pass; returns false when it overflowed.
bool warm_up(const std::vector<double>& a, std::vector<Cd>& z) {
  const std::size_t n = z.size();
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Cd p = a[0], dp = 0;
      for (std::size_t i = 1; i < a.size(); ++i) {
        dp = dp * z[k] + p;
        p = p * z[k] + a[i];
      }
      if (p == Cd(0)) continue;
      Cd ratio = p / dp;
      Cd s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      Cd w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < 1e-14) break;
  }
  return std::all_of(z.begin(), z.end(), [](const Cd& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

void evaluate(const std::vector<BigFloat>& a, const BigComplex& z, BigComplex& p, BigComplex& dp) {
  const mpfr_prec_t bits = z.precision();
  p = BigComplex(a[0], BigFloat(bits));
  dp = BigComplex(bits);
  for (std::size_t i = 1; i < a.size(); ++i) {
    dp = dp * z + p;
    p = p * z;
    p.re += a[i];
  }
}

// Gaussian elimination with partial pivoting; solves v x = rhs in place.
std::vector<BigComplex> solve_complex(std::vector<std::vector<BigComplex>> v, std::vector<BigComplex> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (v[r][col].abs() > v[piv][col].abs()) piv = r;
    std::swap(v[piv], v[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      BigComplex f = v[r][col] / v[col][col];
      for (std::size_t c = col; c < n; ++c) v[r][c] -= f * v[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<BigComplex> x(n, BigComplex(rhs.front().precision()));
  for (std::size_t r = n; r-- > 0;) {
    BigComplex acc = rhs[r];
    for (std::size_t c = r + 1; c < n; ++c) acc -= v[r][c] * x[c];
    x[r] = acc / v[r][r];
  }
  return x;
}

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                  const std::vector<std::size_t>& pool, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(pool[i]);
    combinations(n, k, i + 1, cur, pool, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> choose(const std::vector<std::size_t>& pool, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  combinations(pool.size(), k, 0, cur, pool, out);
  return out;
}

}  // namespace

BinetForm char_roots(const CFiniteSeq& seq, unsigned digits, bool with_coefficients) {
  const std::size_t n = seq.order();
  if (seq.rec().back() == 0)
    throw PreconditionError("char_roots: c_L = 0 gives a zero root; minimize or deflate the recurrence first");
  if (digits < 10) throw PreconditionError("char_roots: need at least 10 digits");

  const RationalVec coeffs = monic_descending(seq);
  Rational max_c = 0;
  for (const auto& c : seq.rec()) max_c = std::max(max_c, Rational(abs(c)));
  const double cauchy = 1.0 + max_c.get_d();
  const double log_r = std::isfinite(cauchy) ? std::log10(cauchy) : 400.0;
  const unsigned working_digits = digits + 20 + static_cast<unsigned>(std::ceil(static_cast<double>(n) * log_r));
  const mpfr_prec_t bits = digits_to_bits(working_digits);

  // Start points on the Cauchy circle with a seeded angular offset.
  std::mt19937 rng(kSeed);
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  const double offset = jitter(rng);
  std::vector<Cd> start(n);
  for (std::size_t k = 0; k < n; ++k) {
    double theta = 2.0 * M_PI * (static_cast<double>(k) + offset) / static_cast<double>(n) + 0.4;
    double radius = std::min(cauchy, 1e150) * (0.9 + 0.1 * jitter(rng));
    start[k] = std::polar(radius, theta);
  }
  std::vector<Cd> warm = start;
  bool warmed = false;
  if (log_r < 250) {
    std::vector<double> ad(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) ad[i] = coeffs[i].get_d();
    warmed = warm_up(ad, warm);
  }
  if (!warmed) warm = start;

  std::vector<BigFloat> a;
  a.reserve(coeffs.size());
  for (const auto& c : coeffs) a.emplace_back(c, bits);

  std::vector<BigComplex> z;
  z.reserve(n);
  for (const auto& w : warm) {
    BigFloat re(bits), im(bits);
    mpfr_set_d(re.get(), w.real(), MPFR_RNDN);
    mpfr_set_d(im.get(), w.imag(), MPFR_RNDN);
    z.emplace_back(std::move(re), std::move(im));
  }

  const BigFloat stop = BigFloat::pow10(-static_cast<long>(digits) - 10, bits);
  const BigFloat one(1, bits);
  BigComplex p(bits), dp(bits);
  const int max_iter = 300 + 20 * static_cast<int>(n);
  for (int iter = 0; iter < max_iter; ++iter) {
    BigFloat worst(bits);
    for (std::size_t k = 0; k < n; ++k) {
      evaluate(a, z[k], p, dp);
      if (p.is_zero()) continue;
      if (dp.is_zero()) dp.re = stop;  // exact multiple root hit; nudge
      BigComplex ratio = p / dp;
      BigComplex s(bits);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        BigComplex diff = z[k] - z[j];
        if (diff.is_zero()) diff.re = stop;
        s += BigComplex(one, BigFloat(bits)) / diff;
      }
      BigComplex denom = BigComplex(one, BigFloat(bits)) - ratio * s;
      BigComplex w = denom.is_zero() ? ratio : ratio / denom;
      z[k] -= w;
      BigFloat scale = z[k].abs();
      if (scale < one) scale = one;
      BigFloat rel = w.abs() / scale;
      if (rel > worst) worst = rel;
    }
    if (worst < stop) break;
  }

  BinetForm bf;
  bf.precision_digits = digits;
  bf.max_residual = BigFloat(bits);
  const BigFloat bound = BigFloat::pow10(-static_cast<long>(digits) + 10, bits) * (one + BigFloat(max_c, bits));
  for (const auto& root : z) {
    evaluate(a, root, p, dp);
    BigFloat r = p.abs();
    if (r > bf.max_residual) bf.max_residual = r;
  }
  if (bf.max_residual > bound)
    throw PrecisionInsufficient("char_roots: residual " + bf.max_residual.to_string(6) + " exceeds bound at " +
                                std::to_string(digits) + " digits");

  const BigFloat sep = BigFloat::pow10(-static_cast<long>(digits / 2), bits);
  bf.root_near_multiple.assign(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      BigFloat scale = z[i].abs();
      if (scale < one) scale = one;
      if ((z[i] - z[j]).abs() < sep * scale) {
        bf.near_multiple = true;
        bf.root_near_multiple[i] = bf.root_near_multiple[j] = true;
      }
    }
  bf.roots = std::move(z);

  if (with_coefficients && !bf.near_multiple) {
    std::vector<std::vector<BigComplex>> v(n);
    std::vector<BigComplex> rhs;
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t i = 0; i < n; ++i) {
        BigComplex pw(one, BigFloat(bits));
        for (std::size_t e = 0; e < row; ++e) pw *= bf.roots[i];
        v[row].push_back(std::move(pw));
      }
      rhs.emplace_back(BigFloat(seq.init()[row], bits), BigFloat(bits));
    }
    bf.coefficients = solve_complex(std::move(v), std::move(rhs));
  }
  return bf;
}

std::size_t RepetitionProfile::total() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0});
}

RepetitionProfile prod_indicator(const std::vector<std::size_t>& orders) {
  for (auto o : orders)
    if (o < 1) throw PreconditionError("prod_indicator: every order must be >= 1");
  // A ratio class picks, per factor, either a cancelled index pair (i = k,
  // contributing order_f equal ratios) or one ordered pair i != k.
  RepetitionProfile out;
  const std::size_t r = orders.size();
  if (r > 20) throw PreconditionError("prod_indicator: too many factors");
  for (std::size_t subset = 0; subset < (std::size_t{1} << r); ++subset) {
    std::size_t multiplicity = 1, classes = 1;
    for (std::size_t f = 0; f < r; ++f) {
      if ((subset >> f) & 1u) {
        multiplicity *= orders[f];
      } else {
        classes *= orders[f] * (orders[f] - 1);
      }
    }
    out.multiplicities.insert(out.multiplicities.end(), classes, multiplicity);
  }
  std::sort(out.multiplicities.begin(), out.multiplicities.end());
  return out;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

RepetitionProfile ratio_profile(const BinetForm& bf, std::optional<BigFloat> rel_tol) {
  const std::size_t n = bf.roots.size();
  if (n == 0) return {};
  const mpfr_prec_t bits = bf.roots.front().precision();
  const BigFloat tiny = BigFloat::pow10(-static_cast<long>(bf.precision_digits / 2), bits);
  for (const auto& r : bf.roots)
    if (r.abs() < tiny) throw PreconditionError("ratio_profile: root of magnitude below 10^(-digits/2)");
  const BigFloat tol = rel_tol ? *rel_tol : tiny;

  std::vector<BigComplex> ratios;
  ratios.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ratios.push_back(bf.roots[i] / bf.roots[j]);
  std::sort(ratios.begin(), ratios.end(), [](const BigComplex& x, const BigComplex& y) {
    if (x.re < y.re) return true;
    if (y.re < x.re) return false;
    return x.im < y.im;
  });

  std::vector<BigFloat> mags;
  mags.reserve(ratios.size());
  BigFloat max_mag(bits);
  for (const auto& r : ratios) {
    mags.push_back(r.abs());
    if (mags.back() > max_mag) max_mag = mags.back();
  }
  const BigFloat window = tol * max_mag;

  DisjointSets sets(ratios.size());
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    for (std::size_t j = i + 1; j < ratios.size(); ++j) {
      if (ratios[j].re - ratios[i].re > window) break;
      const BigFloat& scale = mags[i] > mags[j] ? mags[i] : mags[j];
      if ((ratios[i] - ratios[j]).abs() <= tol * scale) sets.unite(i, j);
    }
  }
  std::vector<std::size_t> size(ratios.size(), 0);
  for (std::size_t i = 0; i < ratios.size(); ++i) ++size[sets.find(i)];
  RepetitionProfile out;
  for (auto s : size)
    if (s) out.multiplicities.push_back(s);
  std::sort(out.multiplicities.begin(), out.multiplicities.end());
  return out;
}

std::vector<RootGrid> multiplicative_grids(const std::vector<BigComplex>& roots, std::size_t l1, std::size_t l2,
                                           const BigFloat& tol, std::size_t max_grids) {
  const std::size_t n = roots.size();
  if (l1 * l2 != n || n == 0) throw PreconditionError("multiplicative_grids: l1*l2 must equal the number of roots");
  std::vector<RootGrid> grids;
  std::vector<std::size_t> rest;
  for (std::size_t i = 1; i < n; ++i) rest.push_back(i);
  for (const auto& row0 : choose(rest, l2 - 1)) {
    std::vector<std::size_t> rest2;
    for (auto i : rest)
      if (std::find(row0.begin(), row0.end(), i) == row0.end()) rest2.push_back(i);
    for (const auto& col0 : choose(rest2, l1 - 1)) {
      RootGrid g(l1, std::vector<std::size_t>(l2));
      std::vector<bool> used(n, false);
      g[0][0] = 0;
      used[0] = true;
      for (std::size_t j = 1; j < l2; ++j) used[g[0][j] = row0[j - 1]] = true;
      for (std::size_t i = 1; i < l1; ++i) used[g[i][0] = col0[i - 1]] = true;
      bool ok = true;
      for (std::size_t i = 1; i < l1 && ok; ++i) {
        for (std::size_t j = 1; j < l2 && ok; ++j) {
          BigComplex predicted = roots[g[i][0]] * roots[g[0][j]] / roots[0];
          const BigFloat scale = predicted.abs();
          ok = false;
          for (std::size_t k = 0; k < n; ++k) {
            if (used[k]) continue;
            if ((roots[k] - predicted).abs() <= tol * scale) {
              g[i][j] = k;
              used[k] = true;
              ok = true;
              break;
            }
          }
        }
      }
      if (ok) grids.push_back(std::move(g));
      if (grids.size() >= max_grids) return grids;
    }
  }
  return grids;
}

bool is_root_tensor(const std::vector<BigComplex>& roots, const std::vector<std::size_t>& orders,
                    const BigFloat& rel_tol) {
  if (orders.size() <= 1) return true;
  const std::size_t l1 = orders.front();
  const std::vector<std::size_t> rest(orders.begin() + 1, orders.end());
  std::size_t l2 = 1;
  for (auto o : rest) l2 *= o;
  for (const RootGrid& g : multiplicative_grids(roots, l1, l2, rel_tol)) {
    std::vector<BigComplex> beta;
    for (std::size_t j = 0; j < l2; ++j) beta.push_back(roots[g[0][j]] / roots[g[0][0]]);
    if (is_root_tensor(beta, rest, rel_tol)) return true;
  }
  return false;
}

std::string ProductVerdict::to_string() const {
  std::ostringstream s;
  s << "verdict: " << (yes ? "yes" : "no");
  if (trivial) s << " (trivial: single nontrivial factor)";
  if (grid_match) s << " (profile coarser than generic; roots form a multiplicative grid)";
  s << '\n';
  s << "orders: ";
  for (std::size_t i = 0; i < orders.size(); ++i) s << (i ? "," : "") << orders[i];
  s << '\n';
  s << "expected profile: " << format_profile(expected.multiplicities) << '\n';
  s << "observed profile: " << format_profile(observed.multiplicities) << '\n';
  s << "digits: " << digits << '\n';
  s << "clustering: " << clustering << ' ' << tolerance;
  return s.str();
}

ProductVerdict is_prod_g(const CFiniteSeq& seq, const std::vector<std::size_t>& orders, unsigned digits) {
  if (orders.empty()) throw PreconditionError("is_prod_g: no factor orders given");
  const CFiniteSeq m = minimize(seq);
  std::size_t target = 1;
  for (auto o : orders) target *= o;
  if (m.order() != target)
    throw OrderMismatch("minimal order " + std::to_string(m.order()) + " is not the product " + std::to_string(target) +
                        " of the requested factor orders");

  ProductVerdict v;
  v.orders = orders;
  v.digits = digits;
  v.expected = prod_indicator(orders);
  v.trivial = std::count_if(orders.begin(), orders.end(), [](std::size_t o) { return o > 1; }) <= 1;
  v.tolerance = "1e-" + std::to_string(digits / 2);

  BinetForm bf = char_roots(m, digits);
  if (bf.near_multiple && !v.trivial)
    throw DegenerateRoots("characteristic polynomial has near-multiple roots; profile test inapplicable");
  if (!bf.near_multiple) v.observed = ratio_profile(bf);
  v.profile_match = v.observed == v.expected;
  if (!v.trivial && !v.profile_match && v.observed.multiplicities.size() < v.expected.multiplicities.size()) {
    const BigFloat tol = BigFloat::pow10(-static_cast<long>(digits / 2), bf.roots.front().precision());
    v.grid_match = is_root_tensor(bf.roots, orders, tol);
  }
  v.yes = v.trivial || v.profile_match || v.grid_match;
  return v;
}

ProductVerdict is_prod(const CFiniteSeq& seq, std::size_t l1, std::size_t l2, unsigned digits) {
  return is_prod_g(seq, {l1, l2}, digits);
}

}  // namespace cfinite
