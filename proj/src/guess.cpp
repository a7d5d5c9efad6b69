#include "cfinite/guess.hpp"

#include <algorithm>
#include <sstream>

#include "cfinite/errors.hpp"
#include "cfinite/kernels.hpp"
#include "cfinite/linalg.hpp"

namespace cfinite {

std::optional<CFiniteSeq> guess_rec(std::span<const Rational> terms, const GuessConfig& cfg) {
  if (terms.size() < 4) throw PreconditionError("guess_rec needs at least 4 terms");
  if (cfg.max_order < 1) throw PreconditionError("guess_rec: max_order must be >= 1");
  const std::size_t len = terms.size();
  const std::size_t by_terms = len > cfg.safety_terms ? (len - cfg.safety_terms) / 2 : 0;
  const std::size_t max_order = std::min(cfg.max_order, by_terms);

  for (std::size_t L = 1; L <= max_order; ++L) {
    // All available equations; free coefficients default to 0.
    linalg::Matrix a;
    RationalVec b;
    a.reserve(len - L);
    for (std::size_t n = L; n < len; ++n) {
      RationalVec row(L);
      for (std::size_t i = 1; i <= L; ++i) row[i - 1] = terms[n - i];
      a.push_back(std::move(row));
      b.push_back(terms[n]);
    }
    auto c = linalg::solve(a, b);
    if (!c) continue;
    CFiniteSeq fit(RationalVec(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(L)), std::move(*c));
    if (eval_terms(fit, len) != RationalVec(terms.begin(), terms.end()))
      throw InvariantViolation("guess_rec: consistent solution failed verification");
    return minimize(fit);
  }
  return std::nullopt;
}

namespace {

// Guess from terms of a sequence whose order is known to be <= bound.
// 2*bound terms determine such a sequence, so a fit is also a proof.
CFiniteSeq guess_bounded(const RationalVec& terms, std::size_t bound, const GuessConfig& cfg, const char* what) {
  GuessConfig local = cfg;
  local.max_order = std::max<std::size_t>(bound, 1);
  auto found = guess_rec(terms, local);
  if (!found || found->order() > bound)
    throw InvariantViolation(std::string(what) + ": guessing failed at the guaranteed order bound " +
                             std::to_string(bound));
  return *found;
}

std::size_t sample_count(std::size_t bound, const GuessConfig& cfg) {
  return std::max<std::size_t>(2 * bound + cfg.safety_terms, 4);
}

}  // namespace

CFiniteSeq add(const CFiniteSeq& a, const CFiniteSeq& b, const GuessConfig& cfg) {
  const std::size_t bound = a.order() + b.order();
  const std::size_t n = sample_count(bound, cfg);
  RationalVec x = eval_terms(a, n);
  RationalVec y = eval_terms(b, n);
  for (std::size_t i = 0; i < n; ++i) x[i] += y[i];
  return guess_bounded(x, bound, cfg, "add");
}

CFiniteSeq mul(const CFiniteSeq& a, const CFiniteSeq& b, const GuessConfig& cfg) {
  const std::size_t bound = a.order() * b.order();
  const std::size_t n = sample_count(bound, cfg);
  RationalVec x = eval_terms(a, n);
  RationalVec y = eval_terms(b, n);
  for (std::size_t i = 0; i < n; ++i) x[i] *= y[i];
  return guess_bounded(x, bound, cfg, "mul");
}

CFiniteSeq binomial_transform(const CFiniteSeq& s, const GuessConfig& cfg) {
  const std::size_t bound = s.order();
  const std::size_t n = sample_count(bound, cfg);
  const RationalVec a = eval_terms(s, n);
  RationalVec out(n);
  std::vector<Integer> row{1};  // binomial row C(k, .)
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 0; j <= k; ++j) acc += Rational(row[j]) * a[j];
    out[k] = acc;
    std::vector<Integer> next(row.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return guess_bounded(out, bound, cfg, "binomial_transform");
}

CFiniteSeq partial_sums(const CFiniteSeq& s, const GuessConfig& cfg) {
  const std::size_t bound = s.order() + 1;
  const std::size_t n = sample_count(bound, cfg);
  RationalVec a = eval_terms(s, n);
  for (std::size_t i = 1; i < n; ++i) a[i] += a[i - 1];
  return guess_bounded(a, bound, cfg, "partial_sums");
}

CFiniteSeq subsequence(const CFiniteSeq& s, std::size_t step, std::size_t offset, const GuessConfig& cfg) {
  if (step < 1) throw PreconditionError("subsequence: step must be >= 1");
  const std::size_t bound = s.order();
  const std::size_t n = sample_count(bound, cfg);
  const RationalVec a = eval_terms(s, step * (n - 1) + offset + 1);
  RationalVec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[step * i + offset];
  return guess_bounded(out, bound, cfg, "subsequence");
}

ProofCertificate prove_equal(const CFiniteSeq& a, const CFiniteSeq& b, const GuessConfig& cfg) {
  ProofCertificate cert;
  cert.order_bound = a.order() + b.order();
  cert.terms_checked = cert.order_bound + cfg.verify_extra;
  const RationalVec x = eval_terms(a, cert.terms_checked);
  const RationalVec y = eval_terms(b, cert.terms_checked);
  for (std::size_t n = 0; n < cert.terms_checked; ++n) {
    if (x[n] != y[n]) {
      if (n >= cert.order_bound)
        throw InvariantViolation("prove_equal: sequences agree on the order bound but differ later");
      cert.first_difference = n;
      cert.statement = "sequences differ at n = " + std::to_string(n) + ": " + to_string(x[n]) +
                       " != " + to_string(y[n]);
      return cert;
    }
  }
  cert.verified = true;
  std::ostringstream s;
  s << "the difference satisfies a recurrence of order <= " << cert.order_bound << " and vanishes at n = 0.."
    << cert.terms_checked - 1 << ", hence everywhere";
  cert.statement = s.str();
  return cert;
}

// ---------------------------------------------------------------------------
// Nonlinear relations

namespace {

using Exponents = std::vector<unsigned>;

void enumerate_monomials(std::size_t vars, std::size_t degree, Exponents& cur, std::size_t pos,
                         std::size_t left, std::vector<Exponents>& out) {
  if (pos == vars) {
    out.push_back(cur);
    return;
  }
  for (std::size_t e = 0; e <= left; ++e) {
    cur[pos] = static_cast<unsigned>(e);
    enumerate_monomials(vars, degree, cur, pos + 1, left - e, out);
  }
  cur[pos] = 0;
}

// Ascending lexicographic order with a(n) (index 0) most significant.
std::vector<Exponents> monomial_basis(std::size_t order, std::size_t degree) {
  std::vector<Exponents> out;
  Exponents cur(order + 1, 0);
  enumerate_monomials(order + 1, degree, cur, 0, degree, out);
  std::sort(out.begin(), out.end());
  return out;
}

Rational monomial_value(const Exponents& e, std::span<const Rational> terms, std::size_t n) {
  Rational v = 1;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    Rational p;
    mpz_pow_ui(p.get_num_mpz_t(), terms[n - j].get_num_mpz_t(), e[j]);
    mpz_pow_ui(p.get_den_mpz_t(), terms[n - j].get_den_mpz_t(), e[j]);
    v *= p;
  }
  return v;
}

std::string variable_name(std::size_t j) { return j == 0 ? "a(n)" : "a(n-" + std::to_string(j) + ")"; }

}  // namespace

std::size_t nlr_monomial_count(std::size_t order, std::size_t degree) {
  // C(order + 1 + degree, degree)
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), order + 1 + degree, degree);
  return c.get_ui();
}

std::size_t nlr_min_terms(std::size_t order, std::size_t degree) {
  return order + 2 * nlr_monomial_count(order, degree) + 4;
}

Rational PolyRelation::evaluate(std::span<const Rational> terms, std::size_t n) const {
  Rational acc = 0;
  for (std::size_t k = 0; k < exponents.size(); ++k) acc += coefficients[k] * monomial_value(exponents[k], terms, n);
  return acc;
}

std::string PolyRelation::to_string() const {
  std::vector<std::size_t> idx(exponents.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return exponents[x] > exponents[y]; });

  std::ostringstream out;
  bool first = true;
  for (std::size_t k : idx) {
    const Rational& c = coefficients[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t j = 0; j < exponents[k].size(); ++j) {
      const unsigned e = exponents[k][j];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variable_name(j);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out << cfinite::to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << cfinite::to_string(mag) << '*' << mono;
    }
  }
  if (first) out << '0';
  out << " = 0";
  return out.str();
}

std::optional<PolyRelation> guess_nlr(std::span<const Rational> terms, std::size_t order, std::size_t degree) {
  if (degree < 1) throw PreconditionError("guess_nlr: degree must be >= 1");
  const std::vector<Exponents> basis = monomial_basis(order, degree);
  const std::size_t need = nlr_min_terms(order, degree);
  if (terms.size() < need)
    throw PreconditionError("guess_nlr: need at least " + std::to_string(need) + " terms for order " +
                            std::to_string(order) + ", degree " + std::to_string(degree));

  linalg::Matrix m;
  for (std::size_t n = order; n < terms.size(); ++n) {
    RationalVec row(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) row[k] = monomial_value(basis[k], terms, n);
    m.push_back(std::move(row));
  }
  auto kernel = linalg::nullspace(m, basis.size());
  if (kernel.empty()) return std::nullopt;

  // The first kernel vector has the smallest leading monomial.
  RationalVec v = std::move(kernel.front());
  const Rational den(common_denominator(v));
  for (auto& x : v) x *= den;
  Rational content(numerator_gcd(v));
  std::size_t lead = v.size();
  while (lead-- > 0 && v[lead] == 0) {
  }
  if (v[lead] < 0) content = -content;
  for (auto& x : v) x /= content;

  // Re-index so the newest variable that actually occurs becomes a(n).
  std::size_t newest = order, oldest = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j <= order; ++j) {
      if (basis[k][j] == 0) continue;
      newest = std::min(newest, j);
      oldest = std::max(oldest, j);
    }
  }
  if (newest > oldest) throw InvariantViolation("guess_nlr: kernel vector without variables");

  PolyRelation rel;
  rel.order = oldest - newest;
  rel.degree = degree;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (v[k] == 0) continue;
    rel.exponents.emplace_back(basis[k].begin() + static_cast<std::ptrdiff_t>(newest),
                               basis[k].begin() + static_cast<std::ptrdiff_t>(oldest) + 1);
    rel.coefficients.push_back(v[k]);
  }
  for (std::size_t n = rel.order; n < terms.size(); ++n)
    if (rel.evaluate(terms, n) != 0) throw InvariantViolation("guess_nlr: relation fails on supplied terms");
  return rel;
}

// ---------------------------------------------------------------------------
// Parametric identities by grid specialization

ProofCertificate verify_parametric_identity(const IdentityCheck& check) {
  const std::size_t nparams = check.param_degrees.size();
  std::vector<std::vector<Rational>> points = check.points;
  if (points.empty()) {
    for (std::size_t d : check.param_degrees) {
      std::vector<Rational> p;
      for (std::size_t i = 0; i < d + 3; ++i) p.emplace_back(static_cast<unsigned long>(i));
      points.push_back(std::move(p));
    }
  }
  if (points.size() != nparams) throw PreconditionError("verify_parametric_identity: one point list per parameter");

  ProofCertificate cert;
  cert.order_bound = 1;
  std::size_t grid = 1;
  for (std::size_t i = 0; i < nparams; ++i) {
    std::vector<Rational> sorted = points[i];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionError("verify_parametric_identity: repeated grid value");
    if (sorted.size() < check.param_degrees[i] + 1)
      throw PreconditionError("verify_parametric_identity: parameter " + std::to_string(i) + " needs at least " +
                              std::to_string(check.param_degrees[i] + 1) + " grid values");
    cert.order_bound *= check.param_degrees[i] + 1;
    grid *= points[i].size();
  }

  auto point_at = [&](std::size_t index) {
    ParamPoint p(nparams);
    for (std::size_t i = nparams; i-- > 0;) {
      p[i] = points[i][index % points[i].size()];
      index /= points[i].size();
    }
    return p;
  };
  // first mismatching coefficient, or series_terms when both sides agree
  auto mismatch = [&](std::size_t index) {
    const ParamPoint p = point_at(index);
    const RationalVec lhs = eval_terms(check.lhs(p), check.series_terms);
    const RationalVec rhs = taylor(check.rhs(p), check.series_terms);
    std::size_t k = 0;
    while (k < check.series_terms && lhs[k] == rhs[k]) ++k;
    return k;
  };

  auto failing = kernels::first_match_omp(grid, [&](std::size_t i) { return mismatch(i) < check.series_terms; });
  cert.terms_checked = grid;
  std::ostringstream s;
  if (failing) {
    const ParamPoint p = point_at(*failing);
    const std::size_t k = mismatch(*failing);
    cert.first_difference = k;
    s << "mismatch at grid point (";
    for (std::size_t i = 0; i < p.size(); ++i) s << (i ? ", " : "") << to_string(p[i]);
    s << "), coefficient " << k;
    cert.statement = s.str();
    return cert;
  }
  cert.verified = true;
  s << check.series_terms << " series coefficients agree at all " << grid
    << " grid points (at least degree + 1 values per parameter)";
  cert.statement = s.str();
  return cert;
}

}  // namespace cfinite
