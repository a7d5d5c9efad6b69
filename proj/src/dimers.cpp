#include "cfinite/dimers.hpp"

#include <bit>
#include <sstream>

#include "cfinite/bigfloat.hpp"
#include "cfinite/errors.hpp"
#include "cfinite/guess.hpp"
#include "cfinite/kernels.hpp"
#include "cfinite/text.hpp"

namespace cfinite {

RationalVec dimer_terms(unsigned m, std::size_t n_terms, const DimerWeights& w, bool parallel) {
  if (m < 1) throw PreconditionError("dimer_terms: width must be >= 1");
  if (m > kMaxDimerWidth)
    throw ResourceError("dimer_terms: width " + std::to_string(m) + " exceeds the limit " +
                        std::to_string(kMaxDimerWidth));
  RationalVec state(std::size_t{1} << m);
  state[0] = 1;
  RationalVec out;
  out.reserve(n_terms);
  for (std::size_t n = 0; n < n_terms; ++n) {
    state = parallel ? kernels::transfer_step_omp(m, state, w.horizontal, w.vertical)
                     : kernels::transfer_step_serial(m, state, w.horizontal, w.vertical);
    out.push_back(state[0]);
  }
  return out;
}

CFiniteSeq dimer_seq(unsigned m, const DimerWeights& w) {
  const std::size_t bound = std::size_t{1} << m;
  const std::size_t needed = 2 * bound + 8;
  RationalVec terms;
  if (m % 2 == 0) {
    terms = dimer_terms(m, needed, w);
  } else {
    const RationalVec all = dimer_terms(m, 2 * needed, w);
    for (std::size_t n = 1; n < all.size(); n += 2) terms.push_back(all[n]);
  }
  GuessConfig cfg;
  cfg.max_order = bound;
  auto s = guess_rec(terms, cfg);
  if (!s) throw InvariantViolation("dimer_seq: no recurrence of order <= 2^" + std::to_string(m));
  return *s;
}

Integer kasteleyn_count(unsigned m, unsigned n) {
  if (m < 1 || n < 1 || m > 32 || n > 32) throw PreconditionError("kasteleyn_count: need 1 <= m, n <= 32");
  if ((m * n) % 2 == 1) throw PreconditionError("kasteleyn_count: m*n is odd, no perfect matching");
  const mpfr_prec_t bits = digits_to_bits(15 + m * n);
  const BigFloat pi = BigFloat::pi(bits);
  const BigFloat four(4, bits);
  auto cos2 = [&](unsigned j, unsigned size) {
    BigFloat c = cos(pi * BigFloat(static_cast<long>(j), bits) / BigFloat(static_cast<long>(size + 1), bits));
    return four * c * c;
  };
  BigFloat prod(1, bits);
  for (unsigned j = 1; j <= m; ++j)
    for (unsigned k = 1; k <= n; ++k) prod *= root(cos2(j, m) + cos2(k, n), 4);
  const BigFloat nearest = round(prod);
  if (abs(prod - nearest) > BigFloat::pow10(-5, bits))
    throw PrecisionInsufficient("kasteleyn_count: product not within 1e-5 of an integer");
  return nearest.to_rational().get_num();
}

std::string DimerReport::to_string() const {
  std::ostringstream os;
  os << "width: " << width << "\n";
  os << "weights: h=" << cfinite::to_string(weights.horizontal) << " v=" << cfinite::to_string(weights.vertical)
     << "\n";
  os << "sequence: " << format_seq_display(sequence) << (width % 2 ? "  (even-length strips)" : "") << "\n";
  os << "minimal order: " << sequence.order() << "\n";
  if (!applicable) {
    os << "verdict: inapplicable (" << reason << ")\n";
    return os.str();
  }
  os << verdict->to_string() << "\n";
  return os.str();
}

DimerReport dimer_product_report(unsigned m, unsigned digits, const DimerWeights& w) {
  DimerReport r;
  r.width = m;
  r.weights = w;
  r.sequence = dimer_seq(m, w);
  const std::size_t order = r.sequence.order();
  if (order < 2 || !std::has_single_bit(order)) {
    r.reason = "minimal order " + std::to_string(order) + " is not a power of two >= 2";
    return r;
  }
  const std::vector<std::size_t> orders(static_cast<std::size_t>(std::countr_zero(order)), 2);
  try {
    r.verdict = is_prod_g(r.sequence, orders, digits);
    r.applicable = true;
  } catch (const DegenerateRoots& e) {
    r.reason = e.what();
  }
  return r;
}

}  // namespace cfinite
