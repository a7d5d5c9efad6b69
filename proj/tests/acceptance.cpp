// Acceptance suite: one PASS/FAIL line per criterion with its runtime limit.
// Exit status is nonzero when any criterion fails or runs over its limit.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cfinite/corpus.hpp"
#include "cfinite/dimers.hpp"
#include "cfinite/errors.hpp"
#include "cfinite/factor.hpp"
#include "cfinite/gf.hpp"
#include "cfinite/guess.hpp"
#include "cfinite/roots.hpp"
#include "cfinite/text.hpp"
#include "oracles.hpp"

using namespace cfinite;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Every positive certificate seen here is rechecked on 50 further terms.
std::size_t g_rechecked = 0;

bool sound(const CFiniteSeq& a, const CFiniteSeq& b, const ProofCertificate& c) {
  if (!c.verified) return false;
  ++g_rechecked;
  return oracle::recheck(a, b, c, 50);
}

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

RationalVec fibonacci_terms(std::size_t count) { return oracle::terms({0, 1}, {1, 1}, count); }

Outcome fibonacci_encoding() {
  Outcome o;
  auto g = guess_rec(fibonacci_terms(10));
  require(o, g && format_seq(*g) == "[[0,1],[1,1]]", "guess returned " + (g ? format_seq(*g) : "none"));
  if (o.ok) o.detail = format_seq(*g);
  return o;
}

Outcome prod_indicator_profile() {
  Outcome o;
  const RepetitionProfile p = prod_indicator({2, 2});
  require(o, p.multiplicities == std::vector<std::size_t>{1, 1, 1, 1, 2, 2, 2, 2, 4}, "profile " + format_profile(p.multiplicities));
  require(o, p.total() == 16, "total is not 16");
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n) {
      require(o, prod_indicator({m, n}) == prod_indicator({n, m}), "asymmetric at " + std::to_string(m) + "," + std::to_string(n));
      require(o, prod_indicator({m, n}).total() == m * m * n * n, "wrong total at " + std::to_string(m) + "," + std::to_string(n));
    }
  if (o.ok) o.detail = format_profile(p.multiplicities);
  return o;
}

const std::vector<Rational> kGrid{0, make_rational(1, 2), 1, make_rational(3, 2), 2};

Outcome two_chebyshev() {
  Outcome o;
  IdentityCheck check;
  check.lhs = [](const ParamPoint& p) { return mul(lookup("chebyshev_u", {p[0]}), lookup("chebyshev_u", {p[1]})); };
  check.rhs = [](const ParamPoint& p) {
    return parse_gf("(1-t^2)/(1-4*a*b*t-(-4*a^2+2-4*b^2)*t^2-4*a*b*t^3+t^4)", {{"a", p[0]}, {"b", p[1]}});
  };
  check.param_degrees = {2, 2};
  check.points = {kGrid, kGrid};
  check.series_terms = 20;
  const ProofCertificate c = verify_parametric_identity(check);
  require(o, c.verified && c.terms_checked == 25, c.statement);
  if (o.ok) o.detail = c.statement;
  return o;
}

Outcome three_chebyshev() {
  Outcome o;
  IdentityCheck check;
  check.lhs = [](const ParamPoint& p) {
    return mul(mul(lookup("chebyshev_u", {p[0]}), lookup("chebyshev_u", {p[1]})), lookup("chebyshev_u", {p[2]}));
  };
  check.rhs = [](const ParamPoint& p) {
    const std::string n = "1+(-4*a^2-4*b^2-4*c^2+3)*t^2+16*a*b*c*t^3+(-4*a^2-4*b^2-4*c^2+3)*t^4+t^6";
    const std::string d =
        "t^8-8*a*b*c*t^7+(16*a^2*b^2+16*a^2*c^2-8*a^2+16*b^2*c^2-8*b^2-8*c^2+4)*t^6"
        "+(-32*a^3*b*c+40*a*b*c-32*a*b^3*c-32*a*b*c^3)*t^5"
        "+(16*a^4+64*a^2*b^2*c^2-16*a^2+16*b^4-16*b^2+6+16*c^4-16*c^2)*t^4"
        "+(-32*a^3*b*c+40*a*b*c-32*a*b^3*c-32*a*b*c^3)*t^3"
        "+(16*a^2*b^2+16*a^2*c^2-8*a^2+16*b^2*c^2-8*b^2-8*c^2+4)*t^2-8*a*b*c*t+1";
    return parse_gf("(" + n + ")/(" + d + ")", {{"a", p[0]}, {"b", p[1]}, {"c", p[2]}});
  };
  check.param_degrees = {4, 4, 4};
  check.points = {kGrid, kGrid, kGrid};
  check.series_terms = 20;
  const ProofCertificate c = verify_parametric_identity(check);
  require(o, c.verified && c.terms_checked == 125, c.statement);
  if (o.ok) o.detail = c.statement;
  return o;
}

Outcome hadamard_square() {
  Outcome o;
  const CFiniteSeq fib = lookup("fibonacci");
  const CFiniteSeq sq = mul(fib, fib);
  RationalVec direct = fibonacci_terms(30);
  for (auto& x : direct) x *= x;
  auto ref = oracle::guess(direct);
  require(o, ref && ref->second == RationalVec{2, 2, -1}, "oracle disagrees with the expected recurrence");
  require(o, sq.order() == 3 && sq.rec() == RationalVec{2, 2, -1}, "mul gave " + format_seq(sq));
  require(o, oracle::terms(sq, 30) == direct, "terms differ from squared Fibonacci");
  if (o.ok) o.detail = format_seq(sq);
  return o;
}

Outcome round_trips() {
  Outcome o;
  oracle::Generator gen(2024);
  for (int i = 0; i < 200 && o.ok; ++i) {
    const std::size_t L = static_cast<std::size_t>(gen.integer(1, 6));
    const CFiniteSeq s = gen.sequence(L, 4, i % 2 == 1);
    const RationalVec want = oracle::terms(s, 40);
    const RationalGF gf = c_to_r(s);
    require(o, taylor(gf, 40) == want, "taylor(c_to_r) mismatch for " + format_seq(s));
    require(o, eval_terms(r_to_c(gf), 40) == want, "r_to_c(c_to_r) mismatch for " + format_seq(s));
  }
  for (int i = 0; i < 100 && o.ok; ++i) {
    const CFiniteSeq a = gen.sequence(static_cast<std::size_t>(gen.integer(1, 3)), 4, i % 3 == 0);
    const CFiniteSeq b = gen.sequence(static_cast<std::size_t>(gen.integer(1, 3)), 4, i % 4 == 0);
    const RationalVec ta = oracle::terms(a, 30), tb = oracle::terms(b, 30);
    RationalVec sum(30), prod(30);
    for (std::size_t n = 0; n < 30; ++n) {
      sum[n] = ta[n] + tb[n];
      prod[n] = ta[n] * tb[n];
    }
    const std::string pair = format_seq(a) + ", " + format_seq(b);
    require(o, eval_terms(add(a, b), 30) == sum, "add mismatch for " + pair);
    require(o, eval_terms(mul(a, b), 30) == prod, "mul mismatch for " + pair);
    require(o, eval_terms(cfinite::binomial_transform(a), 30) == oracle::binomial_transform(ta),
            "binomial transform mismatch for " + format_seq(a));
    require(o, eval_terms(cfinite::partial_sums(a), 30) == oracle::partial_sums(ta),
            "partial sums mismatch for " + format_seq(a));
    const CFiniteSeq ab = mul(a, b), ba = mul(b, a);
    require(o, sound(ab, ba, prove_equal(ab, ba)), "mul commutativity not proved for " + pair);
    const CFiniteSeq s1 = add(a, b), s2 = add(b, a);
    require(o, sound(s1, s2, prove_equal(s1, s2)), "add commutativity not proved for " + pair);
  }
  if (o.ok) o.detail = "200 GF round trips, 100 closure pairs with commutativity proofs";
  return o;
}

RationalVec prime_power_sum(std::size_t count) {
  RationalVec t;
  for (unsigned long n = 0; n < count; ++n) {
    Integer s = 0, p;
    for (unsigned long b : {2ul, 3ul, 5ul, 7ul}) {
      mpz_ui_pow_ui(p.get_mpz_t(), b, n);
      s += p;
    }
    t.emplace_back(s);
  }
  return t;
}

Outcome is_prod_battery() {
  Outcome o;
  oracle::Generator gen(77);
  const std::size_t shapes[3][2] = {{2, 2}, {2, 3}, {3, 3}};
  int built = 0, skipped = 0;
  while (built < 50 && o.ok) {
    const auto& shape = shapes[built % 3];
    const CFiniteSeq a = gen.sequence(shape[0], 3), b = gen.sequence(shape[1], 3);
    const CFiniteSeq target = mul(a, b);
    if (target.order() != shape[0] * shape[1] || target.rec().back() == 0) {
      ++skipped;
      continue;
    }
    bool degenerate = false;
    for (unsigned digits : {50u, 100u, 200u}) {
      try {
        const ProductVerdict v = is_prod(target, shape[0], shape[1], digits);
        require(o, v.yes, "no for " + format_seq(a) + " * " + format_seq(b) + " at " + std::to_string(digits) + " digits");
      } catch (const DegenerateRoots&) {
        degenerate = true;
      }
    }
    if (degenerate) {
      ++skipped;
      continue;
    }
    ++built;
  }
  auto negative = guess_rec(prime_power_sum(20));
  require(o, negative && negative->order() == 4, "2^n+3^n+5^n+7^n was not guessed at order 4");
  for (unsigned digits : {50u, 100u, 200u})
    if (negative) require(o, !is_prod(*negative, 2, 2, digits).yes, "2^n+3^n+5^n+7^n called a product");
  if (o.ok)
    o.detail = std::to_string(built) + " products yes at 50/100/200 digits (" + std::to_string(skipped) +
               " non-generic draws replaced); 2^n+3^n+5^n+7^n no";
  return o;
}

Outcome factor_fib_pell() {
  Outcome o;
  const CFiniteSeq fib = lookup("fibonacci"), pell = lookup("pell");
  const CFiniteSeq target = mul(fib, pell);
  require(o, target.order() == 4, "product order is not 4");
  auto r = factorize_roots(target, 2, 2);
  require(o, r && r->left == fib && r->right == pell, "factorize_roots did not return Fibonacci x Pell");
  if (r) require(o, sound(mul(r->left, r->right), target, r->certificate), "factorize_roots certificate unsound");
  IntegerSearch search;
  search.bound = 3;
  search.budget = std::chrono::seconds(60);
  IntegerSearchStats stats;
  std::optional<FactorPair> z;
  try {
    z = factorize_integer(target, 2, 2, search, &stats);
  } catch (const BudgetExhausted&) {
    require(o, false, "factorize_integer exhausted its 60 s budget");
  }
  require(o, z && z->left == fib && z->right == pell, "factorize_integer did not return Fibonacci x Pell");
  if (z) require(o, sound(mul(z->left, z->right), target, z->certificate), "factorize_integer certificate unsound");
  if (o.ok) o.detail = "both methods; integer search screened " + std::to_string(stats.candidates) + " candidates";
  return o;
}

Outcome dimer_checks() {
  Outcome o;
  for (unsigned m = 1; m <= 16 && o.ok; ++m)
    for (unsigned n = 1; m * n <= 16 && m <= kMaxDimerWidth; ++n)
      require(o, dimer_terms(m, n).back() == oracle::tilings(m, n), "exhaustive mismatch at " + std::to_string(m) + "x" + std::to_string(n));
  require(o, dimer_terms(4, 4).back() == 36, "4x4 is not 36");
  for (unsigned m = 1; m <= 6; ++m) {
    const RationalVec t = dimer_terms(m, 10);
    for (unsigned n = 1; n <= 10; ++n)
      if ((m * n) % 2 == 0)
        require(o, Rational(kasteleyn_count(m, n)) == t[n - 1], "Kasteleyn mismatch at " + std::to_string(m) + "x" + std::to_string(n));
  }
  require(o, dimer_terms(2, 8) == RationalVec{1, 2, 3, 5, 8, 13, 21, 34}, "width 2 is not the shifted Fibonacci sequence");
  if (o.ok) o.detail = "exhaustive m*n <= 16, Kasteleyn m <= 6, n <= 10, width 2 = 1,2,3,5,8,...";
  return o;
}

Outcome dimer_products() {
  Outcome o;
  std::ostringstream d;
  for (unsigned m : {4u, 6u}) {
    const DimerReport r = dimer_product_report(m);
    require(o, r.yes(), "width " + std::to_string(m) + ": " + r.to_string());
    d << "m=" << m << " order " << r.sequence.order() << " yes; ";
  }
  oracle::Generator gen(4242);
  for (int i = 0; i < 5; ++i) {
    DimerWeights w;
    auto weight = [&gen] {
      long p = 0;
      while (p == 0) p = gen.integer(-9, 9);
      return make_rational(p, gen.integer(1, 7));
    };
    w.horizontal = weight();
    w.vertical = weight();
    const DimerReport r = dimer_product_report(4, kDefaultDigits, w);
    require(o, r.yes(), "weighted width 4 at (" + to_string(w.horizontal) + ", " + to_string(w.vertical) + "): " + r.to_string());
    d << "(" << to_string(w.horizontal) << "," << to_string(w.vertical) << ") yes; ";
  }
  if (o.ok) o.detail = d.str();
  return o;
}

Outcome prove_soundness() {
  Outcome o;
  const CFiniteSeq fib = lookup("fibonacci");
  const CFiniteSeq bt = cfinite::binomial_transform(fib);
  const CFiniteSeq even = subsequence(fib, 2, 0);
  const ProofCertificate c = prove_equal(bt, even);
  require(o, c.verified, "BT(Fibonacci) = F(2n) not verified");
  require(o, c.order_bound == 4, "order bound " + std::to_string(c.order_bound));
  require(o, sound(bt, even, c), "certificate fails on 50 extra terms");
  require(o, g_rechecked >= 200, "fewer positive certificates than expected were rechecked");
  if (o.ok) o.detail = c.statement + "; " + std::to_string(g_rechecked) + " positive certificates rechecked on +50 terms";
  return o;
}

Outcome squared_cassini() {
  Outcome o;
  const RationalVec fib = fibonacci_terms(101);
  auto r = guess_nlr(fib, 2, 4);
  require(o, r.has_value(), "no relation found");
  if (!r) return o;
  bool constant = false;
  for (const auto& e : r->exponents) {
    bool zero = true;
    for (auto x : e) zero = zero && x == 0;
    constant = constant || zero;
  }
  require(o, constant, "constant monomial missing");
  for (std::size_t n = 2; n <= 100; ++n) require(o, r->evaluate(fib, n) == 0, "nonzero at n = " + std::to_string(n));
  // Lucas numbers have Cassini value +-5, so a squared Cassini relation must fail there
  const RationalVec lucas = oracle::terms({2, 1}, {1, 1}, 20);
  bool fails_on_lucas = false;
  for (std::size_t n = 2; n < 20; ++n) fails_on_lucas = fails_on_lucas || r->evaluate(lucas, n) != 0;
  require(o, fails_on_lucas, "relation also holds for Lucas numbers");
  if (o.ok) o.detail = r->to_string();
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Fibonacci encoding", 0.1, fibonacci_encoding},
      {2, "ProdIndicator(2,2)", 0.1, prod_indicator_profile},
      {3, "U(a)U(b) identity on 5x5 grid", 5, two_chebyshev},
      {4, "U(a)U(b)U(c) identity on 5x5x5 grid", 60, three_chebyshev},
      {5, "Hadamard square of Fibonacci", 0.1, hadamard_square},
      {6, "round-trip property suites", 30, round_trips},
      {7, "is_prod battery", 60, is_prod_battery},
      {8, "factorization of Fibonacci x Pell", 60, factor_fib_pell},
      {9, "dimer cross-checks", 60, dimer_checks},
      {10, "dimer product claim, widths 4 and 6", 600, dimer_products},
      {11, "prove_equal soundness", 1, prove_soundness},
      {12, "squared Cassini via GuessNLR", 10, squared_cassini},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %2d  %-38s %9.3f s (limit %g s)  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, in_time ? "" : "[over time] ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
