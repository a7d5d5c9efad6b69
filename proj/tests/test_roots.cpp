#include <gtest/gtest.h>

#include "cfinite/errors.hpp"
#include "cfinite/guess.hpp"
#include "cfinite/roots.hpp"
#include "cfinite/text.hpp"
#include "oracles.hpp"

using namespace cfinite;

namespace {

const CFiniteSeq kFib = parse_seq("[[0,1],[1,1]]");
const CFiniteSeq kPell = parse_seq("[[0,1],[2,1]]");

RationalVec primes_power_sum(std::size_t count) {
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

RepetitionProfile profile(std::vector<std::size_t> v) { return RepetitionProfile{std::move(v)}; }

// Products of random integer factors whose product keeps the full order and
// has simple roots.
std::vector<CFiniteSeq> product_battery(std::uint64_t seed, std::size_t count) {
  oracle::Generator gen(seed);
  const std::pair<std::size_t, std::size_t> shapes[] = {{2, 2}, {2, 3}, {3, 3}};
  std::vector<CFiniteSeq> out;
  while (out.size() < count) {
    const auto [l1, l2] = shapes[out.size() % 3];
    const CFiniteSeq p = mul(gen.sequence(l1, 5), gen.sequence(l2, 5));
    if (p.order() != l1 * l2) continue;
    if (char_roots(p, 50).near_multiple) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(Roots, Examples) {
  const BinetForm fib = char_roots(kFib, 60);
  ASSERT_EQ(fib.roots.size(), 2u);
  std::vector<double> re{fib.roots[0].re.to_double(), fib.roots[1].re.to_double()};
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], -0.6180339887498949, 1e-15);
  EXPECT_NEAR(re[1], 1.618033988749895, 1e-15);
  EXPECT_EQ(fib.roots[0].re.to_string(20).substr(0, 1) == "-" ? fib.roots[1].re.to_string(11) : fib.roots[0].re.to_string(11),
            "1.6180339887");

  const BinetForm two = char_roots(parse_seq("[[1],[2]]"));
  EXPECT_EQ(two.roots[0].re.to_string(30), "2");
  EXPECT_TRUE(two.roots[0].im.is_zero() || two.roots[0].im.to_double() == 0);

  const BinetForm i = char_roots(parse_seq("[[1,0],[0,-1]]"));
  std::vector<double> im{i.roots[0].im.to_double(), i.roots[1].im.to_double()};
  std::sort(im.begin(), im.end());
  EXPECT_NEAR(im[0], -1, 1e-30);
  EXPECT_NEAR(im[1], 1, 1e-30);
  EXPECT_NEAR(i.roots[0].re.to_double(), 0, 1e-30);

  EXPECT_THROW(char_roots(parse_seq("[[1,2],[1,0]]")), PreconditionError);
}

TEST(Roots, ResidualBoundAndBinet) {
  oracle::Generator gen(17);
  for (int trial = 0; trial < 25; ++trial) {
    const CFiniteSeq s = gen.sequence(static_cast<std::size_t>(gen.integer(1, 7)), 9, trial % 3 == 0);
    for (unsigned digits : {50u, 100u}) {
      const BinetForm bf = char_roots(s, digits, !char_roots(s, digits).near_multiple);
      Rational cmax = 0;
      for (const auto& c : s.rec()) cmax = std::max(cmax, Rational(abs(c)));
      const mpfr_prec_t bits = digits_to_bits(digits);
      const BigFloat bound = BigFloat::pow10(-static_cast<long>(digits) + 10, bits) * (BigFloat(1, bits) + BigFloat(cmax, bits));
      EXPECT_LE(bf.max_residual, bound);
      if (bf.coefficients.empty()) continue;
      // a(n) = sum_i C_i root_i^n
      const RationalVec t = oracle::terms(s, 12);
      for (std::size_t n = 0; n < t.size(); ++n) {
        BigComplex acc(bits);
        for (std::size_t k = 0; k < bf.roots.size(); ++k) {
          BigComplex p(BigFloat(1, bits), BigFloat(bits));
          for (std::size_t e = 0; e < n; ++e) p *= bf.roots[k];
          acc += bf.coefficients[k] * p;
        }
        const BigFloat err = (acc - BigComplex(BigFloat(t[n], bits), BigFloat(bits))).abs();
        const BigFloat scale = BigFloat(1, bits) + abs(BigFloat(t[n], bits));
        EXPECT_LE(err, BigFloat::pow10(-static_cast<long>(digits) / 2, bits) * scale);
      }
    }
  }
}

TEST(Indicator, PaperProfileAndTotals) {
  EXPECT_EQ(prod_indicator({2, 2}), profile({1, 1, 1, 1, 2, 2, 2, 2, 4}));
  EXPECT_EQ(prod_indicator({1, 1}), profile({1}));
  EXPECT_EQ(prod_indicator({2, 3}).total(), 36u);
  EXPECT_EQ(format_profile(prod_indicator({2, 2}).multiplicities), "[1, 1, 1, 1, 2, 2, 2, 2, 4]");
  for (std::size_t a = 1; a <= 12; ++a)
    for (std::size_t b = 1; a * b <= 12; ++b) {
      EXPECT_EQ(prod_indicator({a, b}).total(), a * a * b * b);
      for (std::size_t c = 1; a * b * c <= 12; ++c) EXPECT_EQ(prod_indicator({a, b, c}).total(), a * a * b * b * c * c);
    }
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b) EXPECT_EQ(prod_indicator({a, b}), prod_indicator({b, a}));
  EXPECT_EQ(prod_indicator({4}), profile({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 4}));
}

TEST(Profile, Examples) {
  EXPECT_EQ(ratio_profile(char_roots(kFib)), profile({1, 1, 2}));
  EXPECT_EQ(ratio_profile(char_roots(parse_seq("[[3],[5]]"))), profile({1}));
  EXPECT_EQ(ratio_profile(char_roots(mul(kFib, kPell))), prod_indicator({2, 2}));
}

TEST(IsProd, Examples) {
  const CFiniteSeq fp = mul(kFib, kPell);
  EXPECT_TRUE(is_prod(fp, 2, 2).yes);
  EXPECT_TRUE(is_prod(fp, 2, 2).profile_match);

  auto guessed = guess_rec(primes_power_sum(20));
  ASSERT_TRUE(guessed);
  const ProductVerdict no = is_prod(*guessed, 2, 2);
  EXPECT_FALSE(no.yes);
  EXPECT_EQ(no.observed, profile({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 4}));

  // a(3) breaks the order-3 rule, so the minimal recurrence keeps c_4 = 0
  EXPECT_THROW(is_prod(parse_seq("[[1,2,5,1],[1,1,1,0]]"), 2, 2), PreconditionError);
  EXPECT_THROW(is_prod(parse_seq("[[1,2,5],[1,1,1]]"), 2, 2), OrderMismatch);

  const CFiniteSeq triple = mul(fp, parse_seq("[[1,3],[3,-1]]"));
  EXPECT_TRUE(is_prod_g(triple, {2, 2, 2}).yes);
  EXPECT_TRUE(is_prod_g(kFib, {2}).yes);
  EXPECT_TRUE(is_prod_g(kFib, {2}).trivial);
  EXPECT_TRUE(is_prod_g(fp, {4}).yes);
  EXPECT_TRUE(is_prod_g(fp, {2, 2}).yes);
  EXPECT_THROW(is_prod_g(fp, {}), PreconditionError);
}

TEST(IsProd, DegenerateRoots) {
  // (n + 1) + 2^n + 3^n: double root 1
  const CFiniteSeq s = add(parse_seq("[[1,2],[2,-1]]"), parse_seq("[[2,5],[5,-6]]"));
  ASSERT_EQ(s.order(), 4u);
  EXPECT_THROW(is_prod(s, 2, 2), DegenerateRoots);
}

TEST(IsProd, ExtraCoincidencesUseTheGrid) {
  // roots {1, 2} x {3, -3} = {3, -3, 6, -6}: the ratio -1 occurs four times
  // (generic products give it twice), so the profile is coarser than
  // [1,1,1,1,2,2,2,2,4]: ratio 1 and -1 four times each, +-2 and +-1/2 twice
  const CFiniteSeq s = mul(parse_seq("[[2,3],[3,-2]]"), parse_seq("[[1,1],[0,9]]"));
  ASSERT_EQ(s.order(), 4u);
  const ProductVerdict v = is_prod(s, 2, 2);
  EXPECT_EQ(v.observed, profile({2, 2, 2, 2, 4, 4}));
  EXPECT_FALSE(v.profile_match);
  EXPECT_TRUE(v.grid_match);
  EXPECT_TRUE(v.yes);
}

TEST(IsProd, RandomBatteryIsStableAcrossDigits) {
  for (const CFiniteSeq& p : product_battery(4242, 30)) {
    const std::size_t l1 = p.order() == 9 ? 3 : 2;
    const std::size_t l2 = p.order() / l1;
    for (unsigned digits : {50u, 100u, 200u}) EXPECT_TRUE(is_prod(p, l1, l2, digits).yes) << format_seq(p);
  }
  auto guessed = guess_rec(primes_power_sum(20));
  for (unsigned digits : {50u, 100u, 200u}) EXPECT_FALSE(is_prod(*guessed, 2, 2, digits).yes);
}

TEST(Grid, MultiplicativeGrids) {
  const BinetForm bf = char_roots(mul(kFib, kPell));
  const BigFloat tol = BigFloat::pow10(-50, bf.roots.front().precision());
  EXPECT_FALSE(multiplicative_grids(bf.roots, 2, 2, tol).empty());
  EXPECT_TRUE(is_root_tensor(bf.roots, {2, 2}, tol));
  auto guessed = guess_rec(primes_power_sum(20));
  const BinetForm primes = char_roots(*guessed);
  EXPECT_TRUE(multiplicative_grids(primes.roots, 2, 2, tol).empty());
  EXPECT_FALSE(is_root_tensor(primes.roots, {2, 2}, tol));
  EXPECT_THROW(multiplicative_grids(primes.roots, 2, 3, tol), PreconditionError);
}
