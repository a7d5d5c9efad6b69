#include <gtest/gtest.h>

#include "cfinite/dimers.hpp"
#include "cfinite/errors.hpp"
#include "cfinite/guess.hpp"
#include "cfinite/kernels.hpp"
#include "cfinite/text.hpp"
#include "oracles.hpp"

using namespace cfinite;

TEST(Dimers, Examples) {
  EXPECT_EQ(dimer_terms(2, 5), (RationalVec{1, 2, 3, 5, 8}));
  EXPECT_EQ(dimer_terms(4, 4).back(), 36);
  EXPECT_EQ(dimer_terms(3, 4), (RationalVec{0, 3, 0, 11}));
  EXPECT_THROW(dimer_terms(11, 3), ResourceError);
  EXPECT_THROW(dimer_terms(0, 3), PreconditionError);
}

TEST(Dimers, ExhaustiveOracle) {
  for (unsigned m = 1; m <= 16; ++m)
    for (unsigned n = 1; m * n <= 16; ++n) {
      if (m > kMaxDimerWidth) continue;
      EXPECT_EQ(dimer_terms(m, n).back(), oracle::tilings(m, n)) << m << "x" << n;
    }
  EXPECT_EQ(oracle::tilings(4, 4), 36);
}

TEST(Dimers, WeightedOracle) {
  const DimerWeights w{make_rational(2, 3), make_rational(-5, 2)};
  for (unsigned m = 1; m <= 4; ++m)
    for (unsigned n = 1; m * n <= 14; ++n)
      EXPECT_EQ(dimer_terms(m, n, w).back(), oracle::tilings(m, n, w.horizontal, w.vertical)) << m << "x" << n;
}

TEST(Dimers, Kasteleyn) {
  EXPECT_EQ(kasteleyn_count(2, 3), 3);
  EXPECT_EQ(kasteleyn_count(4, 4), 36);
  EXPECT_EQ(Rational(kasteleyn_count(8, 8)), dimer_terms(8, 8).back());
  for (unsigned m = 1; m <= 6; ++m) {
    const RationalVec t = dimer_terms(m, 10);
    for (unsigned n = 1; n <= 10; ++n)
      if ((m * n) % 2 == 0) EXPECT_EQ(Rational(kasteleyn_count(m, n)), t[n - 1]) << m << "x" << n;
  }
  EXPECT_THROW(kasteleyn_count(3, 3), PreconditionError);
  EXPECT_THROW(kasteleyn_count(2, 33), PreconditionError);
}

TEST(Dimers, Symmetry) {
  for (unsigned m = 1; m <= 6; ++m) {
    const RationalVec row = dimer_terms(m, 6);
    for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(row[n - 1], dimer_terms(n, m).back()) << m << "x" << n;
  }
}

TEST(Dimers, WeightSpecializations) {
  for (unsigned m = 1; m <= 5; ++m) EXPECT_EQ(dimer_terms(m, 6, {1, 1}), dimer_terms(m, 6));
  for (unsigned m : {2u, 4u})
    for (const auto& x : dimer_terms(m, 6, {1, 0})) EXPECT_EQ(x, 1);
  for (unsigned m : {1u, 3u})
    for (const auto& x : dimer_terms(m, 6, {1, 0})) EXPECT_EQ(x, 0);
}

TEST(Dimers, Sequences) {
  EXPECT_EQ(format_seq(dimer_seq(2)), "[[1,2],[1,1]]");
  EXPECT_EQ(format_seq(dimer_seq(3)), "[[3,11],[4,-1]]");
  EXPECT_EQ(format_seq(dimer_seq(1)), "[[1],[1]]");
  auto ref = oracle::guess({3, 11, 41, 153, 571, 2131});
  ASSERT_TRUE(ref);
  EXPECT_EQ(ref->second, (RationalVec{4, -1}));
  for (unsigned m = 1; m <= 6; ++m) {
    const CFiniteSeq s = dimer_seq(m);
    EXPECT_LE(s.order(), std::size_t{1} << m);
    const RationalVec direct = dimer_terms(m, 40);
    const RationalVec t = eval_terms(s, 20);
    for (std::size_t n = 0; n < 20; ++n) EXPECT_EQ(t[n], direct[m % 2 ? 2 * n + 1 : n]);
  }
}

TEST(Dimers, ProductReports) {
  const DimerReport two = dimer_product_report(2);
  EXPECT_TRUE(two.yes());
  EXPECT_TRUE(two.verdict->trivial);
  const DimerReport four = dimer_product_report(4);
  EXPECT_TRUE(four.yes());
  EXPECT_EQ(four.verdict->observed, prod_indicator({2, 2}));
  EXPECT_NE(four.to_string().find("[1, 1, 1, 1, 2, 2, 2, 2, 4]"), std::string::npos);
  const DimerReport one = dimer_product_report(1);
  EXPECT_FALSE(one.applicable);
  EXPECT_FALSE(one.yes());
}
