#include <gtest/gtest.h>
#include <set>

#include "cfinite/corpus.hpp"
#include "cfinite/errors.hpp"
#include "cfinite/gf.hpp"
#include "cfinite/text.hpp"

using namespace cfinite;

TEST(Corpus, Registry) {
  EXPECT_EQ(format_seq(lookup("fibonacci")), "[[0,1],[1,1]]");
  EXPECT_EQ(format_seq(lookup("lucas")), "[[2,1],[1,1]]");
  EXPECT_EQ(format_seq(lookup("pell")), "[[0,1],[2,1]]");
  EXPECT_EQ(format_seq(lookup("chebyshev_u", {1})), "[[1,2],[2,-1]]");
  EXPECT_EQ(format_seq(lookup("chebyshev_u", {make_rational(1, 3)})), "[[1,2/3],[2/3,-1]]");
  EXPECT_EQ(format_seq(lookup("chebyshev_t", {2})), "[[1,2],[4,-1]]");
  EXPECT_EQ(format_seq(lookup("geometric", {1})), "[[1],[1]]");
  EXPECT_EQ(format_seq(lookup("natural")), "[[0,1],[2,-1]]");
  EXPECT_THROW(lookup("nope"), PreconditionError);
  EXPECT_THROW(lookup("fibonacci", {1}), PreconditionError);
  EXPECT_THROW(lookup("chebyshev_u"), PreconditionError);
  std::set<std::string> names;
  for (const auto& s : corpus()) EXPECT_TRUE(names.insert(s.name).second);
}

TEST(Corpus, ChebyshevRecurrence) {
  for (int k = -5; k < 5; ++k) {
    const Rational x = make_rational(k, 3);
    const RationalVec u = eval_terms(lookup("chebyshev_u", {x}), 20);
    EXPECT_EQ(u[0], 1);
    EXPECT_EQ(u[1], 2 * x);
    for (std::size_t n = 1; n + 1 < u.size(); ++n) EXPECT_EQ(u[n + 1], 2 * x * u[n] - u[n - 1]);
    EXPECT_EQ(taylor(c_to_r(lookup("chebyshev_u", {x})), 20), u);
    EXPECT_EQ(c_to_r(lookup("chebyshev_u", {x})), parse_gf("1/(1-2*x*t+t^2)", {{"x", x}}));
    const RationalVec t = eval_terms(lookup("chebyshev_t", {x}), 20);
    for (std::size_t n = 1; n + 1 < t.size(); ++n) EXPECT_EQ(t[n + 1], 2 * x * t[n] - t[n - 1]);
  }
}
