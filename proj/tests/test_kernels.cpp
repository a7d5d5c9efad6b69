#include <gtest/gtest.h>

#include "cfinite/dimers.hpp"
#include "cfinite/errors.hpp"
#include "cfinite/kernels.hpp"
#include "oracles.hpp"

using namespace cfinite;

TEST(Kernels, TransferStepSerialMatchesParallel) {
  oracle::Generator gen(7);
  for (unsigned m = 1; m <= 8; ++m) {
    RationalVec state(std::size_t{1} << m);
    for (auto& x : state) x = gen.rational(5);
    const Rational h = gen.rational(3), v = gen.rational(3);
    EXPECT_EQ(kernels::transfer_step_serial(m, state, h, v), kernels::transfer_step_omp(m, state, h, v));
  }
  EXPECT_EQ(dimer_terms(5, 12, {}, false), dimer_terms(5, 12, {}, true));
}

TEST(Kernels, FirstMatch) {
  for (std::size_t target : {0u, 3u, 57u, 99u}) {
    auto pred = [target](std::size_t i) { return i >= target && i % 3 == target % 3; };
    EXPECT_EQ(kernels::first_match_serial(100, pred), target);
    EXPECT_EQ(kernels::first_match_omp(100, pred), target);
  }
  EXPECT_FALSE(kernels::first_match_omp(50, [](std::size_t) { return false; }));
  EXPECT_FALSE(kernels::first_match_omp(0, [](std::size_t) { return true; }));
  // the exception from the lowest index wins over later matches
  auto throwing = [](std::size_t i) -> bool {
    if (i == 10) throw ResourceError("ten");
    return i == 20;
  };
  EXPECT_THROW(kernels::first_match_omp(40, throwing), ResourceError);
  EXPECT_EQ(kernels::first_match_omp(40, [](std::size_t i) -> bool {
              if (i == 30) throw ResourceError("late");
              return i == 20;
            }),
            20u);
}
