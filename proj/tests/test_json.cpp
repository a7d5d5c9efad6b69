#include <gtest/gtest.h>

#include "cfinite/errors.hpp"
#include "cfinite/json_io.hpp"
#include "cfinite/text.hpp"
#include "oracles.hpp"

using namespace cfinite;

TEST(Json, SequenceSchema) {
  const auto j = to_json(parse_seq("[[1/2,0],[1,-1]]"));
  EXPECT_EQ(j.dump(), R"({"init":["1/2","0"],"rec":["1","-1"]})");
  EXPECT_EQ(seq_from_json(nlohmann::json::parse(R"({"init":[0,"1"],"rec":["1","1"]})")),
            parse_seq("[[0,1],[1,1]]"));
  EXPECT_THROW(seq_from_json(nlohmann::json::parse(R"({"init":[0]})")), ParseError);
  EXPECT_THROW(seq_from_json(nlohmann::json::parse(R"({"init":[0.5],"rec":[1]})")), ParseError);
}

TEST(Json, GfSchema) {
  const RationalGF f = parse_gf("z/(1-z-z^2)");
  EXPECT_EQ(to_json(f).dump(), R"({"denominator":["1","-1","-1"],"numerator":["0","1"]})");
}

TEST(Json, RoundTrip) {
  oracle::Generator gen(77);
  for (int trial = 0; trial < 100; ++trial) {
    const CFiniteSeq s = gen.sequence(static_cast<std::size_t>(gen.integer(1, 6)), 6, true);
    EXPECT_EQ(seq_from_json(nlohmann::json::parse(to_json(s).dump())), s);
    const RationalGF f = c_to_r(s);
    EXPECT_EQ(gf_from_json(nlohmann::json::parse(to_json(f).dump())), f);
    EXPECT_EQ(parse_seq(format_seq(s)), s);
    EXPECT_EQ(parse_seq(format_seq_display(s)), s);
    EXPECT_EQ(parse_gf(format_gf(f)), f);
  }
}
