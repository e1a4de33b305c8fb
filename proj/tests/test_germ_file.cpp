#include "lcsurf/error.hpp"
#include "lcsurf/germ_file.hpp"

#include <gtest/gtest.h>

#include <random>

using lcsurf::BigInt;
using lcsurf::CyclicQuotientGerm;
using lcsurf::GermFile;
using lcsurf::GluedLiteral;
using lcsurf::GraphLiteral;
using lcsurf::Rat;

namespace {

Rat r(std::int64_t a, std::int64_t b = 1) { return {BigInt(a), BigInt(b)}; }

template <class E>
E parse_error(std::string_view text) {
  try {
    lcsurf::parse_germ_file(text);
  } catch (const E& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << text;
  return E("");
}

}  // namespace

TEST(ParseGermFile, CyclicQuotient) {
  auto f = lcsurf::parse_germ_file(
      R"({"kind":"cyclic_quotient","n":5,"q":2,"conductor":"1","side":"1/2"})");
  EXPECT_EQ(f.kind(), "cyclic_quotient");
  EXPECT_EQ(std::get<CyclicQuotientGerm>(f.payload), (CyclicQuotientGerm{5, 2, r(1), r(1, 2)}));
  // conductor and side default to 1 and 0
  auto d = lcsurf::parse_germ_file(R"({"kind":"cyclic_quotient","n":3,"q":1})");
  EXPECT_EQ(std::get<CyclicQuotientGerm>(d.payload), (CyclicQuotientGerm{3, 1, r(1), r(0)}));
}

TEST(ParseGermFile, GcdIsValidationError) {
  EXPECT_THROW(lcsurf::parse_germ_file(
                   R"({"kind":"cyclic_quotient","n":4,"q":2,"conductor":"1","side":"0"})"),
               lcsurf::ValidationError);
}

TEST(ParseGermFile, DualGraph) {
  auto f = lcsurf::parse_germ_file(
      R"({"kind":"dual_graph","chain":[3,2],"branches":[[1,"1"],[2,"2/3"]]})");
  const auto& lit = std::get<GraphLiteral>(f.payload);
  EXPECT_EQ(lit.chain, (std::vector<std::int64_t>{3, 2}));
  auto g = lit.to_graph();
  EXPECT_EQ(g, lcsurf::ResolutionGraph::chain({3, 2}, {{0, r(1)}, {1, r(2, 3)}}));

  auto fork = lcsurf::parse_germ_file(
      R"({"kind":"dual_graph","chain":[2],"forks":[[1,2],[1,2]],"branches":[[1,"1"]]})");
  auto fg = std::get<GraphLiteral>(fork.payload).to_graph();
  EXPECT_EQ(fg.size(), 3u);
  EXPECT_EQ(fg.edges(), (std::vector<lcsurf::ResolutionGraph::Edge>{{0, 1}, {0, 2}}));

  auto smooth = lcsurf::parse_germ_file(
      R"({"kind":"dual_graph","chain":[],"branches":[[0,"1"],[0,"1/2"]]})");
  EXPECT_TRUE(std::get<GraphLiteral>(smooth.payload).to_graph().empty());
}

TEST(ParseGermFile, DualGraphValidation) {
  using lcsurf::ValidationError;
  EXPECT_THROW(lcsurf::parse_germ_file(R"({"kind":"dual_graph","chain":[2,0]})"), ValidationError);
  EXPECT_THROW(lcsurf::parse_germ_file(R"({"kind":"dual_graph","chain":[2],"forks":[[2,2]]})"),
               ValidationError);
  EXPECT_THROW(lcsurf::parse_germ_file(R"({"kind":"dual_graph","chain":[2],"branches":[[0,"1"]]})"),
               ValidationError);
  EXPECT_THROW(lcsurf::parse_germ_file(R"({"kind":"dual_graph","chain":[2],"branches":[[1,"3/2"]]})"),
               ValidationError);
  EXPECT_THROW(lcsurf::parse_germ_file(R"({"kind":"dual_graph","chain":[2],"branches":[[-1,"1"]]})"),
               ValidationError);
}

TEST(ParseGermFile, Glued) {
  auto f = lcsurf::parse_germ_file(R"({"kind":"glued","components":[
      {"kind":"cyclic_quotient","n":2,"q":1,"side":"3/4"},
      {"n":4,"q":1,"side":"1/2"}]})");
  const auto& glued = std::get<GluedLiteral>(f.payload);
  EXPECT_EQ(glued.components.size(), 2u);
  EXPECT_TRUE(glued.glue_ok);
  EXPECT_THROW(lcsurf::parse_germ_file(R"({"kind":"glued","components":[]})"),
               lcsurf::ValidationError);
}

TEST(ParseGermFile, SyntaxErrorsCarryPosition) {
  auto e = parse_error<lcsurf::ParseError>("{\n  \"kind\": \"cyclic_quotient\",\n  \"n\": 5,,\n}");
  ASSERT_TRUE(e.line());
  EXPECT_EQ(*e.line(), 3u);
  ASSERT_TRUE(e.column());
  EXPECT_GE(*e.column(), 9u);
  EXPECT_FALSE(e.expected().empty());

  auto trunc = parse_error<lcsurf::ParseError>(R"({"kind":"cyclic_quotient")");
  EXPECT_TRUE(trunc.line());
}

TEST(ParseGermFile, SchemaErrors) {
  using lcsurf::ParseError;
  for (const char* bad : {
           R"([1,2])",
           R"({"n":5})",
           R"({"kind":"torus"})",
           R"({"kind":"cyclic_quotient","n":"5","q":2})",
           R"({"kind":"cyclic_quotient","n":5.5,"q":2})",
           R"({"kind":"cyclic_quotient","n":5,"q":2,"side":0.5})",
           R"({"kind":"cyclic_quotient","n":5,"q":2,"side":"1/0"})",
           R"({"kind":"cyclic_quotient","n":5,"q":2,"extra":1})",
           R"({"kind":"cyclic_quotient","q":2})",
           R"({"kind":"dual_graph","chain":"3,2"})",
           R"({"kind":"dual_graph","chain":[3],"branches":[[1]]})",
           R"({"kind":"glued","components":[{"kind":"dual_graph","chain":[]}]})",
           R"({"kind":"glued","components":[{"n":1,"q":1}],"glue_ok":"yes"})",
           R"({"kind":"cyclic_quotient","n":99999999999999999999,"q":1})",
       })
    EXPECT_THROW(lcsurf::parse_germ_file(bad), ParseError) << bad;
}

TEST(ParseGermFile, PrintParseRoundtrip) {
  std::vector<GermFile> values{
      {CyclicQuotientGerm{5, 2, r(1), r(1, 2)}},
      {CyclicQuotientGerm{1, 1, r(1, 3), r(1)}},
      {GraphLiteral{{3, 2}, {}, {{1, r(1)}, {2, r(2, 3)}}}},
      {GraphLiteral{{2}, {{1, 2}, {1, 2}}, {{1, r(1)}}}},
      {GraphLiteral{{}, {}, {{0, r(1)}, {0, r(1, 2)}}}},
      {GluedLiteral{{CyclicQuotientGerm{2, 1, r(1), r(3, 4)}, CyclicQuotientGerm{4, 1, r(1), r(1, 2)}},
                    false}},
  };
  for (const auto& v : values) {
    auto text = lcsurf::print_germ_file(v);
    EXPECT_EQ(lcsurf::parse_germ_file(text), v) << text;
    EXPECT_EQ(lcsurf::print_germ_file(lcsurf::parse_germ_file(text)), text);
  }
}

TEST(ParseGermFile, RandomGermsRoundtrip) {
  std::mt19937_64 rng(2024);
  int valid = 0;
  for (int i = 0; i < 2000; ++i) {
    std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 60)(rng);
    std::int64_t q = std::uniform_int_distribution<std::int64_t>(1, n)(rng);
    std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, 9)(rng);
    std::int64_t a = std::uniform_int_distribution<std::int64_t>(0, d)(rng);
    GermFile f{CyclicQuotientGerm{n, q, r(1), r(a, d)}};
    auto text = lcsurf::print_germ_file(f);
    if (std::gcd(n, q) != 1) {
      EXPECT_THROW(lcsurf::parse_germ_file(text), lcsurf::ValidationError);
      continue;
    }
    ++valid;
    ASSERT_EQ(lcsurf::parse_germ_file(text), f);
  }
  EXPECT_GT(valid, 500);
}
