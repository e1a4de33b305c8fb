#include "lcsurf/error.hpp"
#include "lcsurf/germs.hpp"
#include "lcsurf/stdcoeff.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using lcsurf::BigInt;
using lcsurf::Rat;

namespace {

Rat r(std::int64_t a, std::int64_t b = 1) { return {BigInt(a), BigInt(b)}; }

}  // namespace

TEST(IsStandard, Examples) {
  EXPECT_TRUE(lcsurf::is_standard(r(1, 2)));
  EXPECT_TRUE(lcsurf::is_standard(r(1)));
  EXPECT_FALSE(lcsurf::is_standard(r(3, 5)));
  EXPECT_FALSE(lcsurf::is_standard(r(0)));
  EXPECT_FALSE(lcsurf::is_standard(r(2)));
  EXPECT_FALSE(lcsurf::is_standard(r(-1, 2)));
}

TEST(IsStandard, MatchesEnumeration) {
  std::set<std::pair<std::int64_t, std::int64_t>> standard{{1, 1}};
  for (std::int64_t k = 2; k <= 100; ++k) standard.insert({k - 1, k});
  for (std::int64_t d = 1; d <= 100; ++d) {
    for (std::int64_t a = 0; a <= d; ++a) {
      Rat c = r(a, d);
      auto key = std::pair{static_cast<std::int64_t>(c.numerator()),
                           static_cast<std::int64_t>(c.denominator())};
      ASSERT_EQ(lcsurf::is_standard(c), standard.count(key) == 1) << c;
    }
  }
}

TEST(VanishingHypothesis, Examples) {
  EXPECT_TRUE(lcsurf::vanishing_hypothesis(r(3, 5), 2));
  EXPECT_FALSE(lcsurf::vanishing_hypothesis(r(3, 5), 4));
  for (std::int64_t m = 2; m <= 20; ++m) EXPECT_TRUE(lcsurf::vanishing_hypothesis(r(1), m));
  EXPECT_THROW(lcsurf::vanishing_hypothesis(r(1, 2), 1), lcsurf::BadParameters);
  EXPECT_THROW(lcsurf::vanishing_hypothesis(r(0), 2), lcsurf::BadParameters);
  EXPECT_THROW(lcsurf::vanishing_hypothesis(r(3, 2), 2), lcsurf::BadParameters);
}

TEST(BracketBound, Examples) {
  EXPECT_TRUE(lcsurf::bracket_bound_holds(r(1, 2), 2));
  EXPECT_TRUE(lcsurf::bracket_bound_holds(r(2, 3), 4));
  EXPECT_TRUE(lcsurf::bracket_bound_holds(r(3, 5), 4));
  EXPECT_FALSE(lcsurf::bracket_bound_holds(r(1, 3), 2));
}

TEST(BracketBound, StandardCoefficientsSatisfyBoth) {
  for (std::int64_t k = 2; k <= 60; ++k) {
    for (std::int64_t m = 2; m <= 60; ++m) {
      Rat c = r(k - 1, k);
      ASSERT_TRUE(lcsurf::vanishing_hypothesis(c, m)) << c << " " << m;
      ASSERT_TRUE(lcsurf::bracket_bound_holds(c, m)) << c << " " << m;
    }
  }
  for (std::int64_t m = 2; m <= 60; ++m) ASSERT_TRUE(lcsurf::bracket_bound_holds(r(1), m));
}

TEST(BracketBound, HoldsOnUpperInterval) {
  for (std::int64_t m = 2; m <= 40; ++m) {
    for (std::int64_t d = 1; d <= 60; ++d) {
      for (std::int64_t a = 1; a <= d; ++a) {
        Rat c = r(a, d);
        if (c < r(1) - r(1, m)) continue;
        ASSERT_TRUE(lcsurf::vanishing_hypothesis(c, m));
        // 0 <= floor(mc) - (m-1)c <= c in GMP
        mpq_class q = oracle::to_mpq(c);
        mpq_class gap = mpq_class(oracle::floor_q(m * q)) - (m - 1) * q;
        ASSERT_TRUE(gap >= 0 && gap <= q) << c << " " << m;
        ASSERT_TRUE(lcsurf::bracket_bound_holds(c, m)) << c << " " << m;
      }
    }
  }
}

// Searching non-hypothesis coefficients by increasing denominator, then m,
// finds the recorded counterexample (1/3, 2) first.
TEST(BracketBound, CounterexampleOutsideHypothesis) {
  std::optional<std::pair<Rat, std::int64_t>> first;
  for (std::int64_t d = 2; d <= 20 && !first; ++d)
    for (std::int64_t a = 1; a < d && !first; ++a)
      for (std::int64_t m = 2; m <= 20 && !first; ++m) {
        Rat c = r(a, d);
        if (c.denominator() != d || lcsurf::vanishing_hypothesis(c, m)) continue;
        if (!lcsurf::bracket_bound_holds(c, m)) first = {c, m};
      }
  ASSERT_TRUE(first);
  EXPECT_EQ(first->first, r(1, 3));
  EXPECT_EQ(first->second, 2);
}

TEST(CheckCoefficient, Record) {
  auto check = lcsurf::check_coefficient(r(3, 5), 4);
  EXPECT_EQ(check.c, r(3, 5));
  EXPECT_EQ(check.m, 4);
  EXPECT_FALSE(check.standard);
  EXPECT_FALSE(check.hypothesis_ok);
  EXPECT_TRUE(check.bracket_ok);
}

TEST(PltModification, Examples) {
  auto a = lcsurf::plt_modification(1, r(1));
  EXPECT_EQ(a.discrepancy, r(0));
  EXPECT_EQ(a.assigned_coeff, r(0));
  auto b = lcsurf::plt_modification(2, r(1, 2));
  EXPECT_EQ(b.discrepancy, r(-3, 4));
  EXPECT_EQ(b.assigned_coeff, r(3, 4));
  auto c = lcsurf::plt_modification(4, r(1));
  EXPECT_EQ(c.discrepancy, r(-3, 4));
  EXPECT_EQ(c.assigned_coeff, r(3, 4));
  EXPECT_THROW(lcsurf::plt_modification(0, r(1)), lcsurf::BadParameters);
  EXPECT_THROW(lcsurf::plt_modification(2, r(0)), lcsurf::BadParameters);
}

// Against the solver on the single (-n)-curve of 1/n(1,1) and against the
// gamma the classifier reads off the same germ.
TEST(PltModification, AgreesWithSolverAndGamma) {
  for (std::int64_t n = 1; n <= 15; ++n) {
    for (std::int64_t den = 1; den <= 8; ++den) {
      for (std::int64_t a = 1; a <= den; ++a) {
        Rat d = r(a, den);
        auto mod = lcsurf::plt_modification(n, d);
        ASSERT_EQ(mod.discrepancy + mod.assigned_coeff, r(0));
        lcsurf::CyclicQuotientGerm g{n, 1, r(1), r(1) - d};
        auto graph = lcsurf::resolution_graph(g);
        if (n > 1) ASSERT_EQ(lcsurf::boundary_coefficients(graph).discrepancies()[0], mod.discrepancy);
        auto cls = lcsurf::classify_lc_germ(graph);
        ASSERT_EQ(cls.tag, lcsurf::GermTag::PLT_CHAIN);
        ASSERT_EQ(mod.assigned_coeff, r(1) - *cls.gamma) << n << " " << d;
      }
    }
  }
}
