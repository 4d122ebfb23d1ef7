#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "vdfi/degree_function.hpp"

using namespace vdfi;

namespace {

void expect_rel(double actual, double expected, double rel, const std::string& what = "") {
  const double scale = std::max(std::fabs(expected), 1e-300);
  if (std::fabs(expected) < 1e-14) {
    EXPECT_NEAR(actual, expected, 1e-14) << what;
  } else {
    EXPECT_LE(std::fabs(actual - expected) / scale, rel) << what << " actual=" << actual << " expected=" << expected;
  }
}

}  // namespace

TEST(Evaluate, Examples) {
  EXPECT_DOUBLE_EQ(DegreeFunction::power(2).evaluate(4), 16.0);
  for (double a : {0.1, 0.6246, 1.0, 3.5}) EXPECT_EQ(DegreeFunction::sum_lodeg(a).evaluate(1), 0.0);
  EXPECT_DOUBLE_EQ(DegreeFunction::forgotten_coindex(11).evaluate(3), 63.0);
  EXPECT_EQ(*DegreeFunction::forgotten_coindex(11).exact(3), Rational(63));
  EXPECT_DOUBLE_EQ(DegreeFunction::sum_exdeg(2).evaluate(3), 24.0);
  EXPECT_DOUBLE_EQ(DegreeFunction::ln_mult_zagreb1(-1).evaluate(4), -std::log(4.0));
  EXPECT_DOUBLE_EQ(DegreeFunction::ln_mult_zagreb2(0.5).evaluate(2), std::log(2.0));
  EXPECT_DOUBLE_EQ(DegreeFunction::table({1, 2, 3, 5}).evaluate(4), 5.0);
}

TEST(Evaluate, Errors) {
  EXPECT_THROW(DegreeFunction::power(2).evaluate(0), Error);
  EXPECT_THROW(DegreeFunction::power(2).evaluate(5), Error);
  EXPECT_THROW(DegreeFunction::sum_exdeg(1), Error);
  EXPECT_THROW(DegreeFunction::sum_exdeg(0), Error);
  EXPECT_THROW(DegreeFunction::sum_exdeg(-2), Error);
  EXPECT_THROW(DegreeFunction::sum_lodeg(0), Error);
  EXPECT_THROW(DegreeFunction::forgotten_coindex(1), Error);
  EXPECT_THROW(DegreeFunction::power(std::nan("")), Error);
}

TEST(Evaluate, ExactPathOnlyForIntegerFamilies) {
  EXPECT_TRUE(DegreeFunction::power(3).has_exact());
  EXPECT_EQ(*DegreeFunction::power(3).exact(4), Rational(64));
  EXPECT_FALSE(DegreeFunction::power(0.5).has_exact());
  EXPECT_FALSE(DegreeFunction::power(-1).has_exact());
  EXPECT_FALSE(DegreeFunction::sum_exdeg(2).has_exact());
  EXPECT_TRUE(DegreeFunction::table({1, 1, 1, 1}).has_exact());
  EXPECT_FALSE(DegreeFunction::table({1, 1.5, 1, 1}).has_exact());
}

TEST(FunctionSpec, ParsesEveryFamilyAndRoundTrips) {
  for (const char* text : {"power:2", "sei:2", "sli:1", "lnpi1:-1", "lnpi2:0.5", "fbar:11", "table:1,2,3,4",
                           "power:0.1", "table:-1.5,0,2e-3,7"}) {
    const DegreeFunction f = parse_function_spec(text);
    EXPECT_EQ(parse_function_spec(f.spec()).values(), f.values()) << text;
  }
  EXPECT_EQ(parse_function_spec("sei:2.0").spec(), "sei:2");
  EXPECT_EQ(parse_function_spec("fbar:11").context_n(), 11);
  EXPECT_EQ(parse_function_spec("table:1,2,3,4").family(), Family::CustomTable);
}

TEST(FunctionSpec, Malformed) {
  for (const char* text : {"power", "power:", "power:x", "nope:1", "table:1,2,3", "power:1,2", "fbar:10.5",
                           "sei:1", "power:inf", "power:2x"}) {
    EXPECT_THROW(parse_function_spec(text), Error) << text;
  }
}

TEST(XiPair, Examples) {
  const auto [a1, a2] = xi_pair(DegreeFunction::power(2));
  EXPECT_NEAR(a1, -2, 1e-12);
  EXPECT_NEAR(a2, -2, 1e-12);
  const auto [b1, b2] = xi_pair(DegreeFunction::power(1));
  EXPECT_NEAR(b1, 0, 1e-15);
  EXPECT_NEAR(b2, 0, 1e-15);
  const auto [c1, c2] = xi_pair(DegreeFunction::forgotten_coindex(11));
  EXPECT_NEAR(c1, -6, 1e-12);
  EXPECT_NEAR(c2, -4, 1e-12);
  const auto exact = exact_xi_pair(DegreeFunction::power(2));
  ASSERT_TRUE(exact);
  EXPECT_EQ(exact->first, Rational(-2));
  EXPECT_EQ(exact->second, Rational(-2));
}

TEST(XiPair, ForgottenCoindexSymbolicForm) {
  for (int n = 2; n <= 80; ++n) {
    const auto exact = exact_xi_pair(DegreeFunction::forgotten_coindex(n));
    ASSERT_TRUE(exact);
    EXPECT_EQ(exact->first, Rational(16 - 2 * n));
    EXPECT_EQ(exact->second, Rational(18 - 2 * n));
  }
}

TEST(XiPair, PowerClosedForms) {
  for (int k = 0; k <= 600; ++k) {
    const double alpha = -3.0 + k * 0.01;
    const auto [xi1, xi2] = xi_pair(DegreeFunction::power(alpha));
    const double p2 = std::pow(2.0, alpha);
    expect_rel(xi1, -(p2 - 2) * (p2 - 1) / 3, 1e-12, "xi1 alpha");
    expect_rel(xi2, (std::pow(3.0, alpha + 1) - std::pow(2.0, 2 * alpha + 1) - 1) / 3, 1e-12, "xi2 alpha");
  }
}

TEST(XiPair, SumExdegClosedForms) {
  for (int k = 1; k <= 500; ++k) {
    const double a = k * 0.01;
    if (std::fabs(a - 1) < 1e-12) continue;
    const auto [xi1, xi2] = xi_pair(DegreeFunction::sum_exdeg(a));
    expect_rel(xi1, -2 * a * (a - 1) * (2 * a * a + 2 * a - 1) / 3, 1e-12, "xi1 a");
    expect_rel(xi2, -a * (a - 1) * (8 * a * a - a - 1) / 3, 1e-12, "xi2 a");
  }
}

TEST(Classify, Examples) {
  const auto p2 = classify(DegreeFunction::power(2));
  EXPECT_EQ(p2.verdict, Verdict::CaseI);
  const auto half = classify(DegreeFunction::power(0.5));
  EXPECT_EQ(half.verdict, Verdict::CaseII);
  EXPECT_NEAR(half.xi1, 0.08088, 1e-5);
  EXPECT_NEAR(half.xi2, 0.06538, 1e-5);
  EXPECT_NEAR(half.xi2 / 2, 0.03269, 1e-5);
  EXPECT_NEAR(2 * half.xi2, 0.13077, 1e-5);
  EXPECT_EQ(classify(DegreeFunction::power(1)).verdict, Verdict::Boundary);
  EXPECT_EQ(classify(DegreeFunction::power(0)).verdict, Verdict::Boundary);
  EXPECT_EQ(classify(DegreeFunction::table({0, -1, 1, 0})).verdict, Verdict::Neither);
}

TEST(Classify, BoundaryWithinTolerance) {
  // Power(1 + tiny) sits within tolerance of xi1 = xi2 = 0.
  EXPECT_EQ(classify(DegreeFunction::power(1 + 1e-12)).verdict, Verdict::Boundary);
  EXPECT_EQ(classify(DegreeFunction::power(1 + 1e-3)).verdict, Verdict::CaseI);
  EXPECT_EQ(classify_xi(-2, -1), Verdict::Boundary);  // 2 xi2 == xi1
  EXPECT_EQ(classify_xi(-2, -2), Verdict::CaseI);
  EXPECT_EQ(classify_xi(-1, -10), Verdict::Neither);
}

TEST(Classify, ForgottenCoindexThreshold) {
  EXPECT_NE(classify(DegreeFunction::forgotten_coindex(10)).verdict, Verdict::CaseI);
  EXPECT_EQ(classify(DegreeFunction::forgotten_coindex(10)).verdict, Verdict::Boundary);
  for (int n = 11; n <= 200; ++n) EXPECT_EQ(classify(DegreeFunction::forgotten_coindex(n)).verdict, Verdict::CaseI) << n;
}

TEST(Classify, SumLodegThreshold) {
  const double t = sum_lodeg_threshold();
  EXPECT_NEAR(t, 0.6246, 1e-4);
  EXPECT_EQ(classify(DegreeFunction::sum_lodeg(t + 0.01)).verdict, Verdict::CaseI);
  EXPECT_NE(classify(DegreeFunction::sum_lodeg(t - 0.01)).verdict, Verdict::CaseI);
  // The inequality that flips at t is xi1 < xi2 / 2.
  const auto [xi1, xi2] = xi_pair(DegreeFunction::sum_lodeg(t));
  EXPECT_NEAR(xi1, xi2 / 2, 1e-12);
}

TEST(Classify, ScalingProperty) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> value(-20, 20);
  std::vector<DegreeFunction> fs{DegreeFunction::power(2), DegreeFunction::power(0.5), DegreeFunction::power(-1),
                                 DegreeFunction::sum_exdeg(2), DegreeFunction::sum_lodeg(1),
                                 DegreeFunction::forgotten_coindex(12), DegreeFunction::power(1)};
  for (int i = 0; i < 200; ++i) fs.push_back(DegreeFunction::table({value(rng), value(rng), value(rng), value(rng)}));
  for (const auto& f : fs) {
    const auto base = classify(f);
    for (double c : {0.5, 2.0, 7.0, -1.0, -3.0}) {
      const auto scaled = classify(f.scaled(c));
      expect_rel(scaled.xi1, c * base.xi1, 1e-12, "scaled xi1");
      expect_rel(scaled.xi2, c * base.xi2, 1e-12, "scaled xi2");
      Verdict expected = base.verdict;
      if (c < 0 && base.verdict == Verdict::CaseI) expected = Verdict::CaseII;
      else if (c < 0 && base.verdict == Verdict::CaseII) expected = Verdict::CaseI;
      EXPECT_EQ(scaled.verdict, expected) << f.spec() << " c=" << c;
    }
  }
}

TEST(PrintedRange, Examples) {
  EXPECT_EQ(printed_range_check(Family::Power, 3), Verdict::CaseI);
  EXPECT_EQ(printed_range_check(Family::Power, -0.5), Verdict::CaseI);
  EXPECT_EQ(printed_range_check(Family::Power, 0.5), Verdict::CaseII);
  EXPECT_FALSE(printed_range_check(Family::Power, 1));
  EXPECT_EQ(printed_range_check(Family::SumLodeg, 1), Verdict::CaseI);
  EXPECT_FALSE(printed_range_check(Family::SumLodeg, 0.5));
  EXPECT_FALSE(printed_range_check(Family::SumExdeg, 0.4));
  EXPECT_EQ(printed_range_check(Family::SumExdeg, 0.75), Verdict::CaseII);
  EXPECT_EQ(printed_range_check(Family::SumExdeg, 0.25), Verdict::CaseI);
  EXPECT_EQ(printed_range_check(Family::LnMultZagreb1, -1), Verdict::CaseI);
  EXPECT_EQ(printed_range_check(Family::LnMultZagreb2, -1), Verdict::CaseII);
  EXPECT_EQ(printed_range_check(Family::ForgottenCoindex, 11), Verdict::CaseI);
  EXPECT_FALSE(printed_range_check(Family::ForgottenCoindex, 10));
}
