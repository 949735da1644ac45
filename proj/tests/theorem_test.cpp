#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "waringlab/error.hpp"
#include "waringlab/theorem.hpp"
#include "waringlab/waring.hpp"

using namespace waringlab;

TEST(RationalTest, Normalization) {
  EXPECT_EQ(Rational(9, 36), Rational(1, 4));
  EXPECT_EQ(Rational(-26, 4).to_string(), "-13/2");
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(6, 2).to_string(), "3");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_LT(Rational(-13, 2), Rational(1, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 4), Rational(1, 4));
}

TEST(ThresholdExponents, HandComputedFractions) {
  EXPECT_EQ(threshold_exponents(TheoremKind::MediumPminus, 4).combined, Rational(1, 4));
  EXPECT_EQ(threshold_exponents(TheoremKind::SmallE, 4).combined, Rational(1, 4));
  EXPECT_EQ(threshold_exponents(TheoremKind::MediumPminus, 6).combined, Rational(17, 50));
  EXPECT_EQ(threshold_exponents(TheoremKind::MediumPminus, 8).combined, Rational(25, 64));
  EXPECT_EQ(threshold_exponents(TheoremKind::SmallE, 6).combined, Rational(2, 5));
  EXPECT_EQ(threshold_exponents(TheoremKind::SmallE, 8).combined, Rational(7, 16));

  auto pplus = threshold_exponents(TheoremKind::MediumPplus, 4);
  EXPECT_EQ(pplus.terms, (std::vector<Rational>{Rational(-38, 42), Rational(-33, 22)}));
  EXPECT_EQ(pplus.combined, Rational(-19, 21));
  auto pplus8 = threshold_exponents(TheoremKind::MediumPplus, 8);
  EXPECT_EQ(pplus8.terms, (std::vector<Rational>{Rational(6, 126), Rational(-9, 66)}));
  EXPECT_EQ(pplus8.combined, Rational(1, 21));
}

TEST(ThresholdExponents, VacuousExponentsAreNotClamped) {
  auto mono = threshold_exponents(TheoremKind::Monomial, 6);
  ASSERT_EQ(mono.terms.size(), 2u);
  EXPECT_EQ(mono.terms[0], Rational(-150, -50));
  EXPECT_EQ(mono.terms[0], Rational(3));
  EXPECT_EQ(mono.terms[1], Rational(-26, 4));
  EXPECT_EQ(mono.combined, Rational(-13, 2));
  EXPECT_EQ(mono.lower, Rational(1, 6));
  auto mono4 = threshold_exponents(TheoremKind::Monomial, 4);
  EXPECT_EQ(mono4.terms[1], Rational(-36, -16));
}

TEST(ThresholdExponents, RejectsOddOrSmallS) {
  for (int s : {3, 5, 7, 2, 0, -4}) {
    try {
      threshold_exponents(TheoremKind::SmallE, s);
      FAIL() << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
    }
  }
}

TEST(TheoremKindNames, RoundTrip) {
  for (auto k : {TheoremKind::MediumPminus, TheoremKind::MediumPplus, TheoremKind::SmallE, TheoremKind::Monomial}) {
    EXPECT_EQ(parse_theorem_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_theorem_kind("medium").has_value());
}

TEST(ASamples, FullBelowLimitAndSeededAbove) {
  TheoremScanOptions opts;
  auto small = a_samples(101, opts);
  EXPECT_EQ(small.size(), 100u);
  auto big = a_samples(103, opts);
  EXPECT_LE(big.size(), 32u);
  EXPECT_TRUE(std::is_sorted(big.begin(), big.end()));
  EXPECT_TRUE(std::binary_search(big.begin(), big.end(), 1u));
  EXPECT_TRUE(std::binary_search(big.begin(), big.end(), least_nonresidue(103)));
  EXPECT_EQ(big, a_samples(103, opts));
  opts.seed = 2;
  EXPECT_NE(big, a_samples(103, opts));
}

TEST(TheoremCheck, RowsAgreeWithDirectSolverCalls) {
  TheoremScanOptions opts;
  opts.which = TheoremKind::MediumPminus;
  opts.p_min = 3;
  opts.p_max = 43;
  auto scan = theorem_check(opts);
  ASSERT_FALSE(scan.rows.empty());
  for (const auto& r : scan.rows) {
    EXPECT_EQ(r.e, r.d);
    EXPECT_EQ(r.gcd_pm1, r.d);
    std::uint64_t worst = 0;
    for (std::uint64_t a = 1; a < r.p; ++a) {
      auto g = waring_dickson(r.e, a, r.p).g();
      worst = std::max(worst, g ? *g : kInfiniteG);
    }
    EXPECT_EQ(r.worst_g, worst);
    EXPECT_EQ(r.satisfied, r.worst_g <= 4u);
    EXPECT_EQ(r.a_samples, r.p - 1);
    std::uint64_t combined = std::max(r.worst_g_qr.value_or(0), r.worst_g_nqr.value_or(0));
    EXPECT_EQ(combined, r.worst_g);
    EXPECT_EQ(r.threshold_exponent, Rational(1, 4));
    EXPECT_NEAR(r.threshold_value, std::pow(static_cast<double>(r.p), 0.25), 1e-12);
    EXPECT_EQ(r.small_gcd_regime,
              static_cast<double>(std::min(r.gcd_pm1, r.gcd_pp1)) <= std::pow(static_cast<double>(r.p), 0.25) / 8);
    EXPECT_FALSE(r.above_lower.has_value());
    if (r.d == 1) {
      EXPECT_TRUE(r.satisfied);
      EXPECT_LE(r.worst_g, 3u);
    }
  }
  EXPECT_FALSE(std::isnan(scan.empirical_exponent));
}

TEST(TheoremCheck, PplusAndMonomialUseNormOneDivisors) {
  TheoremScanOptions opts;
  opts.which = TheoremKind::MediumPplus;
  opts.p_max = 23;
  for (const auto& r : theorem_check(opts).rows) {
    EXPECT_EQ((r.p + 1) % r.d, 0u);
    EXPECT_EQ(r.gcd_pp1, r.d);
  }
  opts.which = TheoremKind::Monomial;
  opts.s = 6;
  for (const auto& r : theorem_check(opts).rows) {
    const FieldCtx ctx(r.p);
    auto g = waring_norm_one(ctx, r.e).g();
    EXPECT_EQ(r.worst_g, g ? *g : kInfiniteG);
    ASSERT_TRUE(r.above_lower.has_value());
    EXPECT_EQ(*r.above_lower, static_cast<double>(r.d) >= std::pow(static_cast<double>(r.p), 1.0 / 6.0));
    EXPECT_EQ(r.threshold_exponent, Rational(-13, 2));
    EXPECT_FALSE(r.worst_g_qr.has_value());
  }
}

TEST(TheoremCheck, ExplicitExponentsAndJobs) {
  TheoremScanOptions opts;
  opts.which = TheoremKind::SmallE;
  opts.p_max = 60;
  opts.explicit_e = {6, 10};
  auto one = theorem_check(opts);
  opts.jobs = 4;
  auto four = theorem_check(opts);
  ASSERT_EQ(one.rows.size(), four.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    EXPECT_EQ(one.rows[i].worst_g, four.rows[i].worst_g);
    EXPECT_EQ(one.rows[i].d, std::gcd(one.rows[i].e, one.rows[i].p - 1));
  }
  EXPECT_EQ(one.largest_good_d, four.largest_good_d);
}

TEST(TheoremCheck, RefusesBeyondSolverLimits) {
  TheoremScanOptions opts;
  opts.which = TheoremKind::Monomial;
  opts.p_max = 400;
  try {
    theorem_check(opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RefuseExhaustive);
  }
  opts.s = 5;
  opts.p_max = 10;
  EXPECT_THROW(theorem_check(opts), Error);
}
