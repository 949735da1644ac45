#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "waringlab/energy.hpp"
#include "waringlab/error.hpp"

using namespace waringlab;

TEST(Energy, OrderTwoHandValues) {
  for (std::uint64_t p : {5u, 7u, 11u, 101u}) {
    const FieldCtx ctx(p);
    EXPECT_EQ(energy_kloosterman(ctx, subgroup(ctx, Ambient::FpStar, 2)).count, 6u);
    EXPECT_EQ(energy_additive_fp2(ctx, subgroup(ctx, Ambient::NormOne, 2)).count, 6u);
    EXPECT_EQ(energy_kloosterman(ctx, subgroup(ctx, Ambient::FpStar, 1)).count, 1u);
  }
}

TEST(Energy, MatchesFourLoops) {
  for (std::uint64_t p : oracle::primes_between(3, 80)) {
    const FieldCtx ctx(p);
    const oracle::Ext ext(p);
    for (std::uint64_t tau : divisors(p - 1)) {
      if (tau > 40) continue;
      EXPECT_EQ(energy_kloosterman(ctx, subgroup(ctx, Ambient::FpStar, tau)).count,
                oracle::energy_r_loops(oracle::fp_subgroup(p, tau), p))
          << p << " " << tau;
    }
    for (std::uint64_t tau : divisors(p + 1)) {
      if (tau > 40) continue;
      auto h = subgroup(ctx, Ambient::NormOne, tau);
      auto naive = oracle::norm_one_subgroup(ext, tau);
      EXPECT_EQ(energy_additive_fp2(ctx, h).count, oracle::energy_t_loops(naive, p)) << p << " " << tau;
      EXPECT_EQ(trace_energy_fp2(ctx, h).count, oracle::energy_trace_loops(naive, p)) << p << " " << tau;
    }
  }
}

TEST(Energy, TrivialLowerAndUpperBounds) {
  for (std::uint64_t p : {101u, 103u, 211u}) {
    const FieldCtx ctx(p);
    for (std::uint64_t tau : divisors(p - 1)) {
      const auto c = energy_kloosterman(ctx, subgroup(ctx, Ambient::FpStar, tau)).count;
      EXPECT_GE(c, tau * tau);
      // s(u) = s(u^-1), so (u, v, x) leaves at most two choices of y.
      EXPECT_LE(c, 2 * tau * tau * tau);
    }
    for (std::uint64_t tau : divisors(p + 1)) {
      auto h = subgroup(ctx, Ambient::NormOne, tau);
      const auto t = energy_additive_fp2(ctx, h).count;
      // Ordered pairs (u, v) and (v, u) always give the same sum.
      EXPECT_GE(t, 2 * tau * tau - tau);
      EXPECT_LE(t, tau * tau * tau);
      EXPECT_GE(trace_energy_fp2(ctx, h).count, t);
    }
  }
}

TEST(Energy, ReportsBoundsAndRatios) {
  const FieldCtx ctx(101);
  auto r = energy_kloosterman(ctx, subgroup(ctx, Ambient::FpStar, 20));
  ASSERT_TRUE(r.bound_value.has_value());
  EXPECT_NEAR(*r.bound_value, std::pow(20.0, 8.0 / 3.0) + std::pow(20.0, 4) / 101.0, 1e-9);
  EXPECT_NEAR(*r.ratio(), static_cast<double>(r.count) / *r.bound_value, 1e-15);
  auto t = energy_additive_fp2(ctx, subgroup(ctx, Ambient::NormOne, 17));
  EXPECT_NEAR(*t.bound_value, std::pow(17.0, 14.0 / 5.0) + std::pow(17.0, 4) / 101.0, 1e-9);
  auto tr = trace_energy_fp2(ctx, subgroup(ctx, Ambient::NormOne, 17));
  EXPECT_FALSE(tr.bound_value.has_value());
  EXPECT_FALSE(tr.ratio().has_value());
  EXPECT_NEAR(tr.ref_cubic, std::pow(17.0, 3), 1e-9);
}

TEST(Energy, Refusals) {
  const FieldCtx ctx(101);
  try {
    energy_kloosterman(ctx, subgroup(ctx, Ambient::FpStar, 100), 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RefuseQuadratic);
  }
  EXPECT_THROW(energy_kloosterman(ctx, subgroup(ctx, Ambient::NormOne, 2)), Error);
  EXPECT_THROW(energy_additive_fp2(ctx, subgroup(ctx, Ambient::FpStar, 2)), Error);
}

TEST(PairHistogram, TotalsAndBothStorageModes) {
  std::vector<std::uint64_t> keys = {0, 1, 1, 5, 6};
  auto h = pair_sum_histogram(keys, 7, false);
  std::uint64_t total = 0;
  for (auto [w, m] : h) total += m;
  EXPECT_EQ(total, 25u);
  for (std::size_t i = 1; i < h.size(); ++i) EXPECT_LT(h[i - 1].first, h[i].first);
  // Sparse keys in a large F_{p^2} exercise the hashed path.
  std::vector<std::uint64_t> sparse = {3, 1000, 50000};
  auto hs = pair_sum_histogram(sparse, 1009, true);
  total = 0;
  for (auto [w, m] : hs) total += m;
  EXPECT_EQ(total, 9u);
  EXPECT_EQ(hs.size(), 6u);
}

TEST(LogLogSlope, ExactPowerLaw) {
  std::vector<std::pair<double, double>> pts;
  for (double x : {2.0, 5.0, 11.0, 40.0}) pts.emplace_back(x, 3.0 * std::pow(x, 2.5));
  EXPECT_NEAR(loglog_slope(pts), 2.5, 1e-12);
  EXPECT_TRUE(std::isnan(loglog_slope({{2.0, 3.0}})));
  EXPECT_TRUE(std::isnan(loglog_slope({})));
}
