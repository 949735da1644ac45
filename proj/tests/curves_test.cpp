#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "oracles.hpp"
#include "waringlab/curves.hpp"
#include "waringlab/error.hpp"

using namespace waringlab;

TEST(DicksonCurve, MatchesDoubleLoops) {
  for (std::uint64_t p : oracle::primes_between(3, 31)) {
    for (std::uint64_t e = 1; e <= p + 2; ++e) {
      if (e % p == 0) continue;
      for (std::uint64_t A = 0; A < p; ++A) {
        ASSERT_EQ(count_dickson_curve(e, A, p).affine_count, oracle::dickson_curve_loops(e, A, p))
            << "p=" << p << " e=" << e << " A=" << A;
      }
    }
  }
}

TEST(DicksonCurve, PartitionIdentity) {
  for (std::uint64_t p : oracle::primes_between(3, 200)) {
    for (std::uint64_t e : {1u, 2u, 3u, 6u}) {
      if (e % p == 0) continue;
      std::uint64_t total = 0;
      for (std::uint64_t A = 0; A < p; ++A) total += count_dickson_curve(e, A, p).affine_count - 1;
      EXPECT_EQ(total, (p - 1) * (p - 1));
    }
  }
}

TEST(DicksonCurve, HasseWindowForCubics) {
  for (std::uint64_t p : oracle::primes_between(5, 200)) {
    for (std::uint64_t A = 1; A < p; ++A) {
      if (A == 4 || A == p - 4) continue;
      const auto c = static_cast<double>(count_dickson_curve(1, A, p).affine_count);
      EXPECT_LE(std::abs(c - static_cast<double>(p)), 2 * std::sqrt(static_cast<double>(p)) + 4);
    }
  }
}

TEST(DicksonCurve, BoundAndHypotheses) {
  const std::uint64_t p = 101;
  auto r = count_dickson_curve(5, 7, p);
  EXPECT_NEAR(r.bound_value, 8 * (4 * std::pow(15.0, 4.0 / 3.0) * std::pow(101.0, 2.0 / 3.0) + 303), 1e-9);
  ASSERT_TRUE(r.within_bound.has_value());
  EXPECT_TRUE(*r.within_bound);
  EXPECT_FALSE(count_dickson_curve(5, 0, p).within_bound.has_value());
  EXPECT_FALSE(count_dickson_curve(5, 4, p).within_bound.has_value());
  EXPECT_FALSE(count_dickson_curve(5, p - 4, p).within_bound.has_value());
  EXPECT_THROW(count_dickson_curve(7, 1, 7), Error);
}

TEST(DicksonCurve, OnlyOriginWhenNoPairReachesMinusA) {
  // e = p - 1: f(x) = 2 for every x != 0, so f(x) + f(y) = 4 and only A = -4 has affine points beyond (0,0).
  const std::uint64_t p = 13;
  for (std::uint64_t A = 0; A < p; ++A) {
    const auto c = count_dickson_curve(p - 1, A, p).affine_count;
    EXPECT_EQ(c, A == p - 4 ? 1 + (p - 1) * (p - 1) : 1u);
  }
}

TEST(DicksonCurve, ReciprocalSumMultisetMatchesSubgroupImage) {
  for (std::uint64_t p : oracle::primes_between(3, 200)) {
    for (std::uint64_t e : divisors(p - 1)) {
      std::map<std::uint64_t, std::uint64_t> lhs, rhs;
      for (std::uint64_t x = 1; x < p; ++x) {
        const std::uint64_t xe = oracle::pow_naive(x, e, p);
        lhs[(xe + oracle::inv_naive(xe, p)) % p]++;
      }
      for (std::uint64_t h : oracle::fp_subgroup(p, (p - 1) / e)) rhs[(h + oracle::inv_naive(h, p)) % p] += e;
      EXPECT_EQ(lhs, rhs) << p << " " << e;
    }
  }
}

TEST(FermatCurve, MatchesDoubleLoops) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
    const FieldCtx ctx(p);
    const oracle::Ext ext(p);
    for (std::uint64_t k = 1; k <= 2 * (p + 1); ++k) {
      if (k % p == 0) continue;
      for (std::uint64_t ai : std::vector<std::uint64_t>{1, p, p + 1, 2, p * p - 1, p * p - 2}) {
        const Fp2Elem a = ctx.from_index(ai);
        ASSERT_EQ(count_fermat_norm_curve(ctx, k, a).affine_count, oracle::fermat_curve_loops(ext, k, {a.a, a.b}))
            << "p=" << p << " k=" << k << " a=" << ai;
      }
    }
  }
}

TEST(FermatCurve, SpecialCases) {
  for (std::uint64_t p : {5u, 7u, 13u}) {
    const FieldCtx ctx(p);
    const std::uint64_t n = p * p - 1;
    const std::uint64_t k = p + 1;  // t = p^2 - 1
    EXPECT_EQ(count_fermat_norm_curve(ctx, k, ctx.embed(p - 2)).affine_count, n * n);
    EXPECT_EQ(count_fermat_norm_curve(ctx, k, ctx.embed(1)).affine_count, 0u);
    EXPECT_EQ(count_fermat_norm_curve(ctx, k, ctx.embed(p - 1)).affine_count, 2 * n);
  }
  const FieldCtx ctx5(5);
  const oracle::Ext ext5(5);
  EXPECT_EQ(count_fermat_norm_curve(ctx5, 2, {1, 1}).affine_count, oracle::fermat_curve_loops(ext5, 2, {1, 1}));
}

TEST(FermatCurve, BoundAndValidation) {
  const FieldCtx ctx(13);
  auto r = count_fermat_norm_curve(ctx, 3, {1, 2});
  const double t = 36;
  EXPECT_NEAR(r.bound_value, std::pow(t, 1.2) * std::pow(13.0, 1.6) + std::pow(13.0, 3), 1e-6);
  ASSERT_TRUE(r.within_bound.has_value());
  EXPECT_THROW(count_fermat_norm_curve(ctx, 3, {0, 0}), Error);
  EXPECT_THROW(count_fermat_norm_curve(ctx, 13, {1, 0}), Error);
  EXPECT_THROW(count_fermat_norm_curve(ctx, 0, {1, 0}), Error);
}
