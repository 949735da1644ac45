#include <gtest/gtest.h>

#include "oracles.hpp"
#include "waringlab/dickson.hpp"
#include "waringlab/error.hpp"
#include "waringlab/rng.hpp"
#include "waringlab/waring.hpp"

using namespace waringlab;

namespace {

ValueSet from_members(SetAmbient amb, std::uint64_t p, const std::vector<std::uint64_t>& xs) {
  ValueSet s(amb, p);
  for (auto x : xs) s.insert(x);
  return s;
}

ValueSet random_set(SplitMix64& rng, SetAmbient amb, std::uint64_t p, std::uint64_t n) {
  ValueSet s(amb, p);
  for (std::uint64_t i = 0; i < n; ++i) s.insert(rng.below(s.ambient_size()));
  return s;
}

}  // namespace

TEST(Sumset, MatchesNaiveSumsetInBothAmbients) {
  SplitMix64 rng(3);
  for (std::uint64_t p : {3u, 5u, 11u, 61u, 67u, 127u, 131u}) {
    for (SetAmbient amb : {SetAmbient::Fp, SetAmbient::Fp2}) {
      if (amb == SetAmbient::Fp2 && p > 67) continue;
      for (int t = 0; t < 20; ++t) {
        const ValueSet s = random_set(rng, amb, p, 1 + rng.below(p));
        const ValueSet a = random_set(rng, amb, p, 1 + rng.below(8));
        const ValueSet sum = add_sumset(s, a);
        EXPECT_EQ(sum.members(), oracle::sumset_naive(s.members(), a.members(), p, amb == SetAmbient::Fp2));
        EXPECT_EQ(sum.card(), sum.members().size());
      }
    }
  }
}

TEST(Sumset, CauchyDavenport) {
  SplitMix64 rng(5);
  for (std::uint64_t p : oracle::primes_between(3, 200)) {
    for (int t = 0; t < 10; ++t) {
      const ValueSet s = random_set(rng, SetAmbient::Fp, p, 1 + rng.below(p / 2 + 1));
      const ValueSet a = random_set(rng, SetAmbient::Fp, p, 1 + rng.below(p / 2 + 1));
      EXPECT_GE(add_sumset(s, a).card(), std::min(p, s.card() + a.card() - 1));
    }
  }
}

TEST(Sumset, AmbientMismatch) {
  try {
    add_sumset(ValueSet(SetAmbient::Fp, 5), ValueSet(SetAmbient::Fp2, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbientMismatch);
  }
}

TEST(WaringNumber, HandExamples) {
  auto prof = waring_number(from_members(SetAmbient::Fp, 5, {0, 1}));
  EXPECT_EQ(prof.status, CoverageStatus::Covered);
  EXPECT_EQ(prof.g(), 4u);
  EXPECT_EQ(prof.cards, (std::vector<std::uint64_t>{2, 3, 4, 5}));

  auto squares = waring_dickson(2, 0, 5);
  EXPECT_EQ(squares.g(), 2u);

  auto dw = waring_dickson(7, 1, 13);
  EXPECT_EQ(dw.status, CoverageStatus::Covered);
}

TEST(WaringNumber, StabilizesOnSubgroupOfAmbient) {
  // {0} never grows.
  auto prof = waring_number(from_members(SetAmbient::Fp, 7, {0}));
  EXPECT_EQ(prof.status, CoverageStatus::Stabilized);
  EXPECT_FALSE(prof.g().has_value());
  // {+-1} in F_{p^2} stays inside F_p.
  const FieldCtx ctx(7);
  auto norm = waring_norm_one(ctx, 4);
  EXPECT_EQ(norm.status, CoverageStatus::Stabilized);
}

TEST(WaringNumber, CapAndValidation) {
  auto prof = waring_number(from_members(SetAmbient::Fp, 101, {0, 1}), 10);
  EXPECT_EQ(prof.status, CoverageStatus::CapReached);
  EXPECT_EQ(prof.cards.size(), 10u);
  EXPECT_THROW(waring_number(ValueSet(SetAmbient::Fp, 7)), Error);
}

TEST(WaringNumber, DicksonMatchesBfsOracle) {
  for (std::uint64_t p : oracle::primes_between(3, 23)) {
    for (std::uint64_t e = 1; e <= p + 1; ++e) {
      for (std::uint64_t a = 1; a < p; ++a) {
        auto prof = waring_dickson(e, a, p);
        auto expect = oracle::waring_bfs(oracle::dickson_values_naive(e, a, p), p, false);
        ASSERT_EQ(prof.g(), expect) << "p=" << p << " e=" << e << " a=" << a;
        if (!expect) EXPECT_EQ(prof.status, CoverageStatus::Stabilized);
      }
    }
  }
}

TEST(WaringNumber, NormOneMatchesBfsOracle) {
  for (std::uint64_t p : oracle::primes_between(3, 17)) {
    const FieldCtx ctx(p);
    const oracle::Ext ext(p);
    for (std::uint64_t k = 1; k <= p + 1; ++k) {
      auto prof = waring_norm_one(ctx, k);
      auto expect = oracle::waring_bfs(oracle::norm_one_power_values_naive(ext, k), p, true);
      ASSERT_EQ(prof.g(), expect) << "p=" << p << " k=" << k;
    }
  }
}

TEST(WaringNumber, CardsAreMonotoneWhenZeroIsAvailable) {
  for (std::uint64_t p : {29u, 31u, 37u}) {
    for (std::uint64_t e = 1; e <= p; e += 3) {
      auto prof = waring_dickson(e, 0, p);
      for (std::size_t i = 1; i < prof.cards.size(); ++i) EXPECT_GE(prof.cards[i], prof.cards[i - 1]);
    }
  }
}

TEST(RepresentationCounts, MatchLoops) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    const FieldCtx ctx(p);
    for (std::uint64_t e : {1u, 2u, 3u, 4u, 6u}) {
      const ValueSet fp = dickson_value_set({e, 1, p});
      const ValueSet fp2 = power_value_set(ctx, e);
      for (std::uint64_t s = 1; s <= 3; ++s) {
        auto counts = representation_counts(fp, s);
        Count total = 0;
        for (std::uint64_t c = 0; c < p; ++c) {
          EXPECT_EQ(static_cast<std::uint64_t>(counts[c]), oracle::rep_count_loops(fp.members(), p, false, s, c));
          total += counts[c];
        }
        Count expect_total = 1;
        for (std::uint64_t i = 0; i < s; ++i) expect_total *= fp.card();
        EXPECT_TRUE(total == expect_total);
        auto counts2 = representation_counts(fp2, s);
        for (std::uint64_t c = 0; c < p * p; c += 1 + c % 3) {
          EXPECT_EQ(static_cast<std::uint64_t>(counts2[c]), oracle::rep_count_loops(fp2.members(), p, true, s, c));
          EXPECT_TRUE(representation_count(fp2, s, c) == counts2[c]);
        }
      }
    }
  }
}

TEST(RepresentationCounts, CoverageAgreesWithPositiveCounts) {
  const std::uint64_t p = 13;
  auto a = dickson_value_set({3, 2, p});
  auto prof = waring_number(a);
  ValueSet level = a;
  for (std::uint64_t s = 1; s <= prof.cards.size(); ++s) {
    auto counts = representation_counts(a, s);
    std::uint64_t positive = 0;
    for (auto c : counts) positive += c > 0;
    EXPECT_EQ(positive, prof.cards[s - 1]);
  }
}

TEST(RepresentationCounts, OverflowAndValidation) {
  auto full = ValueSet::full(SetAmbient::Fp, 101);
  EXPECT_NO_THROW(representation_counts(full, 15));
  try {
    representation_counts(full, 40);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CountOverflow);
  }
  EXPECT_THROW(representation_counts(full, 0), Error);
  EXPECT_EQ(count_to_string(static_cast<Count>(1) << 100), "1267650600228229401496703205376");
  EXPECT_EQ(count_to_string(0), "0");
}
