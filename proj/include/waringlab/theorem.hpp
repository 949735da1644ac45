#pragma once

// Empirical scans of the gcd thresholds under which the Waring number is at
// most s. The theorems carry unspecified constants, so a scan reports
// (d, worst g, predicted exponent) and a fitted exponent; it never asserts a
// theorem.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "waringlab/rational.hpp"

namespace waringlab {

enum class TheoremKind {
  MediumPminus,  // gcd(e, p-1) <= C p^((4s-7)/(7s+8))
  MediumPplus,   // gcd(e, p+1) <= C max{p^((11s-82)/(21s-42)), p^((6s-57)/(11s-22))}, a a square
  SmallE,        // gcd(e, p-1) <= C p^(1/2 - 1/(3s-8))
  Monomial,      // p^(1/6) <= gcd(k, p+1) <= C min{p^((6s-186)/(11s-116)), p^((5s-56)/(10s-56))}
};

std::string_view to_string(TheoremKind kind);
/// Accepts medium_pminus, medium_pplus, small_e, monomial.
std::optional<TheoremKind> parse_theorem_kind(std::string_view name);

struct ThresholdExponents {
  std::vector<Rational> terms;
  /// max of the terms for MediumPplus, min for Monomial, the single term otherwise.
  Rational combined;
  /// Lower end of the gcd range (1/6 for Monomial).
  std::optional<Rational> lower;
};

/// Throws InvalidParameter unless s is even and at least 4. Exponents are
/// reported exactly, negative (vacuous) ones included.
ThresholdExponents threshold_exponents(TheoremKind kind, int s);

inline constexpr std::uint64_t kInfiniteG = UINT64_MAX;

struct TheoremScanRecord {
  std::uint64_t p = 0;
  int s = 0;
  TheoremKind which = TheoremKind::MediumPminus;
  std::uint64_t d = 0;  // target gcd, a divisor of p-1 or p+1
  std::uint64_t e = 0;  // chosen exponent (e = d)
  std::uint64_t gcd_pm1 = 0;
  std::uint64_t gcd_pp1 = 0;
  std::uint64_t worst_g = 0;  // kInfiniteG when some sum never covers
  std::optional<std::uint64_t> worst_g_qr;
  std::optional<std::uint64_t> worst_g_nqr;
  std::uint64_t a_samples = 0;
  bool satisfied = false;  // worst_g <= s
  Rational threshold_exponent;
  double threshold_value = 0.0;  // p^threshold_exponent
  bool small_gcd_regime = false;  // min(gcd(e,p-1), gcd(e,p+1)) <= p^(1/4)/8
  std::optional<bool> above_lower;  // Monomial only: d >= p^(1/6)
};

struct TheoremScanOptions {
  std::uint64_t p_min = 3;
  std::uint64_t p_max = 50;
  int s = 4;
  TheoremKind which = TheoremKind::MediumPminus;
  /// Explicit exponents instead of e = d for every divisor d; each e is
  /// reported against d = gcd(e, p -/+ 1).
  std::vector<std::uint64_t> explicit_e;
  /// a in F_p^* is scanned exhaustively up to this prime, sampled above it.
  std::uint64_t full_a_limit = 101;
  std::uint64_t samples = 32;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  /// Largest primes the exact solver accepts in each ambient.
  std::uint64_t fp_limit = 200000;
  std::uint64_t fp2_limit = 300;
};

struct TheoremScan {
  ThresholdExponents exponents;
  std::vector<TheoremScanRecord> rows;
  /// (p, d*) with d* the largest scanned d whose worst_g <= s.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> largest_good_d;
  /// Slope of log d* against log p (NaN with fewer than two primes).
  double empirical_exponent = 0.0;
};

/// The a values scanned for prime p: all of F_p^* up to full_a_limit, else
/// 1, the least non-residue, and seeded uniform draws, sorted and deduplicated.
std::vector<std::uint64_t> a_samples(std::uint64_t p, const TheoremScanOptions& opts);

/// Throws InvalidParameter for odd s and RefuseExhaustive when p_max exceeds
/// the solver limit for the ambient the theorem needs.
TheoremScan theorem_check(const TheoremScanOptions& opts);

}  // namespace waringlab
