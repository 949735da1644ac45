#pragma once

// Exact counts of ordered quadruples (u, v, x, y) in H^4 with
//   R: s(u) + s(v) = s(x) + s(y),  s(z) = z + z^-1,  H inside F_p^*
//   T: u + v = x + y,                                 H inside N_{p^2}
//   trace: Tr(u) + Tr(v) = Tr(x) + Tr(y),             H inside N_{p^2}
// Each count is sum over w of m(w)^2 where m(w) is the number of ordered pairs
// with pair-sum w. Ordered quadruples are counted, so the counts differ by
// symmetry factors from an unordered convention.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "waringlab/field.hpp"

namespace waringlab {

enum class EnergyKind { R, T, Trace };

std::string_view to_string(EnergyKind kind);

inline constexpr std::uint64_t kDefaultEnergyTauLimit = 20000;

struct EnergyReport {
  EnergyKind kind = EnergyKind::R;
  std::uint64_t p = 0;
  std::uint64_t tau = 0;
  std::uint64_t count = 0;
  /// tau^(8/3) + tau^4/p for R, tau^(14/5) + tau^4/p for T; unset for trace.
  std::optional<double> bound_value;
  /// Reference curves reported alongside the trace count.
  double ref_fp_energy = 0.0;  // tau^(8/3) + tau^4/p
  double ref_cubic = 0.0;      // tau^3

  std::optional<double> ratio() const {
    if (!bound_value) return std::nullopt;
    return static_cast<double>(count) / *bound_value;
  }
};

/// Throws RefuseQuadratic when tau exceeds `tau_limit`.
EnergyReport energy_kloosterman(const FieldCtx& ctx, const SubgroupSpec& h,
                                std::uint64_t tau_limit = kDefaultEnergyTauLimit);
EnergyReport energy_additive_fp2(const FieldCtx& ctx, const SubgroupSpec& h,
                                 std::uint64_t tau_limit = kDefaultEnergyTauLimit);
EnergyReport trace_energy_fp2(const FieldCtx& ctx, const SubgroupSpec& h,
                              std::uint64_t tau_limit = kDefaultEnergyTauLimit);

EnergyReport energy(EnergyKind kind, const FieldCtx& ctx, const SubgroupSpec& h,
                    std::uint64_t tau_limit = kDefaultEnergyTauLimit);

/// Pair-sum multiplicities m(w) for keys in [0, key_space), sorted by w.
/// sum over w of m(w) equals keys.size()^2.
std::vector<std::pair<std::uint64_t, std::uint64_t>> pair_sum_histogram(
    const std::vector<std::uint64_t>& keys, std::uint64_t p, bool fp2);

/// Least-squares slope of log(y) against log(x); NaN with fewer than two
/// distinct x values.
double loglog_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace waringlab
