#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "waringlab/expsums.hpp"
#include "waringlab/report.hpp"

namespace waringlab {

inline constexpr std::string_view kToolVersion = "waringlab 0.1.0";

enum class SweepTask { DicksonWaring, NormWaring, Kloosterman, Gauss, Energy, TraceEnergy, Curve };

std::string_view to_string(SweepTask task);
std::optional<SweepTask> parse_sweep_task(std::string_view name);

/// Grid selectors, resolved per prime:
///   e:   "divisors-pm1" | "divisors-pp1" | comma list
///   a:   "all" | "sample" (1, least non-residue, seeded draws) | comma list.
///        "all" is F_p^* for Waring tasks, F_p for the Dickson curve family and
///        F_{p^2}^* for the Fermat family, where list entries may be "a:b"
///        for a + b theta.
///   k:   "divisors-pp1" | comma list
///   tau: "divisors" (of p-1 for F_p^* tasks, of p+1 for norm-one tasks) |
///        comma list (non-divisors are skipped); tau_max caps either form
struct SweepConfig {
  SweepTask task = SweepTask::DicksonWaring;
  std::uint64_t p_min = 3;
  std::uint64_t p_max = 3;
  std::string e_grid = "divisors-pm1";
  std::string a_grid = "all";
  std::string k_grid = "divisors-pp1";
  std::string tau_grid = "divisors";
  std::uint64_t tau_max = 0;  // 0: no cap
  /// Energy: R | T | trace. Curve: dickson | fermat.
  std::string kind = "R";
  /// Kloosterman / Gauss enumeration; sampled mode draws `samples` parameters.
  SumMode::Kind sum_mode = SumMode::Kind::Exhaustive;
  std::uint64_t samples = 32;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  Format format = Format::Csv;

  /// Canonical text of every field that affects the output. jobs is
  /// excluded so that the degree of parallelism never changes the bytes.
  std::string canonical() const;
  /// FNV-1a 64 of canonical(), as 16 hex digits.
  std::string hash() const;
};

/// Header row, one row per grid point sorted by (p, parameters), then a
/// trailer with config hash, seed and tool version. Throws on invalid grids
/// before writing anything.
void run_sweep(const SweepConfig& config, std::ostream& out);

/// Column set used for a task's rows.
const std::vector<std::string>& sweep_columns(const SweepConfig& config);

}  // namespace waringlab
