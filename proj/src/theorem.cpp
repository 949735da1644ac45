#include "waringlab/theorem.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "waringlab/energy.hpp"
#include "waringlab/error.hpp"
#include "waringlab/field.hpp"
#include "waringlab/parallel.hpp"
#include "waringlab/rng.hpp"
#include "waringlab/waring.hpp"

namespace waringlab {

std::string_view to_string(TheoremKind kind) {
  switch (kind) {
    case TheoremKind::MediumPminus: return "medium_pminus";
    case TheoremKind::MediumPplus: return "medium_pplus";
    case TheoremKind::SmallE: return "small_e";
    case TheoremKind::Monomial: return "monomial";
  }
  return "unknown";
}

std::optional<TheoremKind> parse_theorem_kind(std::string_view name) {
  for (auto k : {TheoremKind::MediumPminus, TheoremKind::MediumPplus, TheoremKind::SmallE, TheoremKind::Monomial}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

ThresholdExponents threshold_exponents(TheoremKind kind, int s) {
  if (s < 4 || s % 2 != 0) {
    throw Error(ErrorKind::InvalidParameter, fmt::format("s must be an even integer >= 4 (got {})", s));
  }
  ThresholdExponents out;
  switch (kind) {
    case TheoremKind::MediumPminus:
      out.terms = {Rational(4 * s - 7, 7 * s + 8)};
      out.combined = out.terms[0];
      break;
    case TheoremKind::MediumPplus:
      out.terms = {Rational(11 * s - 82, 21 * s - 42), Rational(6 * s - 57, 11 * s - 22)};
      out.combined = std::max(out.terms[0], out.terms[1]);
      break;
    case TheoremKind::SmallE:
      out.terms = {Rational(1, 2) - Rational(1, 3 * s - 8)};
      out.combined = out.terms[0];
      break;
    case TheoremKind::Monomial:
      out.terms = {Rational(6 * s - 186, 11 * s - 116), Rational(5 * s - 56, 10 * s - 56)};
      out.combined = std::min(out.terms[0], out.terms[1]);
      out.lower = Rational(1, 6);
      break;
  }
  return out;
}

std::vector<std::uint64_t> a_samples(std::uint64_t p, const TheoremScanOptions& opts) {
  std::vector<std::uint64_t> out;
  if (p <= opts.full_a_limit) {
    for (std::uint64_t a = 1; a < p; ++a) out.push_back(a);
    return out;
  }
  out.push_back(1);
  out.push_back(least_nonresidue(p));
  SplitMix64 rng(opts.seed ^ (p * 0x9e3779b97f4a7c15ULL));
  while (out.size() < opts.samples) out.push_back(1 + rng.below(p - 1));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool uses_fp2(TheoremKind kind) { return kind == TheoremKind::Monomial; }
bool uses_pplus(TheoremKind kind) { return kind == TheoremKind::MediumPplus || kind == TheoremKind::Monomial; }

struct Task {
  std::uint64_t p;
  std::uint64_t e;
};

std::uint64_t g_value(const CoverageProfile& prof) {
  auto g = prof.g();
  return g ? *g : kInfiniteG;
}

TheoremScanRecord run_task(const Task& task, const TheoremScanOptions& opts, const ThresholdExponents& exps) {
  const std::uint64_t p = task.p;
  TheoremScanRecord r;
  r.p = p;
  r.s = opts.s;
  r.which = opts.which;
  r.e = task.e;
  r.gcd_pm1 = std::gcd(task.e, p - 1);
  r.gcd_pp1 = std::gcd(task.e, p + 1);
  r.d = uses_pplus(opts.which) ? r.gcd_pp1 : r.gcd_pm1;
  r.threshold_exponent = exps.combined;
  r.threshold_value = std::pow(static_cast<double>(p), exps.combined.to_double());
  r.small_gcd_regime = static_cast<double>(std::min(r.gcd_pm1, r.gcd_pp1)) <=
                       std::pow(static_cast<double>(p), 0.25) / 8.0;

  if (uses_fp2(opts.which)) {
    const FieldCtx ctx(p);
    r.worst_g = g_value(waring_norm_one(ctx, task.e));
    r.a_samples = 0;
    r.above_lower = static_cast<double>(r.d) >= std::pow(static_cast<double>(p), 1.0 / 6.0);
  } else {
    std::uint64_t worst = 0, worst_qr = 0, worst_nqr = 0;
    bool any_qr = false, any_nqr = false;
    const auto as = a_samples(p, opts);
    for (std::uint64_t a : as) {
      const std::uint64_t g = g_value(waring_dickson(task.e, a, p));
      worst = std::max(worst, g);
      if (is_quadratic_residue(a, p)) {
        worst_qr = std::max(worst_qr, g);
        any_qr = true;
      } else {
        worst_nqr = std::max(worst_nqr, g);
        any_nqr = true;
      }
    }
    r.worst_g = worst;
    if (any_qr) r.worst_g_qr = worst_qr;
    if (any_nqr) r.worst_g_nqr = worst_nqr;
    r.a_samples = as.size();
  }
  r.satisfied = r.worst_g <= static_cast<std::uint64_t>(opts.s);
  return r;
}

}  // namespace

TheoremScan theorem_check(const TheoremScanOptions& opts) {
  TheoremScan scan;
  scan.exponents = threshold_exponents(opts.which, opts.s);

  const std::uint64_t limit = uses_fp2(opts.which) ? opts.fp2_limit : opts.fp_limit;
  if (opts.p_max > limit) {
    throw Error(ErrorKind::RefuseExhaustive,
                fmt::format("p_max={} exceeds the exact-solver limit {} for {}", opts.p_max, limit,
                            to_string(opts.which)));
  }

  std::vector<Task> tasks;
  for (std::uint64_t p = std::max<std::uint64_t>(opts.p_min, 3); p <= opts.p_max; ++p) {
    if (!is_prime(p)) continue;
    if (!opts.explicit_e.empty()) {
      for (auto e : opts.explicit_e) tasks.push_back({p, e});
    } else {
      for (auto d : divisors(uses_pplus(opts.which) ? p + 1 : p - 1)) tasks.push_back({p, d});
    }
  }

  scan.rows.resize(tasks.size());
  parallel_for(tasks.size(), opts.jobs,
               [&](std::size_t i) { scan.rows[i] = run_task(tasks[i], opts, scan.exponents); });

  std::vector<std::pair<double, double>> points;
  for (std::size_t i = 0; i < scan.rows.size();) {
    const std::uint64_t p = scan.rows[i].p;
    std::uint64_t best = 0;
    for (; i < scan.rows.size() && scan.rows[i].p == p; ++i) {
      if (scan.rows[i].satisfied) best = std::max(best, scan.rows[i].d);
    }
    if (best > 0) {
      scan.largest_good_d.emplace_back(p, best);
      points.emplace_back(static_cast<double>(p), static_cast<double>(best));
    }
  }
  scan.empirical_exponent = loglog_slope(points);
  return scan;
}

}  // namespace waringlab
