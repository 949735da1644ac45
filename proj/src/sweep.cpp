#include "waringlab/sweep.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>

#include "waringlab/curves.hpp"
#include "waringlab/dickson.hpp"
#include "waringlab/energy.hpp"
#include "waringlab/error.hpp"
#include "waringlab/parallel.hpp"
#include "waringlab/rng.hpp"
#include "waringlab/theorem.hpp"
#include "waringlab/waring.hpp"

namespace waringlab {

std::string_view to_string(SweepTask task) {
  switch (task) {
    case SweepTask::DicksonWaring: return "dickson-waring";
    case SweepTask::NormWaring: return "norm-waring";
    case SweepTask::Kloosterman: return "kloosterman";
    case SweepTask::Gauss: return "gauss";
    case SweepTask::Energy: return "energy";
    case SweepTask::TraceEnergy: return "trace-energy";
    case SweepTask::Curve: return "curve";
  }
  return "unknown";
}

std::optional<SweepTask> parse_sweep_task(std::string_view name) {
  for (auto t : {SweepTask::DicksonWaring, SweepTask::NormWaring, SweepTask::Kloosterman, SweepTask::Gauss,
                 SweepTask::Energy, SweepTask::TraceEnergy, SweepTask::Curve}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::string SweepConfig::canonical() const {
  return fmt::format(
      "task={};p_min={};p_max={};e={};a={};k={};tau={};tau_max={};kind={};mode={};samples={};seed={};format={}",
      to_string(task), p_min, p_max, e_grid, a_grid, k_grid, tau_grid, tau_max, kind,
      sum_mode == SumMode::Kind::Exhaustive ? "exhaustive" : "sampled", samples, seed,
      format == Format::Csv ? "csv" : "jsonl");
}

std::string SweepConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

namespace {

Error bad_grid(std::string_view name, std::string_view value) {
  return Error(ErrorKind::InvalidParameter, fmt::format("invalid --{} grid '{}'", name, value));
}

std::uint64_t parse_u64(std::string_view text, std::string_view name, std::string_view grid) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw bad_grid(name, grid);
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::vector<std::uint64_t> parse_list(std::string_view grid, std::string_view name) {
  std::vector<std::uint64_t> out;
  for (auto item : split(grid, ',')) out.push_back(parse_u64(item, name, grid));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> resolve_exponents(std::string_view grid, std::string_view name, std::uint64_t p) {
  if (grid == "divisors-pm1") return divisors(p - 1);
  if (grid == "divisors-pp1") return divisors(p + 1);
  return parse_list(grid, name);
}

std::vector<std::uint64_t> resolve_tau(const SweepConfig& cfg, std::uint64_t order) {
  std::vector<std::uint64_t> out;
  if (cfg.tau_grid == "divisors") {
    out = divisors(order);
  } else {
    for (auto t : parse_list(cfg.tau_grid, "tau"))
      if (t != 0 && order % t == 0) out.push_back(t);
  }
  if (cfg.tau_max != 0) std::erase_if(out, [&](std::uint64_t t) { return t > cfg.tau_max; });
  return out;
}

std::vector<std::uint64_t> resolve_a(const SweepConfig& cfg, std::uint64_t p, std::uint64_t first) {
  if (cfg.a_grid == "all") {
    std::vector<std::uint64_t> out(p - first);
    std::iota(out.begin(), out.end(), first);
    return out;
  }
  if (cfg.a_grid == "sample") {
    TheoremScanOptions opts;
    opts.full_a_limit = 0;
    opts.samples = cfg.samples;
    opts.seed = cfg.seed;
    return a_samples(p, opts);
  }
  auto out = parse_list(cfg.a_grid, "a");
  for (auto& a : out) a %= p;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Fermat-family coefficients as canonical F_{p^2} indices.
std::vector<std::uint64_t> resolve_fp2_coeffs(const SweepConfig& cfg, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  if (cfg.a_grid == "all") {
    for (std::uint64_t i = 1; i < p * p; ++i) out.push_back(i);
    return out;
  }
  if (cfg.a_grid == "sample") {
    SplitMix64 rng(cfg.seed ^ (p * 0x9e3779b97f4a7c15ULL));
    for (std::uint64_t i = 0; i < cfg.samples; ++i) out.push_back(1 + rng.below(p * p - 1));
  } else {
    for (auto item : split(cfg.a_grid, ',')) {
      auto parts = split(item, ':');
      if (parts.size() > 2) throw bad_grid("a", cfg.a_grid);
      std::uint64_t a = parse_u64(parts[0], "a", cfg.a_grid) % p;
      std::uint64_t b = parts.size() == 2 ? parse_u64(parts[1], "a", cfg.a_grid) % p : 0;
      out.push_back(a + b * p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase(out, 0);
  return out;
}

struct Point {
  std::uint64_t p;
  std::uint64_t x;  // e, k or tau
  std::uint64_t y;  // a / A / coefficient index, unused otherwise
};

EnergyKind energy_kind(const SweepConfig& cfg) {
  if (cfg.task == SweepTask::TraceEnergy) return EnergyKind::Trace;
  if (cfg.kind == "R") return EnergyKind::R;
  if (cfg.kind == "T") return EnergyKind::T;
  if (cfg.kind == "trace") return EnergyKind::Trace;
  throw Error(ErrorKind::InvalidParameter, fmt::format("energy kind must be R, T or trace (got '{}')", cfg.kind));
}

bool fermat_family(const SweepConfig& cfg) {
  if (cfg.kind == "dickson") return false;
  if (cfg.kind == "fermat") return true;
  throw Error(ErrorKind::InvalidParameter, fmt::format("curve kind must be dickson or fermat (got '{}')", cfg.kind));
}

std::vector<Point> enumerate_points(const SweepConfig& cfg) {
  std::vector<Point> points;
  for (std::uint64_t p = std::max<std::uint64_t>(cfg.p_min, 3); p <= cfg.p_max; ++p) {
    if (!is_prime(p)) continue;
    switch (cfg.task) {
      case SweepTask::DicksonWaring:
        for (auto e : resolve_exponents(cfg.e_grid, "e", p))
          for (auto a : resolve_a(cfg, p, 1)) points.push_back({p, e, a});
        break;
      case SweepTask::NormWaring:
        for (auto k : resolve_exponents(cfg.k_grid, "k", p)) points.push_back({p, k, 0});
        break;
      case SweepTask::Kloosterman:
        for (auto t : resolve_tau(cfg, p - 1)) points.push_back({p, t, 0});
        break;
      case SweepTask::Gauss:
        for (auto t : resolve_tau(cfg, p + 1)) points.push_back({p, t, 0});
        break;
      case SweepTask::Energy:
      case SweepTask::TraceEnergy: {
        const std::uint64_t order = energy_kind(cfg) == EnergyKind::R ? p - 1 : p + 1;
        for (auto t : resolve_tau(cfg, order)) points.push_back({p, t, 0});
        break;
      }
      case SweepTask::Curve:
        if (fermat_family(cfg)) {
          for (auto k : resolve_exponents(cfg.k_grid, "k", p)) {
            if (k == 0 || std::gcd(k, p) != 1) continue;
            for (auto c : resolve_fp2_coeffs(cfg, p)) points.push_back({p, k, c});
          }
        } else {
          for (auto e : resolve_exponents(cfg.e_grid, "e", p)) {
            if (e % p == 0) continue;
            for (auto A : resolve_a(cfg, p, 0)) points.push_back({p, e, A});
          }
        }
        break;
    }
  }
  return points;
}

Record run_point(const SweepConfig& cfg, const Point& pt, const FieldCtx& ctx) {
  switch (cfg.task) {
    case SweepTask::DicksonWaring: {
      Record params;
      params["e"] = pt.x;
      params["a"] = pt.y;
      return coverage_record(pt.p, SetAmbient::Fp, params, waring_dickson(pt.x, pt.y, pt.p));
    }
    case SweepTask::NormWaring: {
      Record params;
      params["k"] = pt.x;
      return coverage_record(pt.p, SetAmbient::Fp2, params, waring_norm_one(ctx, pt.x));
    }
    case SweepTask::Kloosterman:
    case SweepTask::Gauss: {
      SpectrumOptions opts;
      opts.mode = cfg.sum_mode == SumMode::Kind::Exhaustive ? SumMode::exhaustive()
                                                             : SumMode::sampled(cfg.samples, cfg.seed);
      if (cfg.task == SweepTask::Kloosterman) {
        return spectrum_record(kloosterman_spectrum(subgroup(ctx, Ambient::FpStar, pt.x), opts));
      }
      return spectrum_record(gauss_spectrum(ctx, subgroup(ctx, Ambient::NormOne, pt.x), opts));
    }
    case SweepTask::Energy:
    case SweepTask::TraceEnergy: {
      const EnergyKind kind = energy_kind(cfg);
      const Ambient amb = kind == EnergyKind::R ? Ambient::FpStar : Ambient::NormOne;
      return energy_record(energy(kind, ctx, subgroup(ctx, amb, pt.x)));
    }
    case SweepTask::Curve:
      if (fermat_family(cfg)) return curve_record(count_fermat_norm_curve(ctx, pt.x, ctx.from_index(pt.y)));
      return curve_record(count_dickson_curve(pt.x, pt.y, pt.p));
  }
  throw Error(ErrorKind::InvalidParameter, "unknown sweep task");
}

bool needs_ext(SweepTask task) { return task != SweepTask::DicksonWaring; }

}  // namespace

const std::vector<std::string>& sweep_columns(const SweepConfig& config) {
  switch (config.task) {
    case SweepTask::DicksonWaring:
    case SweepTask::NormWaring: return columns::kCoverage;
    case SweepTask::Kloosterman:
    case SweepTask::Gauss: return columns::kSpectrum;
    case SweepTask::Energy:
    case SweepTask::TraceEnergy: return columns::kEnergy;
    case SweepTask::Curve: return columns::kCurve;
  }
  return columns::kCoverage;
}

void run_sweep(const SweepConfig& config, std::ostream& out) {
  if (config.jobs == 0) throw Error(ErrorKind::InvalidParameter, "jobs must be at least 1");
  if (config.task == SweepTask::Energy || config.task == SweepTask::TraceEnergy) energy_kind(config);
  if (config.task == SweepTask::Curve) fermat_family(config);

  const auto points = enumerate_points(config);

  std::map<std::uint64_t, std::unique_ptr<FieldCtx>> contexts;
  for (const auto& pt : points) {
    if (!contexts.count(pt.p)) {
      contexts.emplace(pt.p, needs_ext(config.task) ? std::make_unique<FieldCtx>(pt.p) : nullptr);
    }
  }

  std::vector<Record> rows(points.size());
  parallel_for(points.size(), config.jobs, [&](std::size_t i) {
    const FieldCtx* ctx = contexts.at(points[i].p).get();
    rows[i] = ctx ? run_point(config, points[i], *ctx) : run_point(config, points[i], FieldCtx(3));
  });

  ReportWriter writer(out, config.format, sweep_columns(config));
  for (const auto& r : rows) writer.write(r);

  Record trailer;
  trailer["config_hash"] = config.hash();
  trailer["seed"] = config.seed;
  trailer["version"] = std::string(kToolVersion);
  trailer["rows"] = rows.size();
  if (config.task == SweepTask::TraceEnergy ||
      (config.task == SweepTask::Energy && energy_kind(config) == EnergyKind::Trace)) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows) pts.emplace_back(r["tau"].get<double>(), r["count"].get<double>());
    const double slope = loglog_slope(pts);
    trailer["loglog_slope"] = std::isnan(slope) ? Record(nullptr) : Record(slope);
  }
  writer.trailer(trailer);
}

}  // namespace waringlab
