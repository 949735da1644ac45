#include "waringlab/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "waringlab/curves.hpp"
#include "waringlab/energy.hpp"
#include "waringlab/error.hpp"
#include "waringlab/expsums.hpp"
#include "waringlab/field.hpp"
#include "waringlab/report.hpp"
#include "waringlab/sweep.hpp"
#include "waringlab/theorem.hpp"
#include "waringlab/waring.hpp"

namespace waringlab {

namespace {

// Values shared by all subcommands; each subcommand registers the subset it uses.
struct Flags {
  std::uint64_t p = 0;
  std::uint64_t p_min = 3;
  std::uint64_t p_max = 3;
  std::string e;
  std::string a;
  std::string k;
  std::string tau;
  std::uint64_t tau_max = 0;
  int s = 4;
  std::string kind;
  std::string which;
  std::string task;
  std::string mode = "exhaustive";
  std::uint64_t samples = 32;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string out_path;
  std::string format;
  std::string config;
};

Error invalid(std::string message) { return Error(ErrorKind::InvalidParameter, std::move(message)); }

std::uint64_t to_u64(const std::string& text, std::string_view flag) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    if (!text.empty() && text[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw invalid(fmt::format("--{} must be a nonnegative integer (got '{}')", flag, text));
  return v;
}

std::uint64_t require(const std::string& text, std::string_view flag) {
  if (text.empty()) throw invalid(fmt::format("--{} is required", flag));
  return to_u64(text, flag);
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "p must be prime");
  if (p < 3) throw invalid("p must be an odd prime");
  if (p > kMaxPrime) throw invalid(fmt::format("p must not exceed {}", kMaxPrime));
}

Format parse_format(const std::string& text, Format fallback) {
  if (text.empty()) return fallback;
  if (text == "csv") return Format::Csv;
  if (text == "jsonl") return Format::Jsonl;
  throw invalid(fmt::format("--format must be csv or jsonl (got '{}')", text));
}

SumMode parse_mode(const Flags& f) {
  if (f.mode == "exhaustive") return SumMode::exhaustive();
  if (f.mode == "sampled") {
    if (f.samples == 0) throw invalid("--samples must be at least 1");
    return SumMode::sampled(f.samples, f.seed);
  }
  throw invalid(fmt::format("--mode must be exhaustive or sampled (got '{}')", f.mode));
}

Fp2Elem parse_fp2(const std::string& text, const FieldCtx& ctx) {
  const auto colon = text.find(':');
  const std::uint64_t a = to_u64(text.substr(0, colon), "a");
  const std::uint64_t b = colon == std::string::npos ? 0 : to_u64(text.substr(colon + 1), "a");
  return Fp2Elem{a % ctx.p(), b % ctx.p()};
}

void single(std::ostream& out, const Flags& f, const std::vector<std::string>& columns, const Record& rec) {
  ReportWriter w(out, parse_format(f.format, Format::Jsonl), columns);
  w.write(rec);
}

// key=value lines become "--key value" tokens; blank lines and '#' comments are skipped.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, fmt::format("cannot read config file '{}'", path));
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw invalid(fmt::format("config file '{}' line {}: expected key=value", path, lineno));
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    if (key.empty() || key == "config") {
      throw invalid(fmt::format("config file '{}' line {}: invalid key", path, lineno));
    }
    tokens.push_back("--" + key);
    tokens.push_back(trim(line.substr(eq + 1)));
  }
  return tokens;
}

// Splices config-file tokens in right after the subcommand name so that
// flags given on the command line come later and win.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw invalid("--config requires a path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return rest;
  auto tokens = read_config(*path);
  const std::size_t at = rest.empty() || rest[0].rfind("-", 0) == 0 ? 0 : 1;
  rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(at), tokens.begin(), tokens.end());
  return rest;
}

int exit_code(const Error& e) {
  if (e.is_refusal()) return kExitRefused;
  if (e.kind() == ErrorKind::Io) return kExitIo;
  return kExitInvalid;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Waring numbers, exponential sums, energies and curve counts over F_p and F_{p^2}", "waringlab"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto add_p = [&](CLI::App* c) { c->add_option("--p", f.p, "odd prime")->required(); };
  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", f.out_path, "write records to PATH instead of stdout");
    c->add_option("--format", f.format, "csv | jsonl");
    c->add_option("--config", f.config, "key=value file of flags");
  };
  auto add_sum_mode = [&](CLI::App* c) {
    c->add_option("--mode", f.mode, "exhaustive | sampled");
    c->add_option("--samples", f.samples, "parameters drawn in sampled mode");
    c->add_option("--seed", f.seed, "64-bit seed");
    c->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* field_info = app.add_subcommand("field-info", "generator, non-residue and factorizations for p");
  add_p(field_info);
  add_out(field_info);

  auto* dickson_waring = app.add_subcommand("dickson-waring", "Waring number of the Dickson value set D_e(., a)");
  add_p(dickson_waring);
  dickson_waring->add_option("--e", f.e, "exponent")->required();
  dickson_waring->add_option("--a", f.a, "parameter a in F_p")->required();
  add_out(dickson_waring);

  auto* norm_waring = app.add_subcommand("norm-waring", "Waring number of k-th powers of norm-one elements");
  add_p(norm_waring);
  norm_waring->add_option("--k", f.k, "exponent")->required();
  add_out(norm_waring);

  auto* kloosterman_cmd = app.add_subcommand("kloosterman", "max |Kloosterman sum| over a subgroup of F_p^*");
  add_p(kloosterman_cmd);
  kloosterman_cmd->add_option("--tau", f.tau, "subgroup order, dividing p-1")->required();
  add_sum_mode(kloosterman_cmd);
  add_out(kloosterman_cmd);

  auto* gauss_cmd = app.add_subcommand("gauss", "max |Gauss sum| over a subgroup of the norm-one group");
  add_p(gauss_cmd);
  gauss_cmd->add_option("--tau", f.tau, "subgroup order, dividing p+1")->required();
  add_sum_mode(gauss_cmd);
  add_out(gauss_cmd);

  auto* energy_cmd = app.add_subcommand("energy", "exact additive energies R, T or trace");
  add_p(energy_cmd);
  energy_cmd->add_option("--tau", f.tau, "subgroup order")->required();
  energy_cmd->add_option("--kind", f.kind, "R | T | trace")->required();
  add_out(energy_cmd);

  auto* trace_cmd = app.add_subcommand("trace-energy", "trace energy of a subgroup of the norm-one group");
  add_p(trace_cmd);
  trace_cmd->add_option("--tau", f.tau, "subgroup order, dividing p+1")->required();
  add_out(trace_cmd);

  auto* curve_cmd = app.add_subcommand("curve", "affine point count of a Dickson or Fermat-norm curve");
  add_p(curve_cmd);
  curve_cmd->add_option("--kind", f.kind, "dickson | fermat")->required();
  curve_cmd->add_option("--e", f.e, "Dickson family exponent");
  curve_cmd->add_option("--k", f.k, "Fermat family exponent");
  curve_cmd->add_option("--a", f.a, "A in F_p (dickson) or a:b for a + b theta (fermat)")->required();
  add_out(curve_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "run a task over a prime range and parameter grid");
  sweep_cmd->add_option("--task", f.task,
                        "dickson-waring | norm-waring | kloosterman | gauss | energy | trace-energy | curve")
      ->required();
  sweep_cmd->add_option("--p-min", f.p_min, "smallest prime considered");
  sweep_cmd->add_option("--p-max", f.p_max, "largest prime considered");
  sweep_cmd->add_option("--e", f.e, "divisors-pm1 | divisors-pp1 | comma list");
  sweep_cmd->add_option("--a", f.a, "all | sample | comma list");
  sweep_cmd->add_option("--k", f.k, "divisors-pp1 | divisors-pm1 | comma list");
  sweep_cmd->add_option("--tau", f.tau, "divisors | comma list");
  sweep_cmd->add_option("--tau-max", f.tau_max, "skip subgroups larger than this (0: no cap)");
  sweep_cmd->add_option("--kind", f.kind, "energy: R | T | trace; curve: dickson | fermat");
  add_sum_mode(sweep_cmd);
  add_out(sweep_cmd);

  auto* theorem_cmd = app.add_subcommand("theorem-check", "gcd-threshold scan against a theorem's exponent");
  theorem_cmd->add_option("--which", f.which, "medium_pminus | medium_pplus | small_e | monomial")->required();
  theorem_cmd->add_option("--s", f.s, "even target s >= 4");
  theorem_cmd->add_option("--p-min", f.p_min, "smallest prime considered");
  theorem_cmd->add_option("--p-max", f.p_max, "largest prime considered");
  theorem_cmd->add_option("--e", f.e, "explicit comma list of exponents");
  theorem_cmd->add_option("--samples", f.samples, "a-samples per prime above the full-enumeration limit");
  theorem_cmd->add_option("--seed", f.seed, "64-bit seed");
  theorem_cmd->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_out(theorem_cmd);

  std::vector<std::string> args;
  try {
    args = expand_config(raw_args);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  std::ostringstream buffer;
  try {
    if (*field_info) {
      require_prime(f.p);
      single(buffer, f, columns::kFieldInfo, field_info_record(FieldCtx(f.p)));
    } else if (*dickson_waring) {
      require_prime(f.p);
      const std::uint64_t e = require(f.e, "e");
      const std::uint64_t a = require(f.a, "a");
      if (a >= f.p) throw invalid("a must satisfy 0 <= a < p");
      Record params;
      params["e"] = e;
      params["a"] = a;
      single(buffer, f, columns::kCoverage, coverage_record(f.p, SetAmbient::Fp, params, waring_dickson(e, a, f.p)));
    } else if (*norm_waring) {
      require_prime(f.p);
      const std::uint64_t k = require(f.k, "k");
      const FieldCtx ctx(f.p);
      Record params;
      params["k"] = k;
      single(buffer, f, columns::kCoverage, coverage_record(f.p, SetAmbient::Fp2, params, waring_norm_one(ctx, k)));
    } else if (*kloosterman_cmd || *gauss_cmd) {
      require_prime(f.p);
      const std::uint64_t tau = require(f.tau, "tau");
      const FieldCtx ctx(f.p);
      SpectrumOptions opts;
      opts.mode = parse_mode(f);
      opts.jobs = f.jobs;
      const SumSpectrum spec =
          *kloosterman_cmd ? kloosterman_spectrum(subgroup(ctx, Ambient::FpStar, tau), opts)
                           : gauss_spectrum(ctx, subgroup(ctx, Ambient::NormOne, tau), opts);
      single(buffer, f, columns::kSpectrum, spectrum_record(spec));
    } else if (*energy_cmd || *trace_cmd) {
      require_prime(f.p);
      const std::uint64_t tau = require(f.tau, "tau");
      EnergyKind kind = EnergyKind::Trace;
      if (*energy_cmd) {
        if (f.kind == "R") {
          kind = EnergyKind::R;
        } else if (f.kind == "T") {
          kind = EnergyKind::T;
        } else if (f.kind != "trace") {
          throw invalid(fmt::format("--kind must be R, T or trace (got '{}')", f.kind));
        }
      }
      const FieldCtx ctx(f.p);
      const Ambient amb = kind == EnergyKind::R ? Ambient::FpStar : Ambient::NormOne;
      single(buffer, f, columns::kEnergy, energy_record(energy(kind, ctx, subgroup(ctx, amb, tau))));
    } else if (*curve_cmd) {
      require_prime(f.p);
      if (f.kind == "dickson") {
        const std::uint64_t e = require(f.e, "e");
        const std::uint64_t A = to_u64(f.a, "a");
        single(buffer, f, columns::kCurve, curve_record(count_dickson_curve(e, A % f.p, f.p)));
      } else if (f.kind == "fermat") {
        const std::uint64_t k = require(f.k, "k");
        const FieldCtx ctx(f.p);
        single(buffer, f, columns::kCurve, curve_record(count_fermat_norm_curve(ctx, k, parse_fp2(f.a, ctx))));
      } else {
        throw invalid(fmt::format("--kind must be dickson or fermat (got '{}')", f.kind));
      }
    } else if (*sweep_cmd) {
      const auto task = parse_sweep_task(f.task);
      if (!task) throw invalid(fmt::format("unknown sweep task '{}'", f.task));
      if (f.p_min > f.p_max) throw invalid("--p-min must not exceed --p-max");
      SweepConfig cfg;
      cfg.task = *task;
      cfg.p_min = f.p_min;
      cfg.p_max = f.p_max;
      if (!f.e.empty()) cfg.e_grid = f.e;
      if (!f.a.empty()) cfg.a_grid = f.a;
      if (!f.k.empty()) cfg.k_grid = f.k;
      if (!f.tau.empty()) cfg.tau_grid = f.tau;
      cfg.tau_max = f.tau_max;
      if (!f.kind.empty()) {
        cfg.kind = f.kind;
      } else if (*task == SweepTask::Curve) {
        cfg.kind = "dickson";
      }
      cfg.sum_mode = parse_mode(f).kind;
      cfg.samples = f.samples;
      cfg.seed = f.seed;
      cfg.jobs = f.jobs;
      cfg.format = parse_format(f.format, Format::Csv);
      run_sweep(cfg, buffer);
    } else if (*theorem_cmd) {
      const auto which = parse_theorem_kind(f.which);
      if (!which) throw invalid(fmt::format("unknown theorem '{}'", f.which));
      if (f.p_min > f.p_max) throw invalid("--p-min must not exceed --p-max");
      TheoremScanOptions opts;
      opts.which = *which;
      opts.s = f.s;
      opts.p_min = f.p_min;
      opts.p_max = f.p_max;
      if (!f.e.empty()) {
        std::stringstream list(f.e);
        std::string item;
        while (std::getline(list, item, ',')) opts.explicit_e.push_back(to_u64(item, "e"));
      }
      opts.samples = f.samples;
      opts.seed = f.seed;
      opts.jobs = f.jobs;
      const TheoremScan scan = theorem_check(opts);
      ReportWriter w(buffer, parse_format(f.format, Format::Csv), columns::kTheorem);
      for (const auto& row : scan.rows) w.write(theorem_record(row));
      Record trailer;
      std::vector<std::string> terms;
      for (const auto& t : scan.exponents.terms) terms.push_back(t.to_string());
      trailer["exponent_terms"] = terms;
      trailer["threshold_exponent"] = scan.exponents.combined.to_string();
      trailer["lower_exponent"] = scan.exponents.lower ? Record(scan.exponents.lower->to_string()) : Record(nullptr);
      trailer["empirical_exponent"] =
          std::isnan(scan.empirical_exponent) ? Record(nullptr) : Record(scan.empirical_exponent);
      trailer["seed"] = f.seed;
      trailer["version"] = std::string(kToolVersion);
      w.trailer(trailer);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  }

  if (f.out_path.empty()) {
    out << buffer.str();
    out.flush();
    return kExitOk;
  }
  std::ofstream file(f.out_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << buffer.str()) || !file.flush()) {
    err << "error: cannot write output file '" << f.out_path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace waringlab
