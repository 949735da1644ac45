#include "waringlab/report.hpp"

#include <fmt/format.h>

#include "waringlab/error.hpp"

namespace waringlab {

namespace columns {
const std::vector<std::string> kCoverage = {"p", "ambient", "params", "status", "g", "cards"};
const std::vector<std::string> kSpectrum = {"p",         "tau",        "ambient",  "mode",     "max_modulus",
                                            "argmax",    "bound_weil", "bound_t1", "bound_t2", "ratio_min"};
const std::vector<std::string> kEnergy = {"p", "tau", "ambient", "kind", "count", "bound_value", "ratio"};
const std::vector<std::string> kCurve = {"family", "p", "e_or_k", "A_or_a", "count", "bound_value", "within_bound"};
const std::vector<std::string> kTheorem = {
    "p",           "which",   "s",         "d",          "e",
    "gcd_pm1",     "gcd_pp1", "worst_g",   "worst_g_qr", "worst_g_nqr",
    "a_samples",   "satisfied", "threshold_exponent", "threshold_value", "small_gcd_regime",
    "above_lower"};
const std::vector<std::string> kFieldInfo = {"p", "generator", "nonresidue", "ext_generator", "pm1_factors",
                                             "pp1_factors"};
}  // namespace columns

namespace {

Record optional_json(const std::optional<double>& v) { return v ? Record(*v) : Record(nullptr); }

Record g_json(std::uint64_t g) { return g == kInfiniteG ? Record("inf") : Record(g); }

}  // namespace

Record coverage_record(std::uint64_t p, SetAmbient ambient, const Record& params, const CoverageProfile& prof) {
  Record r;
  r["p"] = p;
  r["ambient"] = ambient == SetAmbient::Fp ? "fp" : "fp2";
  r["params"] = params;
  r["status"] = std::string(to_string(prof.status));
  auto g = prof.g();
  r["g"] = g ? Record(*g) : Record(nullptr);
  r["cards"] = prof.cards;
  return r;
}

Record spectrum_record(const SumSpectrum& spec) {
  Record r;
  r["p"] = spec.p;
  r["tau"] = spec.tau;
  r["ambient"] = spec.ambient == Ambient::FpStar ? "fp" : "fp2";
  r["mode"] = spec.mode.label();
  r["max_modulus"] = spec.max_modulus;
  r["argmax"] = spec.argmax_label();
  r["bound_weil"] = spec.bound_weil();
  r["bound_t1"] = spec.bound_t1();
  r["bound_t2"] = spec.bound_t2();
  r["ratio_min"] = spec.ratio_min();
  return r;
}

Record energy_record(const EnergyReport& rep) {
  Record r;
  r["p"] = rep.p;
  r["tau"] = rep.tau;
  r["ambient"] = rep.kind == EnergyKind::R ? "fp" : "fp2";
  r["kind"] = std::string(to_string(rep.kind));
  r["count"] = rep.count;
  r["bound_value"] = optional_json(rep.bound_value);
  r["ratio"] = optional_json(rep.ratio());
  return r;
}

Record curve_record(const CurveCountReport& rep) {
  Record r;
  r["family"] = std::string(to_string(rep.family));
  r["p"] = rep.p;
  r["e_or_k"] = rep.e_or_k;
  if (rep.family == CurveFamily::DicksonFe) {
    r["A_or_a"] = fmt::format("{}", rep.coeff[0]);
  } else {
    r["A_or_a"] = fmt::format("{}:{}", rep.coeff[0], rep.coeff[1]);
  }
  r["count"] = rep.affine_count;
  r["bound_value"] = rep.bound_value;
  r["within_bound"] = rep.within_bound ? Record(*rep.within_bound) : Record(nullptr);
  return r;
}

Record theorem_record(const TheoremScanRecord& rec) {
  Record r;
  r["p"] = rec.p;
  r["which"] = std::string(to_string(rec.which));
  r["s"] = rec.s;
  r["d"] = rec.d;
  r["e"] = rec.e;
  r["gcd_pm1"] = rec.gcd_pm1;
  r["gcd_pp1"] = rec.gcd_pp1;
  r["worst_g"] = g_json(rec.worst_g);
  r["worst_g_qr"] = rec.worst_g_qr ? g_json(*rec.worst_g_qr) : Record(nullptr);
  r["worst_g_nqr"] = rec.worst_g_nqr ? g_json(*rec.worst_g_nqr) : Record(nullptr);
  r["a_samples"] = rec.a_samples;
  r["satisfied"] = rec.satisfied;
  r["threshold_exponent"] = rec.threshold_exponent.to_string();
  r["threshold_value"] = rec.threshold_value;
  r["small_gcd_regime"] = rec.small_gcd_regime;
  r["above_lower"] = rec.above_lower ? Record(*rec.above_lower) : Record(nullptr);
  return r;
}

Record field_info_record(const FieldCtx& ctx) {
  Record r;
  r["p"] = ctx.p();
  r["generator"] = ctx.generator();
  r["nonresidue"] = ctx.nonresidue();
  r["ext_generator"] = fmt::format("{}:{}", ctx.ext_generator().a, ctx.ext_generator().b);
  r["pm1_factors"] = prime_divisors(ctx.p() - 1);
  r["pp1_factors"] = prime_divisors(ctx.p() + 1);
  return r;
}

std::string csv_cell(const Record& value) {
  if (value.is_null()) return "na";
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  if (value.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) out += '|';
      out += csv_cell(value[i]);
    }
    return out;
  }
  if (value.is_object()) {
    std::string out;
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (!out.empty()) out += ';';
      out += it.key() + "=" + csv_cell(it.value());
    }
    return out;
  }
  return value.dump();
}

ReportWriter::ReportWriter(std::ostream& out, Format format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {
  if (format_ == Format::Csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
    out_ << '\n';
  }
}

void ReportWriter::write(const Record& rec) {
  if (format_ == Format::Jsonl) {
    out_ << rec.dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (!rec.contains(columns_[i])) {
      throw Error(ErrorKind::InvalidInput, "record is missing column " + columns_[i]);
    }
    out_ << (i ? "," : "") << csv_cell(rec[columns_[i]]);
  }
  out_ << '\n';
}

void ReportWriter::trailer(const Record& fields) {
  if (format_ == Format::Jsonl) {
    Record wrapped;
    wrapped["trailer"] = fields;
    out_ << wrapped.dump() << '\n';
    return;
  }
  out_ << "# " << csv_cell(fields) << '\n';
}

}  // namespace waringlab
