#pragma once

// Machine-readable records. Every record is an ordered JSON object whose key
// order is the CSV column order; CSV cells are rendered from the same values.

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "waringlab/curves.hpp"
#include "waringlab/energy.hpp"
#include "waringlab/expsums.hpp"
#include "waringlab/theorem.hpp"
#include "waringlab/waring.hpp"

namespace waringlab {

using Record = nlohmann::ordered_json;

enum class Format { Csv, Jsonl };

namespace columns {
extern const std::vector<std::string> kCoverage;
extern const std::vector<std::string> kSpectrum;
extern const std::vector<std::string> kEnergy;
extern const std::vector<std::string> kCurve;
extern const std::vector<std::string> kTheorem;
extern const std::vector<std::string> kFieldInfo;
}  // namespace columns

/// {"p", "ambient": "fp"|"fp2", "params": {...}, "status", "g", "cards"}.
Record coverage_record(std::uint64_t p, SetAmbient ambient, const Record& params, const CoverageProfile& prof);
Record spectrum_record(const SumSpectrum& spec);
Record energy_record(const EnergyReport& rep);
Record curve_record(const CurveCountReport& rep);
Record theorem_record(const TheoremScanRecord& rec);
Record field_info_record(const FieldCtx& ctx);

/// One CSV cell: strings verbatim (quoted when needed), numbers as in JSON,
/// null as "na", arrays joined by '|', objects as "k=v;k=v".
std::string csv_cell(const Record& value);

/// Streams records as CSV (header row first) or JSONL. Trailer lines are
/// "# k=v;k=v" in CSV and {"trailer": {...}} in JSONL.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, Format format, std::vector<std::string> columns);

  void write(const Record& rec);
  void trailer(const Record& fields);

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> columns_;
};

}  // namespace waringlab
