#include <gtest/gtest.h>

#include <sstream>

#include "waringlab/error.hpp"
#include "waringlab/report.hpp"

using namespace waringlab;

namespace {

std::string header_of(const std::vector<std::string>& cols) {
  std::ostringstream out;
  ReportWriter w(out, Format::Csv, cols);
  return out.str();
}

}  // namespace

TEST(GoldenHeaders, FrozenColumnOrders) {
  EXPECT_EQ(header_of(columns::kCoverage), "p,ambient,params,status,g,cards\n");
  EXPECT_EQ(header_of(columns::kSpectrum),
            "p,tau,ambient,mode,max_modulus,argmax,bound_weil,bound_t1,bound_t2,ratio_min\n");
  EXPECT_EQ(header_of(columns::kEnergy), "p,tau,ambient,kind,count,bound_value,ratio\n");
  EXPECT_EQ(header_of(columns::kCurve), "family,p,e_or_k,A_or_a,count,bound_value,within_bound\n");
  EXPECT_EQ(header_of(columns::kTheorem),
            "p,which,s,d,e,gcd_pm1,gcd_pp1,worst_g,worst_g_qr,worst_g_nqr,a_samples,satisfied,"
            "threshold_exponent,threshold_value,small_gcd_regime,above_lower\n");
  EXPECT_EQ(header_of(columns::kFieldInfo), "p,generator,nonresidue,ext_generator,pm1_factors,pp1_factors\n");
}

TEST(GoldenRows, CoverageRecord) {
  Record params;
  params["e"] = 7;
  params["a"] = 1;
  auto rec = coverage_record(13, SetAmbient::Fp, params, waring_dickson(7, 1, 13));
  std::ostringstream csv, jsonl;
  ReportWriter(csv, Format::Csv, columns::kCoverage).write(rec);
  ReportWriter(jsonl, Format::Jsonl, columns::kCoverage).write(rec);
  EXPECT_EQ(csv.str(), "p,ambient,params,status,g,cards\n13,fp,e=7;a=1,covered,2,7|13\n");
  EXPECT_EQ(jsonl.str(),
            "{\"p\":13,\"ambient\":\"fp\",\"params\":{\"e\":7,\"a\":1},\"status\":\"covered\",\"g\":2,"
            "\"cards\":[7,13]}\n");
}

TEST(GoldenRows, FieldInfoAndCurve) {
  std::ostringstream csv;
  ReportWriter w(csv, Format::Csv, columns::kFieldInfo);
  w.write(field_info_record(FieldCtx(7)));
  EXPECT_EQ(csv.str(), "p,generator,nonresidue,ext_generator,pm1_factors,pp1_factors\n7,3,3,1:1,2|3,2\n");

  auto rec = curve_record(count_dickson_curve(1, 0, 13));
  EXPECT_TRUE(rec["within_bound"].is_null());
  EXPECT_EQ(csv_cell(rec["within_bound"]), "na");
  EXPECT_EQ(rec["A_or_a"], "0");
}

TEST(GoldenRows, TheoremRecordPrintsInfinityAndVacuousExponent) {
  TheoremScanRecord r;
  r.p = 19;
  r.s = 6;
  r.which = TheoremKind::Monomial;
  r.d = r.e = r.gcd_pp1 = 20;
  r.gcd_pm1 = 2;
  r.worst_g = kInfiniteG;
  r.threshold_exponent = Rational(-26, 4);
  r.threshold_value = 1.5;
  r.above_lower = true;
  std::ostringstream csv;
  ReportWriter(csv, Format::Csv, columns::kTheorem).write(theorem_record(r));
  EXPECT_EQ(csv.str().substr(csv.str().find('\n') + 1),
            "19,monomial,6,20,20,2,20,inf,na,na,0,false,-13/2,1.5,false,true\n");
}

TEST(CsvCells, Rendering) {
  EXPECT_EQ(csv_cell(Record(nullptr)), "na");
  EXPECT_EQ(csv_cell(Record("a,b")), "\"a,b\"");
  EXPECT_EQ(csv_cell(Record("say \"hi\"")), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_cell(Record::array({1, 2, 3})), "1|2|3");
  EXPECT_EQ(csv_cell(Record(true)), "true");
  EXPECT_EQ(csv_cell(Record(0.5)), "0.5");
}

TEST(Writer, TrailersAndMissingColumns) {
  Record t;
  t["config_hash"] = "abc";
  t["seed"] = 3;
  std::ostringstream csv, jsonl;
  ReportWriter(csv, Format::Csv, {"x"}).trailer(t);
  ReportWriter(jsonl, Format::Jsonl, {"x"}).trailer(t);
  EXPECT_EQ(csv.str(), "x\n# config_hash=abc;seed=3\n");
  EXPECT_EQ(jsonl.str(), "{\"trailer\":{\"config_hash\":\"abc\",\"seed\":3}}\n");
  std::ostringstream out;
  ReportWriter w(out, Format::Csv, {"x", "y"});
  Record partial;
  partial["x"] = 1;
  EXPECT_THROW(w.write(partial), Error);
}
