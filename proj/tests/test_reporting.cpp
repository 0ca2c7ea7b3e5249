#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "warpcon/config.hpp"
#include "warpcon/report.hpp"
#include "warpcon/report_io.hpp"
#include "warpcon/suites.hpp"

using namespace warpcon;

namespace {

CheckReport sample_report(const std::string& id, double residual, bool hard = true) {
  CheckReport r = make_report(id, "sample claim", residual, 1e-12, {{"trials", 3}});
  r.hard = hard;
  r.runtime_ms = 17;
  return r;
}

TEST(Config, JsonRoundTrip) {
  RunConfig c;
  c.dimension = 3;
  c.kappas = {0.5, 1.5};
  c.seed = 99;
  c.tol.span = 2e-10;
  nlohmann::json j = c;
  const RunConfig back = j.get<RunConfig>();
  EXPECT_EQ(back.dimension, 3);
  EXPECT_EQ(back.kappas, c.kappas);
  EXPECT_EQ(back.seed, 99u);
  EXPECT_EQ(back.tol.span, 2e-10);
  EXPECT_EQ(back.mass, c.mass);
}

TEST(Config, ValidationRejectsBadValues) {
  RunConfig c;
  c.dimension = 1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.kappas = {-1.0};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.n_max = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Config, LoadFromFile) {
  const std::string path = "config_roundtrip_test.json";
  {
    std::ofstream out(path);
    out << R"({"dimension": 2, "kappas": [2.0], "seed": 7, "lattice_k": 1})";
  }
  const RunConfig c = load_config(path);
  EXPECT_EQ(c.kappas.size(), 1u);
  EXPECT_EQ(c.kappas[0], 2.0);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.lattice_k, 1);
  EXPECT_EQ(c.n_max, 2);  // default preserved
  std::remove(path.c_str());
  EXPECT_THROW(load_config("no_such_file.json"), std::runtime_error);
}

TEST(Report, JsonRoundTripIsLossless) {
  CheckReport r = sample_report("warp.sample", 1.2345678901234567e-13);
  r.note = "has, commas and \"quotes\"";
  nlohmann::json j = r;
  const CheckReport back = j.get<CheckReport>();
  EXPECT_EQ(back.check_id, r.check_id);
  EXPECT_EQ(back.residual, r.residual);  // bit-exact double round trip
  EXPECT_EQ(back.tolerance, r.tolerance);
  EXPECT_EQ(back.pass, r.pass);
  EXPECT_EQ(back.note, r.note);
  EXPECT_EQ(back.params.at("trials").get<int>(), 3);
}

TEST(Emit, EmptySelectionIsAnError) {
  EXPECT_THROW(render_json({}), std::invalid_argument);
  EXPECT_THROW(render_csv({}), std::invalid_argument);
  EXPECT_THROW(render_text({}), std::invalid_argument);
}

TEST(Emit, JsonIsSortedAndRuntimeFree) {
  const std::string s = render_json({sample_report("b.check", 0.0), sample_report("a.check", 0.0)});
  EXPECT_LT(s.find("a.check"), s.find("b.check"));
  const auto parsed = nlohmann::json::parse(s);
  for (const auto& r : parsed.at("reports")) EXPECT_EQ(r.at("runtime_ms").get<int>(), 0);
}

TEST(Emit, CsvEscapesSpecialCharacters) {
  CheckReport r = sample_report("a.check", 0.0);
  r.note = "x, \"y\"";
  const std::string s = render_csv({r});
  EXPECT_NE(s.find("\"x, \"\"y\"\"\""), std::string::npos);
}

TEST(Emit, TextSummaryCountsFailures) {
  const std::string s =
      render_text({sample_report("a.good", 0.0), sample_report("b.bad", 1.0)});
  EXPECT_NE(s.find("FAIL b.bad"), std::string::npos);
  EXPECT_NE(s.find("1 hard failure(s)"), std::string::npos);
  // soft failures are labelled info, not FAIL
  const std::string soft = render_text({sample_report("c.soft", 1.0, /*hard=*/false)});
  EXPECT_NE(soft.find("info c.soft"), std::string::npos);
  EXPECT_NE(soft.find("0 hard failure(s)"), std::string::npos);
}

TEST(Emit, PhaseTableColumns) {
  PhaseTableRow row;
  row.d = 2;
  row.kappa = 1.0;
  row.p = "(1.41;-1)";
  row.q = "(1.41;1)";
  row.direction = "in";
  row.phase_re = -0.95;
  row.phase_im = 0.31;
  const std::string s = render_phase_csv({row});
  EXPECT_NE(s.find("d,m,kappa,p,q,direction,phase_re,phase_im,witness"), std::string::npos);
  EXPECT_NE(s.find("(1.41;-1)"), std::string::npos);
}

TEST(Emit, HardPassPredicate) {
  EXPECT_TRUE(all_hard_checks_pass({sample_report("a", 0.0), sample_report("b", 1.0, false)}));
  EXPECT_FALSE(all_hard_checks_pass({sample_report("a", 1.0)}));
}

TEST(Suites, UnknownNamesAreRejected) {
  EXPECT_THROW(suites::suite_from_string("bogus"), std::invalid_argument);
  EXPECT_THROW(format_from_string("bogus"), std::invalid_argument);
}

TEST(Suites, GeometryRunIsDeterministicPerSeed) {
  RunConfig cfg;
  cfg.seed = 123;
  const auto a = suites::run_suite(cfg, suites::Suite::Geometry);
  const auto b = suites::run_suite(cfg, suites::Suite::Geometry);
  EXPECT_EQ(render_json(a.reports), render_json(b.reports));
  cfg.seed = 124;
  const auto c = suites::run_suite(cfg, suites::Suite::Geometry);
  EXPECT_NE(render_json(a.reports), render_json(c.reports));
}

TEST(Suites, CheckIdsAreUniqueWithinFastSuites) {
  RunConfig cfg;
  std::set<std::string> seen;
  for (auto suite : {suites::Suite::Geometry, suites::Suite::Scattering, suites::Suite::Germ,
                     suites::Suite::Axioms}) {
    for (const auto& r : suites::run_suite(cfg, suite).reports)
      EXPECT_TRUE(seen.insert(r.check_id).second) << "duplicate id " << r.check_id;
  }
}

TEST(Suites, EveryVerificationCheckCarriesAClaimAnchor) {
  RunConfig cfg;
  for (auto suite : {suites::Suite::Geometry, suites::Suite::Scattering, suites::Suite::Germ}) {
    const auto result = suites::run_suite(cfg, suite);
    EXPECT_FALSE(result.reports.empty());
    for (const auto& r : result.reports) {
      EXPECT_FALSE(r.anchor.empty()) << r.check_id;
      EXPECT_FALSE(r.check_id.empty());
    }
  }
}

}  // namespace
