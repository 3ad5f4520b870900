#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "json.hpp"
#include "qdual/engine.hpp"
#include "qdual/sampling.hpp"

using namespace qdual;
using nlohmann::json;

namespace {

RunConfig base_cfg() {
  RunConfig cfg;
  cfg.n = 3;
  cfg.r = 2;
  cfg.d = 2;
  cfg.l = 0;
  cfg.trials = 6;
  cfg.field = "fp61";
  cfg.seed = 42;
  cfg.no_timing = true;
  return cfg;
}

}  // namespace

TEST_CASE("run_verify passes across regimes and fields") {
  auto cfg = base_cfg();
  auto rep = run_verify(cfg);
  CHECK(rep.all_passed());
  CHECK(rep.case_.regime == "interior");
  CHECK(rep.trials == 6);
  CHECK(rep.passed == 6);

  cfg.l = 1;  // upper boundary for (3,2)
  CHECK(run_verify(cfg).all_passed());
  cfg.l = -2;  // lower boundary
  CHECK(run_verify(cfg).all_passed());
  cfg.field = "rational";
  cfg.l = 0;
  CHECK(run_verify(cfg).all_passed());
  cfg.field = "fp:97";
  CHECK(run_verify(cfg).all_passed());
}

TEST_CASE("run_verify rejects out-of-range levels with the window in the message") {
  auto cfg = base_cfg();
  cfg.l = 5;
  try {
    run_verify(cfg);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    std::string msg = e.what();
    CHECK(msg.find("1-r <= l <= n-r-1") != std::string::npos);
    CHECK(msg.find("l = -r = -2") != std::string::npos);
    CHECK(msg.find("l = n-r = 1") != std::string::npos);
  }
  cfg.l = 0;
  cfg.r = 3;  // r = n
  CHECK_THROWS_AS(run_verify(cfg), ConfigError);
  cfg.r = 2;
  cfg.field = "floaty";
  CHECK_THROWS_AS(run_verify(cfg), ConfigError);
}

TEST_CASE("reports are byte-identical for a fixed config and seed") {
  auto cfg = base_cfg();
  auto a = report_to_json_string(run_verify(cfg));
  auto b = report_to_json_string(run_verify(cfg));
  CHECK(a == b);

  // verdict fields are identical at any parallelism
  cfg.jobs = 4;
  auto c = run_verify(cfg);
  auto d = run_verify(base_cfg());
  CHECK(c.passed == d.passed);
  CHECK(c.trials == d.trials);
  CHECK(c.failures.size() == d.failures.size());
  CHECK(report_to_json_string(c) == report_to_json_string(d));
}

TEST_CASE("sweep covers exactly the level window [-r, n-r]") {
  RunConfig cfg;
  cfg.n_max = 2;
  cfg.d_max = 1;
  cfg.trials = 3;
  cfg.field = "fp61";
  cfg.seed = 7;
  cfg.no_timing = true;
  auto reports = run_sweep(cfg);
  // n=2, r=1: l in {-1, 0, 1}, d in {0, 1}
  CHECK(reports.size() == 6);
  std::set<int> levels;
  for (const auto& r : reports) {
    CHECK(r.all_passed());
    levels.insert(r.case_.l);
  }
  CHECK(levels == std::set<int>{-1, 0, 1});

  cfg.n_max = 3;
  cfg.d_max = 0;  // every check trivially 1 = 1
  for (const auto& r : run_sweep(cfg)) CHECK(r.all_passed());
}

TEST_CASE("run_residue exact and numeric paths") {
  RunConfig cfg;
  cfg.n = 3;
  cfg.r = 2;
  cfg.d = 2;
  cfg.l = 0;
  cfg.trials = 4;
  cfg.field = "rational";
  cfg.seed = 11;
  cfg.no_timing = true;
  auto rep = run_residue(cfg);
  CHECK(rep.all_passed());
  CHECK_FALSE(rep.numeric.has_value());

  cfg.numeric = true;
  cfg.grid = 256;
  auto repn = run_residue(cfg);
  CHECK(repn.all_passed());
  REQUIRE(repn.numeric.has_value());
  CHECK(repn.numeric->rel_err < 1e-8);
  CHECK(repn.trials == 5);  // numeric counts as one extra check

  cfg.d = 4;
  CHECK_THROWS_AS(run_residue(cfg), ConfigError);
  cfg.d = 2;
  cfg.grid = 100;
  CHECK_THROWS_AS(run_residue(cfg), ConfigError);
}

TEST_CASE("run_unity and run_ifunction") {
  RunConfig cfg;
  cfg.n = 3;
  cfg.d = 3;
  cfg.trials = 5;
  cfg.field = "rational";
  cfg.no_timing = true;
  CHECK(run_unity(cfg).all_passed());
  cfg.n = 4;
  CHECK_THROWS_AS(run_unity(cfg), ConfigError);

  RunConfig ic;
  ic.n = 4;
  ic.r = 2;
  ic.d = 2;
  ic.l = -2;  // lower boundary
  ic.trials = 3;
  ic.field = "fp61";
  ic.no_timing = true;
  CHECK(run_ifunction(ic).all_passed());
  ic.l = 9;
  CHECK_THROWS_AS(run_ifunction(ic), ConfigError);
}

TEST_CASE("JSON report schema") {
  auto cfg = base_cfg();
  auto rep = run_verify(cfg);
  json j = json::parse(report_to_json_string(rep));
  REQUIRE(j.contains("case"));
  CHECK(j["case"]["n"].is_number_integer());
  CHECK(j["case"]["r"].is_number_integer());
  CHECK(j["case"]["d"].is_number_integer());
  CHECK(j["case"]["l"].is_number_integer());
  CHECK(j["case"]["regime"].is_string());
  CHECK(j["field"] == "fp61");
  CHECK(j["seed"] == 42);
  CHECK(j["trials"].is_number_integer());
  CHECK(j["passed"].is_number_integer());
  CHECK(j["failures"].is_array());
  CHECK(j["failures"].empty());
  CHECK(j["elapsed_ms"].is_number_integer());

  // failure witness shape, via a hand-built report
  VerificationReport fr;
  fr.case_ = {2, 1, 1, 1, "upper_boundary"};
  fr.field = "rational";
  fr.seed = 1;
  fr.trials = 1;
  fr.passed = 0;
  fr.failures.push_back({{"1/2", {"2", "3"}}, "6", "18", ""});
  json fj = json::parse(report_to_json_string(fr));
  REQUIRE(fj["failures"].size() == 1);
  CHECK(fj["failures"][0]["point"]["q"] == "1/2");
  CHECK(fj["failures"][0]["point"]["x"] == json::array({"2", "3"}));
  CHECK(fj["failures"][0]["lhs"] == "6");
  CHECK(fj["failures"][0]["rhs"] == "18");

  // invariant: failures nonempty iff passed < trials
  CHECK_FALSE(fr.all_passed());
  json arr = json::parse(reports_to_json_string({rep, rep}));
  CHECK(arr.is_array());
  CHECK(arr.size() == 2);
}

TEST_CASE("derived trial seeds are stable") {
  CHECK(derive_seed(42, 0) == derive_seed(42, 0));
  CHECK(derive_seed(42, 0) != derive_seed(42, 1));
  CHECK(derive_seed(42, 1) != derive_seed(43, 1));
}
