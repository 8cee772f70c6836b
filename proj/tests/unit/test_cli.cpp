#include <filesystem>
#include <fstream>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "json.hpp"
#include "shs/cli/commands.hpp"
#include "shs/cli/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace shs::cli;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("shs_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

int run_args(std::vector<std::string> args, std::string* captured = nullptr) {
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (captured) *captured = out.str() + err.str();
  return code;
}

json strip_volatile(json j) {
  j["metadata"].erase("timestamp");
  for (auto& e : j["entries"]) e.erase("elapsed_ms");
  return j;
}

const char* kZeroConfig = R"({"n_modes": 32, "dt": 0.01, "t_end": 0.5, "n_grassmann": 2,
  "initial": {"u": [], "xi": []}})";

}  // namespace

TEST_CASE("verify all writes a passing report") {
  const fs::path dir = scratch("verify");
  std::ostringstream log;
  REQUIRE(cmd_verify({"all"}, (dir / "r.json").string(), log) == kSuccess);
  const json j = read_json(dir / "r.json");
  CHECK(j["kind"] == "verification");
  REQUIRE(j["entries"].size() == 10);
  for (const auto& e : j["entries"]) CHECK(e["verdict"] == "pass");
  CHECK(report_from_json(j).all_pass());
}

TEST_CASE("single suite and determinism") {
  const fs::path dir = scratch("susy");
  std::ostringstream log;
  REQUIRE(cmd_verify({"susy"}, (dir / "a.json").string(), log) == kSuccess);
  REQUIRE(cmd_verify({"susy,susy"}, (dir / "b.json").string(), log) == kSuccess);
  const json a = read_json(dir / "a.json");
  REQUIRE(a["entries"].size() == 1);
  CHECK(a["entries"][0]["check_id"] == "susy");
  CHECK(strip_volatile(a) == strip_volatile(read_json(dir / "b.json")));
}

TEST_CASE("unknown suite is a usage error") {
  std::string text;
  CHECK(run_args({"shs", "verify", "--suite", "bogus"}, &text) == kUsageError);
  CHECK(text.find("bogus") != std::string::npos);
  CHECK(run_args({"shs"}) == kUsageError);
  CHECK(run_args({"shs", "--help"}) == kSuccess);
}

TEST_CASE("report summarizes and propagates failures") {
  const fs::path dir = scratch("report");
  std::ostringstream log;
  REQUIRE(cmd_verify({"geodesic,lax"}, (dir / "r.json").string(), log) == kSuccess);
  std::ostringstream table;
  CHECK(cmd_report({(dir / "r.json").string()}, table) == kSuccess);
  CHECK(table.str().find("geodesic") != std::string::npos);
  CHECK(table.str().find("PASS") != std::string::npos);

  json bad = read_json(dir / "r.json");
  bad["entries"][1]["verdict"] = "fail";
  write(dir / "bad.json", bad.dump());
  std::ostringstream t2;
  CHECK(cmd_report({(dir / "bad.json").string()}, t2) == kCheckFailure);
  CHECK(t2.str().find("FAIL") != std::string::npos);

  std::ostringstream t3;
  CHECK(cmd_report({}, t3) == kUsageError);
  CHECK(cmd_report({(dir / "missing.json").string()}, t3) == kUsageError);
  write(dir / "junk.json", "{not json");
  CHECK(cmd_report({(dir / "junk.json").string()}, t3) == kUsageError);
}

TEST_CASE("simulate zero data") {
  const fs::path dir = scratch("sim_zero");
  write(dir / "c.json", kZeroConfig);
  std::ostringstream log;
  REQUIRE(cmd_simulate((dir / "c.json").string(), (dir / "out").string(), log) == kSuccess);
  for (const char* f : {"series.csv", "snapshot_initial.csv", "snapshot_final.csv", "summary.json"})
    CHECK(fs::exists(dir / "out" / f));
  const json s = read_json(dir / "out" / "summary.json");
  CHECK(s["status"] == "ok");
  for (const char* h : {"H1", "H2"})
    for (const auto& [level, d] : s["drifts"][h].items()) CHECK(d.get<double>() == 0.0);
  CHECK(s["residual_check"].get<double>() == 0.0);

  std::ostringstream table;
  CHECK(cmd_report({(dir / "out" / "summary.json").string(), (dir / "out" / "series.csv").string()}, table) ==
        kSuccess);
  CHECK(table.str().find("series") != std::string::npos);
}

TEST_CASE("simulate error paths") {
  const fs::path dir = scratch("sim_err");
  std::ostringstream log;
  CHECK(cmd_simulate((dir / "none.json").string(), (dir / "out").string(), log) == kUsageError);
  write(dir / "bad.json", R"({"n_modes": 100, "dt": 0.01, "t_end": 1, "initial": {"u": [], "xi": []}})");
  CHECK(cmd_simulate((dir / "bad.json").string(), (dir / "out").string(), log) == kUsageError);

  write(dir / "huge.json", R"({"n_modes": 64, "dt": 5.0, "t_end": 100, "n_grassmann": 0,
    "initial": {"u": [{"level": "1", "modes": [{"k": 3, "cos": 2.0, "sin": 0.0}]}], "xi": []}})");
  CHECK(cmd_simulate((dir / "huge.json").string(), (dir / "out").string(), log) == kBlowUp);
  const json s = read_json(dir / "out" / "summary.json");
  CHECK(s["status"] == "blowup");
  CHECK_FALSE(s["diagnostic"].get<std::string>().empty());
  std::ostringstream table;
  CHECK(cmd_report({(dir / "out" / "summary.json").string()}, table) == kCheckFailure);
}

TEST_CASE("fnv1a matches reference values") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
