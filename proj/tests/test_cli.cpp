#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string cli_path() {
  const char* p = std::getenv("STANDBY_CLI");
  REQUIRE_MESSAGE(p != nullptr, "STANDBY_CLI must point at the standby binary");
  return p;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("standby_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing output file " << path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run(const std::string& args) {
  const int status = std::system((cli_path() + " " + args + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

const char* kTwoExpConfig = R"({
  "components": [
    {"family": "exponential", "params": {"rate": 2.0}},
    {"family": "exponential", "params": {"rate": 1.0}}
  ],
  "wear": {"kind": "linear", "w": 0.5},
  "convention": "virtual_age",
  "plans": [[1, 2], [2, 1]],
  "replications": 20000,
  "seed": 42
})";

}  // namespace

TEST_CASE("compare reports the coupled estimate near the exponential oracle") {
  const fs::path dir = fresh_dir("compare");
  write_file(dir / "config.json", kTwoExpConfig);
  const int rc = run("compare --config " + (dir / "config.json").string() +
                     " --no-timestamp --out " + dir.string());
  CHECK(rc == 0);
  const json j = json::parse(read_file(dir / "compare.json"));
  CHECK(j["plan_a"] == "1-2");
  CHECK(j["plan_b"] == "2-1");
  CHECK(j["ci_low"].get<double>() <= 2.0 / 3.0);
  CHECK(2.0 / 3.0 <= j["ci_high"].get<double>());
}

TEST_CASE("outputs are byte-identical across reruns and thread counts") {
  const fs::path a = fresh_dir("repro_a");
  const fs::path b = fresh_dir("repro_b");
  const fs::path c = fresh_dir("repro_c");
  write_file(a / "config.json", kTwoExpConfig);
  CHECK(run("compare --config " + (a / "config.json").string() + " --no-timestamp --out " +
            a.string() + " --threads 1") == 0);
  CHECK(run("compare --config " + (a / "config.json").string() + " --no-timestamp --out " +
            b.string() + " --threads 1") == 0);
  CHECK(run("compare --config " + (a / "config.json").string() + " --no-timestamp --out " +
            c.string() + " --threads 8") == 0);
  const std::string ref = read_file(a / "compare.json");
  CHECK(ref == read_file(b / "compare.json"));
  CHECK(ref == read_file(c / "compare.json"));
}

TEST_CASE("simulate writes the deterministic timeline and histogram") {
  const fs::path dir = fresh_dir("simulate");
  write_file(dir / "config.json", R"({
    "components": [
      {"family": "deterministic", "params": {"value": 1.0}},
      {"family": "deterministic", "params": {"value": 2.0}}
    ],
    "wear": {"kind": "linear", "w": 0.5},
    "plans": "ascending",
    "replications": 1,
    "seed": 1
  })");
  CHECK(run("simulate --config " + (dir / "config.json").string() + " --no-timestamp --out " +
            dir.string()) == 0);
  const std::string timeline = read_file(dir / "timeline_1.csv");
  CHECK(timeline.rfind("clock_time,component,event_kind\n", 0) == 0);
  CHECK(timeline.find("2.5,2,active_failure") != std::string::npos);
  const std::string hist = read_file(dir / "histogram.csv");
  CHECK(hist.rfind("bin_left,bin_right,count\n", 0) == 0);
}

TEST_CASE("verify passes on the exponential reference campaign") {
  const fs::path dir = fresh_dir("verify");
  write_file(dir / "config.json", kTwoExpConfig);
  CHECK(run("verify --config " + (dir / "config.json").string() + " --no-timestamp --out " +
            dir.string()) == 0);
  const json report = json::parse(read_file(dir / "verify_report.json"));
  CHECK(report["overall"] == "pass");
  bool saw_coupled = false;
  for (const auto& check : report["checks"]) {
    CHECK(check["status"] != "fail");
    if (check["name"] == "theorem1_distributional") {
      saw_coupled = true;
      const double p = check["details"]["p_hat"].get<double>();
      CHECK(p > 0.6);
      CHECK(p < 0.73);
    }
  }
  CHECK(saw_coupled);
}

TEST_CASE("counterexample finds a witness for square wear and none for log wear") {
  const fs::path dir = fresh_dir("counterexample");
  write_file(dir / "square.json", R"({
    "wear": {"kind": "power", "c": 1.0, "p": 2.0},
    "range": [0.0, 4.0],
    "samples": 10000,
    "seed": 7
  })");
  CHECK(run("counterexample --config " + (dir / "square.json").string() +
            " --no-timestamp --out " + dir.string()) == 0);
  const json found = json::parse(read_file(dir / "counterexample.json"));
  CHECK(found["found"] == true);
  CHECK(found["t1"].get<double>() < found["t2"].get<double>());

  write_file(dir / "log.json", R"({
    "wear": {"kind": "log", "a": 1.0},
    "range": [0.0, 1.0],
    "samples": 10000,
    "seed": 7
  })");
  CHECK(run("counterexample --config " + (dir / "log.json").string() +
            " --no-timestamp --out " + dir.string()) == 0);
  CHECK(json::parse(read_file(dir / "counterexample.json"))["found"] == false);
}

TEST_CASE("optimize emits the ranking csv") {
  const fs::path dir = fresh_dir("optimize");
  write_file(dir / "config.json", R"({
    "components": [
      {"family": "deterministic", "params": {"value": 3.0}},
      {"family": "deterministic", "params": {"value": 1.0}},
      {"family": "deterministic", "params": {"value": 2.0}}
    ],
    "wear": {"kind": "linear", "w": 0.5},
    "plans": "all",
    "replications": 1,
    "seed": 1
  })");
  CHECK(run("optimize --config " + (dir / "config.json").string() + " --no-timestamp --out " +
            dir.string()) == 0);
  const std::string ranking = read_file(dir / "ranking.csv");
  CHECK(ranking.rfind("plan,lifetime,rank\n", 0) == 0);
  CHECK(ranking.find("2-3-1,4.25,1") != std::string::npos);
  const std::string wins = read_file(dir / "sp_wins.csv");
  CHECK(wins.rfind("plan,win_fraction\n", 0) == 0);
}

TEST_CASE("config errors exit with code 2 and name the field") {
  const fs::path dir = fresh_dir("errors");
  write_file(dir / "bad_json.json", "{ not json");
  CHECK(run("simulate --config " + (dir / "bad_json.json").string()) == 2);

  write_file(dir / "unknown_key.json", R"({
    "components": [{"family": "exponential", "params": {"rate": 1.0}}],
    "wear": {"kind": "linear", "w": 0.5},
    "typo_key": 1
  })");
  CHECK(run("simulate --config " + (dir / "unknown_key.json").string()) == 2);

  // Per-component wear is rejected: components accept only family/params.
  write_file(dir / "per_component_wear.json", R"({
    "components": [{"family": "exponential", "params": {"rate": 1.0},
                    "wear": {"kind": "linear", "w": 0.2}}],
    "wear": {"kind": "linear", "w": 0.5}
  })");
  CHECK(run("simulate --config " + (dir / "per_component_wear.json").string()) == 2);

  write_file(dir / "missing.json", "{}");
  CHECK(run("simulate --config " + (dir / "missing.json").string()) == 2);

  // Brute-force guard: n = 11 components.
  std::string big = R"({"components": [)";
  for (int i = 0; i < 11; ++i) {
    if (i) big += ",";
    big += R"({"family": "exponential", "params": {"rate": 1.0}})";
  }
  big += R"(], "wear": {"kind": "linear", "w": 0.5}, "plans": "all"})";
  write_file(dir / "too_big.json", big);
  CHECK(run("optimize --config " + (dir / "too_big.json").string()) == 2);

  CHECK(run("simulate --config " + (dir / "does_not_exist.json").string()) == 2);
}
