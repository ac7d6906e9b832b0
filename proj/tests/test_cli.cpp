// End-to-end CLI runs through run_cli: exit codes, JSON shape, determinism
// modulo timing, the CSV format and the output-directory override.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "envsieve/cli.hpp"

using namespace envsieve;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("envsieve_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

json read_json(const fs::path& p) {
  std::ifstream f(p);
  REQUIRE(f.good());
  return json::parse(f);
}

json strip_timing(json doc) {
  for (auto& rep : doc["reports"]) rep["elapsed_ms"] = 0;
  return doc;
}

}  // namespace

TEST_CASE("envelope subcommand dumps exact tables") {
  TempDir tmp;
  const auto out = tmp.path / "env.json";
  const int rc = run_cli({"envelope", "--z", "3", "--nmax", "50", "--out", out.string()});
  CHECK(rc == 0);
  const auto doc = read_json(out);
  CHECK(doc["subcommand"] == "envelope");
  CHECK(doc["g_total"] == "5/2");
  CHECK(doc["lambda"]["1"] == "1");
  CHECK(doc["lambda"]["2"] == "-4/5");
  CHECK(doc["lambda"]["3"] == "-3/5");
  CHECK(doc["weights"]["1"] == "2/5");
  CHECK(doc["weights"]["2"] == "-8/25");
  CHECK(doc["weights"]["3"] == "-3/25");
  CHECK(doc["weights"]["6"] == "4/25");
  REQUIRE(doc["reports"].size() == 1);
  CHECK(doc["reports"][0]["pass"] == true);
  CHECK(doc["reports"][0]["theorem"] == "envelope_check");
}

TEST_CASE("farey subcommand lists the fractions in order") {
  TempDir tmp;
  const auto out = tmp.path / "farey.json";
  const int rc = run_cli({"farey", "--Q0", "3", "--out", out.string()});
  CHECK(rc == 0);
  const auto doc = read_json(out);
  const std::vector<std::string> want{"1/3", "1/2", "2/3", "1/1"};
  REQUIRE(doc["fractions"].size() == 4);
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(doc["fractions"][i] == want[i]);
  CHECK(doc["reports"][0]["theorem"] == "farey_invariants");
  CHECK(doc["reports"][0]["pass"] == true);
}

TEST_CASE("moments subcommand reports Parseval agreement") {
  TempDir tmp;
  const auto out = tmp.path / "mom.json";
  const int rc = run_cli({"moments", "--N", "100", "--ell", "2", "--out", out.string()});
  CHECK(rc == 0);
  const auto doc = read_json(out);
  CHECK(doc["reports"][0]["theorem"] == "moment_parseval");
  CHECK(doc["reports"][0]["pass"] == true);
  CHECK(doc["moment"]["value"] == doctest::Approx(25.0).epsilon(1e-9));  // pi(100)
}

TEST_CASE("verify subcommand runs a sweep and succeeds") {
  TempDir tmp;
  const auto out = tmp.path / "ver.json";
  const int rc = run_cli({"verify", "--theorem", "wellspaced_l2", "--trials", "3",
                          "--seed", "9", "--nmax", "2000", "--points", "20",
                          "--out", out.string()});
  CHECK(rc == 0);
  const auto doc = read_json(out);
  CHECK(doc["config"]["theorem"] == "wellspaced_l2");
  REQUIRE(doc["reports"].size() == 3);
  for (const auto& rep : doc["reports"]) CHECK(rep["pass"] == true);
  CHECK(doc["failures"] == 0);
}

TEST_CASE("alias names are accepted and canonicalized") {
  TempDir tmp;
  const auto out = tmp.path / "alias.json";
  const int rc = run_cli({"verify", "--theorem", "extensionprecise", "--trials", "1",
                          "--seed", "4", "--nmax", "1500", "--points", "10",
                          "--out", out.string()});
  CHECK(rc == 0);
  const auto doc = read_json(out);
  CHECK(doc["config"]["theorem"] == "wellspaced_l2");
  CHECK(doc["reports"][0]["theorem"] == "wellspaced_l2");
}

TEST_CASE("exit codes: usage 2, hypothesis 2, pass 0") {
  TempDir tmp;
  const auto out = (tmp.path / "x.json").string();
  CHECK(run_cli({"verify", "--theorem", "bogus", "--out", out}) == 2);
  CHECK(run_cli({"verify", "--theorem", "wellspaced_l2", "--N", "999", "--trials",
                 "1", "--out", out}) == 2);
  CHECK(run_cli({"moments", "--N", "10", "--ell", "1.2", "--out", out}) == 2);
  CHECK(run_cli({"farey", "--Q0", "1", "--out", out}) == 2);
  CHECK(run_cli({"nonsense"}) == 2);
  CHECK(run_cli({}) == 2);
}

TEST_CASE("same argv and seed give byte-identical payloads modulo timing") {
  TempDir tmp;
  const auto out1 = tmp.path / "a.json";
  const auto out2 = tmp.path / "b.json";
  const std::vector<std::string> base{"verify", "--theorem", "moment_bound",
                                      "--trials", "2",      "--seed",
                                      "77",     "--nmax",   "2500",
                                      "--points", "15"};
  auto argv1 = base;
  argv1.push_back("--out");
  argv1.push_back(out1.string());
  auto argv2 = base;
  argv2.push_back("--out");
  argv2.push_back(out2.string());
  REQUIRE(run_cli(argv1) == 0);
  REQUIRE(run_cli(argv2) == 0);
  auto doc1 = strip_timing(read_json(out1));
  auto doc2 = strip_timing(read_json(out2));
  doc1["config"]["out"] = "";
  doc2["config"]["out"] = "";
  CHECK(doc1.dump() == doc2.dump());
}

TEST_CASE("csv output carries the config echo and the column header") {
  TempDir tmp;
  const auto out = tmp.path / "lem.csv";
  const int rc = run_cli({"moments", "--N", "50", "--ell", "2", "--format", "csv",
                          "--out", out.string()});
  CHECK(rc == 0);
  std::ifstream f(out);
  std::string line1, line2;
  std::getline(f, line1);
  std::getline(f, line2);
  CHECK(line1.rfind("# config", 0) == 0);
  CHECK(line2 == "theorem,params,lhs,rhs,ratio,pass,seed,elapsed_ms");
  CHECK(run_cli({"moments", "--N", "50", "--ell", "2", "--format", "yaml",
                 "--out", out.string()}) == 2);
}

TEST_CASE("ENVSIEVE_OUT_DIR prefixes relative output paths") {
  TempDir tmp;
  ::setenv("ENVSIEVE_OUT_DIR", tmp.path.string().c_str(), 1);
  const int rc = run_cli({"farey", "--Q0", "5", "--out", "reldir.json"});
  ::unsetenv("ENVSIEVE_OUT_DIR");
  CHECK(rc == 0);
  CHECK(fs::exists(tmp.path / "reldir.json"));
}
