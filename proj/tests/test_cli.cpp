#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace {

struct RunOutput {
  int code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("QCONG_CLI");
  REQUIRE(p != nullptr);
  return p;
}

// Spawns the installed binary; stderr is folded into the captured stream so
// usage errors can be inspected alongside regular output.
RunOutput run(const std::vector<std::string>& args) {
  std::string cmd = cli_path();
  for (const auto& a : args) cmd += " '" + a + "'";
  cmd += " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunOutput r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("list prints every registry entry and exits cleanly") {
  RunOutput r = run({"list"});
  CHECK(r.code == 0);
  for (const char* id :
       {"S-FIRST-FULL", "S-QAB", "C-WITHB", "I-WATSON", "P-A2", "P-RAM5"})
    CHECK(r.out.find(id) != std::string::npos);
}

TEST_CASE("list --format json merges the three catalogs") {
  RunOutput r = run({"list", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_object());
  REQUIRE(j.contains("statements"));
  REQUIRE(j.contains("padic"));
  REQUIRE(j.contains("identities"));
  CHECK(j["statements"].size() >= 70);
  CHECK(j["padic"].size() >= 15);
  CHECK(j["identities"].size() >= 18);
  for (const char* key : {"statements", "padic", "identities"})
    for (const auto& e : j[key]) {
      REQUIRE(e.contains("id"));
      REQUIRE(e.contains("summary"));
    }
}

TEST_CASE("check exits 0 on pass and reports per-instance rows") {
  RunOutput r = run({"check", "S-FIRST-FULL", "--n", "3,5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n=3") != std::string::npos);
  CHECK(r.out.find("n=5") != std::string::npos);
  CHECK(r.out.find("total=2 pass=2 fail=0 skip=0") != std::string::npos);
}

TEST_CASE("inadmissible sizes are reported as skips, still exit 0") {
  RunOutput r = run({"check", "S-FIRST-FULL", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("skipped") != std::string::npos);
  CHECK(r.out.find("outside domain") != std::string::npos);
}

TEST_CASE("a failing check exits 1") {
  // The prime power here overshoots the stated modulus, so the valuation
  // check must come up short.
  RunOutput r = run({"padic", "P-A2", "--p", "5", "--power", "9"});
  CHECK(r.code == 1);
  CHECK(r.out.find("fail") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"check", "NO-SUCH-ID"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "S-FIRST-FULL", "--n", "bogus"}).code == 2);
  CHECK(run({"check", "S-FIRST-FULL", "--format", "yaml"}).code == 2);
  RunOutput r = run({});
  CHECK(r.code == 2);
  CHECK(r.out.find("usage:") != std::string::npos);
}

TEST_CASE("json reports follow the schema") {
  RunOutput r =
      run({"check", "S-FIRST-FULL", "--n", "3..5", "--format", "json",
           "--seed", "7"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["version"] == 1);
  CHECK(j["seed"] == 7);
  REQUIRE(j["results"].is_array());
  REQUIRE(j["results"].size() == 3);
  for (const auto& e : j["results"]) {
    REQUIRE(e.contains("id"));
    REQUIRE(e.contains("instance"));
    CHECK(e["instance"].contains("n"));
    CHECK(e["instance"].contains("p"));
    CHECK(e["instance"].contains("params"));
    REQUIRE(e.contains("modulus"));
    REQUIRE(e.contains("verdict"));
    REQUIRE(e["detail"].is_array());
    REQUIRE(e.contains("time_ms"));
    CHECK(e["time_ms"] == 0);  // deterministic unless --times is given
    for (const auto& d : e["detail"]) {
      CHECK(d.contains("factor"));
      CHECK(d.contains("required"));
      CHECK(d.contains("achieved"));
    }
  }
  // n=4 is outside the domain and must surface as a skip, not be dropped.
  CHECK(j["results"][1]["verdict"] == "skipped");
}

TEST_CASE("fixed seed reproduces byte-identical json") {
  std::vector<std::string> args = {"identity", "I-CORA2", "--points", "2",
                                   "--seed", "11", "--format", "json"};
  RunOutput a = run(args);
  RunOutput b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);

  // A different seed samples different points.
  std::vector<std::string> other = args;
  other[5] = "12";
  CHECK(run(other).out != a.out);
}

TEST_CASE("--out writes the same bytes the console run prints") {
  std::string path = "cli_out_test.json";
  std::remove(path.c_str());
  std::vector<std::string> args = {"check", "S-SECOND-HALF", "--n", "3,7",
                                   "--format", "json"};
  RunOutput console = run(args);
  std::vector<std::string> to_file = args;
  to_file.push_back("--out");
  to_file.push_back(path);
  RunOutput filed = run(to_file);
  CHECK(filed.code == console.code);
  CHECK(slurp(path) == console.out);
  std::remove(path.c_str());
}

TEST_CASE("scan tallies a conjecture without failing the process") {
  RunOutput r = run({"scan", "C-WITHB", "--n", "3..7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fail=0") != std::string::npos);
}

TEST_CASE("identity subcommand runs the exact path by default") {
  RunOutput r = run({"identity", "I-WATSON", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("exact (symbolic q)") != std::string::npos);
}

TEST_CASE("padic defaults cover the stated prime range") {
  RunOutput r = run({"padic", "P-RAM5", "--digits", "25"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digits=25") != std::string::npos);
}
