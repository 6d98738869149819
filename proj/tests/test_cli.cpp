// End-to-end runs of the command-line binary through a shell pipe. The binary
// path is injected by the build as VORTEXLAB_CLI_PATH.

#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs the binary with the given arguments; stderr is folded into the
// captured stream unless the caller redirects it.
CliResult run_cli(const std::string& args, bool merge_stderr = true) {
  const std::string cmd =
      std::string(VORTEXLAB_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) res.output.append(buf, got);
  const int status = ::pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("vortexlab_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("version and help") {
  const auto ver = run_cli("--version");
  CHECK(ver.exit_code == 0);
  CHECK(ver.output.find("0.1.0") != std::string::npos);

  const auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
  for (const char* sub : {"field", "evolve", "ring", "intersections", "spin", "moment", "verify"})
    CHECK_MESSAGE(help.output.find(sub) != std::string::npos, "missing subcommand ", sub);
}

TEST_CASE("a subcommand is mandatory") {
  const auto res = run_cli("");
  CHECK(res.exit_code == 2);
}

TEST_CASE("unknown flags are usage errors") {
  const auto res = run_cli("moment --no_such_flag 1");
  CHECK(res.exit_code == 2);
}

TEST_CASE("format values are restricted") {
  const auto res = run_cli("moment --format xml");
  CHECK(res.exit_code == 2);
}

TEST_CASE("moment reports the calculator family in json") {
  const auto res = run_cli("moment --format json", false);
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.output);
  CHECK(doc.at("meta").at("subcommand") == "moment");
  const auto& results = doc.at("meta").at("results");
  CHECK(std::abs(results.at("continued_fraction").get<double>() - (-9.2847674669599e-24)) <
        1e-33);
  CHECK(std::abs(results.at("schwinger").get<double>() - (-9.28478545630295e-24)) < 1e-33);
  CHECK(std::abs(results.at("sommerfield").get<double>() - (-9.28476904388646e-24)) < 1e-33);
  CHECK(results.at("limiting_index") == 6);
  // the data table is the level ledger, innermost first
  const auto& rows = doc.at("data").at("rows");
  REQUIRE(rows.size() == 10);
  CHECK(rows.front().at(0) == 18);
  CHECK(rows.back().at(0) == 1);
}

TEST_CASE("config files feed defaults and explicit flags win") {
  TempDir tmp;
  const fs::path cfg = tmp.path / "moment.json";
  std::ofstream(cfg) << R"({"max_factorial_arg": 6, "preset": "standard_tables"})";

  const auto from_cfg = run_cli("moment --format json --config " + cfg.string(), false);
  REQUIRE(from_cfg.exit_code == 0);
  const json doc1 = json::parse(from_cfg.output);
  CHECK(doc1.at("meta").at("parameters").at("max_factorial_arg") == 6);
  CHECK(std::abs(doc1.at("meta").at("results").at("continued_fraction").get<double>() -
                 (-9.28476339215924e-24)) < 1e-33);

  const auto overridden =
      run_cli("moment --format json --config " + cfg.string() + " --max_factorial_arg 18", false);
  REQUIRE(overridden.exit_code == 0);
  const json doc2 = json::parse(overridden.output);
  CHECK(doc2.at("meta").at("parameters").at("max_factorial_arg") == 18);
  CHECK(std::abs(doc2.at("meta").at("results").at("continued_fraction").get<double>() -
                 (-9.28476301453342e-24)) < 1e-33);
}

TEST_CASE("unknown config keys are rejected") {
  TempDir tmp;
  const fs::path cfg = tmp.path / "bad.json";
  std::ofstream(cfg) << R"({"no_such_key": 1})";
  const auto res = run_cli("moment --config " + cfg.string());
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("no_such_key") != std::string::npos);
}

TEST_CASE("field output is byte-stable across runs") {
  const std::string args = "field --kind vorticity --r_count 40 --t_count 5 --format csv";
  const auto a = run_cli(args, false);
  const auto b = run_cli(args, false);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  // csv body: header then data in fixed-width scientific notation
  CHECK(a.output.rfind("r,t,value", 0) == 0);
  CHECK(a.output.find("e+00") != std::string::npos);
}

TEST_CASE("both-field csv requires an output stem") {
  const auto res = run_cli("field --kind both --format csv --r_count 16 --t_count 3");
  CHECK(res.exit_code == 2);

  TempDir tmp;
  const std::string stem = (tmp.path / "f").string();
  const auto ok =
      run_cli("field --kind both --format csv --r_count 16 --t_count 3 --out " + stem);
  REQUIRE(ok.exit_code == 0);
  CHECK(fs::exists(stem + ".vorticity.csv"));
  CHECK(fs::exists(stem + ".speed.csv"));
  CHECK(fs::exists(stem + ".meta.json"));
}

TEST_CASE("csv file output writes a metadata sidecar") {
  TempDir tmp;
  const fs::path out = tmp.path / "ring.csv";
  const auto res = run_cli("ring --count 16 --format csv --out " + out.string());
  REQUIRE(res.exit_code == 0);
  REQUIRE(fs::exists(out));
  REQUIRE(fs::exists(out.string() + ".meta.json"));
  const json meta = json::parse(slurp(out.string() + ".meta.json"));
  CHECK(meta.at("meta").at("subcommand") == "ring");
  CHECK(meta.at("meta").at("classification").at("kind") == "n_associated");
  CHECK(meta.at("meta").at("classification").at("n") == 12);
  // data file: header plus sixteen sample rows
  const std::string csv = slurp(out);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
}

TEST_CASE("coincident loops in pair mode are a usage error") {
  const auto res = run_cli(
      "intersections --mode pair --a0 1 --b1 0 --omega0 1 --omega1 0.5 "
      "--a0_b 1 --b1_b 0 --omega0_b 1 --omega1_b 0.5");
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("coincide") != std::string::npos);
}

TEST_CASE("spin run reports the final state") {
  const auto res = run_cli("spin --drive constant --theta_z 0.5 --t1 3.14159265358979323846 "
                           "--steps 200 --format json",
                           false);
  REQUIRE(res.exit_code == 0);
  const json doc = json::parse(res.output);
  const auto& fin = doc.at("meta").at("final");
  // half-turn phase under a pure z drive: up acquires exp(-i pi/2) = -i
  CHECK(std::abs(fin.at("up_re").get<double>()) < 1e-9);
  CHECK(fin.at("up_im").get<double>() == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(std::abs(fin.at("norm").get<double>() - 1.0) < 1e-12);
}

TEST_CASE("verification sweep passes clean and fails when faulted") {
  const auto clean = run_cli("verify --format json", false);
  REQUIRE(clean.exit_code == 0);
  const json doc = json::parse(clean.output);
  CHECK(doc.at("meta").at("failures") == 0);
  const auto& checks = doc.at("data").at("checks");
  CHECK(checks.size() >= 25);
  for (const auto& c : checks) CHECK(c.at("status") == "pass");

  const auto faulted = run_cli("verify --inject_fault wall_constant --format json");
  CHECK(faulted.exit_code == 1);
  CHECK(faulted.output.find("wall_constant") != std::string::npos);
}
