// Exercises the installed binary end to end; the binary path arrives as the
// first non-doctest argument.
#define DOCTEST_CONFIG_IMPLEMENT
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

std::string g_cli_path;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = g_cli_path + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("count subcommand") {
  const auto zero = run_cli("count --x1 0 --x2 0 --a 0 --b 0.5 --c 0.5 --T 10");
  CHECK(zero.exit_code == 0);
  CHECK(zero.output == "0\n");

  const auto invalid = run_cli("count --x1 0 --x2 0 --a 0.5 --b 0.5 --c 0.5 --T 10");
  CHECK(invalid.exit_code == 2);
  CHECK(invalid.output.find("a < b") != std::string::npos);

  const auto cross =
      run_cli("count --x1 0.366025403784 --x2 0.732050807568 --a 0 --b 0.3 --c 0.5 "
              "--T 10000 --lattice");
  CHECK(cross.exit_code == 0);
  CHECK(cross.output.find("MATCH") != std::string::npos);
}

TEST_CASE("volume subcommand") {
  const auto degenerate = run_cli("volume --a 0.3 --b 0.3 --c 0.5 --T 100");
  CHECK(degenerate.exit_code == 0);
  CHECK(degenerate.output.rfind("0\n", 0) == 0);
  const auto regular = run_cli("volume --a 0.1 --b 0.5 --c 0.5 --T 100");
  CHECK(regular.exit_code == 0);
  CHECK(regular.output.find("main_terms") != std::string::npos);
}

TEST_CASE("variance subcommand") {
  const auto v = run_cli("variance --pq-cutoff 50 --variant all_pairs");
  CHECK(v.exit_code == 0);
  CHECK(v.output.find("value ") != std::string::npos);
  CHECK(v.output.find("tail_bound") != std::string::npos);
  const auto bad = run_cli("variance --variant bogus");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("clt subcommand writes artifacts") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "multclt_cli_test";
  fs::remove_all(dir);
  const fs::path cfg_path = dir / "run.json";
  fs::create_directories(dir);
  {
    std::ofstream cfg(cfg_path);
    cfg << "{\"a\":0,\"b\":0.3,\"c\":0.5,\"T\":500,\"samples\":150,\"seed\":42,"
           "\"sigma_variant\":\"zeta_weighted\"}\n";
  }
  const auto run = run_cli("clt --config " + cfg_path.string() + " --out " +
                           (dir / "out").string());
  CHECK(run.exit_code == 0);
  CHECK(fs::exists(dir / "out" / "records.jsonl"));
  CHECK(fs::exists(dir / "out" / "summary.csv"));
  CHECK(fs::exists(dir / "out" / "hist.svg"));
  CHECK(fs::exists(dir / "out" / "config.json"));
  const auto rerun = run_cli("clt --config " + cfg_path.string() + " --out " +
                             (dir / "out2").string() + " --threads 3");
  CHECK(rerun.exit_code == 0);
  std::ifstream f1(dir / "out" / "records.jsonl"), f2(dir / "out2" / "records.jsonl");
  const std::string s1((std::istreambuf_iterator<char>(f1)),
                       std::istreambuf_iterator<char>());
  const std::string s2((std::istreambuf_iterator<char>(f2)),
                       std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
  fs::remove_all(dir);
}

TEST_CASE("probe and smallprod subcommands") {
  const auto probe = run_cli("probe --samples 300 --seed 5 --tb1 2 --tb2 2");
  CHECK(probe.exit_code == 0);
  CHECK(probe.output.find("covariance") != std::string::npos);
  const auto sp = run_cli("smallprod --K 6 --T 2000 5000 --samples 40 --seed 5");
  CHECK(sp.exit_code == 0);
  const auto sp_bad = run_cli("smallprod --K 1.2 --T 2000 --samples 10 --seed 5");
  CHECK(sp_bad.exit_code == 2);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-multclt-binary> [doctest args]\n");
    return 1;
  }
  g_cli_path = argv[1];
  doctest::Context ctx(argc - 1, argv + 1);
  return ctx.run();
}
