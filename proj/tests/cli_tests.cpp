// End-to-end tests for the command-line binary, driven over popen.  The
// binary path comes from RELCOMM_CLI (ctest sets it); default build/relcomm
// relative to the repo root.
//
// Exit codes 0 (success/agreement) and 2 (input error) are covered here.
// Exit 1 is reserved for a sweep that finds a counterexample to one of the
// verified theorems, so no valid input can trigger it; the mapping is a
// one-liner on SweepReport::all_agree.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

std::string cli_path() {
  const char* env = std::getenv("RELCOMM_CLI");
  return env ? env : "build/relcomm";
}

struct RunResult {
  int exit;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = true) {
  std::string cmd = cli_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("cli worked examples") {
  RunResult r = run(
      "commutator --algebra s3.tbl --M A3 --N A3 --variety Ab --method words "
      "--format json --no-timing");
  CHECK(r.exit == 0);
  json j = json::parse(r.out);
  CHECK(j["command"] == "commutator");
  CHECK(j["results"]["methods"][0]["members"] == json::array({0}));
  CHECK(j["results"]["agree"] == true);

  r = run("reflect --algebra l5.tbl --variety Gp --no-timing");
  CHECK(r.exit == 0);
  CHECK(r.out.find("group 1") != std::string::npos);

  r = run("sweep-thm42 --max-order 5 --no-timing");
  CHECK(r.exit == 0);
  CHECK(r.out.find("all agree") != std::string::npos);
}

TEST_CASE("cli queries across the command set") {
  RunResult r = run("validate --algebra q8 --format json --no-timing");
  CHECK(r.exit == 0);
  json j = json::parse(r.out);
  CHECK(j["results"]["order"] == 8);
  CHECK(j["results"]["associative"] == true);
  CHECK(j["inputs"]["algebra"]["source"] == "bundled");

  r = run("validate --algebra loop5_7 --no-timing");
  CHECK(r.exit == 0);
  CHECK(r.out.find("nonassociative") != std::string::npos);
  CHECK(r.out.find("generated") != std::string::npos);

  r = run("verbal --algebra d4 --variety Ab --format json --no-timing");
  CHECK(r.exit == 0);
  j = json::parse(r.out);
  CHECK(j["results"]["members"] == json::array({0, 2}));

  r = run("central --algebra q8 --K 2 --variety Ab --format json --no-timing");
  CHECK(r.exit == 0);
  j = json::parse(r.out);
  CHECK(j["results"]["central"] == true);
  CHECK(j["results"]["relative_commutator"] == json::array({0}));

  r = run("centralise --algebra d4 --K full --variety Ab --format json --no-timing");
  CHECK(r.exit == 0);
  j = json::parse(r.out);
  CHECK(j["results"]["order"] == 4);
  CHECK(j["results"]["relative_commutator"] == json::array({0, 2}));

  // A verdict query reports its answer and exits 0 either way.
  r = run("double-central --algebra s3 --M full --N full --variety Ab "
          "--format json --no-timing");
  CHECK(r.exit == 0);
  j = json::parse(r.out);
  CHECK(j["results"]["double_central"] == false);
  CHECK(j["diagnostics"]["four_square_checks"] ==
        4 * j["diagnostics"]["four_square_calls"].get<int>());

  r = run("sweep-thm31 --algebra s3 --variety Ab --format json --no-timing");
  CHECK(r.exit == 0);
  j = json::parse(r.out);
  CHECK(j["results"]["pairs"] == 9);
  CHECK(j["results"]["all_agree"] == true);
}

TEST_CASE("cli loop enumeration reports true counts") {
  RunResult r = run("gen-loops --order 4 --format json --no-timing");
  CHECK(r.exit == 0);
  json j = json::parse(r.out);
  CHECK(j["results"]["count"] == 4);
  CHECK(j["results"]["nonassociative"] == 0);
  CHECK(j["results"]["associative"] == 4);

  r = run("gen-loops --order 5 --format json --no-timing");
  CHECK(r.exit == 0);
  j = json::parse(r.out);
  CHECK(j["results"]["count"] == 56);
  int nonassoc = j["results"]["nonassociative"].get<int>();
  CHECK(nonassoc > 0);
  CHECK(j["results"]["associative"] == 56 - nonassoc);

  r = run("gen-loops --order 3 --tables --format json --no-timing");
  CHECK(r.exit == 0);
  j = json::parse(r.out);
  CHECK(j["results"]["loops"].size() == 1);
  CHECK(j["results"]["loops"][0]["id"] == "loop3_0");
}

TEST_CASE("cli json reports are deterministic") {
  const std::string cmd =
      "commutator --algebra a4 --M 3 --N full --variety Ab --format json "
      "--no-timing";
  RunResult a = run(cmd, false);
  RunResult b = run(cmd, false);
  CHECK(a.exit == 0);
  CHECK(a.out == b.out);
  // Keys of the envelope are emitted in sorted order.
  json j = json::parse(a.out);
  std::size_t pc = a.out.find("\"command\"");
  std::size_t pd = a.out.find("\"diagnostics\"");
  std::size_t pi = a.out.find("\"inputs\"");
  std::size_t pr = a.out.find("\"results\"");
  CHECK(pc < pd);
  CHECK(pd < pi);
  CHECK(pi < pr);
  // Timing is present exactly when not suppressed.
  CHECK(!j.contains("timing"));
  RunResult timed = run(
      "commutator --algebra a4 --M 3 --N full --variety Ab --format json",
      false);
  CHECK(json::parse(timed.out).contains("timing"));
}

TEST_CASE("cli accepts user varieties from word files") {
  write_file("/tmp/cli_ab.var",
             "# derived commutator word\n"
             "group\n"
             "(mul (mul x y) (inv (mul y x)))\n");
  RunResult r =
      run("verbal --algebra s3 --variety /tmp/cli_ab.var --format json "
          "--no-timing");
  CHECK(r.exit == 0);
  json j = json::parse(r.out);
  CHECK(j["results"]["members"] == json::array({0, 3, 4}));
  CHECK(j["inputs"]["variety"] == "cli_ab");

  write_file("/tmp/cli_assoc.var",
             "loop\n"
             "(rdiv (mul (mul x y) z) (mul x (mul y z)))\n");
  r = run("verbal --algebra l5 --variety /tmp/cli_assoc.var --format json "
          "--no-timing");
  CHECK(r.exit == 0);
  j = json::parse(r.out);
  CHECK(j["results"]["members"] == json::array({0, 1, 2, 3, 4}));

  write_file("/tmp/cli_bad.var", "(mul x y)\n");
  r = run("verbal --algebra s3 --variety /tmp/cli_bad.var --no-timing");
  CHECK(r.exit == 2);
  CHECK(r.out.find("kind header") != std::string::npos);
}

TEST_CASE("cli input errors exit 2 with diagnostics") {
  RunResult r = run("validate --algebra nowhere");
  CHECK(r.exit == 2);
  CHECK(r.out.find("unknown algebra") != std::string::npos);

  r = run("verbal --algebra s3 --variety Frobnicate");
  CHECK(r.exit == 2);
  CHECK(r.out.find("unknown variety") != std::string::npos);
  CHECK(r.out.find("Ab") != std::string::npos);

  r = run("commutator --algebra s3 --M 9 --N full --variety Ab");
  CHECK(r.exit == 2);
  CHECK(r.out.find("--M") != std::string::npos);

  write_file("/tmp/cli_bad.tbl", "group 2\n0 1\n1\n");
  r = run("validate --algebra /tmp/cli_bad.tbl");
  CHECK(r.exit == 2);
  CHECK(r.out.find("line 3") != std::string::npos);

  write_file("/tmp/cli_nounit.tbl", "group 2\n1 0\n0 1\n");
  r = run("validate --algebra /tmp/cli_nounit.tbl");
  CHECK(r.exit == 2);

  // Missing required flags are caught by the option parser.
  r = run("commutator --algebra s3 --variety Ab");
  CHECK(r.exit == 2);

  // A tiny budget aborts instead of computing a partial answer.
  r = run("commutator --algebra a4 --M full --N full --variety Ab "
          "--method words --budget 10");
  CHECK(r.exit == 2);
  CHECK(r.out.find("budget") != std::string::npos);
}

TEST_CASE("cli refuses homology requests with a documented message") {
  RunResult r = run("hopf");
  CHECK(r.exit == 2);
  CHECK(r.out.find("out of scope") != std::string::npos);
  r = run("h2 --whatever");
  CHECK(r.exit == 2);
  CHECK(r.out.find("relative commutators") != std::string::npos);
}
