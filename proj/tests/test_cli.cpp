#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef BUCHI_CLI_PATH
#define BUCHI_CLI_PATH "buchi"
#endif

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(BUCHI_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/buchi_cli_") + name;
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
  return path;
}

}  // namespace

TEST_CASE("check exits 1 on a counterexample and prints a JSON verdict") {
  auto path = write_temp("selfloop.gba", "gba 1 1\ninit 0\nacc 0 1\nedge 0 0\n");
  auto r = run_cli("check --algo ascc --gba " + path + " --json");
  CHECK(r.exit_code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["verdict"] == "counterexample");
  CHECK(j["counterexample"]["loop"].size() == 1);
  CHECK(j["metrics"]["post_calls"] == 1);
}

TEST_CASE("check exits 0 on empty instances") {
  auto path = write_temp("empty.gba", "gba 2 1\ninit 0\nedge 0 1\nedge 1 0\n");
  auto r = run_cli("check --algo gv --gba " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict: empty") != std::string::npos);
}

TEST_CASE("the weak-only check refuses non-weak explicit input") {
  auto path = write_temp("nonweak.gba", "gba 2 1\ninit 0\nacc 0 1\nedge 0 1\nedge 1 0\n");
  auto r = run_cli("check --algo sd --ba " + path);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("not weak") != std::string::npos);
}

TEST_CASE("gv on a product equals ascc on the same pair") {
  auto k = write_temp("m.k",
                      "kripke 3\ninit 0\nlabel 0 p\nlabel 2 p q\n"
                      "edge 0 1\nedge 1 2\nedge 2 0\n");
  auto a = write_temp("p.lba",
                      "gba 2 1\ninit 0\nacc 1 1\n"
                      "edge 0 0 true\nedge 0 1 \"p & !q\"\nedge 1 1 true\n");
  auto rg = run_cli("check --algo gv --kripke " + k + " --prop " + a + " --json");
  auto ra = run_cli("check --algo ascc --kripke " + k + " --prop " + a + " --json");
  CHECK(rg.exit_code == ra.exit_code);
  auto jg = nlohmann::json::parse(rg.out);
  auto ja = nlohmann::json::parse(ra.out);
  CHECK(jg["verdict"] == ja["verdict"]);
}

TEST_CASE("unknown algorithms and malformed files are diagnosed with exit 2") {
  auto path = write_temp("ok.gba", "gba 1 1\ninit 0\nedge 0 0\n");
  CHECK(run_cli("check --algo frobnicate --gba " + path).exit_code == 2);
  auto bad = write_temp("bad.gba", "gba 1 1\nedge 0 7\n");
  auto r = run_cli("check --algo ascc --gba " + bad);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("line 2") != std::string::npos);
  CHECK(run_cli("check --algo ascc --gba /nonexistent.gba").exit_code == 2);
}

TEST_CASE("--ba rejects generalized automata") {
  auto path = write_temp("k2.gba", "gba 1 2\ninit 0\nacc 0 1\nacc 0 2\nedge 0 0\n");
  auto r = run_cli("check --algo ascc --ba " + path);
  CHECK(r.exit_code == 2);
  auto ok = run_cli("check --algo ascc --gba " + path);
  CHECK(ok.exit_code == 1);
}

TEST_CASE("bitstate configuration errors exit 2") {
  auto path = write_temp("bs.gba", "gba 1 1\ninit 0\nacc 0 1\nedge 0 0\n");
  CHECK(run_cli("check --algo bitstate-and --bitstate-bits 5 --gba " + path).exit_code == 2);
  CHECK(run_cli("check --algo bitstate-and --bitstate-bits 12 --gba " + path).exit_code == 1);
}

TEST_CASE("gen writes a parseable automaton with a manifest") {
  std::string out = "/tmp/buchi_cli_gen.gba";
  auto r = run_cli("gen --kind weak --n 15 --seed 3 --out " + out + " --manifest");
  CHECK(r.exit_code == 0);
  auto check = run_cli("check --algo sd --ba " + out);
  CHECK((check.exit_code == 0 || check.exit_code == 1));
  std::ifstream manifest(out + ".manifest.json");
  REQUIRE(manifest.good());
  auto j = nlohmann::json::parse(manifest);
  CHECK(j["schema"] == 1);
  CHECK(j["kind"] == "weak");
  CHECK((j["oracle_verdict"] == "empty" || j["oracle_verdict"] == "counterexample"));
}

TEST_CASE("oracle subcommand mirrors the check exit convention") {
  auto path = write_temp("oracle.gba", "gba 1 1\ninit 0\nacc 0 1\nedge 0 0\n");
  CHECK(run_cli("oracle --gba " + path).exit_code == 1);
  auto empty = write_temp("oracle_empty.gba", "gba 1 1\ninit 0\n");
  CHECK(run_cli("oracle --gba " + empty).exit_code == 0);
}

TEST_CASE("bench runs a small generated suite end to end") {
  auto suite = write_temp("suite.txt",
                          "gen trivial-accepting n=30 seed=1\n"
                          "gen nonacc-chain sccs=3 size=3 seed=2\n");
  auto r = run_cli("bench --suite " + suite + " --algos baseline,and,sd,gv,c99,ascc --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["cells"].size() == 12);
  CHECK(j["percent"]["baseline"] == doctest::Approx(100.0));
  CHECK(j["percent"]["gv"].get<double>() < 100.0);
}

TEST_CASE("diff subcommand reports a passing summary") {
  auto r = run_cli("diff --count 60 --max-n 20 --seed 5 --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["instances"] == 60);
  CHECK(j["disagreements"] == 0);
}

TEST_CASE("check writes a debug trace when asked") {
  auto path = write_temp("trace.gba", "gba 2 1\ninit 0\nacc 1 1\nedge 0 1\nedge 1 0\n");
  std::string trace = "/tmp/buchi_cli_trace.txt";
  auto r = run_cli("check --algo and --ba " + path + " --trace " + trace);
  CHECK(r.exit_code == 1);
  std::ifstream in(trace);
  REQUIRE(in.good());
  std::string first;
  std::getline(in, first);
  CHECK(first == "visit 0");
}

TEST_CASE("the weak-only check accepts products of weak property automata") {
  auto k = write_temp("hs.k",
                      "kripke 3\ninit 0\nlabel 1 req\nlabel 2 grant\n"
                      "edge 0 1\nedge 1 1\nedge 1 2\nedge 2 0\n");
  auto a = write_temp("hs.lba",
                      "gba 2 1\ninit 0\nacc 1 1\n"
                      "edge 0 0 true\nedge 0 1 \"req & !grant\"\nedge 1 1 !grant\n");
  auto r = run_cli("check --algo sd --kripke " + k + " --prop " + a + " --json");
  CHECK(r.exit_code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["weak_assumed"] == true);
  CHECK(j["verdict"] == "counterexample");

  // a non-weak property automaton is refused for the weak-only check
  auto bad = write_temp("nonweak.lba",
                        "gba 2 1\ninit 0\nacc 0 1\n"
                        "edge 0 1 true\nedge 1 0 true\n");
  CHECK(run_cli("check --algo sd --kripke " + k + " --prop " + bad).exit_code == 2);
}

TEST_CASE("bench accepts bitstate algorithms on weak plain suites") {
  auto suite = write_temp("bs_suite.txt", "gen weak n=25 deg=1.8 dens=0.4 seed=6\n");
  auto r = run_cli("bench --suite " + suite +
                   " --algos and,bitstate-and,bitstate-sd --baseline and --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["percent"]["and"] == doctest::Approx(100.0));
}

TEST_CASE("bitstate mode runs on products and matches the exact verdict") {
  auto k = write_temp("bsp.k",
                      "kripke 3\ninit 0\nlabel 1 req\nlabel 2 grant\n"
                      "edge 0 1\nedge 1 1\nedge 1 2\nedge 2 0\n");
  auto a = write_temp("bsp.lba",
                      "gba 2 1\ninit 0\nacc 1 1\n"
                      "edge 0 0 true\nedge 0 1 \"req & !grant\"\nedge 1 1 !grant\n");
  auto exact = run_cli("check --algo and --kripke " + k + " --prop " + a);
  auto approx =
      run_cli("check --algo bitstate-and --bitstate-bits 16 --kripke " + k + " --prop " + a);
  CHECK(exact.exit_code == 1);
  CHECK(approx.exit_code == 1);  // a found counterexample is always genuine
}

TEST_CASE("gen writes to stdout with '-' and SCC traces carry roots events") {
  auto r = run_cli("gen --kind nonacc-chain --sccs 2 --size 2 --out -");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("gba 4 1", 0) == 0);

  auto path = write_temp("scc_trace.gba", "gba 2 1\ninit 0\nacc 0 1\nedge 0 1\nedge 1 0\n");
  std::string trace = "/tmp/buchi_cli_scc_trace.txt";
  CHECK(run_cli("check --algo ascc --gba " + path + " --trace " + trace).exit_code == 1);
  std::ifstream in(trace);
  REQUIRE(in.good());
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(all.find("visit 0") != std::string::npos);
  CHECK(all.find("roots-push 0") != std::string::npos);
  CHECK(all.find("roots-pop") != std::string::npos);
  CHECK(all.find("collapse 1") != std::string::npos);
  CHECK(all.find("report cycle-collapse") != std::string::npos);
}
