// Drives the built command-line tool and checks output and exit status.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MONOREL_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string sample(const char* name) {
  return std::string(SAMPLES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("nf prints the normal form", "[cli]") {
  auto r = run("nf --system " + sample("hopf.rs") + " ab^2");
  CHECK(r.status == 0);
  CHECK(r.out == "x^2b\n");
  auto t = run("nf --system " + sample("hopf.rs") + " --trace xab^2axab^2");
  CHECK(t.status == 0);
  CHECK(t.out.ends_with("x^3bax^3b\n"));
}

TEST_CASE("equal reports bounded inequality with status 0", "[cli]") {
  auto r = run("equal --presentation " + sample("m.pres") + " ab^2 b --bound 9");
  CHECK(r.status == 0);
  CHECK(r.out == "unequal-within-bound\n");
  auto e = run("equal --presentation " + sample("m.pres") + " ab^2a^2b^2 b --bound 7");
  CHECK(e.status == 0);
  CHECK(e.out.starts_with("equal\nd = 1, s = 7\n"));
  auto tight = run("equal --presentation " + sample("m.pres") +
                   " bab^2a^2b^2ab abab^2a^2b^2b --bound 30 --nodes 3");
  CHECK(tight.status == 3);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("grid --range 2 1").status == 2);
  CHECK(run("grid --alpha 3 2").status == 2);
  CHECK(run("grid --checks nonsense").status == 2);
  CHECK(run("build --params 0 1 1 1").status == 2);
  CHECK(run("build --params 1 2 2").status == 2);
  CHECK(run("nf --system /nonexistent ab").status == 2);
  CHECK(run("nf --system " + sample("hopf.rs") + " ac").status == 2);
  CHECK(run("dehn --presentation " + sample("m.pres") + " --n 4 --mode random:x").status == 2);
  CHECK(run("equal --presentation " + sample("m.pres") + " ab^2 b --bound 2").status == 2);
  CHECK(run("endo --params 1 2 2 2 --map a=a").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("budget exhaustion exits with 3", "[cli]") {
  const std::string loop = std::string(BINARY_DIR) + "/loop.rs";
  std::ofstream(loop) << "letters: a b\nab -> ba\nba -> ab\n";
  CHECK(run("nf --system " + loop + " ab --fuel 10").status == 3);
  CHECK(run("complete --presentation " + sample("abab.pres") + " --max-rules 1").status == 3);
}

TEST_CASE("complete orients abab = b", "[cli]") {
  auto r = run("complete --presentation " + sample("abab.pres") +
               " --order \"weights: a=1 b=1; precedence: a>b\"");
  CHECK(r.status == 0);
  CHECK(r.out.find("  abab -> b\n  ab^2 -> bab\n") != std::string::npos);
}

TEST_CASE("build and endo", "[cli]") {
  auto b = run("build --params 1 2 2 2 --verify");
  CHECK(b.status == 0);
  CHECK(b.out.find("verification: PASS") != std::string::npos);
  CHECK(run("endo --params 1 2 2 2 --map a=a,b=bab").status == 0);
  auto psi = run("endo --params 1 2 2 2 --map a=a,b=ab^2");
  CHECK(psi.status == 1);
  CHECK(psi.out.find("lifts: no") != std::string::npos);
}

TEST_CASE("JSON reports are byte-identical across runs", "[cli][json]") {
  for (const std::string& args : std::vector<std::string>{
           "hopf-demo --json", "grid --range 1 2 --checks completeness,equivalence,probe --json",
        "build --params 1 3 2 2 --verify --json",
        "dehn --presentation " + sample("m.pres") + " --n 5 --json"}) {
    auto a = run(args), b = run(args);
    INFO(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"schema\": 1") != std::string::npos);
  }
}
