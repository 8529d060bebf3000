// End-to-end tests of the command-line binary (invoked as a subprocess).

#include <cstdio>
#include <cstdlib>
#include <string>

#include <doctest.h>

#include "sepgraph/graph.hpp"
#include "test_util.hpp"

#ifndef SEPGRAPH_CLI_PATH
#define SEPGRAPH_CLI_PATH "build/sepgraph"
#endif

namespace {

struct RunResult {
  int         exit_code = -1;
  std::string out;
};

// Runs the CLI with the given arguments; stderr is folded into stdout.
RunResult run_cli(std::string const& args) {
  std::string cmd =
      std::string("'") + SEPGRAPH_CLI_PATH + "' " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char      buf[4096];
  size_t    n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) {
    r.out.append(buf, n);
  }
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data_path(std::string const& name) {
  return std::string(SEPGRAPH_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("level: E(2,3) level 1 is valid SGF with 7 vertices") {
  auto r = run_cli("level -n 1 " + data_path("e23.sgf"));
  REQUIRE(r.exit_code == 0);
  auto g = sepgraph::load(r.out);
  CHECK(g.vertices.size() == 7);
  CHECK(g.edges.size() == 12);
}

TEST_CASE("prime: the non-prime worked example") {
  auto r = run_cli("prime " + data_path("ex9-2.sgf"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\"not_prime\"") != std::string::npos);
  CHECK(r.out.find("\"schema\": 1") != std::string::npos);
  CHECK(r.out.find("\"cantor\": true") != std::string::npos);
}

TEST_CASE("validate: good input, bad input, missing input") {
  auto good = run_cli("validate " + data_path("e12.sgf"));
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("\"valid\": true") != std::string::npos);

  char tmpl[] = "/tmp/sepgraph-cli-XXXXXX";
  int  fd     = mkstemp(tmpl);
  REQUIRE(fd >= 0);
  FILE* f = fdopen(fd, "w");
  std::fputs("vertex v layer=7\n", f);
  std::fclose(f);
  auto bad = run_cli(std::string("validate ") + tmpl);
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("error:") != std::string::npos);
  std::remove(tmpl);

  auto missing = run_cli("validate /nonexistent/graph.sgf");
  CHECK(missing.exit_code == 1);
  CHECK(missing.out.find("error:") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("level " + data_path("e23.sgf")).exit_code == 2);  // missing -n
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("deterministic output: identical invocations, identical bytes") {
  for (std::string args : {"balls -n 2 " + data_path("e23.sgf"),
                           "hsets -n 1 " + data_path("e22.sgf"),
                           "classify " + data_path("twocycle.sgf")}) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("closure and quotient agree with the library") {
  auto r = run_cli("quotient -s 'v[a1|b2],v[a2|b1]' /nonexistent.sgf");
  CHECK(r.exit_code == 1);

  // Real run on the level-1 graph of E(2,2), saved to a temp file first.
  auto lvl = run_cli("level -n 1 " + data_path("e22.sgf"));
  REQUIRE(lvl.exit_code == 0);
  std::string path = "/tmp/sepgraph-cli-e22-level1.sgf";
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs(lvl.out.c_str(), f);
    std::fclose(f);
  }
  auto q = run_cli("quotient -s 'v[a1|b2],v[a2|b1]' " + path);
  REQUIRE(q.exit_code == 0);
  auto qg = sepgraph::load(q.out);
  CHECK(qg.vertices.size() == 3);
  CHECK(qg.edges.size() == 4);
  std::remove(path.c_str());
}

TEST_CASE("fromwords: finite-type detection and the quotient graph") {
  auto r = run_cli("fromwords -w 010 -n 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\"n\": 2") != std::string::npos);
  CHECK(r.out.find("\"010\"") != std::string::npos);

  auto q = run_cli("fromwords -w 010 -n 3 -q");
  REQUIRE(q.exit_code == 0);
  CHECK(sepgraph::load(q.out).vertices.size() > 0);

  auto nf = run_cli("fromwords -w 010,01110,0111110,011111110 -n 2 -q");
  CHECK(nf.exit_code == 1);
  CHECK(nf.out.find("NotFiniteType") != std::string::npos);
}

TEST_CASE("dot output is structurally sane") {
  auto r = run_cli("dot " + data_path("twocycle.sgf"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  CHECK(r.out.find("\"v\" -> \"w\"") != std::string::npos);
  CHECK(r.out.find("color=") != std::string::npos);
  CHECK(r.out.find("}") != std::string::npos);
}

TEST_CASE("the -o flag writes the same bytes as stdout") {
  std::string path = "/tmp/sepgraph-cli-out.json";
  auto        direct = run_cli("k0 -n 1 " + data_path("e23.sgf"));
  auto        filed  = run_cli("k0 -n 1 " + data_path("e23.sgf") + " -o " + path);
  REQUIRE(direct.exit_code == 0);
  REQUIRE(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::string contents;
  {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    char   buf[4096];
    size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) {
      contents.append(buf, n);
    }
    std::fclose(f);
  }
  CHECK(contents == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("the vertex budget honours SEPGRAPH_MAX_VERTICES") {
  auto r = run_cli("level -n 3 " + data_path("e23.sgf"));
  CHECK(r.exit_code == 0);  // 5256 vertices, under the default budget
  setenv("SEPGRAPH_MAX_VERTICES", "10", 1);
  auto capped = run_cli("level -n 3 " + data_path("e23.sgf"));
  unsetenv("SEPGRAPH_MAX_VERTICES");
  CHECK(capped.exit_code == 1);
  CHECK(capped.out.find("SizeLimitExceeded") != std::string::npos);
}
