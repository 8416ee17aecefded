#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string bin() {
  const char* p = std::getenv("LCTCERT_BIN");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  static int n = 0;
  std::string path = "/tmp/lctcert_cli_" + std::to_string(n++) + ".out";
  int rc = std::system((bin() + " " + args + " > " + path + " 2>&1").c_str());
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::remove(path.c_str());
  return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("validate passes; strict validate flags annotated checks") {
  RunResult r = run("validate");
  CHECK(r.code == 0);
  CHECK(r.out.find("fail") != std::string::npos);  // summary counts line
  CHECK(run("validate --strict").code == 1);
}

TEST_CASE("certify") {
  RunResult all = run("certify --all");
  CHECK(all.code == 0);
  // one verdict line per family, all positive
  std::size_t verdicts = 0;
  for (std::size_t p = all.out.find("LCT_GE_1"); p != std::string::npos;
       p = all.out.find("LCT_GE_1", p + 1))
    ++verdicts;
  CHECK(verdicts >= 21);
  CHECK(all.out.find("FAILED") == std::string::npos);
  CHECK(all.out.find("NOT_ESTABLISHED") == std::string::npos);

  CHECK(run("certify 60").code == 0);
  CHECK(run("certify --all --strict").code == 1);
  CHECK(run("certify nope").code == 2);
  CHECK(run("certify").code != 0);
}

TEST_CASE("basket subcommand and strict exit on the known mismatch") {
  RunResult r = run("basket 71");
  CHECK(r.code == 0);
  CHECK(r.out.find("1/4(1,1,3)") != std::string::npos);

  RunResult s = run("basket 71 --strict");
  CHECK(s.code == 1);
  CHECK(s.out.find("FAIL") != std::string::npos);
  CHECK(s.out.find("1/4") != std::string::npos);

  CHECK(run("basket 60 --strict").code == 0);
  CHECK(run("basket nope").code == 2);
}

TEST_CASE("tables") {
  RunResult deg = run("tables --which degrees");
  CHECK(deg.code == 0);
  CHECK(deg.out.find("1/120") != std::string::npos);
  CHECK(run("tables --which baskets").code == 0);
  CHECK(run("tables --which isolating").code == 0);
  CHECK(run("tables --which qi").code == 0);
  CHECK(run("tables --which bogus").code != 0);
}

TEST_CASE("isolate") {
  RunResult r = run("isolate 45");
  CHECK(r.code == 0);
  CHECK(r.out.find("10") != std::string::npos);
  CHECK(run("isolate nope").code == 2);
}

TEST_CASE("output formats") {
  RunResult j = run("certify 60 --format json");
  CHECK(j.code == 0);
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.is_object());

  RunResult c = run("tables --which degrees --format csv");
  CHECK(c.code == 0);
  CHECK(c.out.find(',') != std::string::npos);

  RunResult m = run("tables --which degrees --format md");
  CHECK(m.code == 0);
  CHECK(m.out.find('|') != std::string::npos);

  CHECK(run("validate --format bogus").code != 0);
}

TEST_CASE("data path handling") {
  CHECK(run("validate --data /nonexistent/f.json").code == 2);
}

TEST_CASE("no subcommand prints usage and fails") {
  CHECK(run("").code != 0);
}
