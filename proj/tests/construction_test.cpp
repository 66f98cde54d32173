#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "wedge/construction.hpp"
#include "wedge/json_io.hpp"

using namespace wedge;

namespace {

BigRational rat(long n, long d = 1) { return BigRational(mpz_class(n), mpz_class(d)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int error_line(const std::string& text) {
  try {
    parse_script(text);
  } catch (const parse_error& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("minimal script parses") {
  Script s = parse_script("point A 0 0\npoint B 60 0\nline AB through A B\n");
  CHECK(s.commands.size() == 3);
  CHECK(s.commands[2].line == 3);
}

TEST_CASE("comments and blank lines are skipped") {
  Script s = parse_script("# heading\n\npoint A 0 0\n   # indented comment\n");
  CHECK(s.commands.size() == 1);
  CHECK(s.commands[0].line == 3);
}

TEST_CASE("static checks") {
  // use before definition
  CHECK_THROWS_AS(parse_script("point A 0 0\nmidpoint L A O\n"), parse_error);
  CHECK(error_line("point A 0 0\nmidpoint L A O\n") == 2);

  // redefinition
  CHECK(error_line("point A 0 0\npoint A 1 1\n") == 2);

  // kind mismatch: a line where a point is expected
  CHECK(error_line("point A 0 0\npoint B 1 0\nline AB through A B\nmidpoint C A AB\n") == 4);

  // assert_area needs a triangle
  CHECK(error_line("point A 0 0\nassert_area A 1\n") == 2);

  // unknown command, bad arity, malformed literals
  CHECK(error_line("draw A 0 0\n") == 1);
  CHECK(error_line("point A 0\n") == 1);
  CHECK(error_line("point A 0 0 0\n") == 1);
  CHECK(error_line("point A 1/0 0\n") == 1);
  CHECK(error_line("point A 0.5 0\n") == 1);
  CHECK(error_line("point 9A 0 0\n") == 1);
  CHECK(error_line("square A B C D of 0 0 side 1\n") == 1);
}

TEST_CASE("parse errors carry 1-based columns") {
  try {
    parse_script("point A 0 0\nmidpoint L A O\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 14);  // the token "O"
  }
}

TEST_CASE("builtin scripts") {
  const auto& scripts = builtin_scripts();
  CHECK(scripts.count("bm15285_p12") == 1);
  CHECK(scripts.count("ybc7289") == 1);
  CHECK(scripts.count("nonexistent") == 0);

  Script bm = parse_script(substitute_side(scripts.at("bm15285_p12"), rat(60)));
  CHECK(bm.commands.size() == 42);
  Script ybc = parse_script(substitute_side(scripts.at("ybc7289"), rat(30)));
  CHECK(ybc.commands.size() == 12);
}

TEST_CASE("bundled script files match the embedded corpus") {
  const auto& scripts = builtin_scripts();
  CHECK(read_file(std::string(SCRIPTS_DIR) + "/bm15285_p12.ct") ==
        scripts.at("bm15285_p12"));
  CHECK(read_file(std::string(SCRIPTS_DIR) + "/ybc7289.ct") == scripts.at("ybc7289"));
}

TEST_CASE("script execution equals the kernel construction") {
  const std::string& text = builtin_scripts().at("bm15285_p12");
  ExecutionResult run = execute(parse_script(substitute_side(text, rat(60))));
  CHECK(run.assertions.empty());
  CHECK(run.figure == build_bm15285_figure(rat(60)));

  std::mt19937_64 rng(59);
  std::uniform_int_distribution<long> num(1, 500);
  std::uniform_int_distribution<long> den(1, 50);
  for (int i = 0; i < 20; ++i) {
    BigRational side(mpz_class(num(rng)), mpz_class(den(rng)));
    ExecutionResult r = execute(parse_script(substitute_side(text, side)));
    CHECK(r.figure == build_bm15285_figure(side));
  }
}

TEST_CASE("ybc script asserts the tablet values at side 30") {
  const std::string& text = builtin_scripts().at("ybc7289");
  ExecutionResult run = execute(parse_script(substitute_side(text, rat(30))));
  REQUIRE(run.assertions.size() == 2);
  CHECK(run.assertions[0].description == "assert_sq_dist B D");
  CHECK(run.assertions[0].expected == "1800");
  CHECK(run.assertions[0].actual == "1800");
  CHECK(run.assertions[0].passed);
  CHECK(run.assertions[1].description == "assert_area T1");
  CHECK(run.assertions[1].actual == "225");
  CHECK(run.all_passed());
  CHECK(run.figure == build_ybc7289_figure(rat(30)));
}

TEST_CASE("failed assertions are collected, not fatal") {
  // the bundled ybc figure at side 30 with a deliberately wrong area claim
  std::string text = substitute_side(builtin_scripts().at("ybc7289"), rat(30));
  text += "assert_area T1 226\nassert_sq_dist A B 900\n";
  ExecutionResult run = execute(parse_script(text));
  REQUIRE(run.assertions.size() == 4);
  CHECK(run.assertions[0].passed);
  CHECK(run.assertions[1].passed);
  CHECK_FALSE(run.assertions[2].passed);
  CHECK(run.assertions[2].expected == "226");
  CHECK(run.assertions[2].actual == "225");
  CHECK(run.assertions[3].passed);
  CHECK_FALSE(run.all_passed());
}

TEST_CASE("geometric failures carry the command span") {
  std::string text =
      "point A 0 0\n"
      "point B 1 0\n"
      "point C 2 0\n"
      "line AB through A B\n"
      "line AC through A C\n"
      "intersect P AB AC\n";  // same line through collinear points
  try {
    execute(parse_script(text));
    FAIL("expected execution_error");
  } catch (const execution_error& e) {
    CHECK(e.line() == 6);
  }

  std::string parallel =
      "point A 0 0\npoint B 1 0\npoint C 0 1\npoint D 1 1\n"
      "line AB through A B\nline CD through C D\nintersect P AB CD\n";
  try {
    execute(parse_script(parallel));
    FAIL("expected execution_error");
  } catch (const execution_error& e) {
    CHECK(e.line() == 7);
  }

  CHECK_THROWS_AS(execute(parse_script("square A B C D from 0 0 side -1\n")),
                  execution_error);
  CHECK_THROWS_AS(execute(parse_script("point A 0 0\npoint B 0 0\nline AB through A B\n")),
                  execution_error);
  CHECK_THROWS_AS(
      execute(parse_script("point A 0 0\npoint B 1 0\npoint C 2 0\ntriangle T A B C\n")),
      execution_error);
}

TEST_CASE("formatter is a fixed point under reparsing") {
  for (const auto& [name, text] : builtin_scripts()) {
    Script original = parse_script(substitute_side(text, rat(60)));
    Script reparsed = parse_script(format_script(original));
    CHECK(original == reparsed);
    // formatting a formatted script changes nothing
    CHECK(format_script(original) == format_script(reparsed));
  }
}

TEST_CASE("execution is deterministic") {
  const std::string text =
      substitute_side(builtin_scripts().at("bm15285_p12"), rat(7, 3));
  std::string a = figure_to_json(execute(parse_script(text)).figure);
  std::string b = figure_to_json(execute(parse_script(text)).figure);
  CHECK(a == b);
}

TEST_CASE("square-less scripts fall back to the coordinate extent") {
  ExecutionResult run = execute(parse_script("point A 0 0\npoint B 5 12\n"));
  CHECK(run.figure.side == rat(12));
}
