#include "commands.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace repcat;
using namespace repcat::cli;

namespace {

const std::filesystem::path source_dir = REPCAT_SOURCE_DIR;

std::string fixture(const std::string& name) { return (source_dir / "fixtures" / name).string(); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Outcome {
  int code;
  std::string text;
};

// Stdout and stderr interleaved the way the goldens were captured (2>&1).
Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  const int code = run(args, out, out);
  return {code, out.str()};
}

struct Golden {
  const char* name;
  std::vector<std::string> args;
  int code;
};

}  // namespace

TEST_CASE("golden outputs") {
  const std::string two = fixture("two_cycle.problem");
  const std::string a3 = fixture("a3_extension.problem");
  const std::vector<Golden> cases{
      {"cycles_two_cycle", {"cycles", two}, 0},
      {"cycles_a3", {"cycles", a3}, 0},
      {"check_two_cycle", {"check", two, "phi", "psi", "--max-cycle-len", "4"}, 0},
      {"check_two_cycle_fail", {"check", two, "phi", "psi-bad"}, 1},
      {"check_a3", {"check", a3, "phi", "hat-phi0"}, 0},
      {"rho_two_cycle_json", {"rho", two, "phi", "psi", "--format", "json", "--window", "-1..1"}, 0},
      {"verify_a3_twist", {"verify", a3, "phi", "twist"}, 0},
      {"verify_two_cycle", {"verify", two, "phi", "psi"}, 0},
      {"orbit_a3_nu", {"orbit", a3, "nu"}, 0},
      {"dump_two_cycle", {"dump", two}, 0},
      {"orbit_jump0", {"orbit", a3, "psi"}, 2},
      {"check_jump_mismatch", {"check", two, "phi", "phi2"}, 2},
      {"dump_unbounded", {"dump", fixture("unbounded.problem")}, 2},
  };
  for (const Golden& g : cases) {
    CAPTURE(g.name);
    const Outcome o = run_cli(g.args);
    CHECK(o.code == g.code);
    const std::string expected = slurp(source_dir / "tests" / "golden" / (std::string(g.name) + ".txt"));
    // Goldens were captured with repository-relative paths.
    std::string text = o.text;
    const std::string prefix = (source_dir / "").string();
    for (auto at = text.find(prefix); at != std::string::npos; at = text.find(prefix)) text.erase(at, prefix.size());
    CHECK(text == expected);
  }
}

TEST_CASE("shipped fixtures round-trip through the serializer") {
  for (const char* name : {"two_cycle.problem", "a3_extension.problem", "unbounded.problem"}) {
    CAPTURE(name);
    const ProblemFile file = read_problem(fixture(name));
    const std::string text = serialize_problem(file);
    CHECK(parse_problem(text) == file);
    CHECK(serialize_problem(parse_problem(text)) == text);
  }
}

TEST_CASE("parse errors carry line numbers") {
  const std::string bad_endpoint = "[quiver]\nvertices = 1 2\narrow a = 1 -> 3\n";
  try {
    parse_problem(bad_endpoint);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()) == "line 3: undeclared vertex '3'");
  }
  CHECK_THROWS_AS(parse_problem("vertices = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[quiver]\nvertices = 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[quiver]\nvertices = 1 2\narrow a = 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[quiver]\nvertices = 1\n[auto f]\njump = x\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[quiver]\nvertices = 1 2\narrow a = 1 -> 2\n[auto f]\nsigma a = 0\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[quiver]\nvertices = 1 2\narrow a = 1 -> 2\n[relations]\nzero = a*a\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[nonsense]\n"), ParseError);
}

TEST_CASE("relations are written in composition order") {
  const ProblemFile f = parse_problem("[quiver]\nvertices = 1 2 3\narrow x = 1 -> 2\narrow y = 2 -> 3\n"
                                      "[relations]\nzero = y*x\n");
  REQUIRE(f.relations.size() == 1);
  CHECK(f.relations[0] == std::vector<ArrowId>{0, 1});
  CHECK(Problem(f).algebra().dimension() == 5);
}

TEST_CASE("invalid automorphisms are reported") {
  const std::string text = "[quiver]\nvertices = 1 2\narrow a = 1 -> 2\n[auto f]\nvertex-map 1 = 2\n";
  CHECK_THROWS_AS(Problem(parse_problem(text)), Error);
  CHECK_THROWS_AS(Problem(read_problem(fixture("two_cycle.problem"))).get("missing"), Error);
  CHECK_THROWS_AS(read_problem(fixture("no_such.problem")), Error);
}

TEST_CASE("window flag") {
  CHECK(parse_window("-2..3") == std::pair{-2, 3});
  CHECK_THROWS_AS(parse_window("3..1"), Error);
  CHECK_THROWS_AS(parse_window("1-3"), Error);
  CHECK_THROWS_AS(parse_window("a..3"), Error);
  const Outcome o = run_cli({"check", fixture("two_cycle.problem"), "phi", "psi", "--window", "1..2"});
  CHECK(o.code == exit_code::input_error);
}

TEST_CASE("orbit --out writes the table to a file") {
  const auto path = std::filesystem::temp_directory_path() / "repcat_orbit_test.txt";
  const Outcome o = run_cli({"orbit", fixture("two_cycle.problem"), "phi", "--out", path.string()});
  CHECK(o.code == 0);
  CHECK(o.text == "wrote orbit algebra of dimension 8 to " + path.string() + "\n");
  CHECK(slurp(path).rfind("dimension 8\n", 0) == 0);
  std::filesystem::remove(path);

  const Outcome json = run_cli({"orbit", fixture("two_cycle.problem"), "phi", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.text.find("\"dimension\": 8") != std::string::npos);
}

TEST_CASE("bad command lines") {
  CHECK(run_cli({}).code == exit_code::input_error);
  CHECK(run_cli({"frobnicate"}).code == exit_code::input_error);
  CHECK(run_cli({"check", fixture("two_cycle.problem"), "phi"}).code == exit_code::input_error);
  CHECK(run_cli({"--help"}).code == exit_code::success);
}
