#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "projspec/app.hpp"
#include "projspec/config.hpp"
#include "projspec/errors.hpp"
#include "projspec/matrix_io.hpp"

using namespace projspec;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("projspec_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Ran {
  int code;
  std::string out, err;
};

Ran run_text(const std::string& config, const std::string& command) {
  std::ostringstream out, err;
  const int code = run(parse_config(config, command), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("config defaults and validation") {
  const JobConfig c = parse_config(R"({"slice": {"chart": 0, "width": 8, "height": 4}})", "julia");
  CHECK(c.command == Command::julia);
  CHECK(c.maxiter == 100);
  CHECK(c.radius == 10);
  CHECK(c.seed == kDefaultSeed);
  CHECK(c.slice.width == 8);
  CHECK(c.slice.x.min == -3);

  CHECK_THROWS_AS(parse_config(R"({"tolerances": {"rank": -1e-3}})", "verify"), InvalidInput);
  CHECK_THROWS_AS(parse_config(R"({"radius": 1})", "verify"), InvalidInput);
  CHECK_THROWS_AS(parse_config(R"({"maxiter": 0})", "verify"), InvalidInput);
  CHECK_THROWS_AS(parse_config("{", "verify"), InvalidInput);
  CHECK_THROWS_AS(parse_config("{}", "frobnicate"), InvalidInput);
  CHECK_THROWS_AS(parse_config(R"({"command": "julia"})", "verify"), InvalidInput);
  CHECK_THROWS_AS(parse_config("{}", "koszul"), InvalidInput);
  try {
    parse_config(R"({"maxiter": 5, "colour": "red", "slice": {"depth": 1}})", "julia");
    FAIL("unknown key accepted");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("colour") != std::string::npos);
  }
  CHECK(parse_config("{}", "verify").to_json() == parse_config("{}", "verify").to_json());
  CHECK(format_defaults().find("maxiter") != std::string::npos);
}

TEST_CASE("display form puts a 1 in the last nonzero slot") {
  CHECK(display_form(ProjPoint({1, -1, 0})).to_string() == "[-1:1:0]");
  CHECK(display_form(ProjPoint({2, 0, 4})).to_string() == "[0.5:0:1]");
}

TEST_CASE("iterate from [1:1:1]") {
  const fs::path dir = scratch("iterate");
  const Ran r = run_text(R"({"point": "1,1,1", "steps": 1, "output_dir": ")" + dir.string() + "\"}",
                         "iterate");
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("step 1: [-1:1:0]") != std::string::npos);
  CHECK(fs::exists(dir / "iterate.csv"));
  CHECK(fs::exists(dir / "manifest.txt"));

  const Ran fatou = run_text(R"({"point": "3,1,1", "steps": 6, "output_dir": ")" + dir.string() + "\"}",
                             "iterate");
  CHECK(fatou.code == kExitOk);
  CHECK(slurp(dir / "iterate.csv").find(",na\n") == std::string::npos);

  const Ran stuck = run_text(R"({"point": "1,1,1", "steps": 2, "map": "cubic", "output_dir": ")" +
                                 dir.string() + "\"}",
                             "iterate");
  CHECK(stuck.code == kExitInvalid);
  fs::remove_all(dir);
}

TEST_CASE("group subcommand") {
  const fs::path dir = scratch("group");
  const Ran r = run_text(R"({"group": {"kind": "dihedral", "order": 4}, "output_dir": ")" +
                             dir.string() + "\"}",
                         "group");
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("h0 contained: true") != std::string::npos);
  const Ran g = run_text(R"({"group": {"kind": "gl3", "rep": "minus"}, "output_dir": ")" +
                             dir.string() + "\"}",
                         "group");
  CHECK(g.code == kExitOk);
  CHECK(g.out.find("h0 contained: false") != std::string::npos);
  const Ran p = run_text(R"({"group": {"kind": "presentation", "generators": ["a", "b"],
                             "relators": ["aaa", "bb", "abab"]}, "output_dir": ")" +
                             dir.string() + "\"}",
                         "group");
  CHECK(p.code == kExitOk);
  CHECK(p.out.find("dimension 6") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("julia runs are byte-identical") {
  const fs::path a = scratch("julia_a"), b = scratch("julia_b");
  const std::string slice = R"("slice": {"width": 40, "height": 30}, "threads": )";
  CHECK(run_text("{" + slice + "1, \"output_dir\": \"" + a.string() + "\"}", "julia").code == kExitOk);
  CHECK(run_text("{" + slice + "1, \"output_dir\": \"" + b.string() + "\"}", "julia").code == kExitOk);
  CHECK(slurp(a / "julia.ppm") == slurp(b / "julia.ppm"));
  CHECK(slurp(a / "julia.csv") == slurp(b / "julia.csv"));
  CHECK(slurp(a / "julia.ppm").size() == 13 + 3 * 40 * 30);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("spectrum and koszul subcommands") {
  const fs::path dir = scratch("matrices");
  fs::create_directories(dir);
  MatrixFile f;
  f.kind = MatrixFile::Kind::tuple;
  ComplexMatrix a = ComplexMatrix::Zero(2, 2), b = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 1;
  a(1, 1) = -1;
  b(0, 0) = 2;
  b(1, 1) = 0.5;
  f.matrices = {a, b};
  write_matrix_file(f, dir / "tuple.json");
  const std::string base = R"("input": ")" + (dir / "tuple.json").string() + R"(", "output_dir": ")" +
                           dir.string() + "\"";

  const Ran k = run_text("{" + base + R"(, "lambdas": [[1, 2], [-1, 0.5], [0, 0]]})", "koszul");
  CHECK(k.code == kExitOk);
  const std::string csv = slurp(dir / "koszul.csv");
  CHECK(csv.find("1,0,2,0,1,1,1") != std::string::npos);
  CHECK(csv.find("0,0,0,0,0,0,0") != std::string::npos);

  const Ran s = run_text("{" + base + R"(, "slice": {"width": 9, "height": 9, "x": {"coord": 1, "min": -2, "max": 2}, "y": {"coord": 2, "min": -2, "max": 2}}})",
                         "spectrum");
  CHECK(s.code == kExitOk);
  CHECK(s.out.find("of 81 grid points") != std::string::npos);

  const Ran missing = run_text(R"({"input": "/nonexistent.json", "lambdas": [[0]], "output_dir": ")" + dir.string() + "\"}",
                                "koszul");
  CHECK(missing.code == kExitInvalid);
  const Ran wrong = run_text("{" + base + R"(, "lambdas": [[1]]})", "koszul");
  CHECK(wrong.code == kExitInvalid);
  fs::remove_all(dir);
}

TEST_CASE("verify passes and is reproducible") {
  const fs::path a = scratch("verify_a"), b = scratch("verify_b");
  const Ran r = run_text(R"({"verify_points": 200, "output_dir": ")" + a.string() + "\"}", "verify");
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  run_text(R"({"verify_points": 200, "output_dir": ")" + b.string() + "\"}", "verify");
  CHECK(slurp(a / "verify.csv") == slurp(b / "verify.csv"));
  fs::remove_all(a);
  fs::remove_all(b);
}
