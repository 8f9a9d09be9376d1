#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "seqcert/json_io.hpp"

using namespace seqcert;
using namespace seqcert::testing;

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SEQCERT_CLI_PATH) + " " + args;
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

Json read_json(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  Json j;
  in >> j;
  return j;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "seqcert_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("element JSON round trip") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const SeqElement x = random_element(rng);
    const Json j = element_to_json(x);
    const SeqElement y = element_from_json(j);
    CHECK(element_to_json(y) == j);
  }
}

TEST_CASE("family and set JSON round trips") {
  const SpaceKind l2 = SpaceKind::lp(2.0);
  for (const Family& f :
       {Family::basis_shift(l2, 1.0), Family::alternating(l2, 2.0),
        Family::geometric_ramp(l2, 0.25), Family::plateau_shift(),
        Family::constant(SeqElement::basis_vector(l2, 2))}) {
    const Json j = family_to_json(f);
    CHECK(family_to_json(family_from_json(j)) == j);
  }
  for (const SetDescriptor& s :
       {SetDescriptor::ball(l2, 1.0), SetDescriptor::basis_vectors(l2, 2.0),
        SetDescriptor::hilbert_cube(l2, TailModel::geometric(1.0, 0.5)),
        SetDescriptor::finite_set(l2, {SeqElement::basis_vector(l2, 1)})}) {
    const Json j = set_to_json(s);
    CHECK(set_to_json(set_from_json(j)) == j);
  }
}

TEST_CASE("parse errors name the failing field") {
  CHECK_THROWS_WITH_AS(element_from_json(Json{{"prefix", Json::array()}}),
                       doctest::Contains("space"), ParseError);
  CHECK_THROWS_WITH_AS(
      element_from_json(Json{{"space", "lp"}, {"p", 2.0}}),
      doctest::Contains("prefix"), ParseError);
  CHECK_THROWS_WITH_AS(
      element_from_json(Json{{"space", "c"}, {"prefix", Json::array()}}),
      doctest::Contains("limit"), ParseError);
  CHECK_THROWS_WITH_AS(
      family_from_json(Json{{"space", "c0"}, {"generator", "warp"}}),
      doctest::Contains("generator"), ParseError);
  // schema-valid but space-inconsistent: power tail not summable in l_1
  CHECK_THROWS_AS(
      element_from_json(Json{{"space", "lp"},
                             {"p", 1.0},
                             {"prefix", Json::array()},
                             {"tail", {{"type", "power"}, {"c", 1.0}, {"s", 0.9}}}}),
      ParseError);
}

TEST_CASE("CLI: fixtures, checkers, exit codes, reproducibility") {
  const fs::path dir = scratch_dir();
  const fs::path fixtures = dir / "fixtures";
  REQUIRE(run_cli("fixtures --out " + fixtures.string()) == 0);

  const std::vector<std::pair<std::string, int>> convergence_cases = {
      {"constant.json", 0},      {"geometric_ramp.json", 0},
      {"basis_shift.json", 1},   {"alternating.json", 1},
      {"plateau_shift.json", 1},
  };
  for (const auto& [name, expected] : convergence_cases) {
    const fs::path report = dir / ("report_" + name);
    const int code = run_cli("check-convergence " + (fixtures / name).string() +
                             " --seed 7 --out " + report.string());
    CHECK(code == expected);
    const Json r = read_json(report);
    const Json fixture = read_json(fixtures / name);
    const std::string want = fixture["documented_verdict"].get<std::string>();
    CHECK(r["verdict"].get<std::string>() == want);
    CHECK(r["library_version"].is_string());
    CHECK(r["config"]["seed"].get<int>() == 7);
  }

  const std::vector<std::pair<std::string, int>> compactness_cases = {
      {"finite_set.json", 0},
      {"hilbert_cube.json", 0},
      {"basis_vectors.json", 1},
      {"ball.json", 1},
  };
  for (const auto& [name, expected] : compactness_cases) {
    const fs::path report = dir / ("report_" + name);
    const int code = run_cli("check-compactness " + (fixtures / name).string() +
                             " --seed 7 --out " + report.string());
    CHECK(code == expected);
    const Json r = read_json(report);
    const Json fixture = read_json(fixtures / name);
    CHECK(r["verdict"].get<std::string>() ==
          fixture["documented_verdict"].get<std::string>());
  }

  // byte-identical reports across two runs with the same seed
  const fs::path rep1 = dir / "rep1.json";
  const fs::path rep2 = dir / "rep2.json";
  REQUIRE(run_cli("check-convergence " + (fixtures / "basis_shift.json").string() +
                  " --seed 7 --out " + rep1.string()) == 1);
  REQUIRE(run_cli("check-convergence " + (fixtures / "basis_shift.json").string() +
                  " --seed 7 --out " + rep2.string()) == 1);
  std::ifstream a(rep1), b(rep2);
  const std::string sa((std::istreambuf_iterator<char>(a)), {});
  const std::string sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(sa == sb);
}

TEST_CASE("CLI: norms and expand commands, input errors") {
  const fs::path dir = scratch_dir();
  const fs::path input = dir / "element.json";
  {
    std::ofstream out(input);
    out << R"({"space": "lp", "p": 1.0, "prefix": [1.0, 0.5],
               "tail": {"type": "zero"}})";
  }
  const fs::path report = dir / "norms.json";
  REQUIRE(run_cli("norms " + input.string() + " --out " + report.string()) == 0);
  const Json r = read_json(report);
  CHECK(r["norm"]["lo"].get<double>() == doctest::Approx(1.5));
  CHECK(r["norm"]["hi"].get<double>() <= 1.5 + 2 * kDefaultSlack);

  const fs::path exp_input = dir / "expand.json";
  {
    std::ofstream out(exp_input);
    out << R"({"element": {"space": "c", "prefix": [2.0, 1.5], "limit": 1.0,
               "tail": {"type": "zero"}}, "k": 2})";
  }
  const fs::path exp_report = dir / "expand_report.json";
  REQUIRE(run_cli("expand " + exp_input.string() + " --out " +
                  exp_report.string()) == 0);
  const Json e = read_json(exp_report);
  CHECK(e["first_index"].get<int>() == 0);
  CHECK(e["coordinates"][0].get<double>() == doctest::Approx(1.0));
  CHECK(e["coordinates"][1].get<double>() == doctest::Approx(1.0));
  CHECK(e["coordinates"][2].get<double>() == doctest::Approx(0.5));

  // malformed JSON and schema violations exit 3
  const fs::path bad = dir / "bad.json";
  {
    std::ofstream out(bad);
    out << "{not json";
  }
  CHECK(run_cli("norms " + bad.string() + " 2>/dev/null") == 3);
  const fs::path mismatch = dir / "mismatch.json";
  {
    std::ofstream out(mismatch);
    out << R"({"family": {"space": "lp", "p": 2.0, "generator": "basis_shift",
               "params": {"scale": 1.0}},
               "candidate": {"space": "c0", "prefix": [], "tail": {"type": "zero"}}})";
  }
  CHECK(run_cli("check-convergence " + mismatch.string() + " 2>/dev/null") == 3);
  // bad eps grid
  CHECK(run_cli("norms " + input.string() + " --eps-grid 1e-3,1e-2 2>/dev/null") == 3);
}
