#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "osbb/instance_json.hpp"
#include "osbb/mps.hpp"
#include "osbb/random_instance.hpp"
#include "support.hpp"

using namespace osbb;
using osbb::testing::example1_problem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

const std::string kFixtures = OSBB_FIXTURE_DIR;

}  // namespace

TEST_CASE("mps fixture matches the hand-built instance") {
  MilpProblem p = parse_mps(slurp(kFixtures + "/example1.mps"));
  CHECK(p.num_vars() == 3);
  CHECK(p.num_rows() == 4);
  CHECK(p.objective == std::vector<double>{1.0, -2.0, -6.0});
  for (int i = 0; i < 3; ++i) {
    CHECK(p.integral[i]);
    CHECK(p.lower[i] == 0.0);
    CHECK(p.upper[i] == 1.0);
  }
  MilpProblem expect = example1_problem();
  CHECK(p.rows == expect.rows);
}

TEST_CASE("json fixture matches the hand-built instance") {
  MilpProblem p = problem_from_json(slurp(kFixtures + "/example1.json"));
  MilpProblem expect = example1_problem();
  CHECK(p.objective == expect.objective);
  CHECK(p.rows == expect.rows);
  CHECK(p.integral == expect.integral);
}

TEST_CASE("mps without columns is an empty-problem error") {
  std::string text = "NAME EMPTY\nENDATA\n";
  CHECK_THROWS_WITH_AS(parse_mps(text), doctest::Contains("empty problem"), ParseError);
}

TEST_CASE("BV bound marks a binary column") {
  std::string text =
      "NAME T\n"
      "ROWS\n"
      " N obj\n"
      " L r1\n"
      "COLUMNS\n"
      "    x obj 1.0 r1 1.0\n"
      "RHS\n"
      "    rhs r1 4.0\n"
      "BOUNDS\n"
      " BV bnd x\n"
      "ENDATA\n";
  MilpProblem p = parse_mps(text);
  CHECK(p.lower[0] == 0.0);
  CHECK(p.upper[0] == 1.0);
  CHECK(p.integral[0]);
}

TEST_CASE("unknown sections, duplicates and RANGES are rejected with a line") {
  CHECK_THROWS_WITH_AS(parse_mps("NAME T\nGARBAGE\nENDATA\n"),
                       doctest::Contains("unknown section"), ParseError);
  std::string dup =
      "NAME T\nROWS\n N obj\n G r1\n G r1\nCOLUMNS\n    x obj 1.0\nENDATA\n";
  CHECK_THROWS_WITH_AS(parse_mps(dup), doctest::Contains("duplicate row"), ParseError);
  std::string ranges =
      "NAME T\nROWS\n N obj\n G r1\nCOLUMNS\n    x r1 1.0\nRANGES\nENDATA\n";
  CHECK_THROWS_WITH_AS(parse_mps(ranges), doctest::Contains("RANGES"), ParseError);
  std::string dupcoef =
      "NAME T\nROWS\n N obj\n G r1\nCOLUMNS\n    x r1 1.0 r1 2.0\nRHS\nENDATA\n";
  CHECK_THROWS_WITH_AS(parse_mps(dupcoef), doctest::Contains("duplicate coefficient"),
                       ParseError);
}

TEST_CASE("corrupting any numeric field yields a located parse error") {
  std::string text = slurp(kFixtures + "/example1.mps");
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  int mutations = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    std::istringstream toks(line);
    std::string tok;
    std::vector<std::string> parts;
    while (toks >> tok) parts.push_back(tok);
    for (size_t t = 0; t < parts.size(); ++t) {
      // numeric fields carry a decimal point in this fixture
      if (parts[t].find('.') == std::string::npos) continue;
      std::vector<std::string> mutated = parts;
      mutated[t] = parts[t] + "q";
      std::ostringstream rebuilt;
      std::istringstream again(text);
      std::string l2;
      int n2 = 0;
      while (std::getline(again, l2)) {
        ++n2;
        if (n2 == line_no) {
          rebuilt << "    ";
          for (size_t k = 0; k < mutated.size(); ++k) rebuilt << mutated[k] << "  ";
          rebuilt << "\n";
        } else {
          rebuilt << l2 << "\n";
        }
      }
      ++mutations;
      try {
        parse_mps(rebuilt.str());
        FAIL("mutation accepted at line ", line_no);
      } catch (const ParseError& e) {
        CHECK(e.line == line_no);
      }
    }
  }
  CHECK(mutations >= 19);  // every numeric token in the fixture
}

TEST_CASE("json round trip is structurally exact") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GeneratorProfile prof;
    prof.continuous_fraction = seed % 4 == 0 ? 0.3 : 0.0;
    MilpProblem p = generate_random(seed, 1 + seed % 12, seed % 10, prof);
    MilpProblem back = problem_from_json(problem_to_json(p));
    CHECK(back == p);
  }
  MilpProblem p = example1_problem();
  CHECK(problem_from_json(problem_to_json(p)) == p);
}

TEST_CASE("validation rejects non-finite data and crossed bounds") {
  MilpProblem p = example1_problem();
  SUBCASE("infinite objective coefficient") {
    p.objective[1] = kInf;
    CHECK_THROWS_AS(p.validate(), Error);
  }
  SUBCASE("NaN row coefficient") {
    p.rows[0].coef[0].second = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(p.validate(), Error);
  }
  SUBCASE("lower bound above upper bound names the variable") {
    p.lower[2] = 2.0;
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("x3"), Error);
  }
}

TEST_CASE("maximization inputs are converted to minimization") {
  std::string text = R"({
    "name": "t", "sense": "max", "objective": [2],
    "vars": [{"name": "x", "lb": 0, "ub": 3, "integral": false}],
    "rows": []
  })";
  MilpProblem p = problem_from_json(text);
  CHECK(p.converted_from_max);
  CHECK(p.objective[0] == -2.0);
}

TEST_CASE("an RHS entry on the objective row becomes a constant term") {
  std::string text =
      "NAME OFFSET\n"
      "ROWS\n"
      " N obj\n"
      " G r1\n"
      "COLUMNS\n"
      "    x obj 2.0 r1 1.0\n"
      "RHS\n"
      "    rhs r1 1.0 obj -5.0\n"
      "BOUNDS\n"
      " UP bnd x 4.0\n"
      "ENDATA\n";
  MilpProblem p = parse_mps(text);
  CHECK(p.objective_offset == 5.0);
  MilpProblem back = problem_from_json(problem_to_json(p));
  CHECK(back.objective_offset == 5.0);
  CHECK(back == p);
}

TEST_CASE("generator is reproducible and seed-sensitive") {
  MilpProblem a = generate_random(1, 3, 2);
  MilpProblem b = generate_random(1, 3, 2);
  MilpProblem c = generate_random(2, 3, 2);
  CHECK(a == b);
  CHECK(a != c);
}
