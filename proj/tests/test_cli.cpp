#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

const std::string kCli = OSBB_CLI_BIN;
const std::string kFixtures = OSBB_FIXTURE_DIR;

int run(const std::string& args, std::string* output = nullptr) {
  std::string out_file = "/tmp/osbb_cli_test_out.txt";
  std::string cmd = kCli + " " + args + " > " + out_file + " 2>&1";
  int code = std::system(cmd.c_str());
  if (output) {
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    *output = buf.str();
  }
  return WEXITSTATUS(code);
}

}  // namespace

TEST_CASE("solve exits 0 on the optimal fixture and prints the objective") {
  std::string out;
  int code = run("solve " + kFixtures + "/example1.json --strategy pseudodual", &out);
  CHECK(code == 0);
  CHECK(out.find("status:        optimal") != std::string::npos);
  CHECK(out.find("objective:     -2") != std::string::npos);
}

TEST_CASE("solve agrees across input formats and feature toggles") {
  for (const std::string& extra :
       {std::string("--max-dive-depth 0"), std::string("--trim off"),
        std::string("--strategy bottom --dive-direction up"),
        std::string("--bounding 3 --strategy top"),
        std::string("--split-threshold 2 --seed 7 --dive-direction down"),
        std::string("--bounding off --strategy pseudo --time-limit 30")}) {
    std::string out;
    int code = run("solve " + kFixtures + "/example1.mps " + extra, &out);
    CHECK(code == 0);
    CHECK(out.find("objective:     -2") != std::string::npos);
  }
}

TEST_CASE("solve reports distinct exit codes") {
  // missing file
  CHECK(run("solve /nonexistent.json") == 1);
  // unparsable file
  std::ofstream bad("/tmp/osbb_bad.mps");
  bad << "NAME X\nROWS\n N obj\nGARBAGE\n";
  bad.close();
  std::string out;
  CHECK(run("solve /tmp/osbb_bad.mps", &out) == 1);
  CHECK(out.find("error:") != std::string::npos);
  // node limit: not exposed as a flag, so emulate with a tiny time limit
  // by an infeasible instance instead (exit 2)
  std::ofstream inf("/tmp/osbb_infeasible.json");
  inf << R"({"name":"inf","sense":"min","objective":[1],
            "vars":[{"name":"x","lb":0,"ub":1,"integral":true}],
            "rows":[{"coefs":{"x":1},"sense":">=","rhs":2}]})";
  inf.close();
  CHECK(run("solve /tmp/osbb_infeasible.json") == 2);
}

TEST_CASE("the trace flag writes one JSONL record per node") {
  std::string out;
  int code = run("solve " + kFixtures + "/example1.json --trim off " +
                     "--strategy bottom --dive-direction up --trace /tmp/osbb_trace.jsonl",
                 &out);
  CHECK(code == 0);
  std::ifstream trace("/tmp/osbb_trace.jsonl");
  int lines = 0;
  std::string line;
  while (std::getline(trace, line)) {
    ++lines;
    CHECK(line.find("\"node\":") != std::string::npos);
    CHECK(line.find("\"action\":") != std::string::npos);
  }
  CHECK(lines > 4);
}

TEST_CASE("compare emits a profile and replays it byte-for-byte") {
  std::string out;
  int code = run(
      "compare --gen 8:7:5:31 --config bottom=--strategy\\ bottom "
      "--config depth0=--max-dive-depth\\ 0 --metric nodes "
      "--out /tmp/osbb_profile.csv --records /tmp/osbb_records.json",
      &out);
  CHECK(code == 0);
  std::ifstream csv("/tmp/osbb_profile.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "tau,bottom,depth0");

  std::string replay_out;
  int code2 = run("compare --replay /tmp/osbb_records.json --metric nodes "
                  "--out /tmp/osbb_profile2.csv",
                  &replay_out);
  CHECK(code2 == 0);
  std::ifstream a("/tmp/osbb_profile.csv"), b("/tmp/osbb_profile2.csv");
  std::ostringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(!sa.str().empty());
}
