#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = 0;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                         "/ladders_cli_test_out";
  std::string cmd = std::string(CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  std::ifstream in(out_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

}  // namespace

TEST_CASE("expectations: finish row is zero") {
  auto r = run("expectations --board " BOARDS_DIR "/paper-figure2.json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("100,0,0") != std::string::npos);
  CHECK(r.output.rfind("state,expected_moves,expected_moves_exact", 0) == 0);
}

TEST_CASE("expectations: missing board file fails with nonzero exit") {
  auto r = run("expectations --board /no/such/board.json");
  CHECK(r.exit_code != 0);
}

TEST_CASE("winmatrix: mini10 diagonal of X is zero") {
  auto r = run("winmatrix --board " BOARDS_DIR "/mini10.json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("# Q") != std::string::npos);
  CHECK(r.output.find("# X") != std::string::npos);
}

TEST_CASE("cycles: paper board default threshold includes the best triple") {
  auto r = run("cycles --board " BOARDS_DIR "/paper-figure2.json");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "i,j,k,edge_ij,edge_jk,edge_ki,c");
  // 69>79>73 is present and has the largest bottleneck of the listed rows
  bool found = false;
  double best_c = -1.0, c_697973 = -1.0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    auto last = line.rfind(',');
    double c = std::stod(line.substr(last + 1));
    best_c = std::max(best_c, c);
    if (line.rfind("69,79,73,", 0) == 0) {
      found = true;
      c_697973 = c;
    }
  }
  CHECK(found);
  CHECK(c_697973 == best_c);
}

TEST_CASE("cycles: impossible threshold still exits zero") {
  auto r = run("cycles --board " BOARDS_DIR "/mini10.json --cmin 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("i,j,k") != std::string::npos);
}

TEST_CASE("simulate: same seed gives byte-identical output") {
  std::string args = "simulate --board " BOARDS_DIR
                     "/mini10.json --method perstart --states 2,6 "
                     "--games 2000 --seed 7";
  auto a = run(args);
  auto b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.rfind("state,duration,count", 0) == 0);
  CHECK(a.output.find("i,j,win,loss,draw,edge,stderr,method,games,seed") !=
        std::string::npos);

  auto c = run(args + "1");  // different seed
  CHECK(c.output != a.output);
}

TEST_CASE("simulate: paired and reuse methods run") {
  auto p = run("simulate --board " BOARDS_DIR
               "/mini10.json --method paired --states 2,6 --games 2000");
  CHECK(p.exit_code == 0);
  CHECK(p.output.find(",paired,") != std::string::npos);

  auto t = run("simulate --board " BOARDS_DIR
               "/mini10.json --method reuse --games 500");
  CHECK(t.exit_code == 0);
  CHECK(t.output.rfind("state,duration,count", 0) == 0);
}

TEST_CASE("dice: three-face file prints 5/9") {
  auto r = run("dice " DICE_DIR "/three-face.json --mode strict");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("5/9") != std::string::npos);
  CHECK(r.output.find("cycle,strict,yes") != std::string::npos);
}

TEST_CASE("dice: weighted file shows the 2/27 edge for B vs C") {
  auto r = run("dice " DICE_DIR "/weighted.json --mode positive");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("B,C,4/9,5/27,10/27,2/27") != std::string::npos);
  CHECK(r.output.find("cycle,positive,yes") != std::string::npos);
}

TEST_CASE("dice: single die file is an error") {
  auto r = run("dice " DICE_DIR "/single.json");
  CHECK(r.exit_code != 0);
}

TEST_CASE("expectations --fg writes the distribution CSV") {
  std::string path = "/tmp/ladders_cli_fg_test.csv";
  auto r = run("expectations --board " BOARDS_DIR "/mini10.json --fg " + path +
               " --fg-cap 3 --out /dev/null");
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in);
  std::string line;
  std::getline(in, line);
  CHECK(line == "state,s,f,g");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 9 * 4);  // 9 states, s = 0..3
  std::remove(path.c_str());
}

TEST_CASE("--out writes the report to a file") {
  std::string path = "/tmp/ladders_cli_out_test.csv";
  auto r = run("expectations --board " BOARDS_DIR "/mini10.json --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in);
  std::string header;
  std::getline(in, header);
  CHECK(header == "state,expected_moves,expected_moves_exact");
  std::remove(path.c_str());
}
