#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kempner/divisor_product.hpp"
#include "kempner/factored.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string base = "/tmp/kempner_cli_" + std::to_string(++counter);
  std::string out = base + ".out", err = base + ".err";
  std::string cmd = std::string("\"") + KEMPNER_CLI_PATH + "\" " + args + " > " + out +
                    " 2> " + err;
  int status = std::system(cmd.c_str());
  RunResult r{WEXITSTATUS(status), slurp(out), slurp(err)};
  std::remove(out.c_str());
  std::remove(err.c_str());
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval spot values") {
  CHECK(run_cli("eval S 16").out == "6\n");
  CHECK(run_cli("eval S 16").exit_code == 0);
  CHECK(run_cli("eval nu4 3960").out == "6\n");
  CHECK(run_cli("eval S-rat 3/4").out == "3/2\n");
  CHECK(run_cli("eval Sp 5 2000").out == "8010\n");
  CHECK(run_cli("eval S4 3960").out == "5\n");
  CHECK(run_cli("eval theta 3960").out ==
        kempner::theta_paper(kempner::factorize(3960)).objective.str() + "\n");
  CHECK(run_cli("eval theta-exact 9").out == "6\n");
  CHECK(run_cli("eval psi 10").out == "2520\n");
  CHECK(run_cli("eval mangoldt 8").out == "2\n");
  CHECK(run_cli("eval mangoldt 6").out == "1\n");
  CHECK(run_cli("eval S-bar 4/3").out == "2/3\n");
}

TEST_CASE("s1 flag threads through") {
  CHECK(run_cli("eval S 1").out == "1\n");
  CHECK(run_cli("--s1 0 eval S 1").out == "0\n");
  CHECK(run_cli("--s1 0 eval s 6").out == "-2\n");
  CHECK(run_cli("--s1 1 eval s 6").out == "-1\n");
}

TEST_CASE("table csv") {
  RunResult r = run_cli("table S 1 5");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "n,function,value,s1");
  CHECK(lines[1] == "1,S,1,1");
  CHECK(lines[5] == "5,S,5,1");

  RunResult rs = run_cli("table s 1 8 --s1 1");  // trailing global flag
  auto slines = lines_of(rs.out);
  REQUIRE(slines.size() == 9);
  std::vector<std::string> expect{"1", "1", "2", "2", "4", "-1", "6", "0"};
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(slines[i + 1] == std::to_string(i + 1) + ",s," + expect[i] + ",1");
}

TEST_CASE("csv and jsonl carry identical values") {
  RunResult csv = run_cli("table S4 1 12 --format csv");
  RunResult jsonl = run_cli("table S4 1 12 --format jsonl");
  auto clines = lines_of(csv.out);
  auto jlines = lines_of(jsonl.out);
  REQUIRE(clines.size() == 13);
  REQUIRE(jlines.size() == 12);
  for (std::size_t i = 0; i < 12; ++i) {
    std::string cval = clines[i + 1];
    cval = cval.substr(cval.find(",S4,") + 4);
    cval = cval.substr(0, cval.find(','));
    std::string needle = "\"value\":\"" + cval + "\"";
    CHECK(jlines[i].find(needle) != std::string::npos);
    CHECK(jlines[i].find("\"n\":" + std::to_string(i + 1)) != std::string::npos);
  }
  // spec table example
  RunResult s4 = run_cli("table S4 1 6");
  auto slines = lines_of(s4.out);
  std::vector<std::string> expect{"1", "2", "1", "2", "1", "3"};
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(slines[i + 1] == std::to_string(i + 1) + ",S4," + expect[i] + ",1");
}

TEST_CASE("exit codes") {
  CHECK(run_cli("eval S6 1").exit_code == 3);   // domain
  CHECK(run_cli("eval S 0").exit_code == 3);    // domain
  CHECK(run_cli("eval S x").exit_code == 2);    // usage
  CHECK(run_cli("eval nosuch 5").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);            // missing subcommand
  CHECK(run_cli("verify nosuite").exit_code == 2);
  CHECK(run_cli("table S 5 1").exit_code == 2);
  CHECK(run_cli("--s1 2 eval S 3").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("eval S-rat 0/4").exit_code == 2);
  CHECK(run_cli("--s1 0 eval S-rat 1/4").exit_code == 3);
}

TEST_CASE("det command") {
  RunResult r7 = run_cli("det gcd 7 --s1 1");
  CHECK(r7.exit_code == 0);
  CHECK(r7.out == "det=-96 product=-96\n");
  RunResult r8 = run_cli("det gcd 8 --s1 1");
  CHECK(r8.exit_code == 0);
  CHECK(r8.out == "det=0 product=0\n");
  RunResult sh = run_cli("det shifted --n 2 --r 10");
  CHECK(sh.exit_code == 0);
  CHECK(sh.out.substr(0, 4) == "det=");
}

TEST_CASE("verify det reports the determinant table") {
  RunResult r = run_cli("verify det --r 12 --s1 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Delta(7) = -96") != std::string::npos);
  CHECK(r.out.find("Delta(8) = 0") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify suites at reduced scale") {
  CHECK(run_cli("verify kempner --pmax 13 --amax 60").exit_code == 0);
  CHECK(run_cli("verify scales --n 300").exit_code == 0);
  CHECK(run_cli("verify gronas --n 2000").exit_code == 0);
  CHECK(run_cli("verify s4 --n 2000").exit_code == 0);
  CHECK(run_cli("verify lcm --n 2000").exit_code == 0);
  RunResult audit = run_cli("verify audit --n 100");
  CHECK(audit.exit_code == 0);
  CHECK(audit.out.find("12,-3,-1") != std::string::npos);
}

TEST_CASE("theta command") {
  CHECK(run_cli("theta 3960 --mode paper").exit_code == 0);
  CHECK(run_cli("theta 9 --mode exact").out == "6\n");
  RunResult sumt = run_cli("theta 8 --mode sumt");
  CHECK(sumt.exit_code == 0);
  CHECK(sumt.out.find("x=[2.0000000") != std::string::npos);
  CHECK(sumt.out.find("converged=true") != std::string::npos);
}

}  // TEST_SUITE
