#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string tmp = std::string("/tmp/declab_cli_out_") + std::to_string(rand()) + ".txt";
  std::string cmd = std::string(DECLAB_CLI_PATH) + " " + args + " > " + tmp + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  std::ifstream f(tmp);
  std::stringstream ss;
  ss << f.rdbuf();
  std::remove(tmp.c_str());
  int code = (status >= 256) ? status / 256 : status;
  return {code, ss.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run_cli("building sp --p 2 --k 1").code == 0);
  CHECK(run_cli("verify example-2-3").code == 0);
  // guard violation: usage-style exit
  CHECK(run_cli("building gl --p 2 --k 12").code == 2);
  CHECK(run_cli("nonsense-command").code == 2);
  CHECK(run_cli("building gl --p 9 --k 2").code == 2);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("json output is byte-identical across runs") {
  RunResult a = run_cli("verify theorem-1-1 --p 2 --k 2");
  RunResult b = run_cli("verify theorem-1-1 --p 2 --k 2");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"schema\": \"decomp-lab/1\"") != std::string::npos);
}

TEST_CASE("text format carries the summary") {
  RunResult r = run_cli("building gl --p 2 --k 3 --homology --format text");
  CHECK(r.code == 0);
  CHECK(r.out.find("elements: 14") != std::string::npos);
  CHECK(r.out.find("H~_1 rank 8") != std::string::npos);
}

TEST_CASE("cell limit override tightens the guards") {
  RunResult r = run_cli("building sp --p 2 --k 1");
  CHECK(r.code == 0);
  std::string tmp = "/tmp/declab_env_out.txt";
  std::string cmd = std::string("DECOMP_LAB_MAX_CELLS=2 ") + DECLAB_CLI_PATH +
                    " building sp --p 2 --k 1 > " + tmp + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  CHECK(status / 256 == 2);
  std::remove(tmp.c_str());
}

TEST_CASE("reports can be written to a file") {
  std::string path = "/tmp/declab_report_test.json";
  RunResult r = run_cli("building sp --p 3 --k 1 --out " + path);
  CHECK(r.code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("\"elements\": 4") != std::string::npos);
  std::remove(path.c_str());
}
