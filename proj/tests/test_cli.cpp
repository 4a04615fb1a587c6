#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cvxmetric/json_io.hpp"
#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cmd(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(CVXMETRIC_CLI_PATH) + " " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  return run_cmd(cmd);
}

std::string write_file(const std::string& name, const std::string& text) {
  std::string path = "/tmp/cvxmetric_cli_" + name;
  std::ofstream out(path);
  out << text;
  return path;
}

std::string interval_file() {
  return write_file("interval.json",
                    R"({"type": "hpolytope", "A": [[1.0], [-1.0]], "b": [1.0, 0.0]})");
}

std::string ball_file() {
  return write_file("ball.json", R"({"type": "ball", "center": [0.0, 0.0], "radius": 1.0})");
}

std::string halfline_file() {
  return write_file("halfline.json", R"({"type": "hpolytope", "A": [[-1.0]], "b": [0.0]})");
}

double extract_number(const std::string& doc, const std::string& key, std::size_t from = 0) {
  const std::string needle = "\"" + key + "\":";
  const std::size_t pos = doc.find(needle, from);
  REQUIRE(pos != std::string::npos);
  return std::strtod(doc.c_str() + pos + needle.size(), nullptr);
}

}  // namespace

TEST_CASE("scalar verbs emit single-key documents") {
  const std::string body = interval_file();
  RunResult r = run_cli("tau --body " + body + " --x 0.25 --y 0.5");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"tau\": 3}\n");

  r = run_cli("funk --body " + body + " --x 0.25 --y 0.5");
  CHECK(r.code == 0);
  CHECK(std::fabs(extract_number(r.out, "funk") - std::log(1.5)) <= 1e-15);

  r = run_cli("thompson --body " + body + " --x 0.25 --y 0.5");
  CHECK(r.code == 0);
  CHECK(std::fabs(extract_number(r.out, "thompson") - std::log(2.0)) <= 1e-15);

  r = run_cli("hilbert --body " + ball_file() + " --x 0,0 --y 0.5,0");
  CHECK(r.code == 0);
  CHECK(std::fabs(extract_number(r.out, "hilbert") - 0.5 * std::log(3.0)) <= 1e-12);
}

TEST_CASE("unbounded chords print the inf token and a zero one-sided value") {
  const std::string body = halfline_file();
  RunResult r = run_cli("tau --body " + body + " --x 0.5 --y 1.5");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"tau\": \"inf\"}\n");

  r = run_cli("funk --body " + body + " --x 0.5 --y 1.5");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"funk\": 0}\n");
}

TEST_CASE("usage and input failures exit 1 with diagnostics") {
  const std::string body = interval_file();

  RunResult r = run_cli("tau --x 0.25 --y 0.5", true);
  CHECK(r.code == 1);
  CHECK(r.out.find("--body") != std::string::npos);

  r = run_cli("tau --body " + body + " --y 0.5", true);
  CHECK(r.code == 1);
  CHECK(r.out.find("--x") != std::string::npos);

  r = run_cli("tau --body /tmp/cvxmetric_cli_missing.json --x 0.25 --y 0.5", true);
  CHECK(r.code == 1);

  const std::string bad = write_file("bad.json", "{\"type\": \"ball\",\n  center: [0]}");
  r = run_cli("tau --body " + bad + " --x 0 --y 0", true);
  CHECK(r.code == 1);
  CHECK(r.out.find("line") != std::string::npos);

  r = run_cli("tau --body " + body + " --x 1.0 --y 0.5", true);
  CHECK(r.code == 1);
  CHECK(r.out.find("interior") != std::string::npos);

  r = run_cli("frobnicate", true);
  CHECK(r.code == 1);

  r = run_cli("", true);
  CHECK(r.code == 1);

  r = run_cli("--help");
  CHECK(r.code == 0);
}

TEST_CASE("matrix emits funk by default and csv on request") {
  const std::string body = interval_file();
  const std::string pts = write_file("pts.csv", "0.25\n0.5\n0.75\n");

  RunResult r = run_cli("matrix --body " + body + " --points " + pts);
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0][0].get<double>() == 0.0);
  CHECK(std::fabs(j[0][1].get<double>() - std::log(1.5)) <= 1e-15);
  CHECK(std::fabs(j[1][0].get<double>() - std::log(2.0)) <= 1e-15);  // asymmetric

  r = run_cli("matrix --body " + body + " --points " + pts + " --metric hilbert --format csv");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].substr(0, 2) == "0,");
  const double d01 = std::strtod(rows[0].c_str() + 2, nullptr);
  CHECK(std::fabs(d01 - 0.5 * std::log(3.0)) <= 1e-12);

  r = run_cli("matrix --body " + body + " --points " + pts + " --metric funny", true);
  CHECK(r.code == 1);
  r = run_cli("matrix --body " + body, true);
  CHECK(r.code == 1);
}

TEST_CASE("bounds reports all three interval forms") {
  const std::string body = interval_file();
  RunResult r = run_cli("bounds --body " + body + " --x 0.25 --y 0.5 --m 0 --M 1");
  CHECK(r.code == 0);
  CHECK(extract_number(r.out, "lower") == -0.5);
  CHECK(std::fabs(extract_number(r.out, "upper") - 1.0 / 3.0) <= 1e-15);

  const std::size_t tpos = r.out.find("thompson_form");
  REQUIRE(tpos != std::string::npos);
  CHECK(std::fabs(extract_number(r.out, "upper", tpos) - 0.5) <= 1e-15);

  const std::size_t hpos = r.out.find("hilbert_form");
  REQUIRE(hpos != std::string::npos);
  CHECK(std::fabs(extract_number(r.out, "upper", hpos) - 2.0 / 3.0) <= 1e-15);
  CHECK(extract_number(r.out, "M", hpos) == 1.0);
}

TEST_CASE("certify passes a linear function and reports per-pair lines") {
  const std::string body = interval_file();
  const std::string pairs = write_file("pairs.csv", "0.25\n0.5\n");
  RunResult r = run_cli("certify --body " + body + " --points " + pairs +
                        " --fn linear --m 0 --M 1");
  CHECK(r.code == 0);
  CHECK(extract_number(r.out, "observed") == 0.25);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);

  const std::string odd = write_file("odd.csv", "0.25\n0.5\n0.75\n");
  r = run_cli("certify --body " + body + " --points " + odd + " --fn linear", true);
  CHECK(r.code == 1);
}

TEST_CASE("certify falsifies a non-convex function with exit code 2") {
  const std::string body = interval_file();
  RunResult r = run_cli("certify --body " + body +
                        " --fn sin --m 0 --M 1 --pairs 500 --seed 20260822");
  CHECK(r.code == 2);
  CHECK(r.out.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("extremal summarizes both orientations") {
  const std::string body = interval_file();
  RunResult r = run_cli("extremal --body " + body + " --x 0.25 --y 0.5 --m 0 --M 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"tau\": 3") != std::string::npos);
  CHECK(r.out.find("\"constant\": false") != std::string::npos);
  CHECK(extract_number(r.out, "f_x") == 0.0);
  CHECK(std::fabs(extract_number(r.out, "f_y") - 1.0 / 3.0) <= 1e-15);

  r = run_cli("extremal --body " + body +
              " --x 0.25 --y 0.5 --m 0 --M 1 --orientation lower");
  CHECK(r.code == 0);
  CHECK(extract_number(r.out, "f_x") == 0.5);
  CHECK(extract_number(r.out, "f_y") == 0.0);

  r = run_cli("extremal --body " + halfline_file() + " --x 0.5 --y 1.5 --m 0 --M 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"tau\": \"inf\"") != std::string::npos);
  CHECK(r.out.find("\"constant\": true") != std::string::npos);
  CHECK(extract_number(r.out, "f_x") == 0.0);
}

TEST_CASE("extremal tabulates cell centers over a grid") {
  const std::string body = interval_file();
  RunResult r = run_cli("extremal --body " + body +
                        " --x 0.25 --y 0.5 --m 0 --M 1 --grid 5");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "z1,f");
  double prev = -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    char* rest = nullptr;
    const double z = std::strtod(rows[i].c_str(), &rest);
    REQUIRE(rest != nullptr);
    REQUIRE(*rest == ',');
    const double f = std::strtod(rest + 1, nullptr);
    CHECK(std::fabs(z - (0.1 + 0.2 * static_cast<double>(i - 1))) <= 1e-15);
    CHECK(f >= prev);  // nondecreasing toward the anchor's far side
    prev = f;
  }
  CHECK(std::strtod(rows[1].c_str() + rows[1].find(',') + 1, nullptr) == 0.0);

  r = run_cli("extremal --body " + body + " --x 0.25 --y 0.5 --m 0 --M 1 --grid 1");
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 5) == "z1,f\n");
  CHECK(std::fabs(std::strtod(r.out.c_str() + 5, nullptr) - 0.5) <= 1e-15);

  r = run_cli("extremal --body " + ball_file() +
              " --x 0,0 --y 0.25,0 --m 0 --M 1 --grid 3");
  CHECK(r.code == 0);
  std::istringstream lines2(r.out);
  std::size_t count = 0;
  while (std::getline(lines2, line)) ++count;
  CHECK(count == 10);  // header + 9 interior cells

  const std::string cube = write_file(
      "cube3.json",
      R"({"type": "hpolytope", "A": [[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]], "b": [1,1,1,1,1,1]})");
  r = run_cli("extremal --body " + cube +
              " --x 0,0,0 --y 0.25,0,0 --m 0 --M 1 --grid 3", true);
  CHECK(r.code == 1);
  CHECK(r.out.find("gridding limited to dim <= 2") != std::string::npos);
}

TEST_CASE("gauge prints a bare scalar") {
  RunResult r = run_cli("gauge --body " + interval_file() + " --x 0.5 --y 0.75");
  CHECK(r.code == 0);
  CHECK(r.out == "0.5\n");
}

TEST_CASE("subdiff reports membership and the tested support value") {
  const std::string body = interval_file();
  RunResult r = run_cli("subdiff --body " + body + " --x 0.5 --y 0.5 --m 0 --M 1");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"member\": true, \"support_value\": 0.25}\n");

  r = run_cli("subdiff --body " + body + " --x 0.5 --y 3 --m 0 --M 1");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"member\": false, \"support_value\": 1.5}\n");

  r = run_cli("subdiff --body " + halfline_file() + " --x 1 --y 0.5 --m 0 --M 1");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"member\": false, \"support_value\": \"inf\"}\n");
}

TEST_CASE("seeds come from the flag or the environment") {
  const std::string body = interval_file();
  const std::string args = " certify --body " + body + " --fn random --m 0 --M 1 --pairs 5";
  const std::string cli = CVXMETRIC_CLI_PATH;

  RunResult a = run_cmd("CVXMETRIC_SEED=7 " + cli + args + " 2>/dev/null");
  RunResult b = run_cmd("CVXMETRIC_SEED=7 " + cli + args + " 2>/dev/null");
  RunResult c = run_cmd("CVXMETRIC_SEED=8 " + cli + args + " 2>/dev/null");
  RunResult d = run_cmd(cli + args + " --seed 7 2>/dev/null");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == d.out);
  CHECK(a.out != c.out);

  RunResult bad = run_cmd("CVXMETRIC_SEED=abc " + cli + args + " 2>&1");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("CVXMETRIC_SEED") != std::string::npos);
}

TEST_CASE("serialized bodies reproduce results byte for byte") {
  using namespace cvxmetric;
  const std::string first = write_file(
      "vpoly.json",
      R"({"type": "vpolytope", "vertices": [[0.11, 0.23], [1.07, -0.71], [-0.93, 0.41], [0.29, 1.13]]})");
  ConvexBody body = load_body_file(first);
  const std::string second = write_file("vpoly_rt.json", body_to_json(body));

  const std::string args = " --x 0.1,0.1 --y 0.2,0.15";
  RunResult r1 = run_cli("hilbert --body " + first + args);
  RunResult r2 = run_cli("hilbert --body " + second + args);
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(!r1.out.empty());
}

TEST_CASE("documents can be written to a file instead of stdout") {
  const std::string out = "/tmp/cvxmetric_cli_out.json";
  std::remove(out.c_str());
  RunResult r = run_cli("tau --body " + interval_file() + " --x 0.25 --y 0.5 --out " + out);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contents == "{\"tau\": 3}\n");
  std::remove(out.c_str());
}
