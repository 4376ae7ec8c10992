#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

// Process-level checks against the installed binary.

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(RADONSVM_CLI_PATH) + " " + args + " 2>/tmp/radonsvm_cli_err.txt";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string cli_stderr() {
  std::ifstream in("/tmp/radonsvm_cli_err.txt");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

fs::path write_temp(const std::string& name, const std::string& contents) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << contents;
  return p;
}

}  // namespace

TEST_CASE("train emits the solution json") {
  fs::path csv = write_temp("three_point.csv", "y,x1,x2\n-1,0,1\n-1,0,-1\n+1,2,0\n");
  CliResult res = run_cli("train " + csv.string());
  REQUIRE(res.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(res.out);
  CHECK(j["schema"] == 1);
  CHECK(j["w"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(j["w"][1].get<double>() == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(j["b"].get<double>() == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(j["margin"].get<double>() == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(j["support_indices"].size() == 3);
}

TEST_CASE("non-separable data exits 1 with the domain message") {
  fs::path csv =
      write_temp("crossing.csv", "y,x1,x2\n+1,3,3\n+1,-3,-3\n-1,-3,3\n-1,3,-3\n");
  CliResult res = run_cli("train " + csv.string());
  CHECK(res.exit_code == 1);
  CHECK(cli_stderr().find("not linearly separable") != std::string::npos);
}

TEST_CASE("malformed csv exits 2 naming the line") {
  fs::path csv = write_temp("broken.csv", "y,x1,x2\n+1,1\n");
  CliResult res = run_cli("train " + csv.string());
  CHECK(res.exit_code == 2);
  CHECK(cli_stderr().find("line 2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CliResult res = run_cli("train --no-such-flag foo.csv");
  CHECK(res.exit_code == 2);
  res = run_cli("");
  CHECK(res.exit_code == 2);
}

TEST_CASE("radon subcommand certifies the square") {
  fs::path csv = write_temp("square.csv", "y,x1,x2\n+1,0,0\n+1,2,0\n-1,0,2\n-1,2,2\n");
  CliResult res = run_cli("radon " + csv.string());
  REQUIRE(res.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(res.out);
  CHECK(j["kind"] == "radon_certificate");
  CHECK(j["radon_point"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(j["radon_point"][1].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("shatter subcommand reports the witness labeling") {
  fs::path csv = write_temp("four.csv", "y,x1,x2\n+1,0,0\n+1,3,0\n+1,0,3\n+1,1,1\n");
  CliResult res = run_cli("shatter " + csv.string());
  REQUIRE(res.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(res.out);
  CHECK(j["shatterable"] == false);
  CHECK(j["witness_labels"].size() == 4);
}

TEST_CASE("analyze writes a plot when asked") {
  fs::path csv = write_temp("three_point2.csv", "y,x1,x2\n-1,0,1\n-1,0,-1\n+1,2,0\n");
  fs::path svg = fs::temp_directory_path() / "three_point.svg";
  std::error_code ec;
  fs::remove(svg, ec);
  CliResult res = run_cli("analyze " + csv.string() + " --plot " + svg.string());
  REQUIRE(res.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(res.out);
  CHECK(j["kind"] == "configuration_report");
  CHECK(j["n_neg_sv"] == 2);
  CHECK(fs::exists(svg));

  // 1-D data cannot be plotted.
  fs::path csv1 = write_temp("pair1d.csv", "y,x1\n-1,-1\n+1,1\n");
  res = run_cli("analyze " + csv1.string() + " --plot " + svg.string());
  CHECK(res.exit_code == 1);
  CHECK(cli_stderr().find("plotting is 2-D only") != std::string::npos);
}

TEST_CASE("audit subcommand names the degeneracy") {
  fs::path csv = write_temp("rect.csv", "y,x1,x2\n-1,0,0\n-1,0,2\n+1,2,0\n+1,2,2\n");
  CliResult res = run_cli("audit " + csv.string());
  REQUIRE(res.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(res.out);
  CHECK(j["support_count"] == 4);
  CHECK(j["cause"] == "parallel_flats");
}

TEST_CASE("census csv streams one record per trial") {
  CliResult res = run_cli("census --a 20 --trials 12 --seed 5 --format csv");
  REQUIRE(res.exit_code == 0);
  std::size_t lines = std::count(res.out.begin(), res.out.end(), '\n');
  CHECK(lines == 13);  // header + 12 trials
  CHECK(res.out.rfind("trial,n_pos_sv,n_neg_sv,margin,flags", 0) == 0);
}

TEST_CASE("census reproduces the reference two-vector rate at a=10") {
  CliResult res = run_cli("census --a 10 --trials 1000 --seed 7");
  REQUIRE(res.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(res.out);
  double frac = j["two_sv_fraction"].get<double>();
  CHECK(frac >= 0.582);
  CHECK(frac <= 0.682);
  CHECK(j["failed_trials"] == 0);
}
