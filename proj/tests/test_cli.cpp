#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "syllobench/dataset.hpp"
#include "syllobench/io.hpp"

using namespace syllobench;

namespace {

namespace fs = std::filesystem;

const std::string kCli = SYLLOBENCH_CLI;

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("syllobench_cli_" + std::to_string(::getpid()) +
                                                "_" + std::to_string(counter()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
  static int counter() {
    static int n = 0;
    return n++;
  }
};

// Runs the binary through the shell and returns its exit code.
int run_cli(const std::string& args) {
  const int rc = std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
  REQUIRE(rc != -1);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -2;
}

// Same, but captures combined output into the given file.
int run_cli_capture(const std::string& args, const std::string& capture) {
  const int rc = std::system((kCli + " " + args + " > " + capture + " 2>&1").c_str());
  REQUIRE(rc != -1);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -2;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

long line_count(const std::string& path) {
  const std::string text = slurp(path);
  return std::count(text.begin(), text.end(), '\n');
}

}  // namespace

TEST_CASE("gen emits a complete population") {
  TempDir dir;
  REQUIRE(run_cli("gen --seed 7 --out " + dir.path.string()) == 0);
  const std::string data = dir.file("dataset.csv");
  REQUIRE(fs::exists(data));
  CHECK(line_count(data) == 1 + 256 * 64);
  CHECK(load_dataset(data).size() == 256);

  // Same seed, same bytes.
  TempDir mirror;
  REQUIRE(run_cli("gen --seed 7 --noise 0.25 --out " + dir.path.string()) == 0);
  REQUIRE(run_cli("gen --seed 7 --noise 0.25 --out " + mirror.path.string()) == 0);
  CHECK(slurp(data) == slurp(mirror.file("dataset.csv")));
}

TEST_CASE("gen validates its arguments") {
  TempDir dir;
  CHECK(run_cli("gen --seed 7 --noise 1.5 --out " + dir.path.string()) == 2);

  // Without --seed or the environment fallback the parser refuses to run.
  const int rc = std::system(("env -u SYLLOBENCH_SEED " + kCli + " gen --out " + dir.path.string() +
                              " > /dev/null 2>&1")
                                 .c_str());
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  CHECK(WEXITSTATUS(rc) == 2);
}

TEST_CASE("the seed option reads its environment fallback") {
  TempDir dir;
  const int rc = std::system(("SYLLOBENCH_SEED=7 " + kCli + " gen --out " + dir.path.string() +
                              " > /dev/null 2>&1")
                                 .c_str());
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  CHECK(WEXITSTATUS(rc) == 0);

  TempDir mirror;
  REQUIRE(run_cli("gen --seed 7 --out " + mirror.path.string()) == 0);
  CHECK(slurp(dir.file("dataset.csv")) == slurp(mirror.file("dataset.csv")));
}

TEST_CASE("validate accepts generated data and rejects corrupt data") {
  TempDir dir;
  REQUIRE(run_cli("gen --seed 3 --out " + dir.path.string()) == 0);
  const std::string data = dir.file("dataset.csv");
  CHECK(run_cli("validate --data " + data) == 0);

  std::ofstream(data, std::ios::app) << "zzz\n";
  const std::string err = dir.file("err.txt");
  CHECK(run_cli_capture("validate --data " + data, err) == 1);
  CHECK(slurp(err).find("16386") != std::string::npos);

  CHECK(run_cli("validate --data " + dir.file("absent.csv")) == 1);
}

TEST_CASE("run writes trials and summary for the requested models") {
  TempDir dir;
  REQUIRE(run_cli("gen --seed 5 --out " + dir.path.string()) == 0);
  const std::string data = dir.file("dataset.csv");

  const std::string out1 = (dir.path / "r1").string();
  REQUIRE(run_cli("run --data " + data + " --models mfa,random --seed 5 --jobs 4 --out " + out1) ==
          0);
  REQUIRE(fs::exists(out1 + "/trials.csv"));
  REQUIRE(fs::exists(out1 + "/summary.json"));

  const nlohmann::json summary = nlohmann::json::parse(slurp(out1 + "/summary.json"));
  REQUIRE(summary["models"].size() == 2);
  CHECK(summary["models"].contains("mfa"));
  CHECK(summary["models"].contains("random"));
  CHECK(summary["config"]["seed"] == 5);
  const long trials = line_count(out1 + "/trials.csv") - 1;
  CHECK(trials == 2 * 256 * 64);

  // A repeat run with the same seed reproduces the trial log bit for bit.
  const std::string out2 = (dir.path / "r2").string();
  REQUIRE(run_cli("run --data " + data + " --models mfa,random --seed 5 --jobs 1 --out " + out2) ==
          0);
  CHECK(slurp(out1 + "/trials.csv") == slurp(out2 + "/trials.csv"));
}

TEST_CASE("run rejects unknown models and missing inputs") {
  TempDir dir;
  REQUIRE(run_cli("gen --seed 5 --out " + dir.path.string()) == 0);
  const std::string data = dir.file("dataset.csv");
  const std::string err = dir.file("err.txt");

  CHECK(run_cli_capture("run --data " + data + " --models bogus --seed 5", err) == 2);
  CHECK(slurp(err).find("ubcf-fit") != std::string::npos);  // error lists valid names

  CHECK(run_cli("run --data " + dir.file("absent.csv") + " --models mfa --seed 5 --out " +
                (dir.path / "x").string()) == 1);
  CHECK(run_cli("run --data " + data + " --models table:" + dir.file("absent.json") +
                " --seed 5 --out " + (dir.path / "y").string()) == 1);
}

TEST_CASE("entropy reports per-task distributions and optional accuracy curves") {
  TempDir dir;
  REQUIRE(run_cli("gen --seed 9 --noise 0.5 --out " + dir.path.string()) == 0);
  const std::string data = dir.file("dataset.csv");

  const std::string out1 = (dir.path / "e1").string();
  REQUIRE(run_cli("entropy --data " + data + " --out " + out1) == 0);
  REQUIRE(fs::exists(out1 + "/entropy.csv"));
  CHECK(line_count(out1 + "/entropy.csv") == 1 + 64);
  CHECK(!fs::exists(out1 + "/entropy_curve.csv"));

  const std::string run_out = (dir.path / "r").string();
  REQUIRE(run_cli("run --data " + data + " --models mfa --seed 9 --jobs 4 --out " + run_out) == 0);
  const std::string out2 = (dir.path / "e2").string();
  REQUIRE(run_cli("entropy --data " + data + " --trials " + run_out + "/trials.csv --bins 4 " +
                  "--out " + out2) == 0);
  REQUIRE(fs::exists(out2 + "/entropy_curve.csv"));
  REQUIRE(fs::exists(out2 + "/entropy_scatter.csv"));
  CHECK(line_count(out2 + "/entropy_curve.csv") <= 1 + 4);
  CHECK(line_count(out2 + "/entropy_scatter.csv") == 1 + 64);
}

TEST_CASE("curve sweeps noise levels and reports both axes") {
  TempDir dir;
  REQUIRE(run_cli("curve --grid 0,0.5 --models mfa --seed 13 --jobs 4 --out " + dir.path.string()) ==
          0);
  const std::string curve = dir.file("curve.csv");
  const std::string curve_entropy = dir.file("curve_entropy.csv");
  REQUIRE(fs::exists(curve));
  REQUIRE(fs::exists(curve_entropy));
  CHECK(line_count(curve) == 1 + 2);
  CHECK(line_count(curve_entropy) == 1 + 2);
  CHECK(slurp(curve).rfind("x,model,accuracy,n\n0,mfa,", 0) == 0);

  CHECK(run_cli("curve --grid 0,2 --models mfa --seed 13 --out " + dir.path.string()) == 2);
  CHECK(run_cli("curve --grid '' --models mfa --seed 13 --out " + dir.path.string()) == 2);
}

TEST_CASE("curve at zero noise matches a plain run on generated data") {
  TempDir dir;
  REQUIRE(run_cli("curve --grid 0 --models mfa --seed 2 --out " + dir.path.string()) == 0);

  TempDir gen_dir;
  REQUIRE(run_cli("gen --seed 2 --out " + gen_dir.path.string()) == 0);
  const std::string run_out = (gen_dir.path / "r").string();
  REQUIRE(run_cli("run --data " + gen_dir.file("dataset.csv") +
                  " --models mfa --seed 2 --jobs 4 --out " + run_out) == 0);
  const nlohmann::json summary = nlohmann::json::parse(slurp(run_out + "/summary.json"));
  const double run_accuracy = summary["models"]["mfa"]["accuracy"].get<double>();

  std::ifstream in(dir.file("curve.csv"));
  std::string line;
  std::getline(in, line);  // header
  REQUIRE(std::getline(in, line));
  std::stringstream row(line);
  std::string x, model, accuracy, n;
  std::getline(row, x, ',');
  std::getline(row, model, ',');
  std::getline(row, accuracy, ',');
  std::getline(row, n, ',');
  CHECK(x == "0");
  CHECK(model == "mfa");
  CHECK(n == std::to_string(256 * 64));
  CHECK(std::abs(std::stod(accuracy) - run_accuracy) < 1e-9);
}

TEST_CASE("top level flags and bad invocations use conventional exit codes") {
  TempDir dir;
  const std::string out = dir.file("out.txt");
  CHECK(run_cli_capture("--version", out) == 0);
  CHECK(slurp(out).find("0.1.0") != std::string::npos);
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("run --help") == 0);
  CHECK(run_cli("") == 2);           // a subcommand is required
  CHECK(run_cli("frobnicate") == 2);  // unknown subcommand
}
