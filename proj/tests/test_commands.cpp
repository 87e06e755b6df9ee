#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "galab/commands.hpp"
#include "galab/io.hpp"

using namespace galab;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "galab_cmd_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& content) {
  const auto path = dir / name;
  std::ofstream out(path, std::ios::trunc);
  out << content;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n' ? 1 : 0;
  return n;
}

const char* kRunConfig = R"([engine]
population = 40
generations = 20
seed = 3
[genome]
length = 64
[operators]
p_m = 0.01
crossover = one_point_flat
[landscape]
kind = onemax
)";

}  // namespace

TEST_CASE("cmd_run writes a deterministic trace and reports the final best") {
  const auto dir = fresh_dir("run");
  const auto config = write_file(dir, "exp.ini", kRunConfig);

  RunOptions opts;
  opts.config_path = config;
  opts.out_dir = dir / "out";
  CHECK(cmd_run(opts) == 0);

  const auto trace_path = dir / "out" / "trace.csv";
  REQUIRE(fs::exists(trace_path));
  const std::string first = slurp(trace_path);
  CHECK(count_lines(first) == 22);  // header + generations 0..20
  CHECK(first.rfind("generation,best,mean,min,fixed_zero_count,diversity,evaluations\n", 0) ==
        0);

  CHECK(cmd_run(opts) == 0);
  CHECK(slurp(trace_path) == first);  // byte-identical rerun
}

TEST_CASE("cmd_run rejects an invalid config with exit code 1") {
  const auto dir = fresh_dir("run_bad");
  const auto config = write_file(dir, "bad.ini",
                                 "[engine]\nsurvivor_fraction = 0\n[landscape]\nkind = onemax\n");
  RunOptions opts;
  opts.config_path = config;
  opts.out_dir = dir / "out";
  CHECK(cmd_run(opts) == 1);
}

TEST_CASE("cmd_run reports an unwritable output path with exit code 2") {
  const auto dir = fresh_dir("run_unwritable");
  const auto config = write_file(dir, "exp.ini", kRunConfig);
  const auto blocker = write_file(dir, "blocker", "");
  RunOptions opts;
  opts.config_path = config;
  opts.out_dir = blocker / "out";  // parent is a regular file
  CHECK(cmd_run(opts) == 2);
}

TEST_CASE("cmd_run honors seed and out-dir overrides") {
  const auto dir = fresh_dir("run_override");
  const auto config = write_file(dir, "exp.ini", kRunConfig);
  RunOptions opts;
  opts.config_path = config;
  opts.out_dir = dir / "a";
  CHECK(cmd_run(opts) == 0);
  opts.out_dir = dir / "b";
  opts.seed = 99;
  CHECK(cmd_run(opts) == 0);
  CHECK(slurp(dir / "a" / "trace.csv") != slurp(dir / "b" / "trace.csv"));
}

TEST_CASE("cmd_fig1 emits one histogram pair per seed") {
  const auto dir = fresh_dir("fig1");
  Fig1Options opts;
  opts.seeds = {1, 2, 3};
  opts.out_dir = dir;
  CHECK(cmd_fig1(opts) == 0);
  for (auto seed : {1, 2, 3}) {
    const auto tag = "seed" + std::to_string(seed);
    REQUIRE(fs::exists(dir / ("fig1_random_hist_" + tag + ".csv")));
    REQUIRE(fs::exists(dir / ("fig1_ga_hist_" + tag + ".csv")));
  }
  // Histogram mass equals the sample sizes.
  std::istringstream random_csv(slurp(dir / "fig1_random_hist_seed1.csv"));
  std::string line;
  std::getline(random_csv, line);  // header
  std::size_t total = 0;
  while (std::getline(random_csv, line)) {
    total += std::stoull(line.substr(line.find(',') + 1));
  }
  CHECK(total == 5000);
}

TEST_CASE("cmd_fig2 writes the trajectory and the analytic sidecar") {
  const auto dir = fresh_dir("fig2");
  Fig2Options opts;
  opts.seeds = {1};
  opts.out_dir = dir;
  CHECK(cmd_fig2(opts) == 0);
  REQUIRE(fs::exists(dir / "fig2_trace_seed1.csv"));
  const std::string sidecar = slurp(dir / "fig2_analytics_seed1.csv");
  CHECK(sidecar.find("allele_loss_probability_n100_L100,7.88860905") != std::string::npos);
  CHECK(sidecar.find("generations_to_fix_estimate,100") != std::string::npos);
  CHECK(sidecar.find("gain_probability_k_observed,") != std::string::npos);
  CHECK(sidecar.find("time_to_fix_observed,") != std::string::npos);

  // The combined trajectory covers the base run plus the mutation phase.
  const std::string trace = slurp(dir / "fig2_trace_seed1.csv");
  CHECK(count_lines(trace) == 1 + 51 + 500);
}

TEST_CASE("cmd_fig2 rejects a zero mutation rate") {
  Fig2Options opts;
  opts.p_m = 0.0;
  CHECK(cmd_fig2(opts) == 1);
}

TEST_CASE("cmd_autocorr validates the walk length") {
  AutocorrOptions opts;
  opts.walk_steps = 10;
  CHECK(cmd_autocorr(opts) == 1);
}

TEST_CASE("cmd_autocorr walks and writes the series") {
  const auto dir = fresh_dir("autocorr");
  AutocorrOptions opts;
  opts.landscape = "random_table";
  opts.length = 40;
  opts.walk_steps = 1000;
  opts.out_dir = dir;
  CHECK(cmd_autocorr(opts) == 0);
  const std::string walk = slurp(dir / "autocorr_walk_seed1.csv");
  CHECK(count_lines(walk) == 1002);  // header + 1001 fitness values
}

TEST_CASE("cmd_compare reports three methods at one budget") {
  const auto dir = fresh_dir("compare");
  const std::string config = std::string(kRunConfig) + R"(
[compare]
budget = 400
seeds = 1,2,3,4,5
[biomimetic]
init = homogeneous
p_m = 0.02
)";
  const auto path = write_file(dir, "cmp.ini", config);
  CompareOptions opts;
  opts.config_path = path;
  opts.out_dir = dir / "out";
  CHECK(cmd_compare(opts) == 0);
  const std::string report = slurp(dir / "out" / "compare_report.csv");
  CHECK(count_lines(report) == 4);
  CHECK(report.find("classical,400,") != std::string::npos);
  CHECK(report.find("biomimetic,400,") != std::string::npos);
  CHECK(report.find("random_search,400,") != std::string::npos);
  CHECK(report.find("1;2;3;4;5") != std::string::npos);
}

TEST_CASE("cmd_compare requires a budget compatible with the population") {
  const auto dir = fresh_dir("compare_bad");
  const std::string config = std::string(kRunConfig) + R"(
[compare]
budget = 401
[biomimetic]
init = homogeneous
)";
  const auto path = write_file(dir, "cmp.ini", config);
  CompareOptions opts;
  opts.config_path = path;
  opts.out_dir = dir / "out";
  CHECK(cmd_compare(opts) == 1);
}

TEST_CASE("cmd_compare requires the biomimetic section") {
  const auto dir = fresh_dir("compare_missing");
  const std::string config = std::string(kRunConfig) + "\n[compare]\nbudget = 400\n";
  const auto path = write_file(dir, "cmp.ini", config);
  CompareOptions opts;
  opts.config_path = path;
  CHECK(cmd_compare(opts) == 1);
}

TEST_CASE("atomic CSV writes create parent directories") {
  const auto dir = fresh_dir("atomic");
  const auto nested = dir / "a" / "b" / "x.csv";
  write_text_atomic(nested, "k,v\n1,2\n");
  CHECK(slurp(nested) == "k,v\n1,2\n");
}
