#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "galab/config.hpp"

namespace galab {

struct RunOptions {
  std::filesystem::path config_path;
  std::optional<std::filesystem::path> out_dir;
  std::optional<std::uint64_t> seed;
  bool plot = false;
};

struct Fig1Options {
  std::vector<std::uint64_t> seeds = default_seeds();
  std::filesystem::path out_dir = "out";
  bool plot = false;
};

struct Fig2Options {
  std::vector<std::uint64_t> seeds = default_seeds();
  std::filesystem::path out_dir = "out";
  double p_m = 0.001;
  std::size_t continue_generations = 500;
  bool plot = false;
};

struct AutocorrOptions {
  std::string landscape = "onemax";
  std::size_t length = 100;
  unsigned k = 0;
  std::size_t controller = 0;
  std::size_t target = 0;
  std::uint64_t table_seed = 42;
  std::size_t walk_steps = 100000;
  std::uint64_t seed = 1;
  std::filesystem::path out_dir = "out";
};

struct CompareOptions {
  std::filesystem::path config_path;
  std::optional<std::filesystem::path> out_dir;
};

// Exit codes: 0 success, 1 validation failure, 2 I/O failure.
int cmd_run(const RunOptions& opts);
int cmd_fig1(const Fig1Options& opts);
int cmd_fig2(const Fig2Options& opts);
int cmd_autocorr(const AutocorrOptions& opts);
int cmd_compare(const CompareOptions& opts);

// The built-in reproduction setup behind fig1/fig2: OneMax L=100, n=100,
// G=50, 10% truncation, elitist, crossover only (p_m = 0), random init.
GAConfig fig1_config(std::uint64_t seed);
constexpr std::size_t kFig1RandomBudget = 5000;
constexpr std::size_t kFig1GenomeLength = 100;

// Seed for the mutation phase resumed from a finished run, decorrelated from
// the base run's stream.
std::uint64_t continuation_seed(std::uint64_t seed);

}  // namespace galab
