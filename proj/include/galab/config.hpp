#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "galab/engine.hpp"
#include "galab/landscape.hpp"

namespace galab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Landscape description as written in a config file or on the command line.
// Flat kinds take their genome length from the genome template.
struct LandscapeSpec {
  std::string kind;  // onemax | second_order | rugged_nk | random_table | segmented_sum
  std::size_t controller = 0;   // second_order
  std::size_t target = 0;       // second_order
  unsigned k = 0;               // rugged_nk
  std::uint64_t seed = 42;      // rugged_nk, random_table
  std::vector<double> weights;  // segmented_sum, one per gene id

  bool segmented() const { return kind == "segmented_sum"; }
};

FlatLandscape make_flat_landscape(const LandscapeSpec& spec, std::size_t length);
SegmentedSum make_segmented_landscape(const LandscapeSpec& spec, unsigned id_width);

// Everything a run needs, parsed and cross-validated before anything starts.
struct ExperimentConfig {
  GAConfig engine;
  LandscapeSpec landscape;
  std::filesystem::path out_dir = "out";

  // [compare] section, when present.
  std::optional<std::size_t> compare_budget;
  std::vector<std::uint64_t> compare_seeds;
  std::optional<GAConfig> biomimetic;  // [engine]+[operators] with [biomimetic] overrides
};

// Flat key = value text with one [section] per module. Errors carry
// file:line and the offending field name. Unknown keys are rejected.
ExperimentConfig load_config(const std::filesystem::path& path);

std::vector<std::uint64_t> default_seeds();  // the published list 1..10

}  // namespace galab
