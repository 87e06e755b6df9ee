#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "galab/analysis.hpp"

namespace galab {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest round-trip decimal form.
std::string format_value(double x);
std::string format_value(std::size_t x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render() const;
};

// Writes via a temp file in the target directory plus rename, so concurrent
// writers never interleave. Creates parent directories. Throws IoError.
void write_text_atomic(const std::filesystem::path& path, std::string_view content);

CsvTable trace_csv(const RunTrace& trace);
CsvTable histogram_csv(const Histogram& hist);

// Minimal static SVG rendering; CSV is the contract, these are convenience.
std::string svg_histogram(const Histogram& hist, std::string_view title);
std::string svg_line_chart(std::span<const double> xs,
                           const std::vector<std::pair<std::string, std::vector<double>>>& series,
                           std::string_view title);

}  // namespace galab
