#include "galab/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace galab {

Histogram histogram(std::span<const double> samples, double bin_width) {
  if (!(bin_width > 0.0)) throw std::invalid_argument("histogram: bin width must be positive");
  if (samples.empty()) throw std::invalid_argument("histogram: empty sample");
  Histogram h;
  h.bin_width = bin_width;
  for (double x : samples) {
    const auto k = static_cast<long long>(std::floor(x / bin_width));
    ++h.bins[k];
  }
  h.total = samples.size();
  return h;
}

std::size_t fixed_zero_loci(const Population<FlatGenome>& pop) {
  return count_fixed_zero_loci(pop.members);
}

double allele_loss_probability(unsigned individuals, unsigned loci) {
  if (individuals < 1 || loci < 1)
    throw std::invalid_argument("allele_loss_probability: need n >= 1 and L >= 1");
  const double p_locus = std::exp2(-static_cast<double>(individuals));
  return -std::expm1(static_cast<double>(loci) * std::log1p(-p_locus));
}

double gain_probability(unsigned stuck_loci, double p_m) {
  if (!(p_m >= 0.0 && p_m <= 1.0))
    throw std::invalid_argument("gain_probability: p_m must be in [0,1]");
  if (stuck_loci == 0) return 0.0;
  if (p_m == 1.0) return 1.0;
  return -std::expm1(static_cast<double>(stuck_loci) * std::log1p(-p_m));
}

double generations_to_fix_estimate(double p_m) {
  if (!(p_m > 0.0)) throw std::invalid_argument("generations_to_fix_estimate: p_m must be > 0");
  return 1.0 / (10.0 * p_m);
}

namespace detail {

AutocorrResult lag1_pearson(std::vector<double> series) {
  const std::size_t n = series.size() - 1;  // lagged pairs
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += series[i];
    mean_y += series[i + 1];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = series[i] - mean_x;
    const double dy = series[i + 1] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  AutocorrResult result;
  result.series = std::move(series);
  if (sxx == 0.0 || syy == 0.0) {
    result.rho = 1.0;
    result.degenerate = true;
    return result;
  }
  result.rho = sxy / std::sqrt(sxx * syy);
  return result;
}

}  // namespace detail

}  // namespace galab
