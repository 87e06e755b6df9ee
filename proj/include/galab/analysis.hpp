#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "galab/engine.hpp"
#include "galab/genome.hpp"
#include "galab/rng.hpp"

namespace galab {

struct Histogram {
  double bin_width = 1.0;
  std::map<long long, std::size_t> bins;  // bin k covers [k*w, (k+1)*w)
  std::size_t total = 0;

  double lower_edge(long long k) const { return static_cast<double>(k) * bin_width; }
};

Histogram histogram(std::span<const double> samples, double bin_width);

std::size_t fixed_zero_loci(const Population<FlatGenome>& pop);

// Probability that at least one locus is 0 in every member of a uniform
// random population: 1 - (1 - 2^-n)^L, evaluated in log space so values
// around 1e-29 survive.
double allele_loss_probability(unsigned individuals, unsigned loci);

// Probability that an individual gains a 1 on at least one of k stuck loci
// in one mutation pass: 1 - (1 - p_m)^k.
double gain_probability(unsigned stuck_loci, double p_m);

// Heuristic generations-to-fix estimator for the converged regime with 10%
// of the population reproducing: 1 / (10 * p_m).
double generations_to_fix_estimate(double p_m);

struct AutocorrResult {
  double rho = 0.0;
  bool degenerate = false;     // constant fitness series; rho reported as 1
  std::vector<double> series;  // fitness along the walk, steps + 1 values
};

namespace detail {

AutocorrResult lag1_pearson(std::vector<double> series);

}  // namespace detail

// Fitness continuity probe: a single-flip random walk of `steps` elementary
// mutations from a uniform start; returns the lag-1 Pearson correlation of
// the fitness series. Requires steps >= 1000.
template <class F>
AutocorrResult autocorrelation(F&& eval, const FlatTemplate& tmpl, std::size_t steps, Rng& rng) {
  if (steps < 1000) throw std::invalid_argument("autocorr: walk length must be >= 1000");
  FlatGenome g = random_genome(tmpl, rng);
  std::vector<double> series;
  series.reserve(steps + 1);
  series.push_back(eval(g));
  for (std::size_t t = 0; t < steps; ++t) {
    g.bits[rng.index(g.size())] ^= 1;
    series.push_back(eval(g));
  }
  return detail::lag1_pearson(std::move(series));
}

// Segmented walk: elementary mutation flips one 0/1 symbol; signals stay put
// so the gene architecture is held fixed along the walk.
template <class F>
AutocorrResult autocorrelation(F&& eval, const SegmentedTemplate& tmpl, std::size_t steps,
                               Rng& rng) {
  if (steps < 1000) throw std::invalid_argument("autocorr: walk length must be >= 1000");
  SegmentedGenome g = random_genome(tmpl, rng);
  std::vector<std::size_t> flippable;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.stream[i] != Symbol::Sig) flippable.push_back(i);
  }
  if (flippable.empty()) throw std::invalid_argument("autocorr: no mutable symbols in template");
  std::vector<double> series;
  series.reserve(steps + 1);
  series.push_back(eval(g));
  for (std::size_t t = 0; t < steps; ++t) {
    auto& sym = g.stream[flippable[rng.index(flippable.size())]];
    sym = sym == Symbol::One ? Symbol::Zero : Symbol::One;
    series.push_back(eval(g));
  }
  return detail::lag1_pearson(std::move(series));
}

struct CompareRow {
  std::string method;  // classical | biomimetic | random_search
  std::size_t budget = 0;
  double best = 0.0;       // best fitness over all replicates
  double mean_best = 0.0;  // mean of per-replicate bests
  std::size_t replicates = 0;
  std::vector<std::uint64_t> seeds;
};

struct ComparisonReport {
  std::vector<CompareRow> rows;
};

namespace detail {

inline double trace_best(const RunTrace& trace) {
  double best = trace.rows.front().best;
  for (const TraceRow& row : trace.rows) best = std::max(best, row.best);
  return best;
}

inline CompareRow summarize(std::string method, std::size_t budget,
                            std::span<const double> bests,
                            std::span<const std::uint64_t> seeds) {
  CompareRow row;
  row.method = std::move(method);
  row.budget = budget;
  row.replicates = bests.size();
  row.seeds.assign(seeds.begin(), seeds.end());
  row.best = bests.front();
  double sum = 0.0;
  for (double b : bests) {
    row.best = std::max(row.best, b);
    sum += b;
  }
  row.mean_best = sum / static_cast<double>(bests.size());
  return row;
}

}  // namespace detail

// Head-to-head on one landscape at one evaluation budget: the classical GA,
// the biomimetic GA, and random search, each replicated once per seed with
// exactly `budget` evaluations (GA: n initial + n per generation). Reports
// the outcome; asserts nothing about which method should win.
template <class G, class F>
ComparisonReport compare(const GAConfig& classical, const GAConfig& biomimetic, F&& eval,
                         std::size_t budget, std::span<const std::uint64_t> seeds) {
  using Template = typename detail::GenomeTraits<G>::Template;
  if (seeds.empty()) throw std::invalid_argument("compare: need at least one seed");
  for (const GAConfig* cfg : {&classical, &biomimetic}) {
    cfg->validate();
    if (budget % cfg->population_size != 0)
      throw std::invalid_argument("compare: budget must be divisible by the population size");
    if (budget / cfg->population_size < 2)
      throw std::invalid_argument("compare: budget must cover at least one generation");
  }

  std::vector<double> classical_bests, biomimetic_bests, random_bests;
  for (std::uint64_t seed : seeds) {
    GAConfig c = classical;
    c.seed = seed;
    c.generations = budget / c.population_size - 1;
    classical_bests.push_back(detail::trace_best(run<G>(c, eval).trace));

    GAConfig b = biomimetic;
    b.seed = seed;
    b.generations = budget / b.population_size - 1;
    biomimetic_bests.push_back(detail::trace_best(run<G>(b, eval).trace));

    const auto& tmpl = std::get<Template>(classical.genome);
    random_bests.push_back(random_search<G>(budget, tmpl, eval, seed).best_fitness);
  }

  ComparisonReport report;
  report.rows.push_back(detail::summarize("classical", budget, classical_bests, seeds));
  report.rows.push_back(detail::summarize("biomimetic", budget, biomimetic_bests, seeds));
  report.rows.push_back(detail::summarize("random_search", budget, random_bests, seeds));
  return report;
}

}  // namespace galab
