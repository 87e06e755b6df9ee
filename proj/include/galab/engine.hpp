#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <variant>
#include <vector>

#include "galab/genome.hpp"
#include "galab/operators.hpp"
#include "galab/rng.hpp"

namespace galab {

// Blueprint for drawing individuals. Flat genomes draw uniform bits of the
// given length; segmented genomes keep the template's gene architecture (ids
// and payload lengths) and draw the payload bits.
struct FlatTemplate {
  std::size_t length = 0;
};

struct SegmentedTemplate {
  std::vector<Segment> segments;
  unsigned id_width = 4;
};

using GenomeTemplate = std::variant<FlatTemplate, SegmentedTemplate>;

enum class InitMode { Random, Homogeneous };

struct GAConfig {
  std::size_t population_size = 100;
  std::size_t generations = 50;
  double survivor_fraction = 0.1;
  bool elitist = true;
  InitMode init_mode = InitMode::Random;
  OperatorConfig operators;
  std::uint64_t seed = 1;
  GenomeTemplate genome;

  std::size_t survivor_count() const {
    const auto raw = static_cast<std::size_t>(
        std::ceil(survivor_fraction * static_cast<double>(population_size)));
    return std::max<std::size_t>(2, raw);
  }

  std::size_t clamped_generations() const { return std::max<std::size_t>(1, generations); }

  void validate() const;  // throws std::invalid_argument naming the field
};

template <class G>
struct Population {
  std::vector<G> members;
  std::vector<double> fitnesses;
  std::size_t generation = 0;
};

struct TraceRow {
  std::size_t generation = 0;
  double best = 0.0;
  double mean = 0.0;
  double min = 0.0;
  std::size_t fixed_zero_count = 0;
  double diversity = 0.0;
  std::size_t evaluations = 0;
};

struct RunTrace {
  std::vector<TraceRow> rows;
};

template <class G>
struct RunResult {
  RunTrace trace;
  Population<G> final_population;
};

inline FlatGenome random_genome(const FlatTemplate& tmpl, Rng& rng) {
  FlatGenome g;
  g.bits.resize(tmpl.length);
  for (auto& b : g.bits) b = rng.bit();
  return g;
}

inline SegmentedGenome random_genome(const SegmentedTemplate& tmpl, Rng& rng) {
  std::vector<Segment> segments = tmpl.segments;
  for (Segment& seg : segments) {
    for (auto& b : seg.payload) b = rng.bit();
  }
  return serialize(segments, tmpl.id_width);
}

namespace detail {

template <class G>
struct GenomeTraits;

template <>
struct GenomeTraits<FlatGenome> {
  using Template = FlatTemplate;
};

template <>
struct GenomeTraits<SegmentedGenome> {
  using Template = SegmentedTemplate;
};

// Symbol mismatches up to the shorter length plus the length difference;
// the flat Hamming distance generalized to variable-length streams.
inline std::size_t stream_distance(const SegmentedGenome& a, const SegmentedGenome& b) {
  const std::size_t shorter = std::min(a.size(), b.size());
  std::size_t d = a.size() + b.size() - 2 * shorter;
  for (std::size_t i = 0; i < shorter; ++i) d += a.stream[i] != b.stream[i] ? 1 : 0;
  return d;
}

inline double population_diversity(const std::vector<FlatGenome>& members) {
  return diversity(members);
}

inline double population_diversity(const std::vector<SegmentedGenome>& members) {
  const std::size_t n = members.size();
  if (n < 2) throw std::invalid_argument("diversity: need at least 2 individuals");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) total += stream_distance(members[i], members[j]);
  }
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  return static_cast<double>(total) / static_cast<double>(pairs);
}

inline std::size_t population_fixed_zero(const std::vector<FlatGenome>& members) {
  return count_fixed_zero_loci(members);
}

inline std::size_t population_fixed_zero(const std::vector<SegmentedGenome>&) {
  return 0;  // locus tracking is a flat-genome notion
}

inline FlatGenome make_offspring(const FlatGenome& a, const FlatGenome& b,
                                 const OperatorConfig& ops, const FlatTemplate&, Rng& rng) {
  return point_mutate(crossover(a, b, ops, rng), ops, rng);
}

inline SegmentedGenome make_offspring(const SegmentedGenome& a, const SegmentedGenome& b,
                                      const OperatorConfig& ops, const SegmentedTemplate& tmpl,
                                      Rng& rng) {
  SegmentedGenome child = point_mutate(crossover(a, b, ops, tmpl.id_width, rng), ops, rng);
  if (rng.bernoulli(ops.p_inversion)) child = inversion(child, tmpl.id_width, rng);
  if (rng.bernoulli(ops.p_translocation)) child = translocation(child, tmpl.id_width, rng);
  if (rng.bernoulli(ops.p_duplication)) child = duplication(child, tmpl.id_width, rng);
  return child;
}

// Rank indices by fitness descending, ties broken by lower member index.
inline std::vector<std::size_t> ranking(const std::vector<double>& fitnesses) {
  std::vector<std::size_t> order(fitnesses.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fitnesses[a] > fitnesses[b]; });
  return order;
}

template <class G>
TraceRow trace_row(const Population<G>& pop) {
  TraceRow row;
  row.generation = pop.generation;
  row.best = *std::max_element(pop.fitnesses.begin(), pop.fitnesses.end());
  row.min = *std::min_element(pop.fitnesses.begin(), pop.fitnesses.end());
  row.mean = std::accumulate(pop.fitnesses.begin(), pop.fitnesses.end(), 0.0) /
             static_cast<double>(pop.fitnesses.size());
  row.fixed_zero_count = population_fixed_zero(pop.members);
  row.diversity = population_diversity(pop.members);
  row.evaluations = pop.members.size() * (pop.generation + 1);
  return row;
}

}  // namespace detail

template <class G, class F>
Population<G> init_population(const GAConfig& cfg, F&& eval, Rng& rng) {
  using Template = typename detail::GenomeTraits<G>::Template;
  const auto& tmpl = std::get<Template>(cfg.genome);
  Population<G> pop;
  pop.members.reserve(cfg.population_size);
  if (cfg.init_mode == InitMode::Homogeneous) {
    const G founder = random_genome(tmpl, rng);
    pop.members.assign(cfg.population_size, founder);
  } else {
    for (std::size_t i = 0; i < cfg.population_size; ++i)
      pop.members.push_back(random_genome(tmpl, rng));
  }
  pop.fitnesses.reserve(cfg.population_size);
  for (const G& g : pop.members) pop.fitnesses.push_back(eval(g));
  return pop;
}

// One generation: truncation selection of the top max(2, ceil(tau*n)), an
// exact elite copy in slot 0 when elitist, the rest bred from uniformly
// drawn distinct survivor pairs.
template <class G, class F>
Population<G> step(const Population<G>& pop, const GAConfig& cfg, F&& eval, Rng& rng) {
  using Template = typename detail::GenomeTraits<G>::Template;
  const auto& tmpl = std::get<Template>(cfg.genome);
  const std::size_t n = cfg.population_size;
  const std::size_t survivors = cfg.survivor_count();
  const std::vector<std::size_t> order = detail::ranking(pop.fitnesses);

  Population<G> next;
  next.generation = pop.generation + 1;
  next.members.reserve(n);
  if (cfg.elitist) next.members.push_back(pop.members[order[0]]);
  while (next.members.size() < n) {
    const std::size_t i = rng.index(survivors);
    std::size_t j = rng.index(survivors - 1);
    if (j >= i) ++j;
    next.members.push_back(detail::make_offspring(pop.members[order[i]], pop.members[order[j]],
                                                  cfg.operators, tmpl, rng));
  }
  next.fitnesses.reserve(n);
  for (const G& g : next.members) next.fitnesses.push_back(eval(g));
  return next;
}

template <class G, class F>
RunResult<G> run(const GAConfig& cfg, F&& eval) {
  cfg.validate();
  Rng rng(cfg.seed);
  RunResult<G> result;
  Population<G> pop = init_population<G>(cfg, eval, rng);
  result.trace.rows.push_back(detail::trace_row(pop));
  const std::size_t generations = cfg.clamped_generations();
  for (std::size_t g = 0; g < generations; ++g) {
    pop = step(pop, cfg, eval, rng);
    result.trace.rows.push_back(detail::trace_row(pop));
  }
  result.final_population = std::move(pop);
  return result;
}

// Resumes from an existing population for `generations` further steps; trace
// rows continue that population's generation numbering.
template <class G, class F>
RunResult<G> continue_run(Population<G> pop, const GAConfig& cfg, std::size_t generations,
                          F&& eval, std::uint64_t seed) {
  cfg.validate();
  if (pop.members.size() != cfg.population_size)
    throw std::invalid_argument("continue_run: population size does not match config");
  Rng rng(seed);
  RunResult<G> result;
  for (std::size_t g = 0; g < generations; ++g) {
    pop = step(pop, cfg, eval, rng);
    result.trace.rows.push_back(detail::trace_row(pop));
  }
  result.final_population = std::move(pop);
  return result;
}

template <class G>
struct SearchResult {
  double best_fitness = 0.0;
  G best_genome;
  std::vector<double> samples;
};

// Exactly `budget` independent uniform draws; keeps the full fitness sample
// for histogramming.
template <class G, class T, class F>
SearchResult<G> random_search(std::size_t budget, const T& tmpl, F&& eval, std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("random_search: budget must be >= 1");
  Rng rng(seed);
  SearchResult<G> result;
  result.samples.reserve(budget);
  for (std::size_t i = 0; i < budget; ++i) {
    G g = random_genome(tmpl, rng);
    const double f = eval(g);
    result.samples.push_back(f);
    if (i == 0 || f > result.best_fitness) {
      result.best_fitness = f;
      result.best_genome = std::move(g);
    }
  }
  return result;
}

}  // namespace galab
