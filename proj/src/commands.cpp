#include "galab/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "galab/analysis.hpp"
#include "galab/io.hpp"

namespace galab {

namespace {

template <class Body>
int guarded(Body&& body) {
  try {
    body();
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

std::string seed_tag(std::uint64_t seed) { return "seed" + std::to_string(seed); }

void write_csv(const std::filesystem::path& path, const CsvTable& csv) {
  write_text_atomic(path, csv.render());
}

std::vector<double> column(const RunTrace& trace, double TraceRow::* field) {
  std::vector<double> out;
  out.reserve(trace.rows.size());
  for (const TraceRow& row : trace.rows) out.push_back(row.*field);
  return out;
}

std::vector<double> generation_axis(const RunTrace& trace) {
  std::vector<double> out;
  out.reserve(trace.rows.size());
  for (const TraceRow& row : trace.rows) out.push_back(static_cast<double>(row.generation));
  return out;
}

void write_trace_plot(const std::filesystem::path& path, const RunTrace& trace,
                      std::string_view title) {
  std::vector<double> fixed;
  for (const TraceRow& row : trace.rows) fixed.push_back(static_cast<double>(row.fixed_zero_count));
  write_text_atomic(path, svg_line_chart(generation_axis(trace),
                                         {{"best", column(trace, &TraceRow::best)},
                                          {"mean", column(trace, &TraceRow::mean)},
                                          {"min", column(trace, &TraceRow::min)},
                                          {"fixed_zero", fixed}},
                                         title));
}

}  // namespace

GAConfig fig1_config(std::uint64_t seed) {
  GAConfig cfg;
  cfg.population_size = 100;
  cfg.generations = 50;
  cfg.survivor_fraction = 0.1;
  cfg.elitist = true;
  cfg.init_mode = InitMode::Random;
  cfg.operators.p_m = 0.0;
  // Uniform mixing. One-point cuts drag 50-locus haplotype blocks through
  // the 10-survivor bottleneck and the population fixes around 80 with ~20
  // dead loci; per-locus mixing lands it at 93-97 with a handful, the
  // published behavior of this setup.
  cfg.operators.crossover = CrossoverKind::UniformFlat;
  cfg.seed = seed;
  cfg.genome = FlatTemplate{kFig1GenomeLength};
  return cfg;
}

std::uint64_t continuation_seed(std::uint64_t seed) {
  return hash_combine(seed, 0x636f6e74ULL);  // "cont"
}

int cmd_run(const RunOptions& opts) {
  return guarded([&] {
    ExperimentConfig cfg = load_config(opts.config_path);
    if (opts.seed) cfg.engine.seed = *opts.seed;
    const std::filesystem::path out_dir = opts.out_dir.value_or(cfg.out_dir);

    RunTrace trace;
    double final_best = 0.0;
    if (cfg.landscape.segmented()) {
      const auto& tmpl = std::get<SegmentedTemplate>(cfg.engine.genome);
      const SegmentedSum land = make_segmented_landscape(cfg.landscape, tmpl.id_width);
      auto result = run<SegmentedGenome>(cfg.engine, land);
      trace = std::move(result.trace);
    } else {
      const auto& tmpl = std::get<FlatTemplate>(cfg.engine.genome);
      const FlatLandscape land = make_flat_landscape(cfg.landscape, tmpl.length);
      auto result = run<FlatGenome>(cfg.engine, land);
      trace = std::move(result.trace);
    }
    final_best = trace.rows.back().best;

    write_csv(out_dir / "trace.csv", trace_csv(trace));
    if (opts.plot) write_trace_plot(out_dir / "trace.svg", trace, "run trace");
    std::cout << "final best = " << format_value(final_best) << "\n";
    std::cout << "wrote " << (out_dir / "trace.csv").string() << "\n";
  });
}

int cmd_fig1(const Fig1Options& opts) {
  return guarded([&] {
    const OneMax land;
    for (std::uint64_t seed : opts.seeds) {
      const auto baseline = random_search<FlatGenome>(
          kFig1RandomBudget, FlatTemplate{kFig1GenomeLength}, land, seed);
      const Histogram random_hist = histogram(baseline.samples, 1.0);

      const GAConfig cfg = fig1_config(seed);
      const auto result = run<FlatGenome>(cfg, land);
      const Histogram ga_hist = histogram(result.final_population.fitnesses, 1.0);

      const auto tag = seed_tag(seed);
      write_csv(opts.out_dir / ("fig1_random_hist_" + tag + ".csv"),
                histogram_csv(random_hist));
      write_csv(opts.out_dir / ("fig1_ga_hist_" + tag + ".csv"), histogram_csv(ga_hist));
      if (opts.plot) {
        write_text_atomic(opts.out_dir / ("fig1_random_hist_" + tag + ".svg"),
                          svg_histogram(random_hist, "random baseline, " + tag));
        write_text_atomic(opts.out_dir / ("fig1_ga_hist_" + tag + ".svg"),
                          svg_histogram(ga_hist, "final GA population, " + tag));
      }

      const auto [rand_min, rand_max] =
          std::minmax_element(baseline.samples.begin(), baseline.samples.end());
      const auto [ga_min, ga_max] = std::minmax_element(result.final_population.fitnesses.begin(),
                                                        result.final_population.fitnesses.end());
      std::cout << tag << ": random min/max = " << format_value(*rand_min) << "/"
                << format_value(*rand_max) << ", GA final min/max = " << format_value(*ga_min)
                << "/" << format_value(*ga_max) << "\n";
    }
  });
}

int cmd_fig2(const Fig2Options& opts) {
  return guarded([&] {
    if (!(opts.p_m > 0.0 && opts.p_m <= 1.0))
      throw std::invalid_argument("fig2: p_m must be in (0,1]");
    const OneMax land;
    for (std::uint64_t seed : opts.seeds) {
      const GAConfig base_cfg = fig1_config(seed);
      auto base = run<FlatGenome>(base_cfg, land);
      const std::size_t k_observed = base.trace.rows.back().fixed_zero_count;

      const double base_final_best = base.trace.rows.back().best;

      GAConfig cont_cfg = base_cfg;
      cont_cfg.operators.p_m = opts.p_m;
      auto cont = continue_run(std::move(base.final_population), cont_cfg,
                               opts.continue_generations, land, continuation_seed(seed));

      RunTrace combined = std::move(base.trace);
      combined.rows.insert(combined.rows.end(), cont.trace.rows.begin(), cont.trace.rows.end());

      // Generations of mutation until the optimum first shows up.
      long long time_to_fix = -1;
      if (base_final_best >= static_cast<double>(kFig1GenomeLength)) {
        time_to_fix = 0;
      } else {
        for (std::size_t g = 0; g < cont.trace.rows.size(); ++g) {
          if (cont.trace.rows[g].best >= static_cast<double>(kFig1GenomeLength)) {
            time_to_fix = static_cast<long long>(g + 1);
            break;
          }
        }
      }

      const auto tag = seed_tag(seed);
      write_csv(opts.out_dir / ("fig2_trace_" + tag + ".csv"), trace_csv(combined));

      CsvTable sidecar;
      sidecar.header = {"quantity", "value"};
      sidecar.rows = {
          {"allele_loss_probability_n100_L100", format_value(allele_loss_probability(100, 100))},
          {"allele_loss_probability_n10_L100", format_value(allele_loss_probability(10, 100))},
          {"fixed_zero_after_base_run", format_value(k_observed)},
          {"gain_probability_k_observed",
           format_value(gain_probability(static_cast<unsigned>(k_observed), opts.p_m))},
          {"generations_to_fix_estimate", format_value(generations_to_fix_estimate(opts.p_m))},
          {"time_to_fix_observed", std::to_string(time_to_fix)},
      };
      write_csv(opts.out_dir / ("fig2_analytics_" + tag + ".csv"), sidecar);
      if (opts.plot) {
        write_trace_plot(opts.out_dir / ("fig2_trace_" + tag + ".svg"), combined,
                         "convergence and mutation phase, " + tag);
      }

      std::cout << tag << ": fixed zeros after base run = " << k_observed
                << ", time to fix = " << time_to_fix << " generations (estimate "
                << format_value(generations_to_fix_estimate(opts.p_m)) << ")\n";
    }
  });
}

int cmd_autocorr(const AutocorrOptions& opts) {
  return guarded([&] {
    LandscapeSpec spec;
    spec.kind = opts.landscape;
    spec.k = opts.k;
    spec.seed = opts.table_seed;
    spec.controller = opts.controller;
    spec.target = opts.target;
    if (opts.length < 1) throw std::invalid_argument("autocorr: L must be >= 1");
    if (spec.segmented())
      throw std::invalid_argument("autocorr: supported landscapes are the flat kinds");
    if (spec.kind == "second_order" && opts.controller + opts.target != opts.length)
      throw std::invalid_argument("autocorr: controller + target must equal L");
    const FlatLandscape land = make_flat_landscape(spec, opts.length);
    Rng rng(opts.seed);
    const AutocorrResult result =
        autocorrelation(land, FlatTemplate{opts.length}, opts.walk_steps, rng);

    CsvTable walk;
    walk.header = {"step", "fitness"};
    for (std::size_t i = 0; i < result.series.size(); ++i) {
      walk.rows.push_back({format_value(i), format_value(result.series[i])});
    }
    write_csv(opts.out_dir / ("autocorr_walk_" + seed_tag(opts.seed) + ".csv"), walk);

    std::cout << "rho(1) = " << format_value(result.rho)
              << (result.degenerate ? " (degenerate: constant fitness)" : "") << "\n";
  });
}

int cmd_compare(const CompareOptions& opts) {
  return guarded([&] {
    ExperimentConfig cfg = load_config(opts.config_path);
    if (!cfg.compare_budget)
      throw std::invalid_argument("compare: config needs a [compare] section with a budget");
    if (!cfg.biomimetic)
      throw std::invalid_argument("compare: config needs a [biomimetic] section");
    const std::filesystem::path out_dir = opts.out_dir.value_or(cfg.out_dir);

    ComparisonReport report;
    if (cfg.landscape.segmented()) {
      const auto& tmpl = std::get<SegmentedTemplate>(cfg.engine.genome);
      const SegmentedSum land = make_segmented_landscape(cfg.landscape, tmpl.id_width);
      report = compare<SegmentedGenome>(cfg.engine, *cfg.biomimetic, land, *cfg.compare_budget,
                                        cfg.compare_seeds);
    } else {
      const auto& tmpl = std::get<FlatTemplate>(cfg.engine.genome);
      const FlatLandscape land = make_flat_landscape(cfg.landscape, tmpl.length);
      report = compare<FlatGenome>(cfg.engine, *cfg.biomimetic, land, *cfg.compare_budget,
                                   cfg.compare_seeds);
    }

    CsvTable csv;
    csv.header = {"method", "budget", "best", "mean_best", "replicates", "seeds"};
    for (const CompareRow& row : report.rows) {
      std::string seeds;
      for (std::size_t i = 0; i < row.seeds.size(); ++i) {
        if (i) seeds.push_back(';');
        seeds += std::to_string(row.seeds[i]);
      }
      csv.rows.push_back({row.method, format_value(row.budget), format_value(row.best),
                          format_value(row.mean_best), format_value(row.replicates), seeds});
    }
    write_csv(out_dir / "compare_report.csv", csv);

    std::cout << std::left << std::setw(16) << "method" << std::setw(10) << "budget"
              << std::setw(14) << "best" << std::setw(14) << "mean_best" << "replicates\n";
    char best_buf[32], mean_buf[32];
    for (const CompareRow& row : report.rows) {
      std::snprintf(best_buf, sizeof(best_buf), "%.6g", row.best);
      std::snprintf(mean_buf, sizeof(mean_buf), "%.6g", row.mean_best);
      std::cout << std::left << std::setw(16) << row.method << std::setw(10) << row.budget
                << std::setw(14) << best_buf << std::setw(14) << mean_buf << row.replicates
                << "\n";
    }
    auto sorted = report.rows;
    std::sort(sorted.begin(), sorted.end(),
              [](const CompareRow& a, const CompareRow& b) { return a.mean_best > b.mean_best; });
    std::cout << "observed mean-best ordering: " << sorted[0].method << " >= " << sorted[1].method
              << " >= " << sorted[2].method << "\n";
    std::cout << "wrote " << (out_dir / "compare_report.csv").string() << "\n";
  });
}

}  // namespace galab
