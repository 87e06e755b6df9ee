#include <CLI11.hpp>

#include "galab/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"galab - genetic algorithm laboratory"};
  app.require_subcommand(1);

  galab::RunOptions run_opts;
  auto* run = app.add_subcommand("run", "run one GA experiment from a config file");
  run->add_option("--config", run_opts.config_path, "experiment config file")
      ->required()
      ->check(CLI::ExistingFile);
  std::string run_out;
  run->add_option("--out", run_out, "output directory (overrides config)");
  std::uint64_t run_seed = 0;
  auto* run_seed_opt = run->add_option("--seed", run_seed, "seed (overrides config)");
  run->add_flag("--plot", run_opts.plot, "also write an SVG plot");

  galab::Fig1Options fig1_opts;
  auto* fig1 = app.add_subcommand(
      "fig1", "100-bit sum: GA final population vs 5000 random draws, as histograms");
  fig1->add_option("--seeds", fig1_opts.seeds, "replicate seeds (default 1..10)")->delimiter(',');
  fig1->add_option("--out", fig1_opts.out_dir, "output directory");
  fig1->add_flag("--plot", fig1_opts.plot, "also write SVG plots");

  galab::Fig2Options fig2_opts;
  auto* fig2 = app.add_subcommand(
      "fig2", "convergence trajectory plus the mutation phase and its closed-form predictors");
  fig2->add_option("--seeds", fig2_opts.seeds, "replicate seeds (default 1..10)")->delimiter(',');
  fig2->add_option("--pm", fig2_opts.p_m, "mutation rate for the continued run (default 0.001)");
  fig2->add_option("--cont-generations", fig2_opts.continue_generations,
                   "generations of the mutation phase (default 500)");
  fig2->add_option("--out", fig2_opts.out_dir, "output directory");
  fig2->add_flag("--plot", fig2_opts.plot, "also write SVG plots");

  galab::AutocorrOptions ac_opts;
  auto* ac = app.add_subcommand("autocorr",
                                "lag-1 fitness autocorrelation along a single-flip random walk");
  ac->add_option("--landscape", ac_opts.landscape,
                 "onemax | second_order | rugged_nk | random_table");
  ac->add_option("--L", ac_opts.length, "genome length (default 100)");
  ac->add_option("--K", ac_opts.k, "rugged_nk epistasis degree");
  ac->add_option("--controller", ac_opts.controller, "second_order controller width");
  ac->add_option("--target", ac_opts.target, "second_order target width");
  ac->add_option("--table-seed", ac_opts.table_seed, "landscape table seed (default 42)");
  ac->add_option("--T", ac_opts.walk_steps, "walk length (default 100000, minimum 1000)");
  ac->add_option("--seed", ac_opts.seed, "walk seed (default 1)");
  ac->add_option("--out", ac_opts.out_dir, "output directory");

  galab::CompareOptions cmp_opts;
  auto* cmp = app.add_subcommand(
      "compare", "classical GA vs biomimetic GA vs random search at one evaluation budget");
  cmp->add_option("--config", cmp_opts.config_path, "experiment config file")
      ->required()
      ->check(CLI::ExistingFile);
  std::string cmp_out;
  cmp->add_option("--out", cmp_out, "output directory (overrides config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (run->parsed()) {
    if (!run_out.empty()) run_opts.out_dir = run_out;
    if (run_seed_opt->count() > 0) run_opts.seed = run_seed;
    return galab::cmd_run(run_opts);
  }
  if (fig1->parsed()) return galab::cmd_fig1(fig1_opts);
  if (fig2->parsed()) return galab::cmd_fig2(fig2_opts);
  if (ac->parsed()) return galab::cmd_autocorr(ac_opts);
  if (cmp->parsed()) {
    if (!cmp_out.empty()) cmp_opts.out_dir = cmp_out;
    return galab::cmd_compare(cmp_opts);
  }
  return 1;
}
