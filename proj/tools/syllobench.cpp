// syllobench: benchmark predictive models of syllogistic reasoning.
//
//   gen       write a synthetic population dataset
//   run       leave-one-out benchmark over a dataset
//   entropy   per-task response entropy (and entropy-vs-accuracy curve)
//   curve     noise-robustness sweep over generated populations
//   validate  check a dataset file
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "syllobench/commands.hpp"
#include "syllobench/errors.hpp"
#include "syllobench/io.hpp"

namespace {

using namespace syllobench;

TieBreak parse_tie_break(const std::string& name) {
  if (name == "canonical") return TieBreak::Canonical;
  if (name == "random") return TieBreak::SeededRandom;
  throw UsageError("--tie-break must be canonical or random, got \"" + name + "\"");
}

void add_seed_option(CLI::App& cmd, std::uint64_t& seed) {
  cmd.add_option("--seed", seed, "RNG seed (or set SYLLOBENCH_SEED)")
      ->envname("SYLLOBENCH_SEED")
      ->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark predictive models of human syllogistic reasoning"};
  app.set_version_flag("--version", std::string(syllobench::kVersion));
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* cmd_gen_app = app.add_subcommand("gen", "Write a synthetic population dataset");
  cmd_gen_app->add_option("--noise", gen.noise, "Proportion of responses to corrupt, in [0,1]")
      ->capture_default_str();
  add_seed_option(*cmd_gen_app, gen.seed);
  cmd_gen_app->add_option("--out", gen.out, "Output directory")->capture_default_str();

  RunCmdOptions run;
  std::string run_models = "random,mfa,atmosphere,matching,conversion,fol,ubcf,ibcf,ubcf-fit,ibcf-fit";
  std::string run_tie = "canonical";
  int run_topk = 0;
  CLI::App* cmd_run_app = app.add_subcommand("run", "Leave-one-out benchmark over a dataset");
  cmd_run_app->add_option("--data", run.data, "Dataset CSV")->required();
  cmd_run_app->add_option("--models", run_models, "Comma-separated model list")
      ->capture_default_str();
  add_seed_option(*cmd_run_app, run.seed);
  cmd_run_app->add_option("--out", run.out, "Output directory")->capture_default_str();
  cmd_run_app->add_option("--jobs", run.jobs, "Worker threads (0 = all processors)")
      ->capture_default_str();
  cmd_run_app->add_option("--tie-break", run_tie, "Score tie policy: canonical or random")
      ->capture_default_str();
  cmd_run_app->add_option("--topk", run_topk,
                          "Keep only the k most similar neighbors in UBCF (0 = all)")
      ->capture_default_str();

  EntropyCmdOptions entropy;
  CLI::App* cmd_entropy_app =
      app.add_subcommand("entropy", "Per-task response entropy of a dataset");
  cmd_entropy_app->add_option("--data", entropy.data, "Dataset CSV")->required();
  cmd_entropy_app->add_option("--trials", entropy.trials,
                              "trials.csv from a run; adds the entropy-vs-accuracy curve");
  cmd_entropy_app->add_option("--bins", entropy.bins, "Entropy bins for the curve")
      ->capture_default_str();
  cmd_entropy_app->add_option("--out", entropy.out, "Output directory")->capture_default_str();

  CurveCmdOptions curve;
  std::string curve_grid = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1";
  std::string curve_models = "ubcf,ibcf,ubcf-fit,ibcf-fit";
  std::string curve_tie = "canonical";
  int curve_topk = 0;
  CLI::App* cmd_curve_app =
      app.add_subcommand("curve", "Noise sweep over generated populations");
  cmd_curve_app->add_option("--grid", curve_grid, "Comma-separated noise proportions to sweep")
      ->capture_default_str();
  cmd_curve_app->add_option("--models", curve_models, "Comma-separated model list")
      ->capture_default_str();
  add_seed_option(*cmd_curve_app, curve.seed);
  cmd_curve_app->add_option("--out", curve.out, "Output directory")->capture_default_str();
  cmd_curve_app->add_option("--jobs", curve.jobs, "Worker threads (0 = all processors)")
      ->capture_default_str();
  cmd_curve_app->add_option("--tie-break", curve_tie, "Score tie policy: canonical or random")
      ->capture_default_str();
  cmd_curve_app->add_option("--topk", curve_topk,
                            "Keep only the k most similar neighbors in UBCF (0 = all)")
      ->capture_default_str();

  ValidateCmdOptions validate;
  CLI::App* cmd_validate_app = app.add_subcommand("validate", "Check a dataset file");
  cmd_validate_app->add_option("--data", validate.data, "Dataset CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_gen_app->parsed()) {
      cmd_gen(gen);
    } else if (cmd_run_app->parsed()) {
      run.models = split_model_list(run_models);
      run.model_opts.tie_break = parse_tie_break(run_tie);
      if (run_topk < 0) throw UsageError("--topk must be non-negative");
      if (run_topk > 0) run.model_opts.top_k = run_topk;
      cmd_run(run);
    } else if (cmd_entropy_app->parsed()) {
      cmd_entropy(entropy);
    } else if (cmd_curve_app->parsed()) {
      curve.grid = parse_noise_grid(curve_grid);
      curve.models = split_model_list(curve_models);
      curve.model_opts.tie_break = parse_tie_break(curve_tie);
      if (curve_topk < 0) throw UsageError("--topk must be non-negative");
      if (curve_topk > 0) curve.model_opts.top_k = curve_topk;
      cmd_curve(curve);
    } else if (cmd_validate_app->parsed()) {
      cmd_validate(validate);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
