// sparrow: command-line front end for the weed spot-spraying simulator.

#include <iostream>

#include "CLI11.hpp"
#include "sparrow/commands.hpp"

int main(int argc, char** argv) {
  namespace cli = sparrow::cli;
  CLI::App app{"Weed spot-spraying robot simulator"};
  app.require_subcommand(1);

  cli::RunArgs run;
  std::uint64_t run_seed = 0;
  auto* run_cmd = app.add_subcommand("run", "Simulate a full mission and write a report directory");
  run_cmd->add_option("--scenario", run.scenario, "Scenario file")->required();
  run_cmd->add_option("--out", run.out, "Report directory")->capture_default_str();
  auto* run_seed_opt = run_cmd->add_option("--seed", run_seed, "Override the scenario seed");
  run_cmd->add_option("--mode", run.mode, "Planner: nn, christofides, hybrid, optimal")
      ->capture_default_str();
  run_cmd->add_option("--perception", run.perception, "analytic or pipeline")
      ->capture_default_str();
  run_cmd->add_option("--max-steps", run.max_steps, "Control period limit")
      ->capture_default_str();

  cli::EvalPlannerArgs ep;
  auto* ep_cmd = app.add_subcommand("eval-planner", "Compare NN and Christofides against the exact oracle");
  ep_cmd->add_option("--trials", ep.trials)->capture_default_str();
  ep_cmd->add_option("--n-min", ep.n_min)->capture_default_str();
  ep_cmd->add_option("--n-max", ep.n_max)->capture_default_str();
  ep_cmd->add_option("--seed", ep.seed)->capture_default_str();
  ep_cmd->add_option("--out", ep.out, "Output directory (default: stdout)");
  ep_cmd->add_option("--format", ep.format, "csv or svg")->capture_default_str();
  ep_cmd->add_flag("--open", ep.open_path, "Score open paths instead of closed tours");

  cli::EvalSprayerArgs es;
  auto* es_cmd = app.add_subcommand("eval-sprayer", "Tabulate spread radius and tilt over r1");
  es_cmd->add_option("--out", es.out, "Output directory (default: stdout)");
  es_cmd->add_option("--format", es.format, "csv or svg")->capture_default_str();
  es_cmd->add_option("--scenario", es.scenario, "Take sprayer settings from a scenario");

  cli::EvalPerceptionArgs eper;
  auto* eper_cmd = app.add_subcommand("eval-perception", "Score row segmentation by IOU");
  eper_cmd->add_option("--corpus", eper.corpus, "Directory of NAME.ppm + NAME_mask.pgm");
  eper_cmd->add_option("--synthetic", eper.synthetic, "Render N synthetic frames instead");
  eper_cmd->add_option("--noise", eper.noise, "none or field")->capture_default_str();
  eper_cmd->add_option("--seed", eper.seed)->capture_default_str();
  eper_cmd->add_option("--index", eper.index, "exg or ndi")->capture_default_str();
  eper_cmd->add_option("--scenario", eper.scenario, "Row layout for synthetic frames");
  eper_cmd->add_option("--out", eper.out, "Output directory (default: stdout)");

  cli::RenderArgs rd;
  std::uint64_t rd_seed = 0;
  auto* rd_cmd = app.add_subcommand("render", "Render a synthetic front-camera frame");
  rd_cmd->add_option("--scenario", rd.scenario, "Scenario file (default: three rows)");
  rd_cmd->add_option("--out", rd.out)->capture_default_str();
  auto* rd_seed_opt = rd_cmd->add_option("--seed", rd_seed);
  rd_cmd->add_option("--noise", rd.noise, "none or field")->capture_default_str();
  rd_cmd->add_option("--lean", rd.lean_deg, "Row lean in degrees")->capture_default_str();
  rd_cmd->add_option("--lateral", rd.lateral_shift, "Robot lateral offset in cm")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitInputError;
  }

  if (*run_seed_opt) run.seed = run_seed;
  if (*rd_seed_opt) rd.seed = rd_seed;

  if (*run_cmd) return cli::cmd_run(run, std::cout, std::cerr);
  if (*ep_cmd) return cli::cmd_eval_planner(ep, std::cout, std::cerr);
  if (*es_cmd) return cli::cmd_eval_sprayer(es, std::cout, std::cerr);
  if (*eper_cmd) return cli::cmd_eval_perception(eper, std::cout, std::cerr);
  return cli::cmd_render(rd, std::cout, std::cerr);
}
