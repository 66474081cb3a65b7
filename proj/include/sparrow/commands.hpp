#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace sparrow::cli {

// Stable exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitDegraded = 2;

struct RunArgs {
  std::string scenario;
  std::string out = "report";
  std::optional<std::uint64_t> seed;
  std::string mode = "hybrid";
  std::string perception = "analytic";
  std::size_t max_steps = 100000;
};

struct EvalPlannerArgs {
  std::size_t trials = 100;
  std::size_t n_min = 5;
  std::size_t n_max = 12;
  std::uint64_t seed = 1;
  std::string out;  // empty: CSV (or SVG) on stdout
  std::string format = "csv";
  bool open_path = false;
};

struct EvalSprayerArgs {
  std::string out;
  std::string format = "csv";
  std::string scenario;  // optional sprayer overrides
};

struct EvalPerceptionArgs {
  std::string corpus;          // directory of NAME.ppm + NAME_mask.pgm
  std::size_t synthetic = 0;   // used when corpus is empty
  std::string noise = "field";
  std::uint64_t seed = 1;
  std::string out;
  std::string index = "exg";
  std::string scenario;        // optional row layout for synthetic frames
};

struct RenderArgs {
  std::string scenario;
  std::string out = "render";
  std::optional<std::uint64_t> seed;
  std::string noise = "none";
  double lean_deg = 0.0;
  double lateral_shift = 0.0;
};

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err);
int cmd_eval_planner(const EvalPlannerArgs& args, std::ostream& out, std::ostream& err);
int cmd_eval_sprayer(const EvalSprayerArgs& args, std::ostream& out, std::ostream& err);
int cmd_eval_perception(const EvalPerceptionArgs& args, std::ostream& out,
                        std::ostream& err);
int cmd_render(const RenderArgs& args, std::ostream& out, std::ostream& err);

}  // namespace sparrow::cli
