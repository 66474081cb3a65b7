#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sparrow/geometry.hpp"
#include "sparrow/planner.hpp"
#include "sparrow/random.hpp"

namespace sparrow {

// Uniform weed positions inside the footprint rectangle, at least
// min_separation cm from each other and from the footprint centre.
std::vector<GroundPoint> random_weed_instance(const CameraFootprint& fp,
                                              std::size_t n, Rng& rng,
                                              double min_separation = 2.0);

// Per-trial generator, independent of how trials are scheduled.
Rng trial_rng(std::uint64_t seed, std::size_t trial);

struct EvalConfig {
  std::size_t trials = 100;
  std::size_t n_min = 5;
  std::size_t n_max = 12;
  CameraFootprint footprint;
  std::uint64_t seed = 1;
  Closure closure = Closure::Closed;
};

struct EvalRow {
  std::size_t trial = 0;
  std::size_t n = 0;
  double lambda_nn = 0.0;
  double lambda_chr = 0.0;
  double lambda_opt = 0.0;
  double phi_n = 1.0;
  double phi_c = 1.0;

  friend bool operator==(const EvalRow&, const EvalRow&) = default;
};

struct EvalSummary {
  std::size_t n = 0;
  std::size_t trials = 0;
  double mean_phi_n = 0.0;
  double mean_phi_c = 0.0;
  double mean_lambda_opt = 0.0;

  friend bool operator==(const EvalSummary&, const EvalSummary&) = default;
};

struct EvalTable {
  std::vector<EvalRow> rows;          // trial order
  std::vector<EvalSummary> per_n;     // ascending n, only n values that occurred

  friend bool operator==(const EvalTable&, const EvalTable&) = default;
};

/// Trial i draws n = n_min + i mod (n_max - n_min + 1) weeds. Trials run in
/// parallel; the table is assembled in trial order. Throws SizeError if n_max
/// exceeds the oracle limit and ValidationError if n_min > n_max.
EvalTable evaluate_planners(const EvalConfig& cfg);

// Single-threaded reference of evaluate_planners; results must be identical.
EvalTable evaluate_planners_serial(const EvalConfig& cfg);

std::string eval_table_csv(const EvalTable& table);
std::string eval_summary_text(const EvalTable& table);

}  // namespace sparrow
