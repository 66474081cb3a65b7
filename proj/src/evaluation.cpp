#include <map>
#include <string>

#include "sparrow/csv.hpp"
#include "sparrow/error.hpp"
#include "sparrow/evaluation.hpp"

namespace sparrow {

std::vector<GroundPoint> random_weed_instance(const CameraFootprint& fp,
                                              std::size_t n, Rng& rng,
                                              double min_separation) {
  const GroundPoint center = footprint_center(fp);
  std::vector<GroundPoint> pts;
  pts.reserve(n);
  std::size_t attempts = 0;
  while (pts.size() < n) {
    if (++attempts > 100000 * (n + 1)) {
      throw DomainError("cannot place " + std::to_string(n) +
                        " weeds with the requested separation");
    }
    const GroundPoint p{rng.uniform(-fp.width / 2.0, fp.width / 2.0),
                        rng.uniform(0.0, fp.depth)};
    bool ok = distance(p, center) >= min_separation;
    for (const auto& q : pts) {
      if (!ok) break;
      ok = distance(p, q) >= min_separation;
    }
    if (ok) pts.push_back(p);
  }
  return pts;
}

Rng trial_rng(std::uint64_t seed, std::size_t trial) {
  return Rng(mix64(seed, trial));
}

namespace {

void check_config(const EvalConfig& cfg) {
  if (cfg.n_min > cfg.n_max) {
    throw ValidationError("n_min must not exceed n_max");
  }
  if (cfg.n_max > kOracleLimit) {
    throw SizeError("n_max " + std::to_string(cfg.n_max) +
                    " exceeds the exact oracle limit of " +
                    std::to_string(kOracleLimit));
  }
  validate_footprint(cfg.footprint);
}

EvalRow run_trial(const EvalConfig& cfg, std::size_t trial) {
  const std::size_t span = cfg.n_max - cfg.n_min + 1;
  EvalRow row;
  row.trial = trial;
  row.n = cfg.n_min + trial % span;

  Rng rng = trial_rng(cfg.seed, trial);
  const auto weeds = random_weed_instance(cfg.footprint, row.n, rng);
  const GroundPoint ref = footprint_center(cfg.footprint);

  const SprayPlan nn = plan_nearest_neighbor(ref, weeds, cfg.closure);
  const SprayPlan chr = plan_christofides(ref, weeds, cfg.closure);
  const SprayPlan opt = plan_optimal_heldkarp(ref, weeds, cfg.closure);
  row.lambda_nn = nn.length;
  row.lambda_chr = chr.length;
  row.lambda_opt = opt.length;
  row.phi_n = phi_score(nn, opt).value;
  row.phi_c = phi_score(chr, opt).value;
  return row;
}

std::vector<EvalSummary> summarize(const std::vector<EvalRow>& rows) {
  std::map<std::size_t, EvalSummary> acc;
  for (const auto& r : rows) {
    auto& s = acc[r.n];
    s.n = r.n;
    ++s.trials;
    s.mean_phi_n += r.phi_n;
    s.mean_phi_c += r.phi_c;
    s.mean_lambda_opt += r.lambda_opt;
  }
  std::vector<EvalSummary> out;
  for (auto& [n, s] : acc) {
    const auto k = static_cast<double>(s.trials);
    s.mean_phi_n /= k;
    s.mean_phi_c /= k;
    s.mean_lambda_opt /= k;
    out.push_back(s);
  }
  return out;
}

}  // namespace

EvalTable evaluate_planners(const EvalConfig& cfg) {
  check_config(cfg);
  EvalTable table;
  table.rows.resize(cfg.trials);
  const auto trials = static_cast<long>(cfg.trials);
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < trials; ++t) {
    table.rows[static_cast<std::size_t>(t)] =
        run_trial(cfg, static_cast<std::size_t>(t));
  }
  table.per_n = summarize(table.rows);
  return table;
}

EvalTable evaluate_planners_serial(const EvalConfig& cfg) {
  check_config(cfg);
  EvalTable table;
  table.rows.reserve(cfg.trials);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    table.rows.push_back(run_trial(cfg, t));
  }
  table.per_n = summarize(table.rows);
  return table;
}

std::string eval_table_csv(const EvalTable& table) {
  CsvWriter csv({"trial", "n", "lambda_nn", "lambda_chr", "lambda_opt", "phi_n",
                 "phi_c"});
  for (const auto& r : table.rows) {
    csv.row(r.trial, r.n, r.lambda_nn, r.lambda_chr, r.lambda_opt, r.phi_n,
            r.phi_c);
  }
  return csv.str();
}

std::string eval_summary_text(const EvalTable& table) {
  CsvWriter csv({"n", "trials", "mean_phi_n", "mean_phi_c", "mean_lambda_opt"});
  double all_n = 0.0;
  double all_c = 0.0;
  for (const auto& s : table.per_n) {
    csv.row(s.n, s.trials, s.mean_phi_n, s.mean_phi_c, s.mean_lambda_opt);
  }
  for (const auto& r : table.rows) {
    all_n += r.phi_n;
    all_c += r.phi_c;
  }
  // No trials, no mean: leave the overall lines out rather than print 0.
  if (table.rows.empty()) return csv.str();
  const double k = static_cast<double>(table.rows.size());
  return csv.str() + "overall_mean_phi_n=" + format_fixed(all_n / k) + "\n" +
         "overall_mean_phi_c=" + format_fixed(all_c / k) + "\n";
}

}  // namespace sparrow
