#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <numeric>
#include <vector>

#include "sparrow/commands.hpp"
#include "sparrow/coordinator.hpp"
#include "sparrow/csv.hpp"
#include "sparrow/error.hpp"
#include "sparrow/evaluation.hpp"
#include "sparrow/image.hpp"
#include "sparrow/perception.hpp"
#include "sparrow/render.hpp"
#include "sparrow/scenario.hpp"
#include "sparrow/sprayer.hpp"
#include "sparrow/svg.hpp"

namespace sparrow::cli {

namespace fs = std::filesystem;

namespace {

void write_into(const std::string& dir, const std::string& name, const std::string& bytes) {
  fs::create_directories(dir);
  write_file((fs::path(dir) / name).string(), bytes);
}

bool check_format(const std::string& format, std::ostream& err) {
  if (format == "csv" || format == "svg") return true;
  err << "error: --format must be csv or svg\n";
  return false;
}

}  // namespace

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  Scenario scenario;
  MissionOptions options;
  try {
    scenario = load_scenario_file(args.scenario);
    if (args.seed) scenario.seed = *args.seed;
    options.planner = parse_planner_mode(args.mode);
    if (args.perception == "analytic") {
      options.perception = PerceptionSource::Analytic;
    } else if (args.perception == "pipeline") {
      options.perception = PerceptionSource::Pipeline;
    } else {
      throw DomainError("--perception must be analytic or pipeline");
    }
    options.max_steps = args.max_steps;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  const MissionReport report = run_mission(scenario, options);
  write_report(report, args.out);
  out << summary_text(report);
  return report.status == MissionStatus::Completed ? kExitOk : kExitDegraded;
}

int cmd_eval_planner(const EvalPlannerArgs& args, std::ostream& out, std::ostream& err) {
  if (!check_format(args.format, err)) return kExitInputError;
  EvalConfig cfg;
  cfg.trials = args.trials;
  cfg.n_min = args.n_min;
  cfg.n_max = args.n_max;
  cfg.seed = args.seed;
  cfg.closure = args.open_path ? Closure::Open : Closure::Closed;

  EvalTable table;
  try {
    table = evaluate_planners(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  PlotSeries nn_n{"nearest neighbour", "#d62728", {}, false};
  PlotSeries chr_n{"Christofides", "#1f77b4", {}, false};
  for (const auto& s : table.per_n) {
    nn_n.points.emplace_back(static_cast<double>(s.n), s.mean_phi_n);
    chr_n.points.emplace_back(static_cast<double>(s.n), s.mean_phi_c);
  }
  PlotSeries nn_d{"nearest neighbour", "#d62728", {}, true};
  PlotSeries chr_d{"Christofides", "#1f77b4", {}, true};
  for (const auto& r : table.rows) {
    nn_d.points.emplace_back(r.lambda_opt, r.phi_n);
    chr_d.points.emplace_back(r.lambda_opt, r.phi_c);
  }
  const std::string by_n = svg_chart("Mean phi vs number of weeds", "weeds",
                                     "mean phi", {nn_n, chr_n});
  const std::string by_len = svg_chart("Phi vs optimal path length", "optimal length (cm)",
                                       "phi", {nn_d, chr_d});

  const std::string csv = eval_table_csv(table);
  const std::string summary = eval_summary_text(table);
  if (args.out.empty()) {
    out << (args.format == "svg" ? by_n : csv);
    err << summary;
  } else {
    write_into(args.out, "eval.csv", csv);
    write_into(args.out, "summary.txt", summary);
    if (args.format == "svg") {
      write_into(args.out, "phi_vs_n.svg", by_n);
      write_into(args.out, "phi_vs_optimal_length.svg", by_len);
    }
    out << summary;
  }
  return kExitOk;
}

int cmd_eval_sprayer(const EvalSprayerArgs& args, std::ostream& out, std::ostream& err) {
  if (!check_format(args.format, err)) return kExitInputError;
  SprayerConfig cfg;
  try {
    if (!args.scenario.empty()) cfg = load_scenario_file(args.scenario).sprayer;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  CsvWriter csv({"r1_cm", "r2_cm", "tilt_deg"});
  PlotSeries spread{"spread radius r2", "#2ca02c", {}, false};
  // Whole centimetres plus every knot inside the reach, so knots appear exactly.
  std::vector<double> samples;
  for (int r1 = 0; r1 <= static_cast<int>(std::floor(cfg.max_reach_r1)); ++r1) {
    samples.push_back(r1);
  }
  for (const auto& k : cfg.spread_knots) {
    if (k.r1 >= 0.0 && k.r1 <= cfg.max_reach_r1) samples.push_back(k.r1);
  }
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  for (const double r1 : samples) {
    const GroundPoint target{cfg.mount_point.x, cfg.mount_point.y + r1};
    const double r2 = spread_radius(r1, cfg);
    csv.row(r1, r2, aim_angles(target, cfg).tilt);
    spread.points.emplace_back(r1, r2);
  }
  const std::string svg = svg_chart("Spray spread vs aim distance", "r1 (cm)", "r2 (cm)",
                                    {spread});
  if (args.out.empty()) {
    out << (args.format == "svg" ? svg : csv.str());
  } else {
    write_into(args.out, "sprayer.csv", csv.str());
    if (args.format == "svg") write_into(args.out, "spread.svg", svg);
  }
  return kExitOk;
}

int cmd_eval_perception(const EvalPerceptionArgs& args, std::ostream& out,
                        std::ostream& err) {
  PipelineParams params;
  std::vector<std::string> names;
  std::vector<RasterImage> images;
  std::vector<BinaryMask> truths;
  try {
    if (args.index == "exg") {
      params.index = VegetationIndex::ExcessGreen;
    } else if (args.index == "ndi") {
      params.index = VegetationIndex::Ndi;
    } else {
      throw DomainError("--index must be exg or ndi");
    }

    if (!args.corpus.empty()) {
      if (!fs::is_directory(args.corpus)) {
        throw DomainError("corpus directory '" + args.corpus + "' not found");
      }
      std::vector<fs::path> ppms;
      for (const auto& entry : fs::directory_iterator(args.corpus)) {
        if (entry.path().extension() == ".ppm") ppms.push_back(entry.path());
      }
      std::sort(ppms.begin(), ppms.end());
      for (const auto& ppm : ppms) {
        const fs::path mask = ppm.parent_path() / (ppm.stem().string() + "_mask.pgm");
        if (!fs::exists(mask)) {
          err << "skipped (no mask): " << ppm.filename().string() << "\n";
          continue;
        }
        RasterImage img = decode_ppm(read_file(ppm.string()));
        BinaryMask truth = decode_mask_pgm(read_file(mask.string()));
        if (img.width != truth.width || img.height != truth.height) {
          err << "skipped (size mismatch): " << ppm.filename().string() << "\n";
          continue;
        }
        names.push_back(ppm.stem().string());
        images.push_back(std::move(img));
        truths.push_back(std::move(truth));
      }
    } else {
      if (args.synthetic == 0) {
        throw DomainError("give --corpus DIR or --synthetic N with N > 0");
      }
      const Scenario rows = args.scenario.empty() ? default_row_scenario()
                                                  : load_scenario_file(args.scenario);
      auto frames = synthetic_corpus(rows, args.synthetic, noise_preset(args.noise),
                                     args.seed);
      for (std::size_t i = 0; i < frames.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "synthetic_%03zu", i);
        names.emplace_back(name);
        images.push_back(std::move(frames[i].image));
        truths.push_back(std::move(frames[i].truth));
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (images.empty()) {
    err << "error: no usable image/mask pairs\n";
    return kExitDegraded;
  }

  std::vector<double> scores(images.size(), 0.0);
  std::vector<double> angles(images.size(), 0.0);
  std::vector<int> no_row(images.size(), 0);
  const auto count = static_cast<long>(images.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    // Segmentation is scored even when no row line can be fitted.
    const BinaryMask mask = segment(images[i], params).mask;
    scores[i] = iou(mask, truths[i]);
    try {
      angles[i] = triangle_scan(crop_bottom(mask, params.roi_fraction),
                                params.base_fraction)
                      .delta_theta;
    } catch (const NoRowError&) {
      no_row[i] = 1;
    }
  }

  CsvWriter csv({"image", "iou", "delta_theta_deg", "row_found"});
  for (std::size_t i = 0; i < images.size(); ++i) {
    csv.row(names[i], scores[i], angles[i], no_row[i] == 0);
  }
  const double mean = std::accumulate(scores.begin(), scores.end(), 0.0) /
                      static_cast<double>(scores.size());
  const std::string summary = "images=" + std::to_string(images.size()) + "\nmean_iou=" +
                              format_fixed(mean) + "\n";
  if (args.out.empty()) {
    out << csv.str();
    err << summary;
  } else {
    write_into(args.out, "iou.csv", csv.str());
    write_into(args.out, "summary.txt", summary);
    out << summary;
  }
  return kExitOk;
}

int cmd_render(const RenderArgs& args, std::ostream& out, std::ostream& err) {
  Scenario scenario;
  RenderParams params;
  try {
    scenario = args.scenario.empty() ? default_row_scenario()
                                     : load_scenario_file(args.scenario);
    params.noise = noise_preset(args.noise);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  params.seed = args.seed.value_or(scenario.seed);
  params.lean_deg = args.lean_deg;
  params.lateral_shift = args.lateral_shift;

  const Rendered frame = render_field(scenario, params);
  write_into(args.out, "frame.ppm", encode_ppm(frame.image));
  write_into(args.out, "truth_mask.pgm", encode_mask_pgm(frame.truth));
  try {
    const PipelineResult result = run_pipeline(frame.image);
    write_into(args.out, "index.pgm", encode_pgm(result.index_image));
    write_into(args.out, "segmentation.pgm", encode_mask_pgm(result.mask));
    out << "iou=" << format_fixed(iou(result.mask, frame.truth))
        << "\ndelta_theta_deg=" << format_fixed(result.row.delta_theta) << "\n";
  } catch (const NoRowError& e) {
    err << "warning: " << e.what() << "\n";
    return kExitDegraded;
  }
  return kExitOk;
}

}  // namespace sparrow::cli
