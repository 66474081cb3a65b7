#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sparrow/coordinator.hpp"
#include "sparrow/error.hpp"

namespace sparrow {

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::Navigating: return "Navigating";
    case Phase::Suspended: return "Suspended";
    case Phase::Spraying: return "Spraying";
    case Phase::Completed: return "Completed";
    case Phase::Faulted: return "Faulted";
  }
  return "Unknown";
}

std::string_view to_string(Action a) {
  switch (a) {
    case Action::RequestPlan: return "RequestPlan";
    case Action::ExecutePlan: return "ExecutePlan";
    case Action::ResumeDrive: return "ResumeDrive";
    case Action::DriveStep: return "DriveStep";
    case Action::Stop: return "Stop";
    case Action::Halt: return "Halt";
  }
  return "Unknown";
}

std::string_view to_string(PlannerMode m) {
  switch (m) {
    case PlannerMode::NearestNeighbor: return "nn";
    case PlannerMode::Christofides: return "christofides";
    case PlannerMode::Hybrid: return "hybrid";
    case PlannerMode::Optimal: return "optimal";
  }
  return "unknown";
}

std::string_view to_string(MissionStatus s) {
  switch (s) {
    case MissionStatus::Completed: return "Completed";
    case MissionStatus::Incomplete: return "Incomplete";
    case MissionStatus::Faulted: return "Faulted";
  }
  return "Unknown";
}

PlannerMode parse_planner_mode(std::string_view name) {
  if (name == "nn") return PlannerMode::NearestNeighbor;
  if (name == "christofides") return PlannerMode::Christofides;
  if (name == "hybrid") return PlannerMode::Hybrid;
  if (name == "optimal") return PlannerMode::Optimal;
  throw DomainError("unknown planner mode '" + std::string(name) + "'");
}

WeedDetected::WeedDetected(std::vector<Detection> detections)
    : detections_(std::move(detections)) {
  if (detections_.empty()) {
    throw ValidationError("WeedDetected requires at least one detection");
  }
}

std::string_view event_name(const MissionEvent& e) {
  struct Visitor {
    std::string_view operator()(const WeedDetected&) const { return "WeedDetected"; }
    std::string_view operator()(const PlanReady&) const { return "PlanReady"; }
    std::string_view operator()(const SprayComplete&) const { return "SprayComplete"; }
    std::string_view operator()(const RowLost&) const { return "RowLost"; }
    std::string_view operator()(const StepTick&) const { return "StepTick"; }
    std::string_view operator()(const EndOfRow&) const { return "EndOfRow"; }
  };
  return std::visit(Visitor{}, e);
}

Transition transition(const MissionState& state, const MissionEvent& event) {
  Transition out{state, {}, false};
  const Phase phase = state.phase;

  if (phase == Phase::Navigating) {
    if (const auto* wd = std::get_if<WeedDetected>(&event)) {
      out.state.phase = Phase::Suspended;
      out.state.pending = wd->detections();
      out.actions.push_back(Action::RequestPlan);
      return out;
    }
    if (std::holds_alternative<StepTick>(event)) {
      out.actions.push_back(Action::DriveStep);
      return out;
    }
    if (std::holds_alternative<EndOfRow>(event)) {
      out.state.phase = Phase::Completed;
      out.actions.push_back(Action::Stop);
      return out;
    }
    if (std::holds_alternative<RowLost>(event)) {
      out.state.phase = Phase::Faulted;
      out.actions.push_back(Action::Halt);
      return out;
    }
  } else if (phase == Phase::Suspended) {
    if (const auto* pr = std::get_if<PlanReady>(&event)) {
      out.state.phase = Phase::Spraying;
      out.state.active_plan = pr->plan;
      out.actions.push_back(Action::ExecutePlan);
      return out;
    }
  } else if (phase == Phase::Spraying) {
    if (std::holds_alternative<SprayComplete>(event)) {
      out.state.phase = Phase::Navigating;
      out.state.pending.clear();
      out.state.active_plan.reset();
      out.actions.push_back(Action::ResumeDrive);
      return out;
    }
  }
  out.ignored = true;
  return out;
}

GroundPoint to_robot_frame(const GroundPoint& field_point, const RobotPose& pose) {
  const double h = pose.heading * std::numbers::pi / 180.0;
  const double along = field_point.y - pose.x;
  const double lateral = field_point.x - pose.y;
  return {-along * std::sin(h) + lateral * std::cos(h),
          along * std::cos(h) + lateral * std::sin(h)};
}

double detection_confidence(double bbox_area, const DetectorConfig& cfg) {
  const double f = std::min(1.0, bbox_area / cfg.reference_area);
  return cfg.confidence_min + (cfg.confidence_max - cfg.confidence_min) * f;
}

std::vector<Detection> detect_weeds_simulated(const RobotPose& pose,
                                              const Scenario& scenario,
                                              const DetectorConfig& cfg, Rng& rng,
                                              const std::vector<bool>& sprayed) {
  const auto& fp = scenario.footprint;
  const double reach = std::min(fp.depth, cfg.detection_range);
  std::vector<Detection> out;
  for (std::size_t i = 0; i < scenario.weeds.size(); ++i) {
    if (i < sprayed.size() && sprayed[i]) continue;
    const Weed& w = scenario.weeds[i];
    const GroundPoint local = to_robot_frame(w.position, pose);
    if (std::abs(local.x) > fp.width / 2.0 || local.y < 0.0 || local.y > reach) {
      continue;
    }
    if (rng.uniform() < cfg.miss_rate) continue;
    Detection d;
    d.weed = i;
    d.local = local;
    d.radius = w.radius;
    d.bbox_area = 4.0 * w.radius * w.radius;
    d.confidence = detection_confidence(d.bbox_area, cfg);
    out.push_back(d);
  }
  return out;
}

SprayPlan make_plan(PlannerMode mode, const GroundPoint& ref,
                    std::span<const GroundPoint> weeds, HybridMode hybrid) {
  switch (mode) {
    case PlannerMode::NearestNeighbor: return plan_nearest_neighbor(ref, weeds);
    case PlannerMode::Christofides: return plan_christofides(ref, weeds);
    case PlannerMode::Optimal:
      if (weeds.size() <= kOracleLimit) return plan_optimal_heldkarp(ref, weeds);
      return plan_hybrid(ref, weeds, HybridMode::best_of_both());
    case PlannerMode::Hybrid: break;
  }
  return plan_hybrid(ref, weeds, hybrid);
}

namespace {

class Mission {
 public:
  Mission(const Scenario& s, const MissionOptions& o)
      : scenario_(s),
        options_(o),
        rng_(mix64(s.seed, 0xde7ec7)),
        sprayed_(s.weeds.size(), false),
        detected_(s.weeds.size(), false),
        pose_{0.0, s.mission.start_lateral, s.mission.start_heading} {}

  MissionReport run() {
    const double dt = scenario_.controller.dt;
    const double latency = scenario_.mission.signal_latency;
    int lost_ticks = 0;

    for (std::size_t step = 0; step < options_.max_steps; ++step) {
      if (pose_.x >= scenario_.mission.field_length) {
        apply(EndOfRow{}, "");
        report_.status = MissionStatus::Completed;
        break;
      }

      auto detections = detect_weeds_simulated(pose_, scenario_, scenario_.detector,
                                                rng_, sprayed_);
      if (!detections.empty()) {
        spray(std::move(detections), latency);
        if (report_.status == MissionStatus::Faulted) break;
        clock_ += latency;
      }

      double delta = 0.0;
      if (!measure(delta, step)) {
        if (++lost_ticks >= options_.row_lost_ticks) {
          apply(RowLost{}, std::to_string(lost_ticks) + " consecutive ticks without a row");
          report_.status = MissionStatus::Faulted;
          report_.fault_cause = "row lost";
          break;
        }
      } else {
        lost_ticks = 0;
      }

      const auto actions = apply(StepTick{}, "");
      if (std::find(actions.begin(), actions.end(), Action::DriveStep) != actions.end()) {
        const Twist cmd = control_step(delta, scenario_.controller.alpha,
                                       scenario_.controller.speed);
        report_.trajectory.push_back({clock_, pose_, delta, cmd.omega});
        pose_ = integrate_pose(pose_, cmd, dt);
        report_.totals.distance_driven += cmd.v * dt;
        ++report_.totals.steps;
      }
      clock_ += dt;
    }

    report_.totals.mission_time = clock_;
    report_.totals.weeds_detected = static_cast<std::size_t>(
        std::count(detected_.begin(), detected_.end(), true));
    report_.totals.weeds_sprayed = static_cast<std::size_t>(
        std::count(sprayed_.begin(), sprayed_.end(), true));
    return std::move(report_);
  }

 private:
  std::vector<Action> apply(const MissionEvent& event, std::string detail) {
    Transition t = transition(state_, event);
    state_ = std::move(t.state);
    report_.timeline.push_back({clock_, state_.phase,
                                std::string(event_name(event)) + (t.ignored ? "(ignored)" : ""),
                                std::move(detail)});
    return t.actions;
  }

  // Returns false when the perception pipeline found no row this tick.
  bool measure(double& delta, std::size_t step) {
    if (options_.perception == PerceptionSource::Analytic) {
      delta = analytic_delta_theta(pose_);
      return true;
    }
    RenderParams view = front_view(pose_, options_.render);
    view.seed = mix64(scenario_.seed, step);
    try {
      delta = run_pipeline(render_field(scenario_, view).image, options_.pipeline)
                  .row.delta_theta;
      return true;
    } catch (const NoRowError&) {
      delta = 0.0;
      return false;
    }
  }

  void spray(std::vector<Detection> detections, double latency) {
    std::string ids;
    std::vector<GroundPoint> points;
    std::vector<SprayTarget> targets;
    for (const auto& d : detections) {
      detected_[d.weed] = true;
      if (!ids.empty()) ids += ' ';
      ids += std::to_string(d.weed);
      points.push_back(d.local);
      targets.push_back({d.local, d.radius, d.weed});
    }
    ++report_.totals.interrupts;
    apply(WeedDetected(std::move(detections)), ids);

    const GroundPoint ref = footprint_center(scenario_.footprint);
    SprayPlan plan = make_plan(options_.planner, ref, points, options_.hybrid);
    std::string plan_detail = std::string(to_string(plan.algorithm));
    if (plan.algorithm == Algorithm::Hybrid) {
      plan_detail += "/" + std::string(to_string(plan.inner));
    }
    if (options_.planner == PlannerMode::Optimal && plan.algorithm != Algorithm::Optimal) {
      plan_detail += " (oracle size limit)";
    }
    plan_detail += " length=" + std::to_string(plan.length);
    clock_ += latency;
    apply(PlanReady{plan}, plan_detail);

    SprayLog log;
    try {
      log = execute_plan(plan, targets, scenario_.sprayer);
    } catch (const OutOfReachError& e) {
      report_.status = MissionStatus::Faulted;
      report_.fault_cause = e.what();
      state_.phase = Phase::Faulted;
      report_.timeline.push_back({clock_, state_.phase, "SprayFault", e.what()});
      log = e.partial_log();
      record_log(plan, log);
      return;
    }
    record_log(plan, log);
    clock_ += log.total_time;
    apply(SprayComplete{log}, std::to_string(log.events.size()) + " targets");
  }

  void record_log(const SprayPlan& plan, const SprayLog& log) {
    for (const auto& ev : log.events) {
      sprayed_[ev.target] = true;
      if (ev.covered) ++report_.totals.weeds_covered;
    }
    report_.totals.spray_time += log.total_time;
    report_.plans.push_back(plan);
    report_.spray_logs.push_back(log);
  }

  const Scenario& scenario_;
  const MissionOptions& options_;
  Rng rng_;
  std::vector<bool> sprayed_;
  std::vector<bool> detected_;
  RobotPose pose_;
  MissionState state_;
  MissionReport report_;
  double clock_ = 0.0;
};

}  // namespace

MissionReport run_mission(const Scenario& scenario, const MissionOptions& options) {
  validate_scenario(scenario);
  return Mission(scenario, options).run();
}

}  // namespace sparrow
