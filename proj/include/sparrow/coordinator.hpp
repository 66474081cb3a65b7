#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sparrow/navctl.hpp"
#include "sparrow/planner.hpp"
#include "sparrow/random.hpp"
#include "sparrow/scenario.hpp"
#include "sparrow/sprayer.hpp"

namespace sparrow {

enum class Phase { Navigating, Suspended, Spraying, Completed, Faulted };
std::string_view to_string(Phase p);

struct Detection {
  std::size_t weed = 0;   // scenario weed index
  GroundPoint local;      // robot-local ground frame
  double radius = 0.0;    // cm
  double bbox_area = 0.0; // cm^2
  double confidence = 0.0;
};

struct MissionState {
  Phase phase = Phase::Navigating;
  std::vector<Detection> pending;
  std::optional<SprayPlan> active_plan;
};

// Interrupt signal from the detector. Construction rejects empty batches.
class WeedDetected {
 public:
  explicit WeedDetected(std::vector<Detection> detections);
  const std::vector<Detection>& detections() const noexcept { return detections_; }

 private:
  std::vector<Detection> detections_;
};

struct PlanReady {
  SprayPlan plan;
};
struct SprayComplete {
  SprayLog log;
};
struct RowLost {};
struct StepTick {};
// Robot reached the end of the row.
struct EndOfRow {};

using MissionEvent =
    std::variant<WeedDetected, PlanReady, SprayComplete, RowLost, StepTick, EndOfRow>;
std::string_view event_name(const MissionEvent& e);

enum class Action { RequestPlan, ExecutePlan, ResumeDrive, DriveStep, Stop, Halt };
std::string_view to_string(Action a);

struct Transition {
  MissionState state;
  std::vector<Action> actions;
  bool ignored = false;  // illegal pair, state unchanged
};

/// Pure, total mission transition function.
///   Navigating + WeedDetected  -> Suspended  [RequestPlan]
///   Suspended  + PlanReady     -> Spraying   [ExecutePlan]
///   Spraying   + SprayComplete -> Navigating [ResumeDrive]
///   Navigating + StepTick      -> Navigating [DriveStep]
///   Navigating + EndOfRow      -> Completed  [Stop]
///   Navigating + RowLost       -> Faulted    [Halt]
/// Anything else is an ignored no-op.
Transition transition(const MissionState& state, const MissionEvent& event);

/// Weeds inside the current footprint (and detection range), skipping those
/// flagged in `sprayed`. Each candidate consumes one draw from rng for the
/// miss test, in weed index order.
std::vector<Detection> detect_weeds_simulated(const RobotPose& pose,
                                              const Scenario& scenario,
                                              const DetectorConfig& cfg, Rng& rng,
                                              const std::vector<bool>& sprayed = {});

// Field point expressed in the robot-local ground frame of `pose`.
GroundPoint to_robot_frame(const GroundPoint& field_point, const RobotPose& pose);

double detection_confidence(double bbox_area, const DetectorConfig& cfg);

enum class PlannerMode { NearestNeighbor, Christofides, Hybrid, Optimal };
std::string_view to_string(PlannerMode m);
// "nn", "christofides", "hybrid", "optimal"; throws DomainError otherwise.
PlannerMode parse_planner_mode(std::string_view name);

SprayPlan make_plan(PlannerMode mode, const GroundPoint& ref,
                    std::span<const GroundPoint> weeds,
                    HybridMode hybrid = HybridMode::best_of_both());

struct MissionOptions {
  PlannerMode planner = PlannerMode::Hybrid;
  HybridMode hybrid = HybridMode::best_of_both();
  std::size_t max_steps = 100000;
  PerceptionSource perception = PerceptionSource::Analytic;
  RenderParams render;
  PipelineParams pipeline;
  int row_lost_ticks = 10;
};

enum class MissionStatus { Completed, Incomplete, Faulted };
std::string_view to_string(MissionStatus s);

struct TimelineEntry {
  double time = 0.0;
  Phase phase = Phase::Navigating;  // phase after the event
  std::string event;
  std::string detail;
};

struct MissionTotals {
  std::size_t weeds_detected = 0;
  std::size_t weeds_sprayed = 0;
  std::size_t weeds_covered = 0;
  std::size_t interrupts = 0;
  std::size_t steps = 0;
  double distance_driven = 0.0;  // cm
  double mission_time = 0.0;     // s
  double spray_time = 0.0;       // s, sum of SprayLog totals
};

struct MissionReport {
  MissionStatus status = MissionStatus::Incomplete;
  std::string fault_cause;
  std::vector<TimelineEntry> timeline;
  std::vector<TrajectorySample> trajectory;
  std::vector<SprayPlan> plans;
  std::vector<SprayLog> spray_logs;
  MissionTotals totals;
};

/// Drives the detect -> interrupt -> plan -> spray -> resume loop until the
/// end of the row, a fault, or max_steps control periods (Incomplete).
MissionReport run_mission(const Scenario& scenario, const MissionOptions& options = {});

// Writes timeline.csv, trajectory.csv, spray_NNN.csv and summary.txt into
// dir (created if absent).
void write_report(const MissionReport& report, const std::string& dir);
std::string timeline_csv(const MissionReport& report);
std::string summary_text(const MissionReport& report);

}  // namespace sparrow
