#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sparrow/csv.hpp"
#include "sparrow/error.hpp"
#include "sparrow/sprayer.hpp"

namespace sparrow {

namespace {

constexpr double kDeg = 180.0 / std::numbers::pi;

double wrap_degrees(double a) {
  a = std::fmod(a, 360.0);
  if (a > 180.0) a -= 360.0;
  if (a <= -180.0) a += 360.0;
  return a;
}

}  // namespace

OutOfReachError::OutOfReachError(std::size_t target, double r1, double max_reach,
                                 SprayLog partial)
    : std::runtime_error("target " + std::to_string(target) + " is " +
                         std::to_string(r1) + " cm from the aim point, beyond reach " +
                         std::to_string(max_reach) + " cm"),
      target_(target),
      r1_(r1),
      partial_(std::move(partial)) {}

double max_tilt(const SprayerConfig& cfg) {
  return 90.0 + std::atan(cfg.max_reach_r1 / cfg.mount_height) * kDeg;
}

TurretAngles aim_angles(const GroundPoint& target, const SprayerConfig& cfg,
                        std::size_t target_index) {
  const double dx = target.x - cfg.mount_point.x;
  const double dy = target.y - cfg.mount_point.y;
  const double r1 = std::hypot(dx, dy);
  if (r1 > cfg.max_reach_r1) {
    throw OutOfReachError(target_index, r1, cfg.max_reach_r1);
  }
  TurretAngles a;
  a.pan = r1 == 0.0 ? 0.0 : std::atan2(-dx, dy) * kDeg;
  a.tilt = 90.0 + std::atan(r1 / cfg.mount_height) * kDeg;
  return a;
}

GroundPoint aim_point(const TurretAngles& angles, const SprayerConfig& cfg) {
  const double r1 = cfg.mount_height * std::tan((angles.tilt - 90.0) / kDeg);
  const double pan = angles.pan / kDeg;
  return {cfg.mount_point.x - r1 * std::sin(pan),
          cfg.mount_point.y + r1 * std::cos(pan)};
}

double spread_radius(double r1, const SprayerConfig& cfg) {
  if (!(r1 >= 0.0) || r1 > cfg.max_reach_r1) {
    throw DomainError("r1 = " + std::to_string(r1) + " outside [0, " +
                      std::to_string(cfg.max_reach_r1) + "]");
  }
  const auto& k = cfg.spread_knots;
  if (k.empty()) throw DomainError("spread curve has no knots");
  if (r1 <= k.front().r1) return k.front().r2;
  if (r1 >= k.back().r1) return k.back().r2;
  const auto hi = std::upper_bound(
      k.begin(), k.end(), r1,
      [](double v, const SpreadKnot& knot) { return v < knot.r1; });
  const auto lo = hi - 1;
  const double f = (r1 - lo->r1) / (hi->r1 - lo->r1);
  return lo->r2 + f * (hi->r2 - lo->r2);
}

SprayLog execute_plan(const SprayPlan& plan, std::span<const SprayTarget> targets,
                      const SprayerConfig& cfg) {
  validate_sprayer_config(cfg);
  std::vector<GroundPoint> points;
  points.reserve(targets.size());
  for (const auto& t : targets) points.push_back(t.position);
  (void)tour_length(plan, points);  // permutation check

  SprayLog log;
  TurretAngles current{};
  double clock = 0.0;
  for (const std::size_t idx : plan.order) {
    const SprayTarget& target = targets[idx];
    TurretAngles next;
    try {
      next = aim_angles(target.position, cfg, target.id);
    } catch (const OutOfReachError& e) {
      throw OutOfReachError(target.id, e.r1(), cfg.max_reach_r1, log);
    }
    const double slew = std::max(std::abs(wrap_degrees(next.pan - current.pan)),
                                 std::abs(next.tilt - current.tilt)) /
                        cfg.slew_rate;
    clock += slew;

    SprayEvent ev;
    ev.target = target.id;
    ev.angles = next;
    ev.r1 = distance(target.position, cfg.mount_point);
    ev.r2 = spread_radius(ev.r1, cfg);
    ev.start_time = clock;
    ev.dwell = cfg.dwell_time;
    ev.covered = ev.r2 >= target.radius;
    log.events.push_back(ev);

    clock += cfg.dwell_time;
    log.total_time = clock;
    current = next;
  }
  return log;
}

std::string spray_log_csv(const SprayLog& log) {
  CsvWriter csv({"idx", "pan_deg", "tilt_deg", "r1_cm", "r2_cm", "t_start_s",
                 "dwell_s", "covered"});
  for (const auto& e : log.events) {
    csv.row(e.target, e.angles.pan, e.angles.tilt, e.r1, e.r2, e.start_time,
            e.dwell, e.covered);
  }
  return csv.str();
}

}  // namespace sparrow
