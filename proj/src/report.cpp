#include <cstdio>
#include <filesystem>

#include "sparrow/coordinator.hpp"
#include "sparrow/csv.hpp"
#include "sparrow/image.hpp"

namespace sparrow {

std::string timeline_csv(const MissionReport& report) {
  CsvWriter csv({"time_s", "phase", "event", "detail"});
  for (const auto& e : report.timeline) {
    // detail must stay a single plain field
    std::string detail = e.detail;
    for (char& c : detail) {
      if (c == ',' || c == '\n') c = ';';
    }
    csv.row(e.time, to_string(e.phase), e.event, detail);
  }
  return csv.str();
}

std::string summary_text(const MissionReport& report) {
  const auto& t = report.totals;
  std::string s;
  auto kv = [&s](std::string_view k, const std::string& v) {
    s += k;
    s += '=';
    s += v;
    s += '\n';
  };
  kv("status", std::string(to_string(report.status)));
  kv("fault_cause", report.fault_cause);
  kv("weeds_detected", std::to_string(t.weeds_detected));
  kv("weeds_sprayed", std::to_string(t.weeds_sprayed));
  kv("weeds_covered", std::to_string(t.weeds_covered));
  kv("interrupts", std::to_string(t.interrupts));
  kv("spray_logs", std::to_string(report.spray_logs.size()));
  kv("steps", std::to_string(t.steps));
  kv("distance_driven_cm", format_fixed(t.distance_driven));
  kv("mission_time_s", format_fixed(t.mission_time));
  kv("spray_time_s", format_fixed(t.spray_time));
  return s;
}

void write_report(const MissionReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path root(dir);
  // Stale spray logs from an earlier, longer run would break reproducibility.
  for (const auto& entry : fs::directory_iterator(root)) {
    const std::string name = entry.path().filename().string();
    if (name.starts_with("spray_") && name.ends_with(".csv")) fs::remove(entry.path());
  }
  write_file((root / "timeline.csv").string(), timeline_csv(report));
  write_file((root / "trajectory.csv").string(), trajectory_csv(report.trajectory));
  for (std::size_t i = 0; i < report.spray_logs.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "spray_%03zu.csv", i);
    write_file((root / name).string(), spray_log_csv(report.spray_logs[i]));
  }
  write_file((root / "summary.txt").string(), summary_text(report));
}

}  // namespace sparrow
