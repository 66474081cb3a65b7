#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sparrow/error.hpp"
#include "sparrow/scenario.hpp"

namespace sparrow {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view s, std::size_t line) {
  s = trim(s);
  double value = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw ParseError(line, "expected a number, got '" + std::string(s) + "'");
  }
  return value;
}

template <typename Int>
Int parse_integer(std::string_view s, std::size_t line) {
  s = trim(s);
  Int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw ParseError(line, "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::vector<double> parse_tuple(std::string_view s, std::size_t arity,
                                std::size_t line) {
  std::vector<double> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_double(s.substr(0, comma), line));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  if (out.size() != arity) {
    throw ParseError(line, "expected " + std::to_string(arity) +
                               " comma-separated values, got " +
                               std::to_string(out.size()));
  }
  return out;
}

std::string fmt(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string indexed(const char* base, std::size_t i, const char* field) {
  return std::string(base) + "[" + std::to_string(i) + "]." + field;
}

void require(bool ok, const std::string& field, const char* what) {
  if (!ok) throw InvariantError(field, what);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void validate_scenario(const Scenario& s) {
  const auto& fp = s.footprint;
  require(finite(fp.width) && fp.width > 0, "footprint.width", "must be > 0");
  require(finite(fp.depth) && fp.depth > 0, "footprint.depth", "must be > 0");
  require(fp.image_width > 0, "footprint.image_width", "must be > 0");
  require(fp.image_height > 0, "footprint.image_height", "must be > 0");

  require(!s.crop_rows.empty(), "crop_rows", "at least one row is required");
  for (std::size_t i = 0; i < s.crop_rows.size(); ++i) {
    require(finite(s.crop_rows[i].offset), indexed("crop_rows", i, "offset"),
            "must be finite");
    require(finite(s.crop_rows[i].width) && s.crop_rows[i].width > 0,
            indexed("crop_rows", i, "width"), "must be > 0");
  }
  for (std::size_t i = 0; i < s.weeds.size(); ++i) {
    const auto& w = s.weeds[i];
    require(finite(w.position.x), indexed("weeds", i, "x"), "must be finite");
    require(finite(w.position.y), indexed("weeds", i, "y"), "must be finite");
    require(finite(w.radius) && w.radius > 0, indexed("weeds", i, "radius"),
            "must be > 0");
  }

  const auto& c = s.controller;
  require(finite(c.alpha), "controller.alpha", "must be finite");
  require(finite(c.speed) && c.speed >= 0, "controller.speed", "must be >= 0");
  require(finite(c.dt) && c.dt > 0, "controller.dt", "must be > 0");

  const auto& sp = s.sprayer;
  require(finite(sp.mount_height) && sp.mount_height > 0,
          "sprayer.mount_height", "must be > 0");
  require(finite(sp.mount_point.x) && finite(sp.mount_point.y),
          "sprayer.mount_point", "must be finite");
  require(finite(sp.max_reach_r1) && sp.max_reach_r1 > 0,
          "sprayer.max_reach_r1", "must be > 0");
  require(finite(sp.dwell_time) && sp.dwell_time > 0, "sprayer.dwell_time",
          "must be > 0");
  require(finite(sp.slew_rate) && sp.slew_rate > 0, "sprayer.slew_rate",
          "must be > 0");
  require(!sp.spread_knots.empty(), "sprayer.spread_knots", "must not be empty");
  for (std::size_t i = 0; i < sp.spread_knots.size(); ++i) {
    const auto& k = sp.spread_knots[i];
    require(finite(k.r1) && k.r1 >= 0, indexed("sprayer.spread_knots", i, "r1"),
            "must be >= 0");
    require(finite(k.r2) && k.r2 >= 0, indexed("sprayer.spread_knots", i, "r2"),
            "must be >= 0");
    if (i > 0) {
      require(k.r1 > sp.spread_knots[i - 1].r1,
              indexed("sprayer.spread_knots", i, "r1"),
              "knots must be strictly increasing in r1");
    }
  }

  const auto& d = s.detector;
  require(finite(d.detection_range) && d.detection_range > 0,
          "detector.detection_range", "must be > 0");
  require(d.confidence_min >= 0 && d.confidence_min <= 1,
          "detector.confidence_min", "must lie in [0, 1]");
  require(d.confidence_max >= 0 && d.confidence_max <= 1,
          "detector.confidence_max", "must lie in [0, 1]");
  require(d.confidence_min <= d.confidence_max, "detector.confidence_min",
          "must not exceed confidence_max");
  require(finite(d.reference_area) && d.reference_area > 0,
          "detector.reference_area", "must be > 0");
  require(d.miss_rate >= 0 && d.miss_rate <= 1, "detector.miss_rate",
          "must lie in [0, 1]");

  const auto& m = s.mission;
  require(finite(m.field_length) && m.field_length > 0, "mission.field_length",
          "must be > 0");
  require(finite(m.start_lateral), "mission.start_lateral", "must be finite");
  require(finite(m.start_heading) && std::abs(m.start_heading) < 90,
          "mission.start_heading", "must lie in (-90, 90)");
  require(finite(m.signal_latency) && m.signal_latency > 0,
          "mission.signal_latency", "must be > 0");
}

Scenario load_scenario(std::string_view text) {
  Scenario s;
  s.sprayer.spread_knots.clear();

  using Setter = std::function<void(std::string_view, std::size_t)>;
  auto dbl = [](double& target) -> Setter {
    return [&target](std::string_view v, std::size_t line) {
      target = parse_double(v, line);
    };
  };
  auto integer = [](int& target) -> Setter {
    return [&target](std::string_view v, std::size_t line) {
      target = parse_integer<int>(v, line);
    };
  };

  const std::map<std::string, Setter, std::less<>> scalars = {
      {"footprint_width", dbl(s.footprint.width)},
      {"footprint_depth", dbl(s.footprint.depth)},
      {"image_width", integer(s.footprint.image_width)},
      {"image_height", integer(s.footprint.image_height)},
      {"alpha", dbl(s.controller.alpha)},
      {"speed", dbl(s.controller.speed)},
      {"dt", dbl(s.controller.dt)},
      {"mount_height", dbl(s.sprayer.mount_height)},
      {"mount_x", dbl(s.sprayer.mount_point.x)},
      {"mount_y", dbl(s.sprayer.mount_point.y)},
      {"max_reach", dbl(s.sprayer.max_reach_r1)},
      {"dwell_time", dbl(s.sprayer.dwell_time)},
      {"slew_rate", dbl(s.sprayer.slew_rate)},
      {"detection_range", dbl(s.detector.detection_range)},
      {"confidence_min", dbl(s.detector.confidence_min)},
      {"confidence_max", dbl(s.detector.confidence_max)},
      {"reference_area", dbl(s.detector.reference_area)},
      {"miss_rate", dbl(s.detector.miss_rate)},
      {"field_length", dbl(s.mission.field_length)},
      {"start_lateral", dbl(s.mission.start_lateral)},
      {"start_heading", dbl(s.mission.start_heading)},
      {"signal_latency", dbl(s.mission.signal_latency)},
      {"seed",
       [&s](std::string_view v, std::size_t line) {
         s.seed = parse_integer<std::uint64_t>(v, line);
       }},
  };

  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, "expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "missing key");
    if (value.empty()) throw ParseError(line_no, "missing value for '" + std::string(key) + "'");

    if (key == "row") {
      const auto t = parse_tuple(value, 2, line_no);
      s.crop_rows.push_back({t[0], t[1]});
    } else if (key == "weed") {
      const auto t = parse_tuple(value, 3, line_no);
      s.weeds.push_back({{t[0], t[1]}, t[2]});
    } else if (key == "spread_knot") {
      const auto t = parse_tuple(value, 2, line_no);
      s.sprayer.spread_knots.push_back({t[0], t[1]});
    } else if (auto it = scalars.find(key); it != scalars.end()) {
      if (!seen.emplace(key).second) {
        throw ParseError(line_no, "duplicate key '" + std::string(key) + "'");
      }
      it->second(value, line_no);
    } else {
      throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }

  if (s.sprayer.spread_knots.empty()) {
    s.sprayer.spread_knots = default_spread_knots();
  }
  validate_scenario(s);
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenario(buf.str());
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "# footprint\n"
      << "footprint_width = " << fmt(s.footprint.width) << "\n"
      << "footprint_depth = " << fmt(s.footprint.depth) << "\n"
      << "image_width = " << s.footprint.image_width << "\n"
      << "image_height = " << s.footprint.image_height << "\n";
  out << "# rows: offset,width\n";
  for (const auto& r : s.crop_rows) {
    out << "row = " << fmt(r.offset) << "," << fmt(r.width) << "\n";
  }
  out << "# weeds: x,y,radius\n";
  for (const auto& w : s.weeds) {
    out << "weed = " << fmt(w.position.x) << "," << fmt(w.position.y) << ","
        << fmt(w.radius) << "\n";
  }
  out << "# controller\n"
      << "alpha = " << fmt(s.controller.alpha) << "\n"
      << "speed = " << fmt(s.controller.speed) << "\n"
      << "dt = " << fmt(s.controller.dt) << "\n";
  out << "# sprayer\n"
      << "mount_height = " << fmt(s.sprayer.mount_height) << "\n"
      << "mount_x = " << fmt(s.sprayer.mount_point.x) << "\n"
      << "mount_y = " << fmt(s.sprayer.mount_point.y) << "\n"
      << "max_reach = " << fmt(s.sprayer.max_reach_r1) << "\n"
      << "dwell_time = " << fmt(s.sprayer.dwell_time) << "\n"
      << "slew_rate = " << fmt(s.sprayer.slew_rate) << "\n";
  for (const auto& k : s.sprayer.spread_knots) {
    out << "spread_knot = " << fmt(k.r1) << "," << fmt(k.r2) << "\n";
  }
  out << "# detector\n"
      << "detection_range = " << fmt(s.detector.detection_range) << "\n"
      << "confidence_min = " << fmt(s.detector.confidence_min) << "\n"
      << "confidence_max = " << fmt(s.detector.confidence_max) << "\n"
      << "reference_area = " << fmt(s.detector.reference_area) << "\n"
      << "miss_rate = " << fmt(s.detector.miss_rate) << "\n";
  out << "# mission\n"
      << "field_length = " << fmt(s.mission.field_length) << "\n"
      << "start_lateral = " << fmt(s.mission.start_lateral) << "\n"
      << "start_heading = " << fmt(s.mission.start_heading) << "\n"
      << "signal_latency = " << fmt(s.mission.signal_latency) << "\n"
      << "seed = " << s.seed << "\n";
  return out.str();
}

std::size_t central_row_index(const Scenario& s) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.crop_rows.size(); ++i) {
    if (std::abs(s.crop_rows[i].offset) < std::abs(s.crop_rows[best].offset)) {
      best = i;
    }
  }
  return best;
}

}  // namespace sparrow
