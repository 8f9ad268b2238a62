#include "adsharvest/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace adsh {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::runtime_error("config line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line, const std::string& key) {
  try {
    size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) fail(line, "trailing junk in value for '" + key + "'");
    return x;
  } catch (const std::invalid_argument&) {
    fail(line, "expected a number for '" + key + "', got '" + v + "'");
  } catch (const std::out_of_range&) {
    fail(line, "value out of range for '" + key + "'");
  }
}

int parse_int(const std::string& v, int line, const std::string& key) {
  const double x = parse_double(v, line, key);
  const int i = static_cast<int>(x);
  if (static_cast<double>(i) != x)
    fail(line, "expected an integer for '" + key + "'");
  return i;
}

bool axis_name_ok(const std::string& n) {
  return n == "gap" || n == "separation" || n == "curvature" || n == "delay";
}

AxisSpec parse_axis(const std::string& v, int line, const std::string& key) {
  std::istringstream ss(v);
  AxisSpec ax;
  if (!(ss >> ax.name >> ax.min >> ax.max >> ax.count))
    fail(line, "'" + key + "' needs: <name> <min> <max> <count>");
  std::string extra;
  if (ss >> extra) fail(line, "trailing junk after '" + key + "'");
  if (!axis_name_ok(ax.name))
    fail(line, "unknown axis '" + ax.name +
                   "' (use gap, separation, curvature or delay)");
  if (ax.count < 2) fail(line, "axis count must be >= 2");
  if (!(ax.min < ax.max)) fail(line, "axis needs min < max");
  return ax;
}

}  // namespace

SweepConfig parse_config(const std::string& text) {
  SweepConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  bool axis1_seen = false, axis2_seen = false;

  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;

    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "unterminated section header");
      section = s.substr(1, s.size() - 2);
      if (section != "scenario" && section != "sweep" &&
          section != "truncation" && section != "output")
        fail(line, "unknown section [" + section + "]");
      continue;
    }

    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) fail(line, "empty key");
    if (value.empty()) fail(line, "empty value for '" + key + "'");
    if (section.empty()) fail(line, "key '" + key + "' before any section");

    if (section == "scenario") {
      if (key == "kind") {
        if (value == "geodesic") cfg.kind = PairKind::geodesic;
        else if (value == "static") cfg.kind = PairKind::static_pair;
        else fail(line, "kind must be geodesic or static");
      } else if (key == "epsilon") {
        const int e = parse_int(value, line, key);
        if (e < -1 || e > 1) fail(line, "epsilon must be -1, 0 or +1");
        cfg.eps = e;
      } else if (key == "curvature") {
        cfg.curvature = parse_double(value, line, key);
      } else if (key == "gap") {
        cfg.gap = parse_double(value, line, key);
      } else if (key == "sigma") {
        cfg.sigma = parse_double(value, line, key);
      } else if (key == "separation") {
        cfg.separation = parse_double(value, line, key);
      } else if (key == "delay") {
        cfg.delay = parse_double(value, line, key);
      } else if (key == "coupling") {
        cfg.coupling = parse_double(value, line, key);
      } else {
        fail(line, "unknown key '" + key + "' in [scenario]");
      }
    } else if (section == "sweep") {
      if (key == "axis1") {
        if (axis1_seen) fail(line, "duplicate axis1");
        cfg.axes.insert(cfg.axes.begin(), parse_axis(value, line, key));
        axis1_seen = true;
      } else if (key == "axis2") {
        if (axis2_seen) fail(line, "duplicate axis2");
        cfg.axes.push_back(parse_axis(value, line, key));
        axis2_seen = true;
      } else {
        fail(line, "unknown key '" + key + "' in [sweep]");
      }
    } else if (section == "truncation") {
      if (key == "tol") cfg.trunc.tol = parse_double(value, line, key);
      else if (key == "n_max") cfg.trunc.n_max = parse_int(value, line, key);
      else if (key == "l_max") cfg.trunc.l_max = parse_int(value, line, key);
      else if (key == "image_n_max")
        cfg.trunc.image_n_max = parse_int(value, line, key);
      else if (key == "consecutive_below")
        cfg.trunc.consecutive_below = parse_int(value, line, key);
      else fail(line, "unknown key '" + key + "' in [truncation]");
    } else {  // output
      if (key == "path") cfg.output_path = value;
      else fail(line, "unknown key '" + key + "' in [output]");
    }
  }

  if (axis2_seen && !axis1_seen)
    throw std::runtime_error("config: axis2 given without axis1");
  if (cfg.axes.size() == 2 && cfg.axes[0].name == cfg.axes[1].name)
    throw std::runtime_error("config: axis1 and axis2 sweep the same parameter");
  if (!(cfg.curvature > 0.0)) throw std::runtime_error("config: curvature must be > 0");
  if (!(cfg.sigma > 0.0)) throw std::runtime_error("config: sigma must be > 0");
  if (cfg.separation < 0.0) throw std::runtime_error("config: separation must be >= 0");
  if (!(cfg.trunc.tol > 0.0)) throw std::runtime_error("config: tol must be > 0");
  if (cfg.trunc.n_max < 1 || cfg.trunc.l_max < 0 || cfg.trunc.image_n_max < 1 ||
      cfg.trunc.consecutive_below < 1)
    throw std::runtime_error("config: bad truncation limits");
  return cfg;
}

SweepConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

Scenario scenario_at(const SweepConfig& cfg, const std::vector<double>& values) {
  if (values.size() != cfg.axes.size())
    throw std::invalid_argument("scenario_at: axis/value count mismatch");
  double curvature = cfg.curvature, gap = cfg.gap;
  double separation = cfg.separation, delay = cfg.delay;
  for (size_t i = 0; i < values.size(); ++i) {
    const std::string& n = cfg.axes[i].name;
    if (n == "gap") gap = values[i];
    else if (n == "separation") separation = values[i];
    else if (n == "curvature") curvature = values[i];
    else if (n == "delay") delay = values[i];
  }
  return cfg.kind == PairKind::geodesic
             ? Scenario::geodesic_pair(curvature, cfg.eps, gap, cfg.sigma,
                                       separation, delay, cfg.coupling)
             : Scenario::static_pair_at(curvature, cfg.eps, gap, cfg.sigma,
                                        separation, delay, cfg.coupling);
}

}  // namespace adsh
