#include "adsharvest/pins.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace adsh {

const std::vector<Checkpoint>& pinned_checkpoints() {
  static const std::vector<Checkpoint> pts = {
      {PairKind::geodesic, -1, 1.0, 2.0, 1.0, 2.0, 0.0},
      {PairKind::geodesic, 0, 1.0, 2.0, 1.0, 2.0, 0.0},
      {PairKind::geodesic, +1, 1.0, 2.0, 1.0, 2.0, 0.0},
      {PairKind::geodesic, -1, 5.0, 3.0, 1.0, 2.0, 0.0},
      {PairKind::geodesic, -1, 5.0, 3.0, 1.0, 2.0, 2.0},
      {PairKind::geodesic, +1, 1.0, 2.0, 1.0, 1.0, 2.0 * M_PI},
      {PairKind::static_pair, -1, 1.0, 2.0, 1.0, 2.0, 0.0},
      {PairKind::static_pair, 0, 1.0, 2.0, 1.0, 2.0, 2.0},
      {PairKind::static_pair, +1, 1.0, 2.0, 1.0, 2.0, -2.0},
      {PairKind::static_pair, -1, 5.0, 3.0, 1.0, 2.0, 2.0},
  };
  return pts;
}

Scenario make_scenario(const Checkpoint& c, double lambda) {
  return c.kind == PairKind::geodesic
             ? Scenario::geodesic_pair(c.L, c.eps, c.gap, c.sigma, c.dx,
                                       c.tau0, lambda)
             : Scenario::static_pair_at(c.L, c.eps, c.gap, c.sigma, c.dx,
                                        c.tau0, lambda);
}

std::string checkpoint_key(const Checkpoint& c, const char* element) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%s:eps=%d:L=%g:gap=%g:sigma=%g:dx=%g:tau0=%g:%s",
                c.kind == PairKind::geodesic ? "geodesic" : "static", c.eps,
                c.L, c.gap, c.sigma, c.dx, c.tau0, element);
  return buf;
}

PinMap read_pins(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("pins: cannot open " + path);
  PinMap pins;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string key;
    double re, im;
    if (!(ss >> key >> re >> im))
      throw std::runtime_error("pins: bad line " + std::to_string(lineno) +
                               " in " + path);
    pins[key] = cplx(re, im);
  }
  return pins;
}

void write_pins(const std::string& path, const PinMap& pins) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("pins: cannot write " + path);
  out << "# frozen reference values (independent-quadrature path)\n"
      << "# key re im\n";
  char buf[96];
  for (const auto& [key, value] : pins) {
    std::snprintf(buf, sizeof buf, " %.17g %.17g\n", value.real(),
                  value.imag());
    out << key << buf;
  }
  if (!out) throw std::runtime_error("pins: write failed for " + path);
}

}  // namespace adsh
