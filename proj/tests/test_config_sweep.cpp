#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "adsharvest/config.hpp"
#include "adsharvest/quantify.hpp"
#include "adsharvest/sweep.hpp"
#include "doctest.h"

using namespace adsh;

namespace {

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string line;
  bool past_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!past_header) {  // column header row
      past_header = true;
      continue;
    }
    out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("config: full parse") {
  const char* text = R"(# exercised by tests
[scenario]
kind = static          # comment after value
epsilon = 1
curvature = 2.5
gap = 3
sigma = 0.5
separation = 1.25
delay = -2
coupling = 0.02

[sweep]
axis1 = gap 0.5 4 8
axis2 = separation 0.1 2 5

[truncation]
tol = 1e-9
n_max = 300
l_max = 100
image_n_max = 32
consecutive_below = 2

[output]
path = out/run.csv
)";
  const SweepConfig cfg = parse_config(text);
  CHECK(cfg.kind == PairKind::static_pair);
  CHECK(cfg.eps == 1);
  CHECK(cfg.curvature == 2.5);
  CHECK(cfg.gap == 3.0);
  CHECK(cfg.sigma == 0.5);
  CHECK(cfg.separation == 1.25);
  CHECK(cfg.delay == -2.0);
  CHECK(cfg.coupling == 0.02);
  REQUIRE(cfg.axes.size() == 2);
  CHECK(cfg.axes[0].name == "gap");
  CHECK(cfg.axes[0].min == 0.5);
  CHECK(cfg.axes[0].max == 4.0);
  CHECK(cfg.axes[0].count == 8);
  CHECK(cfg.axes[1].name == "separation");
  CHECK(cfg.trunc.tol == 1e-9);
  CHECK(cfg.trunc.n_max == 300);
  CHECK(cfg.trunc.l_max == 100);
  CHECK(cfg.trunc.image_n_max == 32);
  CHECK(cfg.trunc.consecutive_below == 2);
  CHECK(cfg.output_path == "out/run.csv");
}

TEST_CASE("config: axis order is axis1-major regardless of file order") {
  const SweepConfig cfg = parse_config(
      "[sweep]\naxis2 = delay 0 1 2\naxis1 = gap 1 2 3\n");
  REQUIRE(cfg.axes.size() == 2);
  CHECK(cfg.axes[0].name == "gap");
  CHECK(cfg.axes[1].name == "delay");
}

TEST_CASE("config: rejects malformed input") {
  const char* bad[] = {
      "[nope]\n",                                  // unknown section
      "[scenario]\nmass = 1\n",                    // unknown key
      "[scenario]\nkind = circular\n",             // bad enum
      "[scenario]\nepsilon = 2\n",                 // out of range
      "[scenario]\nepsilon = 0.5\n",               // not an integer
      "[scenario]\ngap = abc\n",                   // not a number
      "[scenario]\ngap = 1.5x\n",                  // trailing junk
      "[scenario]\ngap =\n",                       // empty value
      "gap = 1\n",                                 // key before section
      "[scenario\n",                               // unterminated header
      "[scenario]\njust words\n",                  // no equals sign
      "[sweep]\naxis1 = gap 1 2\n",                // short axis
      "[sweep]\naxis1 = gap 1 2 4 9\n",            // long axis
      "[sweep]\naxis1 = width 1 2 4\n",            // unknown axis name
      "[sweep]\naxis1 = gap 1 2 1\n",              // count < 2
      "[sweep]\naxis1 = gap 2 1 4\n",              // min >= max
      "[sweep]\naxis1 = gap 1 2 4\naxis1 = delay 0 1 2\n",  // dup axis1
      "[sweep]\naxis2 = gap 1 2 4\naxis1 = delay 0 1 2\naxis2 = gap 1 3 4\n",
      "[sweep]\naxis2 = gap 1 2 4\n",              // axis2 without axis1
      "[sweep]\naxis1 = gap 1 2 4\naxis2 = gap 3 4 5\n",  // same parameter
      "[scenario]\ncurvature = -1\n",              // invalid physics
      "[scenario]\nsigma = 0\n",
      "[scenario]\nseparation = -0.5\n",
      "[truncation]\ntol = 0\n",
      "[truncation]\nn_max = 0\n",
      "[truncation]\nn_max = 2.5\n",               // non-integer count
      "[output]\nformat = json\n",                 // unknown output key
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS((void)parse_config(text), std::runtime_error);
  }
  CHECK_THROWS_AS((void)parse_config_file("no_such_config.ini"),
                  std::runtime_error);
}

TEST_CASE("scenario_at applies axis overrides") {
  SweepConfig cfg = parse_config(
      "[scenario]\nkind = geodesic\nepsilon = -1\ncurvature = 1\ngap = 2\n"
      "[sweep]\naxis1 = gap 0.5 4 8\naxis2 = delay 0 3 4\n");
  const Scenario sc = scenario_at(cfg, {3.0, 1.5});
  CHECK(sc.a.gap == 3.0);
  CHECK(sc.b.gap == 3.0);
  CHECK(sc.delay_t() == doctest::Approx(1.5).epsilon(1e-15));  // L = 1
  CHECK(sc.geom.L == 1.0);
  CHECK_THROWS_AS((void)scenario_at(cfg, {3.0}), std::invalid_argument);
}

TEST_CASE("sweep: csv structure and value spot check") {
  SweepConfig cfg = parse_config(
      "[scenario]\nkind = geodesic\nepsilon = -1\ncurvature = 1\ngap = 2\n"
      "sigma = 1\nseparation = 1.5\ndelay = 0.5\n");
  const std::string csv = sweep_csv(cfg);

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# two-detector sweep v1");
  std::getline(in, line);
  CHECK(line == std::string("# scenario: kind=geodesic epsilon=-1 ") +
                    "curvature=1 gap=2 sigma=1 separation=1.5 delay=0.5 " +
                    "coupling=0.01");

  const auto rows = data_lines(csv);
  REQUIRE(rows.size() == 1);
  const auto cells = split(rows[0], ',');
  REQUIRE(cells.size() == 17);  // 16 values + flags, no axis columns
  CHECK(cells.back() == "ok");

  // the row must agree with a direct evaluation
  const Scenario sc = scenario_at(cfg, {});
  const ElementSet es = element_set(sc, cfg.trunc);
  CHECK(cells[0] == fmt12(es.l_aa));
  CHECK(cells[1] == fmt12(es.l_bb));
  CHECK(cells[2] == fmt12(es.l_ab.real()));
  CHECK(cells[5] == fmt12(es.m_plus.imag()));
  CHECK(cells[10] == fmt12(negativity2(es)));
  CHECK(cells[11] == fmt12(negativity(es, 0.01, 0.01)));
  CHECK(cells[12] == fmt12(mutual_information(es)));
  CHECK(cells[15] == fmt12(negativity2(es) - std::abs(es.c_ab)));
}

TEST_CASE("sweep: grid layout, worker determinism") {
  SweepConfig cfg = parse_config(
      "[scenario]\nkind = geodesic\nepsilon = -1\ncurvature = 1\ngap = 2\n"
      "[sweep]\naxis1 = separation 0.5 2 3\naxis2 = delay 0 1 2\n");
  const std::string serial = sweep_csv(cfg, 1);
  const std::string parallel = sweep_csv(cfg, 4);
  CHECK(serial == parallel);  // byte-identical by construction

  const auto rows = data_lines(serial);
  REQUIRE(rows.size() == 6);
  // axis1 (separation) slowest, axis2 (delay) fastest
  const double seps[] = {0.5, 0.5, 1.25, 1.25, 2.0, 2.0};
  const double dels[] = {0.0, 1.0, 0.0, 1.0, 0.0, 1.0};
  for (int i = 0; i < 6; ++i) {
    const auto cells = split(rows[i], ',');
    REQUIRE(cells.size() == 19);  // 2 axes + 16 values + flags
    CHECK(cells[0] == fmt12(seps[i]));
    CHECK(cells[1] == fmt12(dels[i]));
  }
}

TEST_CASE("sweep: flags surface in rows and counts") {
  // separation sweep touching zero: the first row is coincident
  SweepConfig co = parse_config(
      "[scenario]\nkind = geodesic\nepsilon = -1\ncurvature = 1\ngap = 2\n"
      "[sweep]\naxis1 = separation 0 1 2\n");
  const auto rows = data_lines(sweep_csv(co));
  REQUIRE(rows.size() == 2);
  CHECK(split(rows[0], ',').back() == "coincident");
  CHECK(split(rows[1], ',').back() == "ok");

  // starved truncation shows up as <element>_trunc flags
  SweepConfig starved = parse_config(
      "[scenario]\nkind = static\nepsilon = -1\ncurvature = 1\ngap = 2\n"
      "separation = 2\n[truncation]\nn_max = 3\nl_max = 1\n");
  const auto srows = data_lines(sweep_csv(starved));
  REQUIRE(srows.size() == 1);
  CHECK(split(srows[0], ',').back().find("_trunc") != std::string::npos);

  // an axis wandering into invalid territory yields an error row, not a throw
  SweepConfig err = parse_config(
      "[scenario]\nkind = geodesic\nepsilon = -1\ngap = 2\n"
      "[sweep]\naxis1 = curvature -1 1 2\n");
  const auto erows = data_lines(sweep_csv(err));
  REQUIRE(erows.size() == 2);
  const auto cells = split(erows[0], ',');
  CHECK(cells[1] == "nan");
  CHECK(cells.back().rfind("error=", 0) == 0);
  CHECK(split(erows[1], ',').back() == "ok");
}

TEST_CASE("sweep: file output and row accounting") {
  SweepConfig cfg = parse_config(
      "[scenario]\nkind = geodesic\nepsilon = -1\ncurvature = 1\ngap = 2\n"
      "[sweep]\naxis1 = separation 0 1 2\n");
  const std::string path = "sweep_tmp_out.csv";
  const SweepResult res = sweep_to_file(cfg, path);
  CHECK(res.rows == 2);
  CHECK(res.flagged == 1);  // the coincident row

  std::ifstream in(path);
  REQUIRE(static_cast<bool>(in));
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == sweep_csv(cfg));
  in.close();
  std::remove(path.c_str());

  CHECK_THROWS_AS((void)sweep_to_file(cfg, "no_dir_here/x.csv"),
                  std::runtime_error);
  cfg.output_path.clear();
  CHECK_THROWS_AS((void)sweep_to_file(cfg, ""), std::runtime_error);
}
