// Command-line front end.  Talks to the library exclusively through the C
// interface so it doubles as a usage example for external callers.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "adsharvest.h"

#ifndef ADSH_DEFAULT_PINS
#define ADSH_DEFAULT_PINS "data/pins.txt"
#endif

namespace {

struct ScenarioOpts {
  std::string kind = "geodesic";
  int epsilon = -1;
  double curvature = 1.0;
  double gap = 1.0;
  double sigma = 1.0;
  double separation = 1.0;
  double delay = 0.0;
  double coupling = 0.01;
  double tol = 1e-10;
  int n_max = 512;
  int l_max = 256;
  int image_n_max = 64;
  int consecutive_below = 3;
};

void add_scenario_flags(CLI::App* cmd, ScenarioOpts* o) {
  cmd->add_option("--kind", o->kind, "worldline pair: geodesic | static")
      ->check(CLI::IsMember({"geodesic", "static"}));
  cmd->add_option("--epsilon", o->epsilon,
                  "boundary condition: -1, 0 or +1")
      ->check(CLI::Range(-1, 1));
  cmd->add_option("--curvature", o->curvature, "curvature length L (> 0)");
  cmd->add_option("--gap", o->gap, "proper energy gap Omega");
  cmd->add_option("--sigma", o->sigma, "switching width (the unit; > 0)");
  cmd->add_option("--separation", o->separation,
                  "proper separation of the worldlines (>= 0)");
  cmd->add_option("--delay", o->delay,
                  "proper switching delay at the centre (B after A)");
  cmd->add_option("--coupling", o->coupling, "coupling lambda");
  cmd->add_option("--tol", o->tol, "series stop tolerance");
  cmd->add_option("--n-max", o->n_max, "radial mode cutoff");
  cmd->add_option("--l-max", o->l_max, "angular mode cutoff");
  cmd->add_option("--image-n-max", o->image_n_max, "lightcone image cutoff");
  cmd->add_option("--consecutive-below", o->consecutive_below,
                  "consecutive small terms required to stop a sum");
}

int fail_status(const char* where) {
  std::fprintf(stderr, "error: %s: %s\n", where, ads_last_error());
  return 1;
}

int apply(const ScenarioOpts& o, ads_scenario* sc) {
  if (ads_set_kind(sc, o.kind == "geodesic" ? 0 : 1) ||
      ads_set_boundary(sc, o.epsilon) ||
      ads_set_curvature(sc, o.curvature) || ads_set_gap(sc, o.gap) ||
      ads_set_width(sc, o.sigma) || ads_set_separation(sc, o.separation) ||
      ads_set_delay(sc, o.delay) || ads_set_coupling(sc, o.coupling) ||
      ads_set_truncation(sc, o.tol, o.n_max, o.l_max, o.image_n_max,
                         o.consecutive_below))
    return 1;
  return 0;
}

int run_rate(const ScenarioOpts& o) {
  ads_scenario* sc = ads_scenario_create();
  if (!sc) return fail_status("create");
  int rc = 1;
  if (apply(o, sc) == 0) {
    double a = 0.0, b = 0.0;
    if (ads_local_response(sc, 0, &a) || ads_local_response(sc, 1, &b)) {
      rc = fail_status("rate");
    } else {
      std::printf("l_aa = %.12g\n", a);
      std::printf("l_bb = %.12g\n", b);
      std::printf("# per lambda^2\n");
      rc = 0;
    }
  } else {
    rc = fail_status("configure");
  }
  ads_scenario_destroy(sc);
  return rc;
}

int run_elements(const ScenarioOpts& o) {
  ads_scenario* sc = ads_scenario_create();
  if (!sc) return fail_status("create");
  int rc = 1;
  ads_elements e;
  if (apply(o, sc) == 0) {
    if (ads_evaluate(sc, &e)) {
      rc = fail_status("elements");
    } else {
      std::printf("l_aa        = %.12g\n", e.l_aa);
      std::printf("l_bb        = %.12g\n", e.l_bb);
      std::printf("l_ab        = %.12g %+.12gi\n", e.l_ab_re, e.l_ab_im);
      std::printf("m_plus      = %.12g %+.12gi\n", e.m_plus_re, e.m_plus_im);
      std::printf("m_minus     = %.12g %+.12gi\n", e.m_minus_re,
                  e.m_minus_im);
      std::printf("m           = %.12g %+.12gi\n", e.m_re, e.m_im);
      std::printf("c_ab        = %.12g %+.12gi\n", e.c_ab_re, e.c_ab_im);
      std::printf("c_ba        = %.12g %+.12gi\n", e.c_ba_re, e.c_ba_im);
      std::printf("n2          = %.12g\n", e.n2);
      std::printf("negativity  = %.12g\n", e.negativity);
      std::printf("mutual_info = %.12g\n", e.mutual_info);
      std::printf("# elements, n2, mutual_info per lambda_a*lambda_b;"
                  " negativity physical\n");
      std::printf("flags: converged=%s identity=%s coincident=%s\n",
                  e.all_converged ? "yes" : "NO",
                  e.identity_ok ? "ok" : "MISMATCH",
                  e.coincident ? "yes" : "no");
      rc = e.all_converged ? 0 : 3;
    }
  } else {
    rc = fail_status("configure");
  }
  ads_scenario_destroy(sc);
  return rc;
}

int run_sweep(const std::string& config, const std::string& output,
              int workers) {
  long rows = 0, flagged = 0;
  if (ads_sweep_run(config.c_str(), output.empty() ? nullptr : output.c_str(),
                    workers, &rows, &flagged))
    return fail_status("sweep");
  std::printf("wrote %ld rows (%ld flagged)\n", rows, flagged);
  return 0;
}

int run_check(const std::string& pins, bool regen) {
  int failures = 0;
  if (ads_check_run(pins.c_str(), regen ? 1 : 0, stdout, &failures))
    return fail_status("check");
  if (failures > 0) {
    std::printf("%d gate(s) failed\n", failures);
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "joint observables of two switched detectors on global anti-de Sitter"};
  app.require_subcommand(1);

  ScenarioOpts rate_opts;
  CLI::App* rate = app.add_subcommand("rate", "single-detector response");
  add_scenario_flags(rate, &rate_opts);

  ScenarioOpts elem_opts;
  CLI::App* elements = app.add_subcommand(
      "elements", "full second-order element set for a detector pair");
  add_scenario_flags(elements, &elem_opts);

  std::string sweep_config, sweep_output;
  int sweep_workers = 1;
  CLI::App* sweep =
      app.add_subcommand("sweep", "grid evaluation from an INI config");
  sweep->add_option("config", sweep_config, "INI configuration file")
      ->required();
  sweep->add_option("--output", sweep_output,
                    "override the [output] path from the config");
  sweep->add_option("--workers", sweep_workers, "worker threads")
      ->check(CLI::PositiveNumber);

  std::string pins_path = ADSH_DEFAULT_PINS;
  bool regen = false;
  CLI::App* check =
      app.add_subcommand("check", "internal consistency suite");
  check->add_option("--pins", pins_path, "pin file path");
  check->add_flag("--regen-pins", regen,
                  "recompute and rewrite the pinned reference values");

  CLI11_PARSE(app, argc, argv);

  if (rate->parsed()) return run_rate(rate_opts);
  if (elements->parsed()) return run_elements(elem_opts);
  if (sweep->parsed()) return run_sweep(sweep_config, sweep_output,
                                        sweep_workers);
  return run_check(pins_path, regen);
}
