#include "adsharvest.h"

#include <new>
#include <stdexcept>
#include <string>

#include "adsharvest/checks.hpp"
#include "adsharvest/config.hpp"
#include "adsharvest/quantify.hpp"
#include "adsharvest/sweep.hpp"

// Thin translation layer: build the C++ scenario lazily at evaluation time,
// map exceptions to status codes, and keep the failure message per thread.

struct ads_scenario {
  int kind = 0;  // 0 geodesic, 1 static
  int eps = -1;
  double curvature = 1.0;
  double gap = 1.0;
  double sigma = 1.0;
  double separation = 1.0;
  double delay = 0.0;
  double coupling = 0.01;
  adsh::Truncation trunc;
};

namespace {

thread_local std::string g_error;

ads_status fail(ads_status code, const char* what) {
  g_error = what;
  return code;
}

template <class Fn>
ads_status guarded(Fn&& fn) {
  try {
    fn();
    g_error.clear();
    return ADS_OK;
  } catch (const std::invalid_argument& e) {
    return fail(ADS_EINVAL, e.what());
  } catch (const std::domain_error& e) {
    return fail(ADS_EDOMAIN, e.what());
  } catch (const std::overflow_error& e) {
    return fail(ADS_EOVERFLOW, e.what());
  } catch (const std::runtime_error& e) {
    return fail(ADS_EIO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ADS_EINTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ADS_EINTERNAL, e.what());
  }
}

adsh::Scenario build(const ads_scenario& sc) {
  return sc.kind == 0
             ? adsh::Scenario::geodesic_pair(sc.curvature, sc.eps, sc.gap,
                                             sc.sigma, sc.separation, sc.delay,
                                             sc.coupling)
             : adsh::Scenario::static_pair_at(sc.curvature, sc.eps, sc.gap,
                                              sc.sigma, sc.separation,
                                              sc.delay, sc.coupling);
}

ads_status check_handle(const ads_scenario* sc) {
  if (!sc) return fail(ADS_EINVAL, "null scenario handle");
  return ADS_OK;
}

}  // namespace

extern "C" {

ads_scenario* ads_scenario_create(void) {
  return new (std::nothrow) ads_scenario();
}

void ads_scenario_destroy(ads_scenario* sc) { delete sc; }

ads_status ads_set_kind(ads_scenario* sc, int kind) {
  if (ads_status s = check_handle(sc)) return s;
  if (kind != 0 && kind != 1)
    return fail(ADS_EINVAL, "kind must be 0 (geodesic) or 1 (static)");
  sc->kind = kind;
  return ADS_OK;
}

ads_status ads_set_boundary(ads_scenario* sc, int epsilon) {
  if (ads_status s = check_handle(sc)) return s;
  if (epsilon < -1 || epsilon > 1)
    return fail(ADS_EINVAL, "epsilon must be -1, 0 or +1");
  sc->eps = epsilon;
  return ADS_OK;
}

ads_status ads_set_curvature(ads_scenario* sc, double curvature) {
  if (ads_status s = check_handle(sc)) return s;
  if (!(curvature > 0.0)) return fail(ADS_EDOMAIN, "curvature must be > 0");
  sc->curvature = curvature;
  return ADS_OK;
}

ads_status ads_set_gap(ads_scenario* sc, double gap) {
  if (ads_status s = check_handle(sc)) return s;
  sc->gap = gap;
  return ADS_OK;
}

ads_status ads_set_width(ads_scenario* sc, double sigma) {
  if (ads_status s = check_handle(sc)) return s;
  if (!(sigma > 0.0)) return fail(ADS_EDOMAIN, "width must be > 0");
  sc->sigma = sigma;
  return ADS_OK;
}

ads_status ads_set_separation(ads_scenario* sc, double separation) {
  if (ads_status s = check_handle(sc)) return s;
  if (separation < 0.0)
    return fail(ADS_EDOMAIN, "separation must be >= 0");
  sc->separation = separation;
  return ADS_OK;
}

ads_status ads_set_delay(ads_scenario* sc, double delay) {
  if (ads_status s = check_handle(sc)) return s;
  sc->delay = delay;
  return ADS_OK;
}

ads_status ads_set_coupling(ads_scenario* sc, double coupling) {
  if (ads_status s = check_handle(sc)) return s;
  sc->coupling = coupling;
  return ADS_OK;
}

ads_status ads_set_truncation(ads_scenario* sc, double tol, int n_max,
                              int l_max, int image_n_max,
                              int consecutive_below) {
  if (ads_status s = check_handle(sc)) return s;
  if (!(tol > 0.0) || n_max < 1 || l_max < 0 || image_n_max < 1 ||
      consecutive_below < 1)
    return fail(ADS_EINVAL, "bad truncation limits");
  sc->trunc = adsh::Truncation{tol, n_max, l_max, image_n_max,
                               consecutive_below};
  return ADS_OK;
}

ads_status ads_evaluate(const ads_scenario* sc, ads_elements* out) {
  if (ads_status s = check_handle(sc)) return s;
  if (!out) return fail(ADS_EINVAL, "null output pointer");
  return guarded([&] {
    const adsh::Scenario scenario = build(*sc);
    const adsh::ElementSet es = adsh::element_set(scenario, sc->trunc);
    out->l_aa = es.l_aa;
    out->l_bb = es.l_bb;
    out->l_ab_re = es.l_ab.real();
    out->l_ab_im = es.l_ab.imag();
    out->m_plus_re = es.m_plus.real();
    out->m_plus_im = es.m_plus.imag();
    out->m_minus_re = es.m_minus.real();
    out->m_minus_im = es.m_minus.imag();
    out->m_re = es.m.real();
    out->m_im = es.m.imag();
    out->c_ab_re = es.c_ab.real();
    out->c_ab_im = es.c_ab.imag();
    out->c_ba_re = es.c_ba.real();
    out->c_ba_im = es.c_ba.imag();
    out->n2 = adsh::negativity2(es);
    out->negativity =
        adsh::negativity(es, scenario.a.coupling, scenario.b.coupling);
    out->mutual_info = adsh::mutual_information(es);
    out->coincident = es.coincident ? 1 : 0;
    out->identity_ok = es.identity_ok ? 1 : 0;
    out->all_converged = es.report.all_converged() ? 1 : 0;
  });
}

ads_status ads_local_response(const ads_scenario* sc, int which, double* out) {
  if (ads_status s = check_handle(sc)) return s;
  if (!out) return fail(ADS_EINVAL, "null output pointer");
  if (which != 0 && which != 1)
    return fail(ADS_EINVAL, "which must be 0 (a) or 1 (b)");
  return guarded([&] {
    const adsh::Scenario scenario = build(*sc);
    *out = adsh::local_response(
        scenario, which == 0 ? adsh::Leg::a : adsh::Leg::b, sc->trunc);
  });
}

ads_status ads_sweep_run(const char* config_path, const char* output_override,
                         int workers, long* rows, long* flagged) {
  if (!config_path) return fail(ADS_EINVAL, "null config path");
  return guarded([&] {
    const adsh::SweepConfig cfg = adsh::parse_config_file(config_path);
    const adsh::SweepResult res = adsh::sweep_to_file(
        cfg, output_override ? output_override : "", workers);
    if (rows) *rows = res.rows;
    if (flagged) *flagged = res.flagged;
  });
}

ads_status ads_check_run(const char* pins_path, int regen, FILE* report,
                         int* failures) {
  if (!pins_path) return fail(ADS_EINVAL, "null pins path");
  return guarded([&] {
    const auto results = adsh::run_checks(pins_path, regen != 0);
    int bad = 0;
    for (const auto& r : results) {
      if (!r.pass) ++bad;
      if (report)
        std::fprintf(report, "%s %s: %s\n", r.pass ? "PASS" : "FAIL",
                     r.name.c_str(), r.detail.c_str());
    }
    if (failures) *failures = bad;
  });
}

const char* ads_last_error(void) { return g_error.c_str(); }

const char* ads_version(void) { return "1.0.0"; }

}  // extern "C"
