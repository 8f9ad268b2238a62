/* C interface to the two-detector observable library.
 *
 * Usage pattern: create a scenario handle, configure it with the setters,
 * call ads_evaluate (or ads_local_response), destroy the handle.  All
 * functions returning ads_status leave a human-readable message retrievable
 * with ads_last_error() on failure.  Handles are not thread-safe; distinct
 * handles may be used from distinct threads.
 *
 * Units: lengths and times in units of the switching width sigma; matrix
 * elements, n2 and mutual_info are quoted per lambda_a*lambda_b; negativity
 * is physical (couplings applied).
 */
#ifndef ADSHARVEST_H
#define ADSHARVEST_H

#include <stdio.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ads_status {
  ADS_OK = 0,
  ADS_EINVAL = 1,    /* bad argument or configuration */
  ADS_EDOMAIN = 2,   /* parameter outside the physical domain */
  ADS_EOVERFLOW = 3, /* numeric overflow in a mode evaluation */
  ADS_EIO = 4,       /* file error (config, output, pins) */
  ADS_EINTERNAL = 5, /* unexpected failure */
} ads_status;

typedef struct ads_scenario ads_scenario;

typedef struct ads_elements {
  double l_aa, l_bb;
  double l_ab_re, l_ab_im;
  double m_plus_re, m_plus_im;
  double m_minus_re, m_minus_im;
  double m_re, m_im;
  double c_ab_re, c_ab_im;
  double c_ba_re, c_ba_im;
  double n2;          /* entanglement precursor */
  double negativity;  /* max(n2, 0) scaled by the couplings */
  double mutual_info;
  int coincident;     /* zero spatial separation: commutator terms dropped */
  int identity_ok;    /* overlap term consistent across its two routes */
  int all_converged;  /* every truncated sum met its stop rule */
} ads_elements;

ads_scenario* ads_scenario_create(void);
void ads_scenario_destroy(ads_scenario* sc);

/* kind: 0 = geodesic pair, 1 = static pair.  epsilon in {-1, 0, +1}. */
ads_status ads_set_kind(ads_scenario* sc, int kind);
ads_status ads_set_boundary(ads_scenario* sc, int epsilon);
ads_status ads_set_curvature(ads_scenario* sc, double curvature);
ads_status ads_set_gap(ads_scenario* sc, double gap);
ads_status ads_set_width(ads_scenario* sc, double sigma);
ads_status ads_set_separation(ads_scenario* sc, double separation);
ads_status ads_set_delay(ads_scenario* sc, double delay);
ads_status ads_set_coupling(ads_scenario* sc, double coupling);
ads_status ads_set_truncation(ads_scenario* sc, double tol, int n_max,
                              int l_max, int image_n_max,
                              int consecutive_below);

ads_status ads_evaluate(const ads_scenario* sc, ads_elements* out);
/* which: 0 = detector a, 1 = detector b */
ads_status ads_local_response(const ads_scenario* sc, int which, double* out);

/* Runs the sweep described by an INI config file.  output_override (may be
 * NULL) replaces the [output] path; rows/flagged (may be NULL) receive the
 * grid size and the count of rows whose flags column is not "ok". */
ads_status ads_sweep_run(const char* config_path, const char* output_override,
                         int workers, long* rows, long* flagged);

/* Runs the internal consistency suite against the pin file, writing one
 * "PASS name: detail" / "FAIL name: detail" line per gate to report (may be
 * NULL).  regen != 0 rewrites the pins from fresh reference values.
 * failures (may be NULL) receives the number of failing gates. */
ads_status ads_check_run(const char* pins_path, int regen, FILE* report,
                         int* failures);

const char* ads_last_error(void);
const char* ads_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ADSHARVEST_H */
