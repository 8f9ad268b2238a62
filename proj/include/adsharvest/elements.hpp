#pragma once

#include "adsharvest/scenario.hpp"

// Closed-form second-order matrix elements of the joint two-detector state.
// Every element is reported in units of lambda_A * lambda_B.
//
// Conventions fixed here (and used identically by the quadrature oracles):
//   L_IJ = sum_modes (pi/omega) phi(x_J) phi(x_I)
//          chi_hat_J(omega/alpha_J + Omega_J)^* chi_hat_I(omega/alpha_I + Omega_I)
// with phi the spatial mode value on each detector's worldline, alpha the
// redshift and chi_hat the Gaussian window transform (switching.hpp).  Only
// l = 0 modes couple to the cross terms because detector A sits at the
// centre.  M = M_plus + M_minus splits the ee<-gg element into the
// anticommutator (boundary-condition-blind up to the mode sum) and
// commutator (light-cone image sum) parts.  C_AB / C_BA are the
// commutator-only signalling estimators.

namespace adsh {

struct Truncation {
  double tol = 1e-10;
  int n_max = 512;
  int l_max = 256;
  int image_n_max = 64;
  int consecutive_below = 3;
};

struct SumReport {
  int terms = 0;
  double last_term = 0.0;
  // Largest |term| seen: the natural scale of the truncation noise left in
  // a sum whose value may be cancellation-suppressed.
  double peak = 0.0;
  bool converged = true;
};

struct TruncationReport {
  SumReport l_aa, l_bb, l_ab, m_plus, m_minus, c_ab, c_ba;
  bool all_converged() const {
    return l_aa.converged && l_bb.converged && l_ab.converged &&
           m_plus.converged && m_minus.converged && c_ab.converged &&
           c_ba.converged;
  }
};

enum class Leg { a, b };
enum class Order { ab, ba };

struct ElementSet {
  double l_aa = 0.0;
  double l_bb = 0.0;
  cplx l_ab;
  cplx m_plus;
  cplx m_minus;
  cplx m;
  cplx c_ab;
  cplx c_ba;
  // Coincident worldlines (dx = 0): the commutator-supported pieces
  // (m_minus, c_ab, c_ba) are not defined by the image sums and are
  // reported as zero with this flag set.
  bool coincident = false;
  // m_plus is always evaluated along two independent routes (direct closed
  // form and the cross-response pairing at gaps (+Omega, -Omega)); false if
  // they disagree beyond ~100x the truncation tolerance.
  bool identity_ok = true;
  TruncationReport report;
};

// Single-detector response L_II.  For geodesic motion this is
// radius-independent and equals the central value.
double local_response(const Scenario& s, Leg leg, const Truncation& tr = {},
                      SumReport* report = nullptr);

// L_AB with the scenario gaps.
cplx cross_response(const Scenario& s, const Truncation& tr = {},
                    SumReport* report = nullptr);

// L_IJ with explicit (possibly signed, possibly unequal) gap overrides;
// `order` selects AB or BA.
cplx cross_response_gaps(const Scenario& s, Order order, double gap_a,
                         double gap_b, const Truncation& tr = {},
                         SumReport* report = nullptr);

// Anticommutator part of M (direct closed form; real for the geodesic pair).
cplx m_plus(const Scenario& s, const Truncation& tr = {},
            SumReport* report = nullptr);
// The same quantity via  M_plus = -1/2 [ L_AB(+W,-W) + L_BA(-W,+W) ].
cplx m_plus_identity(const Scenario& s, const Truncation& tr = {});

// Commutator part of M (light-cone image sum; pure imaginary for the
// geodesic pair).  Domain error for coincident worldlines.
cplx m_minus(const Scenario& s, const Truncation& tr = {},
             SumReport* report = nullptr);
// Frame-general evaluation of the same image sum (valid for either kind;
// used for cross-checks and for the static pair).
cplx m_minus_frames(const Scenario& s, const Truncation& tr = {},
                    SumReport* report = nullptr);

// Signalling estimator C_IJ built from the commutator alone.
cplx commutator_estimate(const Scenario& s, Order order,
                         const Truncation& tr = {},
                         SumReport* report = nullptr);

ElementSet element_set(const Scenario& s, const Truncation& tr = {});

}  // namespace adsh
