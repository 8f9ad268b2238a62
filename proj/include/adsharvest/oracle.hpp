#pragma once

// Slow, independent evaluation paths used to validate the closed-form
// element pipeline.  Three routes, sharing as little code with elements.cpp
// as possible:
//
//  * mode path   -- raw mode sums with fixed cutoffs (no adaptive stopping)
//                   and per-mode Gaussian time integrals done analytically;
//  * event path  -- the commutator/advanced pieces assembled from the image
//                   sum of delta supports, with numeric (Simpson) time
//                   quadrature;
//  * kernel path -- double time integral against the closed-form two-point
//                   function, regulated by a shrinking imaginary time shift
//                   and Richardson-extrapolated to zero.
//
// Everything returns values in units of lambda_a * lambda_b, matching
// elements.hpp.

#include <array>
#include <complex>

#include "adsharvest/elements.hpp"
#include "adsharvest/scenario.hpp"

namespace adsh {

struct QuadratureSpec {
  // Half-width of the time window around each switching centre, in
  // coordinate time.  0 means "auto": 8 * max coordinate width.
  double half_width = 0.0;
  int points_per_axis = 801;  // must be odd (Simpson)
  // Imaginary-time regulator sequence for the kernel path, as multiples of
  // the proper switching width; must be decreasing and halving.
  std::array<double, 3> epsilon_reg{1.0 / 50.0, 1.0 / 100.0, 1.0 / 200.0};
  int n_max = 400;  // fixed mode cutoffs; deliberately no adaptive stop
  int l_max = 400;
};

// --- mode path ---
double quad_local_response(const Scenario& sc, Leg leg,
                           const QuadratureSpec& spec = {});
cplx quad_cross_response(const Scenario& sc, const QuadratureSpec& spec = {});
cplx quad_m_plus(const Scenario& sc, const QuadratureSpec& spec = {});

// --- event path ---
cplx quad_m_minus(const Scenario& sc, const QuadratureSpec& spec = {});
cplx quad_commutator_estimate(const Scenario& sc, Order order,
                              const QuadratureSpec& spec = {});

// Mode-sum two-point function at coordinate separation (dt, one point at
// the origin, the other at radius rho); used to cross-check the closed form.
cplx wightman_mode_sum(const Geometry& g, BoundaryCondition bc, cplx dt,
                       double rho, int n_max);

// --- kernel path ---
// The co-moving (t + t') integral is Gaussian and done in closed form, so
// these reduce to a single line integral over t - t' against the regulated
// kernel, evaluated on the epsilon_reg sequence and extrapolated.
// Cross-element variants require equal proper widths in coordinate time
// (both detectors on the same footing), i.e. geodesic pairs.
double quad_local_response_kernel(const Scenario& sc, Leg leg,
                                  const QuadratureSpec& spec = {});
cplx quad_cross_response_kernel(const Scenario& sc,
                                const QuadratureSpec& spec = {});
cplx quad_m_plus_kernel(const Scenario& sc, const QuadratureSpec& spec = {});

}  // namespace adsh
