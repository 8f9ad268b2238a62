#pragma once

#include "adsharvest/modes.hpp"

// Gaussian switching profiles and the per-detector frame data needed to
// rewrite proper-time couplings as coordinate-time integrals.

namespace adsh {

struct DetectorConfig {
  double gap = 1.0;       // proper energy gap Omega
  double width = 1.0;     // Gaussian switching width sigma (proper)
  double center = 0.0;    // proper-time centre of the switching window
  double coupling = 0.01; // lambda
  double rho = 0.0;       // radial position
  Motion motion = Motion::geodesic;
};

// chi(tau) = exp(-(tau - center)^2 / (2 width^2))
double chi(const DetectorConfig& d, double tau);

// Fourier transform with the convention  chi_hat(k) = width *
// exp(-k^2 width^2 / 2) * (cos(k center) + i sin(k center)).
// A factor sqrt(2 pi) relative to the plain integral of chi e^{i k tau} is
// carried explicitly by the mode-sum coefficients (pi/omega per mode), so
// chi_hat itself omits it; see elements.cpp.
cplx chi_hat(const DetectorConfig& d, double k);

// Coordinate-time ("tilde") frame of a detector: with alpha = dtau/dt,
// chi(tau(t)) has width width/alpha and centre center/alpha in t, the gap
// rescales to gap * alpha, and the coupling integral picks up one factor
// of alpha from the measure.
struct Frame {
  double alpha;
  double gap_t;
  double width_t;
  double center_t;
};
Frame to_frame(const Geometry& g, const DetectorConfig& d);

}  // namespace adsh
