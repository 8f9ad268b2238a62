#pragma once

#include <complex>
#include <vector>

// Geometry and field modes of a conformally coupled massless scalar on
// global AdS4, with a one-parameter family of boundary conditions at the
// conformal boundary.  Coordinates: ds^2 = L^2 sec^2(rho) (dt^2 - drho^2 -
// sin^2(rho) dOmega^2), rho in [0, pi/2), t dimensionless.

namespace adsh {

using cplx = std::complex<double>;

// Boundary condition at rho = pi/2, labelled by epsilon in {-1, 0, +1}:
// reflecting with sign flip (-1), transparent (0), reflecting (+1).
enum class BoundaryCondition : int {
  dirichlet = -1,
  transparent = 0,
  neumann = +1,
};

BoundaryCondition boundary_from_epsilon(int eps);
inline constexpr int epsilon(BoundaryCondition bc) {
  return static_cast<int>(bc);
}
const char* boundary_name(BoundaryCondition bc);

struct Geometry {
  double L = 1.0;  // curvature length
};

enum class Motion {
  geodesic,          // circular geodesic through/around the centre
  static_worldline,  // fixed spatial position
};

// Discrete mode frequency (in units of 1/L; integer valued).
//   transparent: omega = l + n + 1
//   neumann:     omega = l + 2n + 1
//   dirichlet:   omega = l + 2n + 2
int mode_frequency(BoundaryCondition bc, int n, int l);

// Radial normalisation constant
//   N = (2^l l! / L) sqrt(2 omega (omega-l-1)! / (pi (omega+l)!)),
// evaluated in log space.  Underflow returns 0; overflow is a hard error.
double mode_normalization(const Geometry& g, int omega, int l);

// Spatial mode function evaluated on the polar axis (cos_theta is the
// polar angle of the evaluation point; all detector placements used here
// are axial):
//   phi = sqrt(2)^(eps^2) N cos(rho) sin^l(rho) C_{omega-l-1}^{(l+1)}(cos rho) Y_l^0
// The sqrt(2) for reflecting conditions keeps the modes unit-normalised on
// the rho in [0, pi/2) slice; transparent modes carry half their weight
// beyond the boundary.
double mode_value(const Geometry& g, BoundaryCondition bc, int n, int l,
                  double rho, double cos_theta);

// Proper radial distance from the centre:  dx = L ln(tan rho + sec rho).
double proper_separation(const Geometry& g, double rho);
// Inverse map:  rho = arctan(sinh(dx / L)).
double radial_coordinate(const Geometry& g, double dx);

// d(proper time)/d(coordinate time) along the worldline.  All circular
// geodesics share dtau/dt = L independent of radius; a static worldline at
// rho has dtau/dt = L sec(rho).
double redshift(const Geometry& g, Motion motion, double rho);

// Invariant used by the closed-form two-point function when one point sits
// at the centre:  sigma0 = 1 - cos(dt) sec(rho), with dt given a negative
// imaginary part for the positive-frequency prescription.
cplx sigma0_center(cplx dt, double rho);

// Same invariant for two points on a common polar ray at radii rho1, rho2:
//   sigma0 = 1 + tan(rho1) tan(rho2) - cos(dt) sec(rho1) sec(rho2),
// which reduces to sigma0_center when either radius vanishes.
cplx sigma0_axis(cplx dt, double rho1, double rho2);

// Closed-form Wightman function for one point at the centre,
//   8 pi^2 L^2 W = -1/sigma0 - eps/(sigma0 - 2).
// Derivation of the dictionary: in embedding coordinates the chordal
// interval between x = (t, rho, axis) and x' = (t', 0) obeys
// (DeltaX)^2 = -2 L^2 sigma0, and the direct image contributes
// X = 2 L^2 / (DeltaX)^2 evaluated with the spacelike-positive sign,
// i.e. X = -1/sigma0; the boundary image replaces sigma0 by sigma0 - 2.
cplx wightman_closed_form(const Geometry& g, BoundaryCondition bc,
                          cplx sigma0);

// The field commutator with one point at the centre is supported exactly on
// the light cone and its boundary/antipodal images:
//   [phi(t, rho), phi(t', 0)] = -i sum_e weight_e delta(dt - dt_e),
// with dt = t - t'.  Event times and signed weights per image family
// (N = 0, 1, 2, ...):
//   dt =  rho + 2N pi         weight  +1/(4 pi L^2 tan rho)
//   dt = -rho + (2N+1) pi     weight  +eps/(4 pi L^2 tan rho)
//   dt =  rho + (2N+1) pi     weight  -eps/(4 pi L^2 tan rho)
//   dt = -rho + (2N+2) pi     weight  -1/(4 pi L^2 tan rho)
// extended to negative dt by antisymmetry (here negative-N members of the
// same four families).  Returns all events with dt in [dt_min, dt_max],
// sorted by dt.  rho = 0 is a domain error (coincident spatial points).
struct CommutatorEvent {
  double dt;
  double weight;
};
std::vector<CommutatorEvent> commutator_events(const Geometry& g,
                                               BoundaryCondition bc,
                                               double rho, double dt_min,
                                               double dt_max);

}  // namespace adsh
