#include "adsharvest/scenario.hpp"

#include <stdexcept>

namespace adsh {

namespace {

Scenario build(PairKind kind, double L, int eps, double gap, double sigma,
               double dx, double tau0, double lambda) {
  if (!(L > 0.0)) throw std::domain_error("scenario: curvature length L <= 0");
  if (!(sigma > 0.0)) throw std::domain_error("scenario: width sigma <= 0");
  if (dx < 0.0) throw std::domain_error("scenario: negative separation");

  Scenario s;
  s.geom = Geometry{L};
  s.bc = boundary_from_epsilon(eps);
  s.kind = kind;

  const Motion motion_b = (kind == PairKind::geodesic)
                              ? Motion::geodesic
                              : Motion::static_worldline;
  const double rho_b = radial_coordinate(s.geom, dx);
  const double t0 = tau0 / L;  // coordinate-time stagger

  s.a = DetectorConfig{gap, sigma, 0.0, lambda, 0.0, Motion::geodesic};
  s.b = DetectorConfig{gap, sigma, 0.0, lambda, rho_b, motion_b};
  s.a.center = redshift(s.geom, s.a.motion, s.a.rho) * (-0.5 * t0);
  s.b.center = redshift(s.geom, s.b.motion, s.b.rho) * (+0.5 * t0);
  return s;
}

}  // namespace

Scenario Scenario::geodesic_pair(double L, int eps, double gap, double sigma,
                                 double dx, double tau0, double lambda) {
  return build(PairKind::geodesic, L, eps, gap, sigma, dx, tau0, lambda);
}

Scenario Scenario::static_pair_at(double L, int eps, double gap, double sigma,
                                  double dx, double tau0, double lambda) {
  return build(PairKind::static_pair, L, eps, gap, sigma, dx, tau0, lambda);
}

double Scenario::delay_t() const {
  const double ca = a.center / redshift(geom, a.motion, a.rho);
  const double cb = b.center / redshift(geom, b.motion, b.rho);
  return cb - ca;
}

}  // namespace adsh
