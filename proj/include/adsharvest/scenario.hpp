#pragma once

#include "adsharvest/switching.hpp"

// A two-detector configuration: detector A on the central worldline,
// detector B either on a circular geodesic at radius rho_b (same redshift
// as the centre) or static at rho_b.  The time delay tau0 is quoted as a
// proper interval at the centre; switching centres are staggered
// symmetrically in coordinate time (t0 = tau0 / L), with positive tau0
// meaning A switches first.

namespace adsh {

enum class PairKind { geodesic, static_pair };

struct Scenario {
  Geometry geom;
  BoundaryCondition bc = BoundaryCondition::dirichlet;
  PairKind kind = PairKind::geodesic;
  DetectorConfig a;
  DetectorConfig b;

  // Both factories take the proper separation dx (>= 0) between the
  // worldlines and equal proper gaps/widths/couplings for the two detectors.
  static Scenario geodesic_pair(double L, int eps, double gap, double sigma,
                                double dx, double tau0,
                                double lambda = 0.01);
  static Scenario static_pair_at(double L, int eps, double gap, double sigma,
                                 double dx, double tau0,
                                 double lambda = 0.01);

  double rho_b() const { return b.rho; }
  // Coordinate-time separation of the switching centres.
  double delay_t() const;
};

}  // namespace adsh
