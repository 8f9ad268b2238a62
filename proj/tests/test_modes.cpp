#include <cmath>
#include <stdexcept>
#include <vector>

#include "adsharvest/modes.hpp"
#include "adsharvest/specfun.hpp"
#include "doctest.h"

using namespace adsh;

namespace {

const Geometry kUnit{1.0};

// Radial profile R_nl(rho) = mode value with the angular factor divided out.
double radial(BoundaryCondition bc, int n, int l, double rho) {
  return mode_value(kUnit, bc, n, l, rho, 1.0) / y_l0(l, 1.0);
}

// Inner product on the constant-t slice.  The induced volume element is
// L^3 sec^3(rho) sin^2(rho) drho dOmega and the conserved product carries
// 1/(L sec rho) from the timelike Killing norm, leaving
//   integral L^2 tan^2(rho) R R' drho  over [0, pi/2).
// Midpoint rule; the integrand is bounded up to the boundary.
double slice_product(BoundaryCondition bc, int n1, int n2, int l) {
  const int steps = 40000;
  const double h = (M_PI / 2.0) / steps;
  double sum = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double rho = (i + 0.5) * h;
    const double t = std::tan(rho);
    sum += t * t * radial(bc, n1, l, rho) * radial(bc, n2, l, rho);
  }
  return sum * h;
}

}  // namespace

TEST_CASE("mode frequencies") {
  CHECK(mode_frequency(BoundaryCondition::transparent, 0, 0) == 1);
  CHECK(mode_frequency(BoundaryCondition::transparent, 3, 2) == 6);
  CHECK(mode_frequency(BoundaryCondition::neumann, 0, 0) == 1);
  CHECK(mode_frequency(BoundaryCondition::neumann, 2, 1) == 6);
  CHECK(mode_frequency(BoundaryCondition::dirichlet, 0, 0) == 2);
  CHECK(mode_frequency(BoundaryCondition::dirichlet, 2, 1) == 7);
}

TEST_CASE("reflecting spectra partition the transparent spectrum") {
  for (int l = 0; l <= 6; ++l) {
    std::vector<int> merged;
    for (int n = 0; n < 10; ++n) {
      merged.push_back(mode_frequency(BoundaryCondition::neumann, n, l));
      merged.push_back(mode_frequency(BoundaryCondition::dirichlet, n, l));
    }
    std::sort(merged.begin(), merged.end());
    for (int i = 0; i < 20; ++i) {
      CHECK(merged[i] ==
            mode_frequency(BoundaryCondition::transparent, i, l));
    }
  }
}

TEST_CASE("normalisation constants") {
  // omega = 1, l = 0: (1/L) sqrt(2 / pi)
  CHECK(mode_normalization(kUnit, 1, 0) ==
        doctest::Approx(0.7978845608028654).epsilon(1e-14));
  // omega = 3, l = 1: 2 sqrt(6 * 1! / (pi * 4!)) = 1/sqrt(pi)
  CHECK(mode_normalization(kUnit, 3, 1) ==
        doctest::Approx(0.5641895835477563).epsilon(1e-14));
  // curvature scaling 1/L
  CHECK(mode_normalization(Geometry{2.5}, 1, 0) ==
        doctest::Approx(0.7978845608028654 / 2.5).epsilon(1e-14));
  CHECK_THROWS_AS(mode_normalization(kUnit, 1, 1), std::domain_error);
}

TEST_CASE("mode values at the centre") {
  // lowest reflecting (eps = -1) mode at the origin: 2/pi
  CHECK(mode_value(kUnit, BoundaryCondition::dirichlet, 0, 0, 0.0, 1.0) ==
        doctest::Approx(2.0 / M_PI).epsilon(1e-14));
  // l > 0 modes vanish on the axis of symmetry at rho = 0
  CHECK(mode_value(kUnit, BoundaryCondition::transparent, 1, 2, 0.0, 1.0) ==
        0.0);
}

TEST_CASE("mode values stay finite at extreme quantum numbers") {
  // Deep inside the centrifugal barrier (sin rho << l / omega) the value
  // underflows; it must come back as exactly 0, not NaN.
  CHECK(mode_value(kUnit, BoundaryCondition::dirichlet, 300, 600, 0.02, 1.0) ==
        0.0);
  // Intermediate Gegenbauer growth would overflow a plain recurrence.
  const double v =
      mode_value(kUnit, BoundaryCondition::dirichlet, 400, 150, 1.3, 1.0);
  CHECK(std::isfinite(v));
}

TEST_CASE("slice orthonormality of reflecting modes") {
  for (BoundaryCondition bc :
       {BoundaryCondition::dirichlet, BoundaryCondition::neumann}) {
    for (int l : {0, 2}) {
      for (int n1 = 0; n1 <= 3; ++n1) {
        for (int n2 = n1; n2 <= 3; ++n2) {
          const double want = (n1 == n2) ? 1.0 : 0.0;
          CHECK(slice_product(bc, n1, n2, l) ==
                doctest::Approx(want).epsilon(1e-6).scale(1.0));
        }
      }
    }
  }
}

TEST_CASE("transparent modes carry half their norm on the slice") {
  // The rho <= pi/2 patch covers half of the doubled spatial section the
  // transparent condition lives on, so diagonals come out at 1/2.  Only
  // same-parity pairs are orthogonal here: even n restricts one reflecting
  // family to the patch, odd n the other, and cross-parity overlaps
  // survive because the patch breaks the parity of the doubled section.
  for (int n1 = 0; n1 <= 3; ++n1) {
    for (int n2 = n1; n2 <= 3; n2 += 2) {
      const double want = (n1 == n2) ? 0.5 : 0.0;
      CHECK(slice_product(BoundaryCondition::transparent, n1, n2, 0) ==
            doctest::Approx(want).epsilon(1e-6).scale(1.0));
    }
  }
  // parity-mixing witness
  CHECK(std::abs(slice_product(BoundaryCondition::transparent, 0, 1, 0)) >
        0.1);
}

TEST_CASE("radial conversions") {
  CHECK(proper_separation(kUnit, M_PI / 4.0) ==
        doctest::Approx(0.8813735870195430).epsilon(1e-14));
  CHECK(radial_coordinate(kUnit, 0.8813735870195430) ==
        doctest::Approx(M_PI / 4.0).epsilon(1e-14));
  const Geometry g{3.0};
  for (double dx : {0.1, 1.0, 4.0}) {
    CHECK(proper_separation(g, radial_coordinate(g, dx)) ==
          doctest::Approx(dx).epsilon(1e-13));
  }
  CHECK(radial_coordinate(kUnit, 0.0) == 0.0);
  CHECK_THROWS_AS(radial_coordinate(kUnit, -1.0), std::domain_error);
}

TEST_CASE("redshift factors") {
  const Geometry g{2.0};
  CHECK(redshift(g, Motion::geodesic, 0.0) == doctest::Approx(2.0));
  CHECK(redshift(g, Motion::geodesic, 1.2) == doctest::Approx(2.0));
  CHECK(redshift(g, Motion::static_worldline, 0.0) == doctest::Approx(2.0));
  CHECK(redshift(g, Motion::static_worldline, 1.0) ==
        doctest::Approx(2.0 / std::cos(1.0)));
}

TEST_CASE("chordal invariant") {
  CHECK(sigma0_center(cplx(0.0, 0.0), 0.3).real() ==
        doctest::Approx(1.0 - 1.0 / std::cos(0.3)));
  // reduces to the centred form when either radius vanishes
  const cplx dt{0.9, -0.01};
  CHECK(std::abs(sigma0_axis(dt, 0.4, 0.0) - sigma0_center(dt, 0.4)) < 1e-15);
  CHECK(std::abs(sigma0_axis(dt, 0.0, 0.4) - sigma0_center(dt, 0.4)) < 1e-15);
  // coincident points at equal times: sigma0 = 0 for any radius
  CHECK(std::abs(sigma0_axis(cplx(0.0, 0.0), 0.7, 0.7)) < 1e-15);
}

TEST_CASE("commutator events: structure and signs") {
  const double rho = 0.5;
  const double w0 = 1.0 / (4.0 * M_PI * std::tan(rho));

  SUBCASE("reflecting, eps = -1") {
    const auto ev = commutator_events(
        kUnit, BoundaryCondition::dirichlet, rho, 0.0, 6.5);
    REQUIRE(ev.size() == 4);
    // direct ray
    CHECK(ev[0].dt == doctest::Approx(rho));
    CHECK(ev[0].weight == doctest::Approx(w0));
    // boundary bounce, sign eps
    CHECK(ev[1].dt == doctest::Approx(M_PI - rho));
    CHECK(ev[1].weight == doctest::Approx(-w0));
    // refocused ray, sign -eps
    CHECK(ev[2].dt == doctest::Approx(M_PI + rho));
    CHECK(ev[2].weight == doctest::Approx(w0));
    // antipodal refocus, sign -1
    CHECK(ev[3].dt == doctest::Approx(2.0 * M_PI - rho));
    CHECK(ev[3].weight == doctest::Approx(-w0));
  }

  SUBCASE("transparent drops the boundary families") {
    const auto ev = commutator_events(
        kUnit, BoundaryCondition::transparent, rho, 0.0, 6.5);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0].dt == doctest::Approx(rho));
    CHECK(ev[0].weight == doctest::Approx(w0));
    CHECK(ev[1].dt == doctest::Approx(2.0 * M_PI - rho));
    CHECK(ev[1].weight == doctest::Approx(-w0));
  }

  SUBCASE("antisymmetry under dt -> -dt") {
    const auto pos = commutator_events(
        kUnit, BoundaryCondition::neumann, rho, 0.0, 10.0);
    const auto neg = commutator_events(
        kUnit, BoundaryCondition::neumann, rho, -10.0, 0.0);
    REQUIRE(pos.size() == neg.size());
    for (size_t i = 0; i < pos.size(); ++i) {
      const auto& p = pos[i];
      const auto& m = neg[neg.size() - 1 - i];
      CHECK(m.dt == doctest::Approx(-p.dt));
      CHECK(m.weight == doctest::Approx(-p.weight));
    }
  }

  SUBCASE("weights scale with curvature as 1/L^2") {
    const auto ev1 =
        commutator_events(kUnit, BoundaryCondition::dirichlet, rho, 0.0, 1.0);
    const auto ev2 = commutator_events(
        Geometry{2.0}, BoundaryCondition::dirichlet, rho, 0.0, 1.0);
    REQUIRE(ev1.size() == 1);
    REQUIRE(ev2.size() == 1);
    CHECK(ev2[0].weight == doctest::Approx(ev1[0].weight / 4.0));
  }

  CHECK_THROWS_AS(
      commutator_events(kUnit, BoundaryCondition::dirichlet, 0.0, 0.0, 1.0),
      std::domain_error);
}
