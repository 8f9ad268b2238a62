#include "adsharvest/modes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "adsharvest/specfun.hpp"

namespace adsh {

namespace {

constexpr double kSingularGuard = 1e-14;

void check_rho_open(double rho) {
  if (!(rho >= 0.0 && rho < M_PI / 2.0))
    throw std::domain_error("radial coordinate must lie in [0, pi/2)");
}

}  // namespace

BoundaryCondition boundary_from_epsilon(int eps) {
  switch (eps) {
    case -1: return BoundaryCondition::dirichlet;
    case 0: return BoundaryCondition::transparent;
    case +1: return BoundaryCondition::neumann;
    default:
      throw std::invalid_argument("boundary parameter must be -1, 0 or +1");
  }
}

const char* boundary_name(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::dirichlet: return "dirichlet";
    case BoundaryCondition::transparent: return "transparent";
    case BoundaryCondition::neumann: return "neumann";
  }
  return "?";
}

int mode_frequency(BoundaryCondition bc, int n, int l) {
  if (n < 0 || l < 0)
    throw std::domain_error("mode_frequency: n and l must be non-negative");
  switch (bc) {
    case BoundaryCondition::transparent: return l + n + 1;
    case BoundaryCondition::neumann: return l + 2 * n + 1;
    case BoundaryCondition::dirichlet: return l + 2 * n + 2;
  }
  throw std::domain_error("mode_frequency: bad boundary condition");
}

namespace {

double log_mode_normalization(const Geometry& g, int omega, int l) {
  if (!(g.L > 0.0)) throw std::domain_error("mode_normalization: L <= 0");
  if (l < 0 || omega < l + 1)
    throw std::domain_error("mode_normalization: need omega >= l + 1");
  return static_cast<double>(l) * std::log(2.0) +
         log_factorial(static_cast<unsigned>(l)) - std::log(g.L) +
         0.5 * (std::log(2.0 * omega) +
                log_factorial(static_cast<unsigned>(omega - l - 1)) -
                std::log(M_PI) -
                log_factorial(static_cast<unsigned>(omega + l)));
}

// Gegenbauer value as (mantissa, log-scale); the recurrence is rescaled on
// the fly because intermediate C_n^{(l+1)} can exceed double range long
// before the normalisation constant brings the mode value back to O(1).
struct ScaledValue {
  double mantissa;
  double log_scale;
};

ScaledValue scaled_gegenbauer(unsigned n, double alpha, double x) {
  double cm2 = 0.0, cm1 = 0.0, value = 0.0, log_scale = 0.0;
  for (unsigned k = 0; k <= n; ++k) {
    if (k == 0) {
      value = 1.0;
    } else if (k == 1) {
      value = 2.0 * alpha * x;
    } else {
      const double kk = static_cast<double>(k);
      value = (2.0 * x * (kk + alpha - 1.0) * cm1 -
               (kk + 2.0 * alpha - 2.0) * cm2) / kk;
    }
    if (std::abs(value) > 1e250) {
      value *= 1e-250;
      cm1 *= 1e-250;
      log_scale += 250.0 * std::log(10.0);
    }
    cm2 = cm1;
    cm1 = value;
  }
  return {value, log_scale};
}

}  // namespace

double mode_normalization(const Geometry& g, int omega, int l) {
  const double log_n = log_mode_normalization(g, omega, l);
  if (log_n > 700.0)
    throw std::overflow_error(
        "mode_normalization: magnitude exceeds double range");
  if (log_n < -745.0) return 0.0;
  return std::exp(log_n);
}

double mode_value(const Geometry& g, BoundaryCondition bc, int n, int l,
                  double rho, double cos_theta) {
  check_rho_open(rho);
  const int omega = mode_frequency(bc, n, l);
  const double y = y_l0(static_cast<unsigned>(l), cos_theta);
  if (y == 0.0) return 0.0;
  const double s = std::sin(rho);
  if (s == 0.0 && l > 0) return 0.0;

  const ScaledValue c = scaled_gegenbauer(
      static_cast<unsigned>(omega - l - 1), static_cast<double>(l) + 1.0,
      std::cos(rho));
  if (c.mantissa == 0.0) return 0.0;

  double log_mag = log_mode_normalization(g, omega, l) + c.log_scale +
                   std::log(std::abs(c.mantissa)) + std::log(std::cos(rho)) +
                   std::log(std::abs(y));
  if (l > 0) log_mag += static_cast<double>(l) * std::log(s);
  if (epsilon(bc) != 0) log_mag += 0.5 * std::log(2.0);  // sqrt(2)^(eps^2)

  if (log_mag > 700.0)
    throw std::overflow_error("mode_value: magnitude exceeds double range");
  if (log_mag < -745.0) return 0.0;
  const double sign = (c.mantissa < 0.0) != (y < 0.0) ? -1.0 : 1.0;
  return sign * std::exp(log_mag);
}

double proper_separation(const Geometry& g, double rho) {
  check_rho_open(rho);
  return g.L * std::asinh(std::tan(rho));
}

double radial_coordinate(const Geometry& g, double dx) {
  if (dx < 0.0) throw std::domain_error("radial_coordinate: negative distance");
  return std::atan(std::sinh(dx / g.L));
}

double redshift(const Geometry& g, Motion motion, double rho) {
  check_rho_open(rho);
  switch (motion) {
    case Motion::geodesic: return g.L;
    case Motion::static_worldline: return g.L / std::cos(rho);
  }
  throw std::domain_error("redshift: bad motion kind");
}

cplx sigma0_center(cplx dt, double rho) {
  check_rho_open(rho);
  return 1.0 - std::cos(dt) / std::cos(rho);
}

cplx sigma0_axis(cplx dt, double rho1, double rho2) {
  check_rho_open(rho1);
  check_rho_open(rho2);
  return 1.0 + std::tan(rho1) * std::tan(rho2) -
         std::cos(dt) / (std::cos(rho1) * std::cos(rho2));
}

cplx wightman_closed_form(const Geometry& g, BoundaryCondition bc,
                          cplx sigma0) {
  if (std::abs(sigma0) < kSingularGuard)
    throw std::domain_error("wightman_closed_form: lightlike separation");
  cplx value = -1.0 / sigma0;
  if (epsilon(bc) != 0) {
    const cplx reflected = sigma0 - 2.0;
    if (std::abs(reflected) < kSingularGuard)
      throw std::domain_error(
          "wightman_closed_form: image lightlike separation");
    value -= static_cast<double>(epsilon(bc)) / reflected;
  }
  return value / (8.0 * M_PI * M_PI * g.L * g.L);
}

std::vector<CommutatorEvent> commutator_events(const Geometry& g,
                                               BoundaryCondition bc,
                                               double rho, double dt_min,
                                               double dt_max) {
  check_rho_open(rho);
  if (rho == 0.0)
    throw std::domain_error("commutator_events: coincident spatial points");
  const double base = 1.0 / (4.0 * M_PI * g.L * g.L * std::tan(rho));
  const double eps = static_cast<double>(epsilon(bc));

  struct Family {
    double offset;  // dt = sign_rho * rho + offset + 2 pi N
    double sign_rho;
    double weight;
  };
  const Family families[4] = {
      {0.0, +1.0, +1.0},
      {M_PI, -1.0, +eps},
      {M_PI, +1.0, -eps},
      {2.0 * M_PI, -1.0, -1.0},
  };

  std::vector<CommutatorEvent> events;
  if (!(dt_min <= dt_max)) return events;
  for (const Family& f : families) {
    if (f.weight == 0.0) continue;
    const double anchor = f.sign_rho * rho + f.offset;
    const double two_pi = 2.0 * M_PI;
    const long n_lo = static_cast<long>(std::ceil((dt_min - anchor) / two_pi));
    const long n_hi = static_cast<long>(std::floor((dt_max - anchor) / two_pi));
    for (long n = n_lo; n <= n_hi; ++n)
      events.push_back({anchor + two_pi * static_cast<double>(n),
                        f.weight * base});
  }
  std::sort(events.begin(), events.end(),
            [](const CommutatorEvent& a, const CommutatorEvent& b) {
              if (a.dt != b.dt) return a.dt < b.dt;
              return a.weight < b.weight;
            });
  return events;
}

}  // namespace adsh
