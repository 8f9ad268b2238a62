#pragma once

// Real special functions used by the mode machinery: Gegenbauer and
// Legendre polynomials, axial spherical harmonics, cached log-factorials.

namespace adsh {

// Gegenbauer polynomial C_n^(alpha)(x), alpha > 0, x in [-1, 1].
double gegenbauer(unsigned n, double alpha, double x);

// Incremental Gegenbauer evaluator for fixed (alpha, x): successive calls to
// next() return C_0, C_1, C_2, ... via the same upward recurrence as
// gegenbauer().  Mode sums walk the degree upward one step per mode.
class GegenbauerSeries {
public:
  GegenbauerSeries(double alpha, double x);
  double next();

private:
  double alpha_, x_;
  unsigned n_ = 0;
  double cm1_ = 0.0;  // C_{n-1}
  double cm2_ = 0.0;  // C_{n-2}
};

// Legendre polynomial P_l(x), x in [-1, 1].
double legendre_p(unsigned l, double x);

// Axial spherical harmonic Y_l^0 as a function of cos(theta).
double y_l0(unsigned l, double cos_theta);

// log(n!) from a cached cumulative table.  The table covers n <= the
// configured limit (kLogFactorialLimit); larger n is a hard error rather
// than a silent loss of accuracy.
inline constexpr unsigned kLogFactorialLimit = 4096;
double log_factorial(unsigned n);

}  // namespace adsh
