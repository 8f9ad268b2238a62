#include "adsharvest/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace adsh {

namespace {

void check_gegenbauer_args(double alpha, double x) {
  if (!(alpha > 0.0))
    throw std::domain_error("gegenbauer: order alpha must be positive");
  if (!(x >= -1.0 && x <= 1.0))
    throw std::domain_error("gegenbauer: argument outside [-1, 1]");
}

}  // namespace

GegenbauerSeries::GegenbauerSeries(double alpha, double x)
    : alpha_(alpha), x_(x) {
  check_gegenbauer_args(alpha, x);
}

double GegenbauerSeries::next() {
  // n C_n = 2 x (n + alpha - 1) C_{n-1} - (n + 2 alpha - 2) C_{n-2}
  double value;
  if (n_ == 0) {
    value = 1.0;
  } else if (n_ == 1) {
    value = 2.0 * alpha_ * x_;
  } else {
    const double n = static_cast<double>(n_);
    value = (2.0 * x_ * (n + alpha_ - 1.0) * cm1_ -
             (n + 2.0 * alpha_ - 2.0) * cm2_) / n;
  }
  cm2_ = cm1_;
  cm1_ = value;
  ++n_;
  return value;
}

double gegenbauer(unsigned n, double alpha, double x) {
  GegenbauerSeries series(alpha, x);
  double value = 0.0;
  for (unsigned k = 0; k <= n; ++k) value = series.next();
  return value;
}

double legendre_p(unsigned l, double x) {
  if (!(x >= -1.0 && x <= 1.0))
    throw std::domain_error("legendre_p: argument outside [-1, 1]");
  double pm1 = 1.0;
  if (l == 0) return pm1;
  double p = x;
  for (unsigned n = 1; n < l; ++n) {
    // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
    const double next =
        ((2.0 * n + 1.0) * x * p - static_cast<double>(n) * pm1) /
        (static_cast<double>(n) + 1.0);
    pm1 = p;
    p = next;
  }
  return p;
}

double y_l0(unsigned l, double cos_theta) {
  const double norm =
      std::sqrt((2.0 * static_cast<double>(l) + 1.0) / (4.0 * M_PI));
  return norm * legendre_p(l, cos_theta);
}

double log_factorial(unsigned n) {
  // Cumulative sums accumulated in long double; built once, read-only after.
  static const std::vector<double> table = [] {
    std::vector<double> t(kLogFactorialLimit + 1);
    long double acc = 0.0L;
    t[0] = 0.0;
    for (unsigned k = 1; k <= kLogFactorialLimit; ++k) {
      acc += std::log(static_cast<long double>(k));
      t[k] = static_cast<double>(acc);
    }
    return t;
  }();
  if (n >= table.size())
    throw std::domain_error("log_factorial: n = " + std::to_string(n) +
                            " exceeds the cached table limit " +
                            std::to_string(kLogFactorialLimit));
  return table[n];
}

}  // namespace adsh
