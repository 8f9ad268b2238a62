#include "adsharvest/switching.hpp"

#include <cmath>
#include <stdexcept>

namespace adsh {

double chi(const DetectorConfig& d, double tau) {
  if (!(d.width > 0.0)) throw std::domain_error("chi: width <= 0");
  const double u = (tau - d.center) / d.width;
  return std::exp(-0.5 * u * u);
}

cplx chi_hat(const DetectorConfig& d, double k) {
  if (!(d.width > 0.0)) throw std::domain_error("chi_hat: width <= 0");
  const double mag = d.width * std::exp(-0.5 * k * k * d.width * d.width);
  return {mag * std::cos(k * d.center), mag * std::sin(k * d.center)};
}

Frame to_frame(const Geometry& g, const DetectorConfig& d) {
  const double alpha = redshift(g, d.motion, d.rho);
  return {alpha, d.gap * alpha, d.width / alpha, d.center / alpha};
}

}  // namespace adsh
