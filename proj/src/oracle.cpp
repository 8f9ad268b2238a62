#include "adsharvest/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "adsharvest/switching.hpp"

namespace adsh {

namespace {

constexpr cplx kI{0.0, 1.0};

// integral of exp(-(t-c)^2/(2 w^2)) e^{i k t} dt
cplx gauss_fourier(double center, double width, double k) {
  const double mag = width * std::sqrt(2.0 * M_PI) *
                     std::exp(-0.5 * k * k * width * width);
  return {mag * std::cos(k * center), mag * std::sin(k * center)};
}

void require_odd(int n, const char* what) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument(std::string(what) +
                                ": points_per_axis must be odd and >= 3");
}

template <class F>
cplx simpson(F&& f, double lo, double hi, int n) {
  const double h = (hi - lo) / (n - 1);
  cplx acc = f(lo) + f(hi);
  for (int i = 1; i + 1 < n; ++i)
    acc += ((i % 2) ? 4.0 : 2.0) * f(lo + h * i);
  return acc * (h / 3.0);
}

double auto_half_width(const QuadratureSpec& spec, const Frame& fa,
                       const Frame& fb) {
  if (spec.half_width > 0.0) return spec.half_width;
  return 8.0 * std::max(fa.width_t, fb.width_t);
}

struct DetectorMode {
  Frame frame;
  double rho;  // spatial evaluation radius for the mode functions
};

DetectorMode detector_mode(const Scenario& s, Leg leg) {
  const DetectorConfig& d = (leg == Leg::a) ? s.a : s.b;
  return {to_frame(s.geom, d), d.rho};
}

// Per-mode switched time integral, including the proper->coordinate measure
// factor:  alpha * integral chi~(t) e^{i (sign_gap Omega~ + sign_mode omega) t}.
cplx time_factor(const Frame& f, double gap_sign, double omega,
                 double omega_sign) {
  return f.alpha *
         gauss_fourier(f.center_t, f.width_t,
                       gap_sign * f.gap_t + omega_sign * omega);
}

// --- kernel path helpers ---

// One regulated pass of integral du g(u) K(u - i eps) by the composite
// trapezoid rule; g supplied by the caller via lambda.
template <class G>
cplx trapezoid(G&& g, double lo, double hi, long n) {
  const double h = (hi - lo) / static_cast<double>(n - 1);
  cplx acc = 0.5 * (g(lo) + g(hi));
  for (long i = 1; i + 1 < n; ++i) acc += g(lo + h * i);
  return acc * h;
}

// Number of trapezoid points needed so the step obeys h <= eps_min / 12.
// The quadrature error of an analytic integrand decays like
// exp(-2 pi eps / h) and the regulator sets the strip half-width, so the
// smallest regulator needs h well below eps or the pole tail swamps
// integrals whose true value is oscillation-suppressed.  At eps/12 the
// discretization error sits below the eps-extrapolation floor.
long kernel_points(double window, double eps_min) {
  const double h = eps_min / 12.0;
  long n = static_cast<long>(std::ceil(window / h)) + 1;
  if (n % 2 == 0) ++n;
  const long cap = 4000001;
  if (n > cap) n = cap;
  return n;
}

// Polynomial extrapolation of the three regulated values to eps = 0.
// Regulators are (e, e/2, e/4), so the Lagrange weights at zero are fixed.
cplx neville3(const std::array<cplx, 3>& v) {
  return v[0] / 3.0 - 2.0 * v[1] + (8.0 / 3.0) * v[2];
}

void check_halving(const std::array<double, 3>& e) {
  if (!(e[0] > e[1] && e[1] > e[2] && e[2] > 0.0))
    throw std::invalid_argument("kernel path: regulators must decrease");
  const double r1 = e[0] / e[1], r2 = e[1] / e[2];
  if (std::abs(r1 - 2.0) > 1e-9 || std::abs(r2 - 2.0) > 1e-9)
    throw std::invalid_argument("kernel path: regulators must halve");
}

}  // namespace

// ---------------------------------------------------------------- mode path

double quad_local_response(const Scenario& sc, Leg leg,
                           const QuadratureSpec& spec) {
  const DetectorMode dm = detector_mode(sc, leg);
  const DetectorConfig& d = (leg == Leg::a) ? sc.a : sc.b;
  const bool central = (d.motion == Motion::geodesic) || (d.rho == 0.0);
  const int l_hi = central ? 0 : spec.l_max;

  double sum = 0.0;
  for (int l = 0; l <= l_hi; ++l) {
    for (int n = 0; n < spec.n_max; ++n) {
      const int omega = mode_frequency(sc.bc, n, l);
      const double rho_eval = central ? 0.0 : d.rho;
      const double phi = mode_value(sc.geom, sc.bc, n, l, rho_eval, 1.0);
      if (phi == 0.0) continue;
      const cplx t = time_factor(dm.frame, -1.0, omega, -1.0);
      sum += std::norm(t) * phi * phi / (2.0 * omega);
    }
  }
  return sum;
}

cplx quad_cross_response(const Scenario& sc, const QuadratureSpec& spec) {
  const DetectorMode da = detector_mode(sc, Leg::a);
  const DetectorMode db = detector_mode(sc, Leg::b);

  cplx sum = 0.0;
  for (int n = 0; n < spec.n_max; ++n) {
    const int omega = mode_frequency(sc.bc, n, 0);
    const double phi_a = mode_value(sc.geom, sc.bc, n, 0, da.rho, 1.0);
    const double phi_b = mode_value(sc.geom, sc.bc, n, 0, db.rho, 1.0);
    // first (conjugated-switching) slot is detector b, second is a
    const cplx tb = time_factor(db.frame, -1.0, omega, -1.0);
    const cplx ta = time_factor(da.frame, +1.0, omega, +1.0);
    sum += tb * ta * phi_a * phi_b / (2.0 * omega);
  }
  return sum;
}

cplx quad_m_plus(const Scenario& sc, const QuadratureSpec& spec) {
  const DetectorMode da = detector_mode(sc, Leg::a);
  const DetectorMode db = detector_mode(sc, Leg::b);

  cplx sum = 0.0;
  for (int n = 0; n < spec.n_max; ++n) {
    const int omega = mode_frequency(sc.bc, n, 0);
    const double phi_a = mode_value(sc.geom, sc.bc, n, 0, da.rho, 1.0);
    const double phi_b = mode_value(sc.geom, sc.bc, n, 0, db.rho, 1.0);
    // full-plane symmetrised overlap: cos(omega dt) splits into two
    // frequency assignments between the detectors
    const cplx half =
        0.5 * (time_factor(da.frame, +1.0, omega, -1.0) *
                   time_factor(db.frame, +1.0, omega, +1.0) +
               time_factor(da.frame, +1.0, omega, +1.0) *
                   time_factor(db.frame, +1.0, omega, -1.0));
    sum += half * phi_a * phi_b / (2.0 * omega);
  }
  return -sum;
}

// --------------------------------------------------------------- event path

cplx quad_m_minus(const Scenario& sc, const QuadratureSpec& spec) {
  require_odd(spec.points_per_axis, "quad_m_minus");
  if (sc.b.rho == 0.0)
    throw std::domain_error("quad_m_minus: coincident worldlines");
  const Frame fa = to_frame(sc.geom, sc.a);
  const Frame fb = to_frame(sc.geom, sc.b);
  const double hw = auto_half_width(spec, fa, fb);
  const double spread =
      std::sqrt(fa.width_t * fa.width_t + fb.width_t * fb.width_t);
  const double reach =
      std::abs(fb.center_t - fa.center_t) + 14.0 * spread;

  const auto events =
      commutator_events(sc.geom, sc.bc, sc.b.rho, 1e-300, reach);

  cplx sum = 0.0;
  for (const auto& ev : events) {
    const double d = ev.dt;
    // later switching at t, earlier at t - d
    auto i1 = [&](double t) {
      return chi(sc.b, fb.alpha * t) * chi(sc.a, fa.alpha * (t - d)) *
             std::exp(kI * (fb.gap_t * t + fa.gap_t * (t - d)));
    };
    auto i2 = [&](double t) {
      return chi(sc.a, fa.alpha * t) * chi(sc.b, fb.alpha * (t - d)) *
             std::exp(kI * (fa.gap_t * t + fb.gap_t * (t - d)));
    };
    const double lo1 = std::min(fb.center_t, fa.center_t + d) - hw;
    const double hi1 = std::max(fb.center_t, fa.center_t + d) + hw;
    const double lo2 = std::min(fa.center_t, fb.center_t + d) - hw;
    const double hi2 = std::max(fa.center_t, fb.center_t + d) + hw;
    sum += ev.weight * (simpson(i1, lo1, hi1, spec.points_per_axis) +
                        simpson(i2, lo2, hi2, spec.points_per_axis));
  }
  return 0.5 * kI * fa.alpha * fb.alpha * sum;
}

cplx quad_commutator_estimate(const Scenario& sc, Order order,
                              const QuadratureSpec& spec) {
  require_odd(spec.points_per_axis, "quad_commutator_estimate");
  if (sc.b.rho == 0.0)
    throw std::domain_error("quad_commutator_estimate: coincident worldlines");
  const Frame fi = (order == Order::ab) ? to_frame(sc.geom, sc.a)
                                        : to_frame(sc.geom, sc.b);
  const Frame fj = (order == Order::ab) ? to_frame(sc.geom, sc.b)
                                        : to_frame(sc.geom, sc.a);
  const DetectorConfig& di = (order == Order::ab) ? sc.a : sc.b;
  const DetectorConfig& dj = (order == Order::ab) ? sc.b : sc.a;
  const double hw = auto_half_width(spec, fi, fj);
  const double spread =
      std::sqrt(fi.width_t * fi.width_t + fj.width_t * fj.width_t);
  const double reach =
      std::abs(fi.center_t - fj.center_t) + 14.0 * spread;

  const auto events =
      commutator_events(sc.geom, sc.bc, sc.b.rho, 1e-300, reach);

  cplx sum = 0.0;
  for (const auto& ev : events) {
    const double d = ev.dt;
    auto k = [&](double t) {
      return chi(di, fi.alpha * t) * chi(dj, fj.alpha * (t - d)) *
             std::exp(kI * (fi.gap_t * t)) * std::cos(fj.gap_t * (t - d));
    };
    const double lo = std::min(fi.center_t, fj.center_t + d) - hw;
    const double hi = std::max(fi.center_t, fj.center_t + d) + hw;
    sum += ev.weight * simpson(k, lo, hi, spec.points_per_axis);
  }
  return kI * fi.alpha * fj.alpha * sum;
}

cplx wightman_mode_sum(const Geometry& g, BoundaryCondition bc, cplx dt,
                       double rho, int n_max) {
  if (!(dt.imag() < 0.0))
    throw std::domain_error(
        "wightman_mode_sum: needs Im(dt) < 0 for convergence");
  cplx sum = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const int omega = mode_frequency(bc, n, 0);
    const double phi_r = mode_value(g, bc, n, 0, rho, 1.0);
    const double phi_0 = mode_value(g, bc, n, 0, 0.0, 1.0);
    sum += std::exp(-kI * (static_cast<double>(omega) * dt)) * phi_r * phi_0 /
           (2.0 * omega);
  }
  return sum;
}

// -------------------------------------------------------------- kernel path

namespace {

// Shared single-line driver: integral du g(u) W(sigma0(u - i eps)) over the
// regulator sequence, extrapolated to eps = 0.  The oscillatory gap phase
// and the Gaussian envelope both live in g.
template <class G>
cplx kernel_line(const Scenario& sc, double rho1, double rho2, double u_center,
                 double u_half, double eps_scale, const QuadratureSpec& spec,
                 G&& g, bool symmetrized) {
  check_halving(spec.epsilon_reg);
  const double eps_min = spec.epsilon_reg[2] * eps_scale;
  const long n = kernel_points(2.0 * u_half, eps_min);

  std::array<cplx, 3> vals{};
  for (int k = 0; k < 3; ++k) {
    const double eps = spec.epsilon_reg[k] * eps_scale;
    auto f = [&](double u) -> cplx {
      const cplx w =
          symmetrized
              ? 0.5 * (wightman_closed_form(
                           sc.geom, sc.bc,
                           sigma0_axis(cplx(u, -eps), rho1, rho2)) +
                       wightman_closed_form(
                           sc.geom, sc.bc,
                           sigma0_axis(cplx(-u, -eps), rho1, rho2)))
              : wightman_closed_form(sc.geom, sc.bc,
                                     sigma0_axis(cplx(u, -eps), rho1, rho2));
      return g(u) * w;
    };
    vals[k] = trapezoid(f, u_center - u_half, u_center + u_half, n);
  }
  return neville3(vals);
}

}  // namespace

double quad_local_response_kernel(const Scenario& sc, Leg leg,
                                  const QuadratureSpec& spec) {
  const DetectorConfig& d = (leg == Leg::a) ? sc.a : sc.b;
  const Frame f = to_frame(sc.geom, d);
  const double rho_self =
      (d.motion == Motion::geodesic) ? 0.0 : d.rho;
  const double sig = f.width_t;
  // co-moving Gaussian integrated in closed form
  const double pref = sig * std::sqrt(M_PI) * f.alpha * f.alpha;
  auto g = [&](double u) {
    return std::exp(-u * u / (4.0 * sig * sig)) *
           std::exp(-kI * (f.gap_t * u));
  };
  const cplx val =
      kernel_line(sc, rho_self, rho_self, 0.0, 17.0 * sig,
                  d.width / f.alpha, spec, g, false);
  return pref * val.real();
}

cplx quad_cross_response_kernel(const Scenario& sc,
                                const QuadratureSpec& spec) {
  const Frame fa = to_frame(sc.geom, sc.a);
  const Frame fb = to_frame(sc.geom, sc.b);
  if (std::abs(fa.width_t - fb.width_t) > 1e-15 * fa.width_t ||
      std::abs(fa.gap_t - fb.gap_t) > 1e-15 * std::abs(fa.gap_t))
    throw std::invalid_argument(
        "quad_cross_response_kernel: needs matched coordinate frames");
  const double sig = fa.width_t;
  const double t0 = fb.center_t - fa.center_t;
  const double pref = sig * std::sqrt(M_PI) * fa.alpha * fb.alpha;
  auto g = [&](double u) {
    return std::exp(-(u - t0) * (u - t0) / (4.0 * sig * sig)) *
           std::exp(-kI * (fb.gap_t * u));
  };
  return pref * kernel_line(sc, sc.b.rho, sc.a.rho, t0, 17.0 * sig,
                            sc.a.width / fa.alpha, spec, g, false);
}

cplx quad_m_plus_kernel(const Scenario& sc, const QuadratureSpec& spec) {
  const Frame fa = to_frame(sc.geom, sc.a);
  const Frame fb = to_frame(sc.geom, sc.b);
  if (std::abs(fa.width_t - fb.width_t) > 1e-15 * fa.width_t ||
      std::abs(fa.gap_t - fb.gap_t) > 1e-15 * std::abs(fa.gap_t))
    throw std::invalid_argument(
        "quad_m_plus_kernel: needs matched coordinate frames");
  const double sig = fa.width_t;
  const double gap_t = fa.gap_t;
  const double du = fa.center_t - fb.center_t;
  const double vsum = fa.center_t + fb.center_t;
  const cplx pref = sig * std::sqrt(M_PI) * fa.alpha * fb.alpha *
                    std::exp(-gap_t * gap_t * sig * sig) *
                    std::exp(kI * (gap_t * vsum));
  auto g = [&](double u) {
    return cplx(std::exp(-(u - du) * (u - du) / (4.0 * sig * sig)), 0.0);
  };
  return -pref * kernel_line(sc, sc.a.rho, sc.b.rho, du, 17.0 * sig,
                             sc.a.width / fa.alpha, spec, g, true);
}

}  // namespace adsh
