#include "adsharvest/elements.hpp"

#include <cmath>
#include <stdexcept>

namespace adsh {

namespace {

constexpr cplx kI{0.0, 1.0};

// Consecutive-small-terms stop rule: the sum ends once `needed` successive
// terms fall below tol * |running total| (mode values oscillate, so a single
// small term is not evidence of convergence).
struct StopRule {
  double tol;
  int needed;
  int below = 0;
  bool done(double term_mag, double running_mag) {
    if (term_mag < tol * running_mag) {
      if (++below >= needed) return true;
    } else {
      below = 0;
    }
    return false;
  }
};

void fill(SumReport* r, int terms, double last, bool converged,
          double peak = 0.0) {
  if (!r) return;
  r->terms = terms;
  r->last_term = last;
  r->peak = peak;
  r->converged = converged;
}

const DetectorConfig& pick(const Scenario& s, Leg leg) {
  return leg == Leg::a ? s.a : s.b;
}

void require_equal_pair(const Scenario& s, const char* what) {
  if (s.a.gap != s.b.gap || s.a.width != s.b.width)
    throw std::invalid_argument(std::string(what) +
                                ": detectors must share gap and width");
}

// Half-width of the window where exp(-u^2 / (2 var)) >= tol.
double gaussian_window(double var, double tol) {
  const double arg = -2.0 * var * std::log(tol);
  return arg > 0.0 ? std::sqrt(arg) : 0.0;
}

double image_sign(int n_image, int eps) {
  // sgn(N + 1/2) * (-eps)^(N mod 2)
  double s = n_image >= 0 ? 1.0 : -1.0;
  if (n_image % 2 != 0) s *= static_cast<double>(-eps);
  return s;
}

}  // namespace

double local_response(const Scenario& s, Leg leg, const Truncation& tr,
                      SumReport* report) {
  const DetectorConfig& d = pick(s, leg);
  const Frame f = to_frame(s.geom, d);

  if (d.motion == Motion::geodesic || d.rho == 0.0) {
    // Central worldline (any circular geodesic responds identically).
    double sum = 0.0;
    StopRule stop{tr.tol, tr.consecutive_below};
    int terms = 0;
    double last = 0.0;
    bool converged = false;
    for (int n = 0; n < tr.n_max; ++n) {
      const int omega = mode_frequency(s.bc, n, 0);
      const double phi = mode_value(s.geom, s.bc, n, 0, 0.0, 1.0);
      const double k = d.gap + static_cast<double>(omega) / f.alpha;
      const double term = M_PI / omega * phi * phi * std::norm(chi_hat(d, k));
      sum += term;
      ++terms;
      last = term;
      if (stop.done(term, std::abs(sum))) {
        converged = true;
        break;
      }
    }
    fill(report, terms, last, converged);
    return sum;
  }

  // Static detector off-centre: full (n, l) sum, axial evaluation point.
  double sum = 0.0;
  int terms = 0;
  double last = 0.0;
  bool converged = false;
  for (int l = 0; l <= tr.l_max; ++l) {
    double block = 0.0;
    StopRule stop{tr.tol, tr.consecutive_below};
    bool inner_converged = false;
    for (int n = 0; n < tr.n_max; ++n) {
      const int omega = mode_frequency(s.bc, n, l);
      const double phi = mode_value(s.geom, s.bc, n, l, d.rho, 1.0);
      const double k = d.gap + static_cast<double>(omega) / f.alpha;
      const double term = M_PI / omega * phi * phi * std::norm(chi_hat(d, k));
      block += term;
      ++terms;
      last = term;
      if (stop.done(term, std::abs(sum + block))) {
        inner_converged = true;
        break;
      }
    }
    sum += block;
    if (!inner_converged) {
      fill(report, terms, last, false);
      return sum;
    }
    if (l > 0 && block < tr.tol * std::abs(sum)) {
      converged = true;
      break;
    }
  }
  fill(report, terms, last, converged);
  return sum;
}

cplx cross_response_gaps(const Scenario& s, Order order, double gap_a,
                         double gap_b, const Truncation& tr,
                         SumReport* report) {
  const Frame fa = to_frame(s.geom, s.a);
  const Frame fb = to_frame(s.geom, s.b);

  cplx sum = 0.0;
  StopRule stop{tr.tol, tr.consecutive_below};
  int terms = 0;
  double last = 0.0;
  bool converged = false;
  for (int n = 0; n < tr.n_max; ++n) {
    const int omega = mode_frequency(s.bc, n, 0);
    const double phi_a = mode_value(s.geom, s.bc, n, 0, s.a.rho, 1.0);
    const double phi_b = mode_value(s.geom, s.bc, n, 0, s.b.rho, 1.0);
    const double ka = gap_a + static_cast<double>(omega) / fa.alpha;
    const double kb = gap_b + static_cast<double>(omega) / fb.alpha;
    // L_IJ pairs chi_hat_J conjugated against chi_hat_I.
    const cplx pair = (order == Order::ab)
                          ? std::conj(chi_hat(s.b, kb)) * chi_hat(s.a, ka)
                          : std::conj(chi_hat(s.a, ka)) * chi_hat(s.b, kb);
    const cplx term = M_PI / omega * phi_a * phi_b * pair;
    sum += term;
    ++terms;
    last = std::abs(term);
    if (stop.done(last, std::abs(sum))) {
      converged = true;
      break;
    }
  }
  fill(report, terms, last, converged);
  return sum;
}

cplx cross_response(const Scenario& s, const Truncation& tr,
                    SumReport* report) {
  return cross_response_gaps(s, Order::ab, s.a.gap, s.b.gap, tr, report);
}

cplx m_plus(const Scenario& s, const Truncation& tr, SumReport* report) {
  require_equal_pair(s, "m_plus");
  const double sigma = s.a.width;
  const double gap = s.a.gap;
  const double L = s.geom.L;
  const double t0 = s.delay_t();

  if (s.kind == PairKind::geodesic) {
    double sum = 0.0;
    StopRule stop{tr.tol, tr.consecutive_below};
    int terms = 0;
    double last = 0.0;
    double peak = 0.0;
    bool converged = false;
    for (int n = 0; n < tr.n_max; ++n) {
      const int omega = mode_frequency(s.bc, n, 0);
      const double phi_a = mode_value(s.geom, s.bc, n, 0, s.a.rho, 1.0);
      const double phi_b = mode_value(s.geom, s.bc, n, 0, s.b.rho, 1.0);
      const double w = static_cast<double>(omega);
      // cos(w t0) can kill every term (all-odd spectra at half-odd
      // multiples of pi); keep the undamped magnitude as the noise scale.
      const double mag = std::abs(M_PI / w * phi_a * phi_b) * sigma * sigma *
                         std::exp(-sigma * sigma *
                                  (gap * gap + w * w / (L * L)));
      const double term = mag == 0.0
                              ? 0.0
                              : M_PI / w * phi_a * phi_b * sigma * sigma *
                                    std::cos(w * t0) *
                                    std::exp(-sigma * sigma *
                                             (gap * gap + w * w / (L * L)));
      peak = std::max(peak, mag);
      sum += term;
      ++terms;
      last = std::abs(term);
      if (stop.done(mag, std::abs(sum))) {
        converged = true;
        break;
      }
    }
    fill(report, terms, last, converged, peak);
    return -sum;
  }

  // Static pair.  Writing the anticommutator overlap as two Gaussian
  // exponents keeps every factor bounded (a cosh form overflows first).
  const double c = std::cos(s.b.rho);
  const cplx global =
      std::exp(kI * (0.5 * gap * L * t0 * (1.0 / c - 1.0)));
  cplx sum = 0.0;
  StopRule stop{tr.tol, tr.consecutive_below};
  int terms = 0;
  double last = 0.0;
  double peak = 0.0;
  bool converged = false;
  for (int n = 0; n < tr.n_max; ++n) {
    const int omega = mode_frequency(s.bc, n, 0);
    const double phi_a = mode_value(s.geom, s.bc, n, 0, s.a.rho, 1.0);
    const double phi_b = mode_value(s.geom, s.bc, n, 0, s.b.rho, 1.0);
    const double w = static_cast<double>(omega);
    const double ep = std::exp(
        -0.5 * sigma * sigma *
        (std::pow(w / L - gap, 2) + std::pow(w * c / L + gap, 2)));
    const double em = std::exp(
        -0.5 * sigma * sigma *
        (std::pow(w / L + gap, 2) + std::pow(w * c / L - gap, 2)));
    const cplx term = M_PI / w * phi_a * phi_b * sigma * sigma *
                      (ep * std::exp(kI * (w * t0)) +
                       em * std::exp(-kI * (w * t0)));
    // phase cancellation between the two exponents shrinks |term|; the
    // undamped magnitude is the truncation-noise scale
    const double mag =
        std::abs(M_PI / w * phi_a * phi_b) * sigma * sigma * (ep + em);
    peak = std::max(peak, mag);
    sum += term;
    ++terms;
    last = std::abs(term);
    if (stop.done(mag, std::abs(sum))) {
      converged = true;
      break;
    }
  }
  fill(report, terms, last, converged, peak);
  return -0.5 * global * sum;
}

cplx m_plus_identity(const Scenario& s, const Truncation& tr) {
  require_equal_pair(s, "m_plus_identity");
  const double gap = s.a.gap;
  const cplx ab = cross_response_gaps(s, Order::ab, +gap, -gap, tr);
  const cplx ba = cross_response_gaps(s, Order::ba, -gap, +gap, tr);
  return -0.5 * (ab + ba);
}

cplx m_minus_frames(const Scenario& s, const Truncation& tr,
                    SumReport* report) {
  require_equal_pair(s, "m_minus");
  const double rho = s.b.rho;
  if (rho == 0.0)
    throw std::domain_error("m_minus: coincident worldlines");
  const Frame fa = to_frame(s.geom, s.a);
  const Frame fb = to_frame(s.geom, s.b);
  const double t0 = s.delay_t();
  const double L = s.geom.L;

  const double var = fa.width_t * fa.width_t + fb.width_t * fb.width_t;
  const double w_ab = fa.width_t * fb.width_t / std::sqrt(var);
  const double gap_bar = 0.5 * (fa.gap_t + fb.gap_t);
  const double beta =
      (fa.width_t * fa.width_t - fb.width_t * fb.width_t) / var;
  const double phase_g =
      fa.width_t * fa.width_t * fa.gap_t - fb.width_t * fb.width_t * fb.gap_t;

  const cplx pref = 0.5 * kI / (4.0 * M_PI * L * L * std::tan(rho)) *
                    fa.alpha * fb.alpha * w_ab * std::sqrt(2.0 * M_PI) *
                    std::exp(-2.0 * w_ab * w_ab * gap_bar * gap_bar) *
                    std::exp(kI * (gap_bar * beta * t0));

  const double reach = std::abs(t0) + gaussian_window(var, tr.tol);
  int n_hi = static_cast<int>(std::ceil((reach - rho) / M_PI));
  int n_lo = static_cast<int>(std::floor((-reach - rho) / M_PI));
  bool converged = true;
  if (n_hi > tr.image_n_max) { n_hi = tr.image_n_max; converged = false; }
  if (n_lo < -tr.image_n_max) { n_lo = -tr.image_n_max; converged = false; }

  const int eps = epsilon(s.bc);
  cplx sum = 0.0;
  int terms = 0;
  double last = 0.0;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double sgn = image_sign(n, eps);
    if (sgn == 0.0) continue;
    const double d = rho + M_PI * static_cast<double>(n);
    const cplx bracket =
        std::exp(-0.5 * (d - t0) * (d - t0) / var) *
            std::exp(-kI * (d * phase_g / var)) +
        std::exp(-0.5 * (d + t0) * (d + t0) / var) *
            std::exp(kI * (d * phase_g / var));
    const cplx term = sgn * bracket;
    sum += term;
    ++terms;
    last = std::abs(pref * term);
  }
  fill(report, terms, last, converged);
  return pref * sum;
}

cplx m_minus(const Scenario& s, const Truncation& tr, SumReport* report) {
  require_equal_pair(s, "m_minus");
  if (s.kind == PairKind::static_pair) return m_minus_frames(s, tr, report);

  const double rho = s.b.rho;
  if (rho == 0.0)
    throw std::domain_error("m_minus: coincident worldlines");
  const double sigma = s.a.width;
  const double gap = s.a.gap;
  const double L = s.geom.L;
  const double tau0 = L * s.delay_t();

  const double pref = sigma * std::exp(-sigma * sigma * gap * gap) /
                      (4.0 * std::sqrt(M_PI) * L * std::tan(rho));
  const double reach = (std::abs(tau0) +
                        gaussian_window(2.0 * sigma * sigma, tr.tol)) / L;
  int n_hi = static_cast<int>(std::ceil((reach - rho) / M_PI));
  int n_lo = static_cast<int>(std::floor((-reach - rho) / M_PI));
  bool converged = true;
  if (n_hi > tr.image_n_max) { n_hi = tr.image_n_max; converged = false; }
  if (n_lo < -tr.image_n_max) { n_lo = -tr.image_n_max; converged = false; }

  const int eps = epsilon(s.bc);
  double sum = 0.0;
  int terms = 0;
  double last = 0.0;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double sgn = image_sign(n, eps);
    if (sgn == 0.0) continue;
    const double dl = (rho + M_PI * static_cast<double>(n)) * L;
    const double quarter = 0.25 / (sigma * sigma);
    const double term =
        sgn * 0.5 * (std::exp(-quarter * (dl - tau0) * (dl - tau0)) +
                     std::exp(-quarter * (dl + tau0) * (dl + tau0)));
    sum += term;
    ++terms;
    last = std::abs(pref * term);
  }
  fill(report, terms, last, converged);
  return kI * pref * sum;
}

cplx commutator_estimate(const Scenario& s, Order order, const Truncation& tr,
                         SumReport* report) {
  const double rho = s.b.rho;
  if (rho == 0.0)
    throw std::domain_error("commutator_estimate: coincident worldlines");
  const Frame fi =
      (order == Order::ab) ? to_frame(s.geom, s.a) : to_frame(s.geom, s.b);
  const Frame fj =
      (order == Order::ab) ? to_frame(s.geom, s.b) : to_frame(s.geom, s.a);

  const double var = fi.width_t * fi.width_t + fj.width_t * fj.width_t;
  const double w_ab = fi.width_t * fj.width_t / std::sqrt(var);
  const double d_centers = fi.center_t - fj.center_t;
  const double kp = fi.gap_t + fj.gap_t;
  const double km = fi.gap_t - fj.gap_t;

  const double reach = std::abs(d_centers) + gaussian_window(var, tr.tol);
  const double cap = (2.0 * tr.image_n_max + 2.0) * M_PI;
  const bool converged = reach <= cap;
  const auto events = commutator_events(s.geom, s.bc, rho, 1e-300,
                                        std::min(reach, cap));

  const cplx pref =
      kI * fi.alpha * fj.alpha * w_ab * std::sqrt(2.0 * M_PI) * 0.5;
  cplx sum = 0.0;
  double last = 0.0;
  for (const auto& ev : events) {
    const double d = ev.dt;
    const double mu = (fi.center_t * fj.width_t * fj.width_t +
                       (fj.center_t + d) * fi.width_t * fi.width_t) / var;
    const double envelope =
        std::exp(-0.5 * (d - d_centers) * (d - d_centers) / var);
    const cplx term =
        ev.weight * envelope *
        (std::exp(-0.5 * kp * kp * w_ab * w_ab) *
             std::exp(kI * (kp * mu - fj.gap_t * d)) +
         std::exp(-0.5 * km * km * w_ab * w_ab) *
             std::exp(kI * (km * mu + fj.gap_t * d)));
    sum += term;
    last = std::abs(pref * term);
  }
  fill(report, static_cast<int>(events.size()), last, converged);
  return pref * sum;
}

ElementSet element_set(const Scenario& s, const Truncation& tr) {
  ElementSet es;
  es.l_aa = local_response(s, Leg::a, tr, &es.report.l_aa);
  es.l_bb = local_response(s, Leg::b, tr, &es.report.l_bb);
  es.l_ab = cross_response(s, tr, &es.report.l_ab);
  es.m_plus = m_plus(s, tr, &es.report.m_plus);

  const cplx via_identity = m_plus_identity(s, tr);
  // Allow for truncation noise in the two independently stopped sums.  The
  // noise is absolute (set by the summed term magnitudes), so when phase
  // cancellation drives the value itself far below the peak term the
  // comparison must be made against the peak, not the result.
  const double scale = std::max({std::abs(es.m_plus), std::abs(via_identity),
                                 es.report.m_plus.peak, 1e-30});
  es.identity_ok = std::abs(es.m_plus - via_identity) <=
                   std::max(100.0 * tr.tol, 1e-12) * scale;

  if (s.b.rho == 0.0) {
    es.coincident = true;
    es.m_minus = 0.0;
    es.c_ab = 0.0;
    es.c_ba = 0.0;
  } else {
    es.m_minus = m_minus(s, tr, &es.report.m_minus);
    es.c_ab = commutator_estimate(s, Order::ab, tr, &es.report.c_ab);
    es.c_ba = commutator_estimate(s, Order::ba, tr, &es.report.c_ba);
  }
  es.m = es.m_plus + es.m_minus;
  return es;
}

}  // namespace adsh
