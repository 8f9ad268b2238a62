#include "adsharvest/quantify.hpp"

#include <algorithm>
#include <cmath>

namespace adsh {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double TwoDetectorState::trace() const {
  // Grouped so that (1 - s) + s returns exactly 1 when the elements are
  // consistent.
  const double s = at(1, 1).real() + at(2, 2).real() + at(3, 3).real();
  return at(0, 0).real() + s;
}

double TwoDetectorState::min_eigenvalue() const {
  // The state is block diagonal: span{|gg>, |ee>} and span{|eg>, |ge>}.
  const double p00 = at(0, 0).real();
  const double m2 = std::norm(at(3, 0));
  const double outer = 0.5 * (p00 - std::sqrt(p00 * p00 + 4.0 * m2));
  const double paa = at(1, 1).real();
  const double pbb = at(2, 2).real();
  const double disc = std::sqrt((paa - pbb) * (paa - pbb) +
                                4.0 * std::norm(at(1, 2)));
  const double inner = 0.5 * (paa + pbb - disc);
  return std::min(outer, inner);
}

TwoDetectorState density_matrix(const ElementSet& es, double lambda_a,
                                double lambda_b) {
  const double ll = lambda_a * lambda_b;
  TwoDetectorState st;
  st.rho.fill(cplx{0.0, 0.0});
  // Each response scales with the coupling of the detector(s) it involves.
  const double paa = lambda_a * lambda_a * es.l_aa;
  const double pbb = lambda_b * lambda_b * es.l_bb;
  st.rho[4 * 0 + 0] = 1.0 - (paa + pbb);
  st.rho[4 * 1 + 1] = paa;
  st.rho[4 * 2 + 2] = pbb;
  st.rho[4 * 1 + 2] = ll * es.l_ab;
  st.rho[4 * 2 + 1] = std::conj(ll * es.l_ab);
  st.rho[4 * 3 + 0] = ll * es.m;
  st.rho[4 * 0 + 3] = std::conj(ll * es.m);
  st.perturbative_warning = paa + pbb > 0.1;
  return st;
}

double negativity2(const ElementSet& es) {
  const double diff = es.l_aa - es.l_bb;
  return -0.5 * (es.l_aa + es.l_bb -
                 std::sqrt(diff * diff + 4.0 * std::norm(es.m)));
}

double negativity(const ElementSet& es, double lambda_a, double lambda_b) {
  // Physical entries of the partially transposed one-excitation block.
  const double paa = lambda_a * lambda_a * es.l_aa;
  const double pbb = lambda_b * lambda_b * es.l_bb;
  const double m = lambda_a * lambda_b * std::abs(es.m);
  const double diff = paa - pbb;
  const double n2 =
      -0.5 * (paa + pbb - std::sqrt(diff * diff + 4.0 * m * m));
  return std::max(n2, 0.0);
}

double mutual_information(const ElementSet& es) {
  // Without cross-correlation the split reduces to {max, min} of the local
  // terms; take that branch literally so the four xlogx terms cancel
  // bit-for-bit and uncorrelated inputs give exactly zero.
  if (es.l_ab == 0.0) return 0.0;
  const double diff = es.l_aa - es.l_bb;
  const double disc =
      std::sqrt(diff * diff + 4.0 * std::norm(es.l_ab));
  const double lp = 0.5 * (es.l_aa + es.l_bb + disc);
  // Cauchy-Schwarz keeps L- >= 0; clamp the roundoff residue.
  const double lm = std::max(0.5 * (es.l_aa + es.l_bb - disc), 0.0);
  return xlogx(lp) + xlogx(lm) - xlogx(es.l_aa) - xlogx(es.l_bb);
}

}  // namespace adsh
