#pragma once

#include <array>

#include "adsharvest/elements.hpp"

// State assembly and information quantities.  negativity2 and
// mutual_information are reported in units of lambda_A lambda_B (negativity2
// is degree-1 homogeneous in the elements and mutual information is
// invariant under a common rescaling, so both are well defined there);
// negativity and the density matrix carry the physical couplings.

namespace adsh {

struct TwoDetectorState {
  // Row-major 4x4 in the basis |gg>, |eg>, |ge>, |ee> (A first).
  std::array<cplx, 16> rho;
  bool perturbative_warning = false;  // lambda^2 (L_AA + L_BB) > 0.1

  cplx at(int r, int c) const { return rho[4 * r + c]; }
  double trace() const;
  double min_eigenvalue() const;  // analytic, via the two 2x2 blocks
};

TwoDetectorState density_matrix(const ElementSet& es, double lambda_a,
                                double lambda_b);

// N2 = -(L_AA + L_BB - sqrt((L_AA - L_BB)^2 + 4 |M|^2)) / 2
double negativity2(const ElementSet& es);

// max(N2, 0), rescaled to physical units.
double negativity(const ElementSet& es, double lambda_a, double lambda_b);

// I = L+ ln L+ + L- ln L- - L_AA ln L_AA - L_BB ln L_BB (natural log,
// 0 ln 0 = 0), with L+- the eigenvalues of the one-excitation block.
double mutual_information(const ElementSet& es);

}  // namespace adsh
