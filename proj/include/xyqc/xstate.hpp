#pragma once

#include "xyqc/correlators.hpp"

#include <Eigen/Dense>

#include <array>

namespace xyqc {

// Two-site reduced density matrix of X form, parameterized by the four expectation values.
// The 4x4 matrix in the basis |00>, |01>, |10>, |11> (sigma^z eigenbasis, 0 = up) is
//
//   1/4 [ 1+2sz+zz     0        0      xx-yy   ]
//       [    0       1-zz     xx+yy      0     ]
//       [    0       xx+yy    1-zz       0     ]
//       [  xx-yy       0        0     1-2sz+zz ]
//
// Only reachable through assemble(), which checks positivity.
class XState {
  public:
    double sz() const noexcept { return sz_; }
    double xx() const noexcept { return xx_; }
    double yy() const noexcept { return yy_; }
    double zz() const noexcept { return zz_; }

    Eigen::Matrix4d matrix() const;

    friend XState assemble(double sz, double xx, double yy, double zz);

  private:
    XState(double sz, double xx, double yy, double zz) : sz_(sz), xx_(xx), yy_(yy), zz_(zz) {}

    double sz_, xx_, yy_, zz_;
};

// Throws PhysicalityError if the smallest eigenvalue is below -1e-10.
XState assemble(double sz, double xx, double yy, double zz);
XState assemble(const CorrelatorSet &corr);

// eta_i from the (|00>, |11>) block, xi_i from the (|01>, |10>) block.
struct SpectrumPair {
    std::array<double, 2> eta;
    std::array<double, 2> xi;
};

// Eigenvalues; entries in [-1e-12, 0) are clamped to 0.
SpectrumPair spectrum(const XState &state);

// Main diagonal (zeta_0, zeta_1, eps, eps) with zeta_i = [1+zz+(-1)^i 2sz]/4, eps = (1-zz)/4.
std::array<double, 4> diagonal_spectrum(const XState &state);

// diag((1+sz)/2, (1-sz)/2); identical for either site.
std::array<double, 2> single_spin_reduced(const XState &state);

} // namespace xyqc
