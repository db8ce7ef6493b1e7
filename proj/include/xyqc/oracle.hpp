#pragma once

#include "xyqc/correlators.hpp"
#include "xyqc/measures.hpp"
#include "xyqc/xstate.hpp"

#include <Eigen/Dense>

#include <array>

namespace xyqc::oracle {

inline constexpr int max_sites = 12;

// Periodic chain of N spins, site N identified with site 0.
struct FiniteChainSpec {
    int    sites       = 10;
    double gamma       = 0.0;
    double lambda      = 0.0;
    double temperature = 0.05; // kT > 0
};

// H = -sum_j { lambda/2 [(1+gamma) X_j X_{j+1} + (1-gamma) Y_j Y_{j+1}] + Z_j } in the computational
// basis, bit j of the index holding site j (0 = spin up). Real symmetric. For N = 2 the two periodic
// bonds both join sites 0 and 1, so that coupling enters twice.
Eigen::MatrixXd build_hamiltonian(const FiniteChainSpec &spec);

struct FiniteChainCorrelators {
    CorrelatorSet corr;
    // Largest spread of any two-site correlator (or of sz) over base sites.
    double translation_spread = 0.0;
};

// Thermal correlators of the finite chain at separation n (1 <= n <= N/2). sz is averaged over
// sites. The Boltzmann factor is exp(-H / (2 kT)): the integral formulas measure temperature against
// quasiparticle energies omega_phi, which are half the single-spin splitting of H.
FiniteChainCorrelators thermal_two_site(const FiniteChainSpec &spec, int n);

// Eigenvalues of the 4x4 matrix, ascending, from a dense Hermitian solver.
std::array<double, 4> dense_eigenvalues(const XState &state);

// Eigenvalues, ascending, of sum_i (I x Pi_i) rho (I x Pi_i) with Pi_i = V|i><i|V^dagger built densely.
std::array<double, 4> dense_measured_spectrum(const XState &state, const MeasurementAngles &angles);

// Exhaustive minimum of S(measured) - S(rho) on a resolution x resolution grid over [0, pi/2]^2.
double grid_min_deficit(const XState &state, int resolution);

} // namespace xyqc::oracle
