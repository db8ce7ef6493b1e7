#pragma once

#include "xyqc/xstate.hpp"

#include <array>
#include <span>

namespace xyqc {

// Projective measurement basis on the second site, Pi_i = V|i><i|V^dagger with
// V = [[cos(theta/2), e^{i phi} sin(theta/2)], [-e^{-i phi} sin(theta/2), cos(theta/2)]].
struct MeasurementAngles {
    double theta = 0.0; // [0, pi]
    double phi   = 0.0; // [0, 2pi)
};

struct OptimizerConfig {
    int    grid_points      = 64;   // per axis of the coarse scan, >= 8
    double refine_tol       = 1e-9; // simplex convergence and tie window
    int    max_refine_iters = 200;
};

void validate(const OptimizerConfig &cfg);

struct DeficitResult {
    double            value = 0.0; // bits
    MeasurementAngles argmin;
};

struct MeasureResult {
    double            deficit = 0.0;
    MeasurementAngles argmin;
    double            c_l1         = 0.0;
    double            c_rel        = 0.0;
    double            entropy_rho  = 0.0;
    double            entropy_diag = 0.0;
};

// Shannon entropy in bits of a probability vector. Components in [-1e-12, 0) count as 0.
// Throws DomainError for larger negatives or when the sum is off by more than 1e-9.
double entropy(std::span<const double> p);

// von Neumann entropy of the state, in bits.
double entropy(const XState &state);

// Eigenvalues xi_ij (index 2i + j) of sum_i (I x Pi_i) rho (I x Pi_i).
std::array<double, 4> post_measurement_spectrum(const XState &state, const MeasurementAngles &angles);

// S(measured state) - S(rho) for one measurement basis.
double entropy_increase(const XState &state, const MeasurementAngles &angles);

// Minimum entropy increase over projective measurements on the second site. The search runs over
// [0, pi/2]^2, which covers every distinct post-measurement spectrum.
DeficitResult one_way_deficit(const XState &state, const OptimizerConfig &cfg = {});

// Sum of absolute off-diagonal entries.
double l1_coherence(const XState &state);

// S(diag rho) - S(rho), in bits.
double relative_entropy_coherence(const XState &state);

// Measures below this magnitude are reported as exactly 0 by all_measures.
inline constexpr double reported_zero = 1e-12;

MeasureResult all_measures(const XState &state, const OptimizerConfig &cfg = {});

} // namespace xyqc
