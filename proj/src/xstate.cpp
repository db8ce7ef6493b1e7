#include "xyqc/xstate.hpp"

#include "xyqc/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace xyqc {

namespace {

constexpr double clamp_window    = 1e-12;
constexpr double physical_cutoff = 1e-10;

double clamp_small(double v) { return (v < 0.0 && v >= -clamp_window) ? 0.0 : v; }

// Analytic eigenvalues before clamping.
SpectrumPair raw_spectrum(double sz, double xx, double yy, double zz) {
    const double root = std::sqrt(4.0 * sz * sz + (xx - yy) * (xx - yy));
    return {{(1.0 + zz + root) / 4.0, (1.0 + zz - root) / 4.0},
            {(1.0 - zz + (xx + yy)) / 4.0, (1.0 - zz - (xx + yy)) / 4.0}};
}

} // namespace

Eigen::Matrix4d XState::matrix() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = 1.0 + 2.0 * sz_ + zz_;
    m(1, 1) = 1.0 - zz_;
    m(2, 2) = 1.0 - zz_;
    m(3, 3) = 1.0 - 2.0 * sz_ + zz_;
    m(0, 3) = m(3, 0) = xx_ - yy_;
    m(1, 2) = m(2, 1) = xx_ + yy_;
    return m / 4.0;
}

XState assemble(double sz, double xx, double yy, double zz) {
    for(double v : {sz, xx, yy, zz})
        if(!std::isfinite(v)) throw PhysicalityError("assemble: non-finite expectation value");
    const auto   s      = raw_spectrum(sz, xx, yy, zz);
    const double lowest = std::min({s.eta[0], s.eta[1], s.xi[0], s.xi[1]});
    if(lowest < -physical_cutoff)
        throw PhysicalityError(fmt::format("two-site state is not positive semidefinite: min eigenvalue {:.3e} "
                                           "(sz={}, xx={}, yy={}, zz={})",
                                           lowest, sz, xx, yy, zz));
    return XState(sz, xx, yy, zz);
}

XState assemble(const CorrelatorSet &corr) { return assemble(corr.sz, corr.xx, corr.yy, corr.zz); }

SpectrumPair spectrum(const XState &state) {
    auto s = raw_spectrum(state.sz(), state.xx(), state.yy(), state.zz());
    for(auto *arr : {&s.eta, &s.xi})
        for(auto &v : *arr) v = clamp_small(v);
    return s;
}

std::array<double, 4> diagonal_spectrum(const XState &state) {
    const double zeta0 = (1.0 + state.zz() + 2.0 * state.sz()) / 4.0;
    const double zeta1 = (1.0 + state.zz() - 2.0 * state.sz()) / 4.0;
    const double eps   = (1.0 - state.zz()) / 4.0;
    return {clamp_small(zeta0), clamp_small(zeta1), clamp_small(eps), clamp_small(eps)};
}

std::array<double, 2> single_spin_reduced(const XState &state) {
    return {(1.0 + state.sz()) / 2.0, (1.0 - state.sz()) / 2.0};
}

} // namespace xyqc
