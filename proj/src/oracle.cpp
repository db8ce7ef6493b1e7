#include "xyqc/oracle.hpp"

#include "xyqc/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace xyqc::oracle {

namespace {

void validate(const FiniteChainSpec &spec) {
    if(spec.sites < 2 || spec.sites > max_sites)
        throw SizeError(fmt::format("finite chain needs 2 <= N <= {}, got {}", max_sites, spec.sites));
    xyqc::validate(ChainParams{spec.gamma, spec.lambda, spec.temperature});
    if(!(spec.temperature > 0.0)) throw DomainError("finite-chain oracle needs kT > 0");
}

double spin_sign(std::uint32_t state, int site) { return ((state >> site) & 1U) ? -1.0 : 1.0; }

} // namespace

Eigen::MatrixXd build_hamiltonian(const FiniteChainSpec &spec) {
    validate(spec);
    const int             n   = spec.sites;
    const std::uint32_t   dim = 1U << n;
    Eigen::MatrixXd       h   = Eigen::MatrixXd::Zero(dim, dim);
    const double          cx  = 0.5 * spec.lambda * (1.0 + spec.gamma);
    const double          cy  = 0.5 * spec.lambda * (1.0 - spec.gamma);
    for(std::uint32_t s = 0; s < dim; ++s) {
        for(int j = 0; j < n; ++j) {
            const int k = (j + 1) % n;
            h(s, s) -= spin_sign(s, j);
            // Y_j Y_k |s> = -sign_j sign_k |s with bits j,k flipped>
            const std::uint32_t t = s ^ (1U << j) ^ (1U << k);
            h(t, s) -= cx - cy * spin_sign(s, j) * spin_sign(s, k);
        }
    }
    return h;
}

FiniteChainCorrelators thermal_two_site(const FiniteChainSpec &spec, int n) {
    validate(spec);
    if(n < 1 || 2 * n > spec.sites)
        throw DomainError(fmt::format("separation must satisfy 1 <= n <= N/2, got n={} for N={}", n, spec.sites));

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(build_hamiltonian(spec));
    const auto  &energies = eig.eigenvalues();
    const auto  &vectors  = eig.eigenvectors();
    const double beta     = 1.0 / (2.0 * spec.temperature);
    const auto   dim      = static_cast<std::uint32_t>(energies.size());
    const int    sites    = spec.sites;

    Eigen::VectorXd weights = (-beta * (energies.array() - energies.minCoeff())).exp();
    weights /= weights.sum();

    // Per base site: sz, xx, yy, zz.
    std::vector<std::array<double, 4>> per_site(static_cast<std::size_t>(sites), {0.0, 0.0, 0.0, 0.0});
    for(std::uint32_t e = 0; e < dim; ++e) {
        const double w = weights[e];
        if(w < 1e-18) continue;
        const auto v = vectors.col(e);
        for(int i = 0; i < sites; ++i) {
            const int           j    = (i + n) % sites;
            const std::uint32_t mask = (1U << i) | (1U << j);
            double              sz = 0.0, xx = 0.0, yy = 0.0, zz = 0.0;
            for(std::uint32_t s = 0; s < dim; ++s) {
                const double p = v[s] * v[s];
                sz += p * spin_sign(s, i);
                zz += p * spin_sign(s, i) * spin_sign(s, j);
                const double cross = v[s ^ mask] * v[s];
                xx += cross;
                yy -= cross * spin_sign(s, i) * spin_sign(s, j);
            }
            auto &acc = per_site[static_cast<std::size_t>(i)];
            acc[0] += w * sz;
            acc[1] += w * xx;
            acc[2] += w * yy;
            acc[3] += w * zz;
        }
    }

    FiniteChainCorrelators out;
    std::array<double, 4> mean{0.0, 0.0, 0.0, 0.0};
    for(int c = 0; c < 4; ++c) {
        double lo = per_site[0][c], hi = per_site[0][c];
        for(const auto &acc : per_site) {
            lo = std::min(lo, acc[c]);
            hi = std::max(hi, acc[c]);
            mean[c] += acc[c] / sites;
        }
        out.translation_spread = std::max(out.translation_spread, hi - lo);
    }
    out.corr = {n, mean[0], per_site[0][1], per_site[0][2], per_site[0][3]};
    return out;
}

std::array<double, 4> dense_eigenvalues(const XState &state) {
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(state.matrix(), Eigen::EigenvaluesOnly);
    const auto &ev = eig.eigenvalues();
    return {ev[0], ev[1], ev[2], ev[3]};
}

std::array<double, 4> dense_measured_spectrum(const XState &state, const MeasurementAngles &angles) {
    using cd = std::complex<double>;
    const double c = std::cos(angles.theta / 2.0);
    const double s = std::sin(angles.theta / 2.0);
    Eigen::Matrix2cd v;
    v << cd(c, 0.0), std::polar(s, angles.phi), -std::polar(s, -angles.phi), cd(c, 0.0);

    const Eigen::Matrix4cd rho      = state.matrix().cast<cd>();
    Eigen::Matrix4cd       measured = Eigen::Matrix4cd::Zero();
    for(int i = 0; i < 2; ++i) {
        const Eigen::Vector2cd   col  = v.col(i);
        const Eigen::Matrix2cd   proj = col * col.adjoint();
        Eigen::Matrix4cd         lift = Eigen::Matrix4cd::Zero();
        lift.topLeftCorner<2, 2>()     = proj;
        lift.bottomRightCorner<2, 2>() = proj;
        measured += lift * rho * lift;
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(measured, Eigen::EigenvaluesOnly);
    const auto &ev = eig.eigenvalues();
    return {ev[0], ev[1], ev[2], ev[3]};
}

double grid_min_deficit(const XState &state, int resolution) {
    if(resolution < 64) throw DomainError(fmt::format("grid resolution must be >= 64, got {}", resolution));
    auto clamp = [](std::array<double, 4> p) {
        for(auto &x : p) x = std::max(x, 0.0);
        return p;
    };
    const double s_rho = entropy(clamp(dense_eigenvalues(state)));
    const double step  = (std::numbers::pi / 2.0) / (resolution - 1);
    double       best  = std::numeric_limits<double>::infinity();
    for(int i = 0; i < resolution; ++i)
        for(int j = 0; j < resolution; ++j)
            best = std::min(best, entropy(post_measurement_spectrum(state, {i * step, j * step})) - s_rho);
    return best;
}

} // namespace xyqc::oracle
