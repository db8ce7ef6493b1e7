#include "xyqc/measures.hpp"

#include "xyqc/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>
#include <vector>

namespace xyqc {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

struct Candidate {
    double value;
    double theta;
    double phi;
};

double clamp_axis(double v) { return std::clamp(v, 0.0, half_pi); }

// Nelder-Mead on the box [0, pi/2]^2; trial points are projected back into the box.
template<typename Objective>
Candidate refine(Objective &&f, double theta0, double phi0, double step, const OptimizerConfig &cfg) {
    struct Vertex {
        double x, y, v;
    };
    auto make = [&](double x, double y) {
        x = clamp_axis(x);
        y = clamp_axis(y);
        return Vertex{x, y, f(x, y)};
    };
    // Step inward when the seed sits on the upper boundary.
    const double sx = theta0 + step > half_pi ? -step : step;
    const double sy = phi0 + step > half_pi ? -step : step;
    std::array<Vertex, 3> s{make(theta0, phi0), make(theta0 + sx, phi0), make(theta0, phi0 + sy)};

    for(int iter = 0; iter < cfg.max_refine_iters; ++iter) {
        std::sort(s.begin(), s.end(), [](const Vertex &a, const Vertex &b) { return a.v < b.v; });
        const double spread = s[2].v - s[0].v;
        const double size   = std::max({std::abs(s[1].x - s[0].x), std::abs(s[2].x - s[0].x),
                                        std::abs(s[1].y - s[0].y), std::abs(s[2].y - s[0].y)});
        if(spread <= 1e-3 * cfg.refine_tol && size <= 1e-9) break;

        const double cx = 0.5 * (s[0].x + s[1].x);
        const double cy = 0.5 * (s[0].y + s[1].y);
        const Vertex r  = make(2.0 * cx - s[2].x, 2.0 * cy - s[2].y);
        if(r.v < s[0].v) {
            const Vertex e = make(3.0 * cx - 2.0 * s[2].x, 3.0 * cy - 2.0 * s[2].y);
            s[2]           = e.v < r.v ? e : r;
        } else if(r.v < s[1].v) {
            s[2] = r;
        } else {
            const bool   outside = r.v < s[2].v;
            const Vertex c       = outside ? make(cx + 0.5 * (r.x - cx), cy + 0.5 * (r.y - cy))
                                           : make(cx + 0.5 * (s[2].x - cx), cy + 0.5 * (s[2].y - cy));
            if(c.v < std::min(r.v, s[2].v)) {
                s[2] = c;
            } else {
                s[1] = make(0.5 * (s[0].x + s[1].x), 0.5 * (s[0].y + s[1].y));
                s[2] = make(0.5 * (s[0].x + s[2].x), 0.5 * (s[0].y + s[2].y));
            }
        }
    }
    const auto best = *std::min_element(s.begin(), s.end(), [](const Vertex &a, const Vertex &b) { return a.v < b.v; });
    return {best.v, best.x, best.y};
}

} // namespace

void validate(const OptimizerConfig &cfg) {
    if(cfg.grid_points < 8) throw DomainError(fmt::format("grid_points must be >= 8, got {}", cfg.grid_points));
    if(!(cfg.refine_tol > 0.0)) throw DomainError(fmt::format("refine_tol must be > 0, got {}", cfg.refine_tol));
    if(cfg.max_refine_iters < 1)
        throw DomainError(fmt::format("max_refine_iters must be >= 1, got {}", cfg.max_refine_iters));
}

double entropy(std::span<const double> p) {
    double sum = 0.0;
    double s   = 0.0;
    for(double v : p) {
        if(v < -1e-12 || !std::isfinite(v)) throw DomainError(fmt::format("entropy: invalid probability {}", v));
        sum += v;
        if(v > 0.0) s -= v * std::log2(v);
    }
    if(std::abs(sum - 1.0) > 1e-9) throw DomainError(fmt::format("entropy: probabilities sum to {}", sum));
    return s;
}

double entropy(const XState &state) {
    const auto sp = spectrum(state);
    const double p[] = {sp.eta[0], sp.eta[1], sp.xi[0], sp.xi[1]};
    return entropy(p);
}

std::array<double, 4> post_measurement_spectrum(const XState &state, const MeasurementAngles &angles) {
    const double ct = std::cos(angles.theta);
    const double st = std::sin(angles.theta);
    const double cp = std::cos(angles.phi);
    const double sp = std::sin(angles.phi);
    const double transverse =
        (state.xx() * state.xx() * cp * cp + state.yy() * state.yy() * sp * sp) * st * st;

    std::array<double, 4> out{};
    for(int i = 0; i < 2; ++i) {
        const double si   = i == 0 ? 1.0 : -1.0;
        const double axial = state.sz() + si * state.zz() * ct;
        const double root  = std::sqrt(transverse + axial * axial);
        for(int j = 0; j < 2; ++j) {
            const double sj = j == 0 ? 1.0 : -1.0;
            double       v  = (1.0 + si * state.sz() * ct + sj * root) / 4.0;
            if(v < 0.0 && v >= -1e-12) v = 0.0;
            out[static_cast<std::size_t>(2 * i + j)] = v;
        }
    }
    return out;
}

double entropy_increase(const XState &state, const MeasurementAngles &angles) {
    return entropy(post_measurement_spectrum(state, angles)) - entropy(state);
}

DeficitResult one_way_deficit(const XState &state, const OptimizerConfig &cfg) {
    validate(cfg);
    const double s_rho = entropy(state);
    auto objective = [&](double theta, double phi) {
        return entropy(post_measurement_spectrum(state, {theta, phi})) - s_rho;
    };

    const int    g    = cfg.grid_points;
    const double step = half_pi / (g - 1);
    std::vector<double> grid(static_cast<std::size_t>(g * g));
    auto at = [&](int i, int j) -> double & { return grid[static_cast<std::size_t>(i * g + j)]; };

    std::vector<Candidate> candidates;
    candidates.reserve(grid.size() + 8);
    for(int i = 0; i < g; ++i)
        for(int j = 0; j < g; ++j) {
            at(i, j) = objective(i * step, j * step);
            candidates.push_back({at(i, j), i * step, j * step});
        }

    // Seeds: grid points no larger than their 4-neighbours, best first.
    std::vector<Candidate> seeds;
    for(int i = 0; i < g; ++i)
        for(int j = 0; j < g; ++j) {
            const double v     = at(i, j);
            bool         local = true;
            if(i > 0 && at(i - 1, j) < v) local = false;
            if(i + 1 < g && at(i + 1, j) < v) local = false;
            if(j > 0 && at(i, j - 1) < v) local = false;
            if(j + 1 < g && at(i, j + 1) < v) local = false;
            if(local) seeds.push_back({v, i * step, j * step});
        }
    std::stable_sort(seeds.begin(), seeds.end(), [](const Candidate &a, const Candidate &b) { return a.value < b.value; });
    if(seeds.size() > 4) seeds.resize(4);
    for(const auto &seed : seeds) candidates.push_back(refine(objective, seed.theta, seed.phi, step, cfg));

    double best = candidates.front().value;
    for(const auto &c : candidates) best = std::min(best, c.value);

    // Lexicographically smallest angles among near-ties.
    const Candidate *chosen = nullptr;
    for(const auto &c : candidates) {
        if(c.value > best + cfg.refine_tol) continue;
        if(!chosen || std::tie(c.theta, c.phi) < std::tie(chosen->theta, chosen->phi)) chosen = &c;
    }

    DeficitResult result;
    result.value  = (best < 0.0 && best >= -1e-10) ? 0.0 : best;
    result.argmin = {chosen->theta, chosen->theta == 0.0 ? 0.0 : chosen->phi};
    return result;
}

double l1_coherence(const XState &state) {
    return 0.5 * (std::abs(state.xx() - state.yy()) + std::abs(state.xx() + state.yy()));
}

double relative_entropy_coherence(const XState &state) {
    const double c = entropy(diagonal_spectrum(state)) - entropy(state);
    return (c < 0.0 && c >= -1e-12) ? 0.0 : c;
}

MeasureResult all_measures(const XState &state, const OptimizerConfig &cfg) {
    // Quadrature leaves roughly 1e-15 of structure in states that are exactly incoherent; report it as 0.
    auto floor = [](double v) { return std::abs(v) < reported_zero ? 0.0 : v; };
    const auto deficit = one_way_deficit(state, cfg);
    MeasureResult r;
    r.deficit      = floor(deficit.value);
    r.argmin       = deficit.argmin;
    r.c_l1         = floor(l1_coherence(state));
    r.entropy_rho  = entropy(state);
    r.entropy_diag = entropy(diagonal_spectrum(state));
    r.c_rel        = floor(relative_entropy_coherence(state));
    return r;
}

} // namespace xyqc
