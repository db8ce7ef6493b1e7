#include "xyqc/correlators.hpp"

#include "xyqc/errors.hpp"
#include "xyqc/quadrature.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace xyqc {

namespace {

constexpr double pi = std::numbers::pi;

// Subintervals of [0, pi]. For lambda > 1 the field term 1 + lambda cos phi changes sign at
// arccos(-1/lambda); the integrand is steepest there (discontinuous for gamma = 0, T = 0), so it
// becomes a breakpoint. Open Gauss rules never evaluate at the breakpoints themselves.
std::vector<double> breakpoints(const ChainParams &params) {
    if(params.lambda > 1.0) return {0.0, std::acos(-1.0 / params.lambda), pi};
    return {0.0, pi};
}

// Integrates `count` functions of phi over [0, pi] simultaneously. `eval(phi, out)` adds the
// integrand values at phi into out[0..count). Nodes start at `start_nodes` per subinterval and
// double until every component moves by less than quad.abs_tol.
template<typename Eval>
std::vector<double> integrate(const ChainParams &params, std::size_t count, int start_nodes,
                              const QuadratureConfig &quad, const char *what, Eval &&eval) {
    const auto edges = breakpoints(params);

    auto rule_sum = [&](std::size_t nodes) {
        const auto          rule = gauss_legendre(nodes);
        std::vector<double> total(count, 0.0);
        std::vector<double> values(count);
        for(std::size_t s = 0; s + 1 < edges.size(); ++s) {
            const double half = 0.5 * (edges[s + 1] - edges[s]);
            const double mid  = 0.5 * (edges[s + 1] + edges[s]);
            for(std::size_t q = 0; q < nodes; ++q) {
                std::fill(values.begin(), values.end(), 0.0);
                eval(mid + half * rule.nodes[q], std::span<double>(values));
                const double w = half * rule.weights[q];
                for(std::size_t c = 0; c < count; ++c) total[c] += w * values[c];
            }
        }
        return total;
    };

    auto nodes    = static_cast<std::size_t>(start_nodes);
    auto previous = rule_sum(nodes);
    double change = 0.0;
    for(int d = 0; d < quad.max_doublings; ++d) {
        nodes *= 2;
        auto current = rule_sum(nodes);
        change       = 0.0;
        for(std::size_t c = 0; c < count; ++c) change = std::max(change, std::abs(current[c] - previous[c]));
        if(change < quad.abs_tol) return current;
        previous = std::move(current);
    }
    throw ConvergenceError(fmt::format("{}: quadrature change {:.3e} exceeds tolerance {:.3e} at {} nodes "
                                       "(gamma={}, lambda={}, kT={})",
                                       what, change, quad.abs_tol, nodes, params.gamma, params.lambda,
                                       params.temperature));
}

// tanh(beta omega) / (2 pi omega)
double kernel(const ChainParams &params, double phi) {
    return thermal_weight(params, dispersion(params, phi)) / (2.0 * pi);
}

} // namespace

double ChainParams::beta() const {
    if(temperature <= 0.0) throw DomainError("beta is undefined at zero temperature");
    return 1.0 / temperature;
}

void validate(const ChainParams &params) {
    std::vector<std::string> problems;
    if(!(params.gamma >= 0.0 && params.gamma <= 1.0))
        problems.push_back(fmt::format("gamma must lie in [0, 1], got {}", params.gamma));
    if(!(params.lambda >= 0.0) || !std::isfinite(params.lambda))
        problems.push_back(fmt::format("lambda must be finite and >= 0, got {}", params.lambda));
    if(!(params.temperature >= 0.0) || !std::isfinite(params.temperature))
        problems.push_back(fmt::format("temperature must be finite and >= 0, got {}", params.temperature));
    if(!problems.empty()) throw DomainError(fmt::format("invalid chain parameters: {}", fmt::join(problems, "; ")));
}

void validate(const QuadratureConfig &quad) {
    if(quad.initial_nodes < 16) throw DomainError(fmt::format("initial_nodes must be >= 16, got {}", quad.initial_nodes));
    if(quad.max_doublings < 1) throw DomainError(fmt::format("max_doublings must be >= 1, got {}", quad.max_doublings));
    if(!(quad.abs_tol > 0.0 && quad.abs_tol <= 1e-6))
        throw DomainError(fmt::format("abs_tol must lie in (0, 1e-6], got {}", quad.abs_tol));
}

FTable::FTable(int n_max, std::vector<double> values) : n_max_(n_max), values_(std::move(values)) {
    if(n_max_ < 0 || values_.size() != static_cast<std::size_t>(2 * n_max_ + 1))
        throw DomainError(fmt::format("FTable: expected {} values for n_max={}, got {}", 2 * n_max_ + 1, n_max_,
                                      values_.size()));
    for(double v : values_)
        if(!std::isfinite(v)) throw DomainError("FTable: non-finite coefficient");
}

double FTable::operator[](int k) const {
    if(std::abs(k) > n_max_) throw IndexError(fmt::format("F_{} requested from a table with n_max={}", k, n_max_));
    return values_[static_cast<std::size_t>(k + n_max_)];
}

double dispersion(const ChainParams &params, double phi) {
    const double a = params.gamma * params.lambda * std::sin(phi);
    const double b = 1.0 + params.lambda * std::cos(phi);
    return 0.5 * std::hypot(a, b);
}

double thermal_weight(const ChainParams &params, double omega) {
    if(omega < 0.0) throw DomainError(fmt::format("thermal_weight: omega must be >= 0, got {}", omega));
    if(params.zero_temperature()) return 1.0 / omega;
    const double beta = params.beta();
    const double x    = beta * omega;
    // tanh(x)/x = 1 - x^2/3 + O(x^4)
    if(x < 1e-6) return beta * (1.0 - x * x / 3.0);
    return std::tanh(x) / omega;
}

double transverse_magnetization(const ChainParams &params, const QuadratureConfig &quad) {
    validate(params);
    validate(quad);
    const auto result = integrate(params, 1, quad.initial_nodes, quad, "transverse_magnetization",
                                  [&](double phi, std::span<double> out) {
                                      out[0] = (1.0 + params.lambda * std::cos(phi)) * kernel(params, phi);
                                  });
    return -result[0];
}

double f_coefficient(const ChainParams &params, int k, const QuadratureConfig &quad) {
    validate(params);
    validate(quad);
    if(std::abs(k) > max_f_index) throw DomainError(fmt::format("|k| must be <= {}, got {}", max_f_index, k));
    const int  start  = std::max(quad.initial_nodes, 32 * std::abs(k));
    const auto result = integrate(params, 1, start, quad, "f_coefficient", [&](double phi, std::span<double> out) {
        const double kd = static_cast<double>(k);
        out[0]          = kernel(params, phi) * (std::cos(kd * phi) * (1.0 + params.lambda * std::cos(phi)) -
                                        params.gamma * params.lambda * std::sin(kd * phi) * std::sin(phi));
    });
    return result[0];
}

FTable build_f_table(const ChainParams &params, int n_max, const QuadratureConfig &quad) {
    validate(params);
    validate(quad);
    if(n_max < 1 || n_max > max_f_index)
        throw DomainError(fmt::format("n_max must lie in [1, {}], got {}", max_f_index, n_max));
    const auto count = static_cast<std::size_t>(2 * n_max + 1);
    const int  start = std::max(quad.initial_nodes, 32 * n_max);
    auto values = integrate(params, count, start, quad, "build_f_table", [&](double phi, std::span<double> out) {
        const double w     = kernel(params, phi);
        const double field = w * (1.0 + params.lambda * std::cos(phi));
        const double aniso = w * params.gamma * params.lambda * std::sin(phi);
        for(int k = -n_max; k <= n_max; ++k) {
            const double kd = static_cast<double>(k);
            out[static_cast<std::size_t>(k + n_max)] = std::cos(kd * phi) * field - std::sin(kd * phi) * aniso;
        }
    });
    return FTable(n_max, std::move(values));
}

Eigen::MatrixXd toeplitz_matrix(const FTable &table, int n, int offset) {
    if(n < 1) throw DomainError(fmt::format("Toeplitz order must be >= 1, got {}", n));
    Eigen::MatrixXd m(n, n);
    for(int i = 0; i < n; ++i)
        for(int j = 0; j < n; ++j) m(i, j) = table[i - j + offset];
    return m;
}

double xx_correlator(const FTable &table, int n) {
    return toeplitz_matrix(table, n, -1).partialPivLu().determinant();
}

double yy_correlator(const FTable &table, int n) {
    return toeplitz_matrix(table, n, 1).partialPivLu().determinant();
}

double zz_correlator(const FTable &table, double sz, int n) {
    return sz * sz - table[n] * table[-n];
}

CorrelatorSet correlator_set(const ChainParams &params, int n, const QuadratureConfig &quad) {
    const int separations[] = {n};
    return correlator_sets(params, separations, quad).front();
}

std::vector<CorrelatorSet> correlator_sets(const ChainParams &params, std::span<const int> separations,
                                           const QuadratureConfig &quad) {
    if(separations.empty()) throw DomainError("correlator_sets: no separations requested");
    for(int n : separations)
        if(n < 1 || n > max_separation)
            throw DomainError(fmt::format("separation n must lie in [1, {}], got {}", max_separation, n));
    const int    n_max = *std::max_element(separations.begin(), separations.end());
    const double sz    = transverse_magnetization(params, quad);
    const auto   table = build_f_table(params, n_max, quad);

    std::vector<CorrelatorSet> sets;
    sets.reserve(separations.size());
    for(int n : separations) sets.push_back({n, sz, xx_correlator(table, n), yy_correlator(table, n), zz_correlator(table, sz, n)});
    return sets;
}

} // namespace xyqc
