#include "xyqc/quadrature.hpp"

#include "xyqc/errors.hpp"

#include <cmath>
#include <numbers>

namespace xyqc {

GaussLegendreRule gauss_legendre(std::size_t n) {
    if(n == 0) throw DomainError("gauss_legendre: need at least one node");
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const auto nd = static_cast<double>(n);
    // Roots are symmetric; solve for the positive half and mirror.
    for(std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
        double dp = 0.0;
        for(int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for(std::size_t k = 2; k <= n; ++k) {
                const auto kd = static_cast<double>(k);
                const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
                p0 = p1;
                p1 = p2;
            }
            dp = nd * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if(std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged root for the weight.
        double p0 = 1.0, p1 = x;
        for(std::size_t k = 2; k <= n; ++k) {
            const auto kd = static_cast<double>(k);
            const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
            p0 = p1;
            p1 = p2;
        }
        dp = nd * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i]         = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i]         = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

} // namespace xyqc
