#pragma once

#include <cstddef>
#include <vector>

namespace xyqc {

// Gauss-Legendre nodes and weights on [-1, 1]. Open rule: no node sits on an endpoint.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Builds the n-point rule by Newton iteration on P_n. n >= 1.
GaussLegendreRule gauss_legendre(std::size_t n);

} // namespace xyqc
