#pragma once

// Test-only helpers: random physical X states and brute-force references that do not go through
// the library's fast paths.

#include "xyqc/xstate.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>

namespace xyqc::testing {

// Rejection-samples (sz, xx, yy, zz) in [-1, 1]^4 until the X state is positive semidefinite.
inline XState random_xstate(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for(;;) {
        const double sz = u(rng), xx = u(rng), yy = u(rng), zz = u(rng);
        const double root = std::sqrt(4 * sz * sz + (xx - yy) * (xx - yy));
        if(1 + zz - root >= 0.0 && 1 - zz - std::abs(xx + yy) >= 0.0) return assemble(sz, xx, yy, zz);
    }
}

// Composite Simpson rule on [a, b] with `intervals` (even) panels.
inline double simpson(const std::function<double(double)> &f, double a, double b, int intervals) {
    const double h   = (b - a) / intervals;
    double       sum = f(a) + f(b);
    for(int i = 1; i < intervals; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// Laplace expansion along the first row.
inline double cofactor_determinant(const Eigen::MatrixXd &m) {
    const auto n = m.rows();
    if(n == 1) return m(0, 0);
    double det = 0.0;
    for(Eigen::Index c = 0; c < n; ++c) {
        Eigen::MatrixXd minor(n - 1, n - 1);
        for(Eigen::Index i = 1; i < n; ++i)
            for(Eigen::Index j = 0, k = 0; j < n; ++j)
                if(j != c) minor(i - 1, k++) = m(i, j);
        det += (c % 2 ? -1.0 : 1.0) * m(0, c) * cofactor_determinant(minor);
    }
    return det;
}

inline double shannon_bits(const Eigen::VectorXd &p) {
    double s = 0.0;
    for(Eigen::Index i = 0; i < p.size(); ++i)
        if(p[i] > 1e-300) s -= p[i] * std::log2(p[i]);
    return s;
}

template<std::size_t N>
std::array<double, N> sorted(std::array<double, N> a) {
    std::sort(a.begin(), a.end());
    return a;
}

} // namespace xyqc::testing
