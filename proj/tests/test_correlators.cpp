#include "support.hpp"

#include "xyqc/correlators.hpp"
#include "xyqc/errors.hpp"
#include "xyqc/oracle.hpp"
#include "xyqc/xstate.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace xyqc;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("dispersion") {
    CHECK(dispersion({0.3, 0.0, 0.0}, pi / 2) == Approx(0.5).epsilon(1e-15));
    CHECK(dispersion({1.0, 1.0, 0.0}, pi) == Approx(0.0).epsilon(1e-15));
    CHECK(dispersion({0.5, 2.0, 0.0}, pi / 2) == Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
}

TEST_CASE("thermal_weight") {
    CHECK(thermal_weight({0.5, 0.5, 0.0}, 0.5) == Approx(2.0).epsilon(1e-15));
    CHECK(thermal_weight({0.5, 0.5, 1.0}, 0.0) == Approx(1.0).epsilon(1e-15));
    CHECK(thermal_weight({0.5, 0.5, 1.0}, 1e-12) == Approx(1.0).epsilon(1e-15));
    // tanh(1) / 0.5
    CHECK(thermal_weight({0.5, 0.5, 0.5}, 0.5) == Approx(1.5231883119115297).epsilon(1e-14));
    CHECK_THROWS_AS(thermal_weight({0.5, 0.5, 0.5}, -0.1), DomainError);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(transverse_magnetization({1.5, 0.5, 0.0}), DomainError);
    CHECK_THROWS_AS(transverse_magnetization({0.5, -0.1, 0.0}), DomainError);
    CHECK_THROWS_AS(transverse_magnetization({0.5, 0.5, -1.0}), DomainError);
    CHECK_THROWS_AS(ChainParams{}.beta(), DomainError);
    CHECK(ChainParams{0.0, 0.0, 0.25}.beta() == 4.0);
    CHECK_THROWS_AS(transverse_magnetization({0.5, 0.5, 0.0}, {8, 6, 1e-10}), DomainError);
    CHECK_THROWS_AS(transverse_magnetization({0.5, 0.5, 0.0}, {128, 6, 1e-3}), DomainError);
}

TEST_CASE("transverse magnetization anchors") {
    CHECK(transverse_magnetization({0.7, 0.0, 0.0}) == Approx(-1.0).epsilon(1e-12));
    CHECK(transverse_magnetization({0.2, 0.0, 0.5}) == Approx(-0.7615941559557649).epsilon(1e-11));
    CHECK(transverse_magnetization({1.0, 1.0, 0.0}) == Approx(-2.0 / pi).epsilon(1e-10));

    // Independent composite Simpson reference.
    const ChainParams p{1.0, 1.0, 0.0};
    const double      simpson = -testing::simpson(
                                 [&](double phi) {
                                     const double w = 0.5 * std::hypot(std::sin(phi), 1 + std::cos(phi));
                                     return phi >= pi ? 0.0 : (1 + std::cos(phi)) / (2 * pi * w);
                                 },
                                 0.0, pi, 20000);
    CHECK(transverse_magnetization(p) == Approx(simpson).epsilon(1e-9));
}

TEST_CASE("tight tolerance with a single doubling raises ConvergenceError") {
    // gamma = 0 at low temperature has a steep step at the Fermi point.
    CHECK_THROWS_AS(transverse_magnetization({0.0, 1.5, 0.001}, {16, 1, 1e-15}), ConvergenceError);
}

TEST_CASE("F coefficients at lambda = 0 are a Kronecker delta") {
    const ChainParams p{0.5, 0.0, 0.0};
    CHECK(f_coefficient(p, 0) == Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(f_coefficient(p, 1)) < 1e-12);
    CHECK(std::abs(f_coefficient(p, -1)) < 1e-12);
    const auto table = build_f_table(p, 2);
    CHECK(table[0] == Approx(1.0).epsilon(1e-12));
    for(int k : {-2, -1, 1, 2}) CHECK(std::abs(table[k]) < 1e-12);
    CHECK_THROWS_AS(table[3], IndexError);
    CHECK_THROWS_AS(f_coefficient(p, max_f_index + 1), DomainError);
}

TEST_CASE("gamma = 0 tables are even in k") {
    std::mt19937_64                        rng(7);
    std::uniform_real_distribution<double> lam(0.0, 2.0), temp(0.0, 1.5);
    for(int trial = 0; trial < 12; ++trial) {
        const ChainParams p{0.0, lam(rng), trial % 3 == 0 ? 0.0 : temp(rng)};
        const auto        table = build_f_table(p, 4);
        for(int k = 1; k <= 4; ++k) CHECK(std::abs(table[k] - table[-k]) < 1e-10);
        CHECK(std::abs(f_coefficient(p, 3) - f_coefficient(p, -3)) < 1e-10);
    }
    const auto table = build_f_table({0.0, 0.5, 1.0}, 3);
    for(int k = 1; k <= 3; ++k) CHECK(table[k] == Approx(table[-k]).epsilon(1e-10));
}

TEST_CASE("F table matches an independent fine Simpson quadrature") {
    const ChainParams p{0.5, 0.5, 0.0};
    const auto        table = build_f_table(p, 5);
    for(int k = -5; k <= 5; ++k) {
        const double ref = testing::simpson(
            [&](double phi) {
                const double w = 0.5 * std::hypot(0.25 * std::sin(phi), 1 + 0.5 * std::cos(phi));
                return (std::cos(k * phi) * (1 + 0.5 * std::cos(phi)) - 0.25 * std::sin(k * phi) * std::sin(phi)) /
                       (2 * pi * w);
            },
            0.0, pi, 40000);
        CHECK(std::abs(table[k] - ref) < 1e-10);
        CHECK(std::abs(f_coefficient(p, k) - table[k]) < 1e-10);
    }
}

TEST_CASE("building the same table twice gives identical values") {
    const ChainParams p{0.3, 1.3, 0.2};
    const auto        a = build_f_table(p, 6);
    const auto        b = build_f_table(p, 6);
    for(int k = -6; k <= 6; ++k) CHECK(a[k] == b[k]);
}

TEST_CASE("Toeplitz determinants agree with cofactor expansion") {
    std::mt19937_64 rng(11);
    for(const ChainParams p : {ChainParams{0.5, 0.5, 0.0}, ChainParams{1.0, 1.4, 0.3}, ChainParams{0.2, 0.9, 0.0}}) {
        const auto table = build_f_table(p, 5);
        for(int n = 1; n <= 4; ++n) {
            const double xx_ref = testing::cofactor_determinant(toeplitz_matrix(table, n, -1));
            const double yy_ref = testing::cofactor_determinant(toeplitz_matrix(table, n, 1));
            CHECK(std::abs(xx_correlator(table, n) - xx_ref) <= 1e-12 * std::max(1.0, std::abs(xx_ref)));
            CHECK(std::abs(yy_correlator(table, n) - yy_ref) <= 1e-12 * std::max(1.0, std::abs(yy_ref)));
        }
    }
}

TEST_CASE("Toeplitz layout follows the first rows F_-1..F_-n and F_1..F_-n+2") {
    std::vector<double> v;
    for(int k = -4; k <= 4; ++k) v.push_back(0.1 * k + 0.01 * k * k);
    const FTable table(4, v);
    const auto   xx = toeplitz_matrix(table, 3, -1);
    CHECK(xx(0, 0) == table[-1]);
    CHECK(xx(0, 2) == table[-3]);
    CHECK(xx(1, 0) == table[0]);
    CHECK(xx(2, 0) == table[1]);
    const auto yy = toeplitz_matrix(table, 3, 1);
    CHECK(yy(0, 0) == table[1]);
    CHECK(yy(0, 1) == table[0]);
    CHECK(yy(0, 2) == table[-1]);
    CHECK(yy(2, 0) == table[3]);

    CHECK(xx_correlator(table, 1) == table[-1]);
    CHECK(yy_correlator(table, 1) == table[1]);
    CHECK_THROWS_AS(xx_correlator(table, 5), IndexError);
    CHECK_THROWS_AS(zz_correlator(table, 0.0, 5), IndexError);
}

TEST_CASE("product-state correlators at lambda = 0") {
    const auto table = build_f_table({0.5, 0.0, 0.0}, 2);
    CHECK(std::abs(xx_correlator(table, 2)) < 1e-12);
    CHECK(std::abs(yy_correlator(table, 1)) < 1e-12);
    CHECK(zz_correlator(table, -1.0, 1) == Approx(1.0).epsilon(1e-12));

    const std::vector<double> flat{0.0, 0.3, 0.0, 0.3, 0.0};
    CHECK(zz_correlator(FTable(2, flat), 0.0, 1) == Approx(-0.09).epsilon(1e-15));

    for(double t : {0.0, 0.3, 1.0})
        for(int n : {1, 2, 3}) {
            const auto c = correlator_set({0.6, 0.0, t}, n);
            CHECK(std::abs(c.xx) < 1e-10);
            CHECK(std::abs(c.yy) < 1e-10);
            CHECK(std::abs(c.zz - c.sz * c.sz) < 1e-10);
        }
    const auto c = correlator_set({0.5, 0.0, 0.0}, 1);
    CHECK(c.sz == Approx(-1.0).epsilon(1e-12));
    CHECK(c.zz == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("XX chain is isotropic in the xy plane") {
    for(double lambda : {0.4, 1.0, 1.7})
        for(double t : {0.0, 0.4}) {
            const auto sets = correlator_sets({0.0, lambda, t}, std::vector<int>{1, 2, 3});
            for(const auto &c : sets) CHECK(std::abs(c.xx - c.yy) < 1e-10);
        }
}

TEST_CASE("correlator sets are physical and bounded") {
    std::mt19937_64                        rng(3);
    std::uniform_real_distribution<double> g(0.0, 1.0), l(0.0, 2.5), t(0.0, 2.0);
    for(int trial = 0; trial < 20; ++trial) {
        const ChainParams p{g(rng), l(rng), trial % 2 ? 0.0 : t(rng)};
        for(const auto &c : correlator_sets(p, std::vector<int>{1, 2, 4})) {
            for(double v : {c.sz, c.xx, c.yy, c.zz}) CHECK(std::abs(v) <= 1.0 + 1e-9);
            const auto state = assemble(c);
            CHECK(state.matrix().trace() == Approx(1.0).epsilon(1e-15));
            const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(state.matrix());
            CHECK(eig.eigenvalues().minCoeff() >= -1e-10);
        }
    }
}

TEST_CASE("separation limits") {
    CHECK_THROWS_AS(correlator_set({0.5, 0.5, 0.0}, 0), DomainError);
    CHECK_THROWS_AS(correlator_set({0.5, 0.5, 0.0}, max_separation + 1), DomainError);
}

TEST_CASE("nearest-neighbour xx agrees with exact diagonalization near zero temperature") {
    const auto   c  = correlator_set({0.5, 0.5, 0.0}, 1);
    const auto   ed = oracle::thermal_two_site({10, 0.5, 0.5, 0.05}, 1);
    CHECK(std::abs(c.xx - ed.corr.xx) < 0.02);
}

TEST_CASE("ground-state correlators are approached by finite chains of growing size") {
    // The ED side runs at kT = 0.05, which leaves a thermal floor of about 1e-5 once N reaches 8.
    const auto c = correlator_set({0.5, 0.5, 0.0}, 1);
    double     prev[4] = {1e9, 1e9, 1e9, 1e9};
    for(int n_sites : {6, 8, 10}) {
        const auto   ed   = oracle::thermal_two_site({n_sites, 0.5, 0.5, 0.05}, 1).corr;
        const double diff[4] = {std::abs(std::abs(ed.sz) - std::abs(c.sz)), std::abs(ed.xx - c.xx),
                                std::abs(ed.yy - c.yy), std::abs(ed.zz - c.zz)};
        for(int q = 0; q < 4; ++q) {
            CHECK(diff[q] <= prev[q] + 1e-5);
            prev[q] = diff[q];
        }
    }
    for(double d : prev) CHECK(d < 1e-4);
}
