#include "support.hpp"

#include "xyqc/errors.hpp"
#include "xyqc/oracle.hpp"
#include "xyqc/xstate.hpp"

#include <doctest.h>

#include <random>

using namespace xyqc;
using doctest::Approx;

TEST_CASE("assemble: maximally mixed and product states") {
    const auto mixed = assemble(0, 0, 0, 0);
    CHECK(mixed.matrix().isApprox(Eigen::Matrix4d::Identity() / 4.0, 1e-15));

    const auto product = assemble(-1, 0, 0, 1);
    Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
    expected(3, 3)           = 1.0;
    CHECK(product.matrix().isApprox(expected, 1e-15));
}

TEST_CASE("assemble: classically correlated x state") {
    const auto      s = assemble(0, 1, 0, 0);
    const auto      m = s.matrix();
    for(int i = 0; i < 4; ++i) CHECK(m(i, i) == Approx(0.25));
    CHECK(m(0, 3) == Approx(0.25));
    CHECK(m(1, 2) == Approx(0.25));
    CHECK(m(0, 1) == 0.0);
    const auto ev = oracle::dense_eigenvalues(s);
    CHECK(std::abs(ev[0]) < 1e-15);
    CHECK(std::abs(ev[1]) < 1e-15);
    CHECK(ev[2] == Approx(0.5));
    CHECK(ev[3] == Approx(0.5));
}

TEST_CASE("assemble rejects unphysical correlators") {
    CHECK_THROWS_AS(assemble(0, 1, -1, 0), PhysicalityError);   // xi_1 = (1 - 0 - 0)/4, eta_1 < 0
    CHECK_THROWS_AS(assemble(0.9, 0, 0, 0), PhysicalityError);  // zeta block: 1 - 1.8 < 0
    CHECK_THROWS_AS(assemble(0, 0, 0, std::nan("")), PhysicalityError);
    CHECK_NOTHROW(assemble(0, 0.5, 0.5 + 1e-11, 0));             // xi_1 = -2.5e-12: inside tolerance
}

TEST_CASE("spectrum examples") {
    const auto m = spectrum(assemble(0, 0, 0, 0));
    CHECK(m.eta[0] == Approx(0.25));
    CHECK(m.eta[1] == Approx(0.25));
    CHECK(m.xi[0] == Approx(0.25));
    CHECK(m.xi[1] == Approx(0.25));

    const auto c = spectrum(assemble(0, 1, 0, 0));
    CHECK(c.eta[0] == Approx(0.5));
    CHECK(c.eta[1] == 0.0);
    CHECK(c.xi[0] == Approx(0.5));
    CHECK(c.xi[1] == 0.0);
}

TEST_CASE("analytic spectrum equals dense eigensolve on random states") {
    std::mt19937_64 rng(2024);
    for(int trial = 0; trial < 1000; ++trial) {
        const auto s  = testing::random_xstate(rng);
        const auto sp = spectrum(s);
        const auto analytic = testing::sorted(std::array<double, 4>{sp.eta[0], sp.eta[1], sp.xi[0], sp.xi[1]});
        const auto dense    = oracle::dense_eigenvalues(s);
        for(int i = 0; i < 4; ++i) CHECK(std::abs(analytic[i] - dense[i]) < 1e-12);
        CHECK(std::abs(sp.eta[0] + sp.eta[1] + sp.xi[0] + sp.xi[1] - 1.0) < 1e-12);
    }
}

TEST_CASE("diagonal spectrum is the main diagonal") {
    const auto d = diagonal_spectrum(assemble(0, 0, 0, 0));
    for(double v : d) CHECK(v == Approx(0.25));
    const auto p = diagonal_spectrum(assemble(-1, 0, 0, 1));
    CHECK(p[0] == 0.0);
    CHECK(p[1] == 1.0);
    CHECK(p[2] == 0.0);
    CHECK(p[3] == 0.0);

    std::mt19937_64 rng(5);
    for(int trial = 0; trial < 200; ++trial) {
        const auto s = testing::random_xstate(rng);
        const auto d2 = diagonal_spectrum(s);
        const auto m  = s.matrix();
        CHECK(d2[0] == Approx(m(0, 0)).epsilon(1e-15));
        CHECK(d2[1] == Approx(m(3, 3)).epsilon(1e-15));
        CHECK(d2[2] == Approx(m(1, 1)).epsilon(1e-15));
        CHECK(d2[3] == Approx(m(2, 2)).epsilon(1e-15));
        CHECK(d2[0] + d2[1] + d2[2] + d2[3] == Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("single-spin reduced state matches explicit partial traces") {
    auto r = single_spin_reduced(assemble(0, 0, 0, 0));
    CHECK(r[0] == 0.5);
    CHECK(r[1] == 0.5);
    r = single_spin_reduced(assemble(-1, 0, 0, 1));
    CHECK(r[0] == 0.0);
    CHECK(r[1] == 1.0);

    std::mt19937_64 rng(9);
    for(int trial = 0; trial < 200; ++trial) {
        const auto      s = testing::random_xstate(rng);
        const auto      m = s.matrix();
        Eigen::Matrix2d first = Eigen::Matrix2d::Zero(), second = Eigen::Matrix2d::Zero();
        for(int a = 0; a < 2; ++a)
            for(int b = 0; b < 2; ++b)
                for(int k = 0; k < 2; ++k) {
                    first(a, b) += m(2 * a + k, 2 * b + k);  // trace out site n
                    second(a, b) += m(2 * k + a, 2 * k + b); // trace out site 0
                }
        const auto red = single_spin_reduced(s);
        for(const auto &p : {first, second}) {
            CHECK(std::abs(p(0, 0) - red[0]) < 1e-14);
            CHECK(std::abs(p(1, 1) - red[1]) < 1e-14);
            CHECK(std::abs(p(0, 1)) < 1e-14);
        }
    }
}

TEST_CASE("the two-site matrix is symmetric under exchanging the sites") {
    Eigen::Matrix4d swap = Eigen::Matrix4d::Zero();
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
    std::mt19937_64 rng(13);
    for(int trial = 0; trial < 100; ++trial) {
        const auto m = testing::random_xstate(rng).matrix();
        CHECK((swap * m * swap - m).cwiseAbs().maxCoeff() < 1e-16);
        CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
}
