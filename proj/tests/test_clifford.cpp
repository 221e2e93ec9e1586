#include <doctest.h>

#include <random>

#include "spinorlab/clifford.hpp"

using namespace spinorlab;

namespace {

Spinor random_spinor(int dim, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Spinor s(dim);
    for (int i = 0; i < dim; ++i) s[i] = Complex{d(gen), d(gen)};
    return s;
}

} // namespace

TEST_CASE("build_gamma rejects nonpositive dimensions") {
    CHECK_THROWS_AS(build_gamma(0), std::invalid_argument);
    CHECK_THROWS_AS(build_gamma(-2), std::invalid_argument);
}

TEST_CASE("one-dimensional representation is +-i") {
    const auto rep = build_gamma(1);
    CHECK(rep->dim_spinor() == 1);
    const Complex g = rep->gamma(0)(0, 0);
    CHECK(std::abs(g.real()) == 0.0);
    CHECK(std::abs(std::abs(g.imag()) - 1.0) == 0.0);
    CHECK((rep->gamma(0) * rep->gamma(0))(0, 0) == Complex{-1.0, 0.0});
}

TEST_CASE("spinor dimension is 2^floor(m/2)") {
    CHECK(build_gamma(2)->dim_spinor() == 2);
    CHECK(build_gamma(3)->dim_spinor() == 2);
    CHECK(build_gamma(4)->dim_spinor() == 4);
    CHECK(build_gamma(5)->dim_spinor() == 4);
    CHECK(build_gamma(8)->dim_spinor() == 16);
}

TEST_CASE("anticommutator relations hold exactly (brute force over all pairs)") {
    for (int m : {1, 2, 3, 4, 5, 6, 7, 8}) {
        const auto rep = build_gamma(m);
        const int dim = rep->dim_spinor();
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                Eigen::MatrixXcd acom = rep->gamma(j) * rep->gamma(k) + rep->gamma(k) * rep->gamma(j);
                if (j == k) acom += 2.0 * Eigen::MatrixXcd::Identity(dim, dim);
                CHECK(acom.cwiseAbs().maxCoeff() == 0.0);
            }
    }
}

TEST_CASE("every gamma is exactly skew-Hermitian") {
    for (int m = 1; m <= 8; ++m) {
        const auto rep = build_gamma(m);
        for (int j = 0; j < m; ++j)
            CHECK((rep->gamma(j).adjoint() + rep->gamma(j)).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("cyclic triple products coincide for distinct indices") {
    for (int m : {3, 4, 5}) {
        const auto rep = build_gamma(m);
        for (int l = 0; l < m; ++l)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k) {
                    if (l == j || j == k || l == k) continue;
                    const Eigen::MatrixXcd p = rep->gamma(l) * rep->gamma(j) * rep->gamma(k);
                    CHECK((p - rep->gamma(k) * rep->gamma(l) * rep->gamma(j)).cwiseAbs().maxCoeff() == 0.0);
                    CHECK((p - rep->gamma(j) * rep->gamma(k) * rep->gamma(l)).cwiseAbs().maxCoeff() == 0.0);
                }
    }
}

TEST_CASE("two-dimensional matrices act as frozen matrix-vector products") {
    // gamma_0 = i sigma_1, gamma_1 = i sigma_2 in this construction.
    const auto rep = build_gamma(2);
    Spinor e0(2), e1(2);
    e0 << 1, 0;
    e1 << 0, 1;
    Eigen::VectorXd v0(2), v1(2);
    v0 << 1, 0;
    v1 << 0, 1;

    Spinor g0e0 = clifford_mul(*rep, v0, e0);
    CHECK(g0e0[0] == Complex{0, 0});
    CHECK(g0e0[1] == Complex{0, 1});
    Spinor g1e0 = clifford_mul(*rep, v1, e0);
    CHECK(g1e0[0] == Complex{0, 0});
    CHECK(g1e0[1] == Complex{-1, 0});
    Spinor g0e1 = clifford_mul(*rep, v0, e1);
    CHECK(g0e1[0] == Complex{0, 1});
    CHECK(g0e1[1] == Complex{0, 0});
    Spinor g1e1 = clifford_mul(*rep, v1, e1);
    CHECK(g1e1[0] == Complex{1, 0});
    CHECK(g1e1[1] == Complex{0, 0});
}

TEST_CASE("clifford_mul: unit vectors square to -Id and act skew-Hermitianly") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int m : {2, 3, 5}) {
        const auto rep = build_gamma(m);
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::VectorXd v(m);
            for (int i = 0; i < m; ++i) v[i] = d(gen);
            v /= v.norm();
            const Spinor psi = random_spinor(rep->dim_spinor(), gen);
            const Spinor phi = random_spinor(rep->dim_spinor(), gen);
            CHECK((clifford_mul(*rep, v, clifford_mul(*rep, v, psi)) + psi).norm() < 1e-14);
            CHECK(std::abs(inner(clifford_mul(*rep, v, psi), phi) + inner(psi, clifford_mul(*rep, v, phi))) < 1e-13);
        }
    }
}

TEST_CASE("clifford_mul rejects mismatched dimensions") {
    const auto rep = build_gamma(3);
    Spinor psi = Spinor::Zero(2);
    CHECK_THROWS_AS(clifford_mul(*rep, Eigen::VectorXd::Zero(2), psi), std::invalid_argument);
    CHECK_THROWS_AS(clifford_mul(*rep, Eigen::VectorXd::Zero(3), Spinor(Spinor::Zero(4))), std::invalid_argument);
}

TEST_CASE("inner product is Hermitian, positive, and normalized on basis spinors") {
    std::mt19937_64 gen(12);
    const auto rep = build_gamma(4);
    Spinor e0 = Spinor::Zero(4);
    e0[0] = 1.0;
    CHECK(inner(e0, e0) == Complex{1.0, 0.0});
    for (int trial = 0; trial < 20; ++trial) {
        const Spinor psi = random_spinor(4, gen);
        const Spinor phi = random_spinor(4, gen);
        CHECK(std::abs(inner(psi, phi) - std::conj(inner(phi, psi))) < 1e-15);
        CHECK(inner(psi, psi).real() >= 0.0);
        CHECK(std::abs(inner(psi, psi).imag()) < 1e-15);
    }
    CHECK_THROWS_AS(inner(e0, Spinor(Spinor::Zero(2))), std::invalid_argument);
}

TEST_CASE("Re<e_j psi, psi> vanishes") {
    std::mt19937_64 gen(13);
    for (int m : {2, 3, 4}) {
        const auto rep = build_gamma(m);
        for (int trial = 0; trial < 20; ++trial) {
            const Spinor psi = random_spinor(rep->dim_spinor(), gen);
            for (int j = 0; j < m; ++j) CHECK(std::abs(inner(rep->gamma(j) * psi, psi).real()) < 1e-14);
        }
    }
}

TEST_CASE("surface case: <e_j e_k psi, e_l psi> is purely imaginary") {
    std::mt19937_64 gen(14);
    const auto rep = build_gamma(2);
    for (int trial = 0; trial < 30; ++trial) {
        const Spinor psi = random_spinor(2, gen);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    const Spinor lhs = rep->gamma(j) * (rep->gamma(k) * psi);
                    CHECK(std::abs(inner(lhs, rep->gamma(l) * psi).real()) < 1e-13);
                }
    }
}

TEST_CASE("Re<e_l e_j e_k psi, psi> vanishes when two indices coincide") {
    std::mt19937_64 gen(15);
    for (int m : {3, 5}) {
        const auto rep = build_gamma(m);
        for (int trial = 0; trial < 10; ++trial) {
            const Spinor psi = random_spinor(rep->dim_spinor(), gen);
            for (int l = 0; l < m; ++l)
                for (int j = 0; j < m; ++j) {
                    CHECK(std::abs(inner(rep->gamma(l) * (rep->gamma(j) * (rep->gamma(j) * psi)), psi).real()) < 1e-13);
                    CHECK(std::abs(inner(rep->gamma(l) * (rep->gamma(j) * (rep->gamma(l) * psi)), psi).real()) < 1e-13);
                }
        }
    }
}
