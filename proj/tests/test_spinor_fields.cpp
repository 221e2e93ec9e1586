#include <doctest.h>

#include "field_helpers.hpp"
#include "spinorlab/spinor_fields.hpp"

using namespace spinorlab;
using namespace spinorlab::testing;

namespace {
std::mt19937_64 gen(202);
}

TEST_CASE("constant spinor on a euclidean chart is parallel") {
    const Chart chart = Chart::euclidean(3);
    const auto rep = build_gamma(3);
    const SpinorField psi = SpinorField::constant(chart, rep, random_spinor(2, gen));
    const Point x = random_point(chart, gen);
    for (int i = 0; i < 3; ++i) CHECK(covariant_derivative(psi, x, i).norm() == 0.0);
    CHECK(dirac(psi, x).norm() == 0.0);
    for (int i = 0; i < 3; ++i) CHECK(penrose(psi, x, i).norm() == 0.0);
}

TEST_CASE("parallel spinor on the flat torus has vanishing Dirac and Penrose operators") {
    const Chart chart = Chart::flat_torus({2.0, 3.0});
    const auto rep = build_gamma(2);
    const SpinorField psi = SpinorField::constant(chart, rep, random_spinor(2, gen));
    const Point x = random_point(chart, gen);
    CHECK(dirac(psi, x).norm() == 0.0);
    for (int i = 0; i < 2; ++i) CHECK(penrose(psi, x, i).norm() == 0.0);
}

TEST_CASE("transported field satisfies the Killing equation under an independent FD check") {
    const int m = 3;
    const Chart chart = Chart::hyperbolic_halfspace(m, -4.0 / (m + 2));
    const auto rep = build_gamma(m);
    const Complex lambda = kI / std::sqrt(m + 2.0);
    Point x0 = Point::Zero(m);
    x0[m - 1] = 1.0;
    const SpinorField psi = killing_transport(chart, rep, lambda, x0, random_spinor(2, gen));

    for (int trial = 0; trial < 5; ++trial) {
        const Point x = random_point(chart, gen);
        const auto nabla = covariant_derivative_all(psi, x);
        const Spinor value = psi.value(x);
        for (int i = 0; i < m; ++i) {
            const Spinor residual = nabla[static_cast<std::size_t>(i)] - lambda * (psi.rep().gamma(i) * value);
            CHECK(residual.norm() < 1e-6);
        }
        // Killing spinors are harmonic with eigenvalue -m lambda and lie in
        // the twistor kernel.
        CHECK((dirac(psi, x) + static_cast<double>(m) * lambda * value).norm() < 1e-5);
        for (int i = 0; i < m; ++i) CHECK(penrose(psi, x, i).norm() < 1e-6);
    }
}

TEST_CASE("spinor connection is metric: d<psi,phi>(e_i) = <nabla psi,phi> + <psi,nabla phi>") {
    const Chart chart = Chart::hyperbolic_halfspace(3, -1.0);
    const auto rep = build_gamma(3);
    const SpinorField psi = random_trig_field(chart, rep, gen);
    const SpinorField phi = random_trig_field(chart, rep, gen);
    const double h = 1e-4;
    for (int trial = 0; trial < 5; ++trial) {
        const Point x = random_point(chart, gen);
        const double finv = 1.0 / chart.conformal_factor(x);
        const auto npsi = covariant_derivative_all(psi, x);
        const auto nphi = covariant_derivative_all(phi, x);
        for (int i = 0; i < 3; ++i) {
            Point xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            const Complex dfd =
                finv * (inner(psi.value(xp), phi.value(xp)) - inner(psi.value(xm), phi.value(xm))) / (2.0 * h);
            const Complex rhs = inner(npsi[static_cast<std::size_t>(i)], phi.value(x)) +
                                inner(psi.value(x), nphi[static_cast<std::size_t>(i)]);
            CHECK(std::abs(dfd - rhs) < 1e-6);
        }
    }
}

TEST_CASE("Dirac operator of a polynomial field matches the hand derivative on flat space") {
    const Chart chart = Chart::euclidean(3);
    const auto rep = build_gamma(3);
    // psi = (x0^2 + i x1, x0 x1 x2), FD mode only.
    const SpinorField psi(chart, rep, [](const Point& x) {
        Spinor s(2);
        s[0] = Complex{x[0] * x[0], x[1]};
        s[1] = Complex{x[0] * x[1] * x[2], 0.0};
        return s;
    });
    for (int trial = 0; trial < 5; ++trial) {
        const Point x = random_point(chart, gen);
        Spinor d0(2), d1(2), d2(2);
        d0 << Complex{2.0 * x[0], 0.0}, Complex{x[1] * x[2], 0.0};
        d1 << Complex{0.0, 1.0}, Complex{x[0] * x[2], 0.0};
        d2 << Complex{0.0, 0.0}, Complex{x[0] * x[1], 0.0};
        const Spinor expected = rep->gamma(0) * d0 + rep->gamma(1) * d1 + rep->gamma(2) * d2;
        CHECK((dirac(psi, x) - expected).norm() < 1e-9);
    }
}

TEST_CASE("Penrose operator has vanishing Clifford trace") {
    const Chart chart = Chart::hyperbolic_halfspace(3, -0.8);
    const auto rep = build_gamma(3);
    const SpinorField psi = random_trig_field(chart, rep, gen);
    for (int trial = 0; trial < 5; ++trial) {
        const Point x = random_point(chart, gen);
        const auto p = penrose_all(psi, x);
        Spinor trace = Spinor::Zero(2);
        for (int i = 0; i < 3; ++i) trace += rep->gamma(i) * p[static_cast<std::size_t>(i)];
        CHECK(trace.norm() < 1e-13);
    }
}

TEST_CASE("zero-constant transport on a euclidean chart returns the seed everywhere") {
    const Chart chart = Chart::euclidean(2);
    const auto rep = build_gamma(2);
    const Spinor seed = random_spinor(2, gen);
    const SpinorField psi = killing_transport(chart, rep, Complex{0.0, 0.0}, Point::Zero(2), seed);
    for (int trial = 0; trial < 3; ++trial) {
        const Point x = random_point(chart, gen);
        CHECK((psi.value(x) - seed).norm() < 1e-12);
    }
}

TEST_CASE("transport is path-independent when the modified connection is flat") {
    const int m = 3;
    const Chart chart = Chart::hyperbolic_halfspace(m, -4.0 / (m + 2));
    const auto rep = build_gamma(m);
    const Complex lambda = kI / std::sqrt(m + 2.0);
    Point x0 = Point::Zero(m);
    x0[m - 1] = 1.0;
    const Spinor seed = random_spinor(2, gen);

    TransportOptions forward;
    TransportOptions reversed;
    reversed.axis_order = {2, 1, 0};
    const SpinorField a = killing_transport(chart, rep, lambda, x0, seed, forward);
    const SpinorField b = killing_transport(chart, rep, lambda, x0, seed, reversed);
    for (int trial = 0; trial < 5; ++trial) {
        const Point x = random_point(chart, gen);
        CHECK((a.value(x) - b.value(x)).norm() < 1e-8);
    }
}

TEST_CASE("transporting a basis stays pointwise independent (Gram determinant bounded)") {
    const int m = 3;
    const Chart chart = Chart::hyperbolic_halfspace(m, -4.0 / (m + 2));
    const auto rep = build_gamma(m);
    const Complex lambda = kI / std::sqrt(m + 2.0);
    Point x0 = Point::Zero(m);
    x0[m - 1] = 1.0;
    Spinor e0(2), e1(2);
    e0 << 1, 0;
    e1 << 0, 1;
    const SpinorField f0 = killing_transport(chart, rep, lambda, x0, e0);
    const SpinorField f1 = killing_transport(chart, rep, lambda, x0, e1);
    for (int trial = 0; trial < 5; ++trial) {
        const Point x = random_point(chart, gen);
        Eigen::Matrix2cd gram;
        const Spinor v0 = f0.value(x), v1 = f1.value(x);
        gram << inner(v0, v0), inner(v0, v1), inner(v1, v0), inner(v1, v1);
        CHECK(std::abs(gram.determinant()) > 1e-6);
    }
}

TEST_CASE("transport validates its inputs") {
    const Chart hyp = Chart::hyperbolic_halfspace(3, -0.8);
    const Chart sph = Chart::sphere_stereographic(2, 1.0);
    const auto rep3 = build_gamma(3);
    const auto rep2 = build_gamma(2);
    Point x0 = Point::Zero(3);
    x0[2] = 1.0;
    const Spinor seed = random_spinor(2, gen);

    CHECK_THROWS_AS(killing_transport(hyp, rep3, Complex{0.5, 0.0}, x0, seed), std::invalid_argument);
    CHECK_THROWS_AS(killing_transport(sph, rep2, Complex{0.0, 0.5}, Point::Zero(2), seed), std::invalid_argument);
    TransportOptions coarse;
    coarse.max_step = 0.5;
    CHECK_THROWS_AS(killing_transport(hyp, rep3, Complex{0.0, 0.3}, x0, seed, coarse), std::invalid_argument);

    const SpinorField psi = killing_transport(hyp, rep3, kI / std::sqrt(5.0), x0, seed);
    Point outside(3);
    outside << 0.1, 0.1, -1.0;
    CHECK_THROWS_AS(psi.value(outside), std::domain_error);
}

TEST_CASE("twistor spinors from holomorphic data solve the twistor equation") {
    const auto rep = build_gamma(2);
    auto zero_fn = [](Complex) { return Complex{0.0, 0.0}; };

    SUBCASE("constant data gives a parallel spinor") {
        const SpinorField psi = twistor_from_holomorphic([](Complex) { return Complex{1.0, 0.0}; }, zero_fn, rep);
        const Point x = random_point(psi.chart(), gen);
        for (int i = 0; i < 2; ++i) CHECK(penrose(psi, x, i).norm() < 1e-14);
    }
    SUBCASE("linear holomorphic data") {
        const SpinorField psi = twistor_from_holomorphic([](Complex z) { return z; }, zero_fn, rep);
        for (int trial = 0; trial < 5; ++trial) {
            const Point x = random_point(psi.chart(), gen);
            for (int i = 0; i < 2; ++i) CHECK(penrose(psi, x, i).norm() < 1e-8);
        }
    }
    SUBCASE("quadratic holomorphic plus conjugate anti-holomorphic data") {
        const SpinorField psi =
            twistor_from_holomorphic([](Complex z) { return z * z; }, [](Complex w) { return w; }, rep);
        for (int trial = 0; trial < 5; ++trial) {
            const Point x = random_point(psi.chart(), gen);
            for (int i = 0; i < 2; ++i) CHECK(penrose(psi, x, i).norm() < 1e-8);
        }
    }
    SUBCASE("a non-twistor field is detected") {
        // |z|^2 is neither holomorphic nor anti-holomorphic in either slot.
        const SpinorField psi(Chart::euclidean(2), rep, [](const Point& x) {
            Spinor s(2);
            s[0] = Complex{x[0] * x[0] + x[1] * x[1], 0.0};
            s[1] = Complex{0.0, 0.0};
            return s;
        });
        Point x(2);
        x << 0.7, -0.3;
        double pnorm = 0.0;
        for (int i = 0; i < 2; ++i) pnorm = std::max(pnorm, penrose(psi, x, i).norm());
        CHECK(pnorm > 1e-2);
    }
}

TEST_CASE("sums of opposite Killing spinors are twistor spinors") {
    SUBCASE("real constants 1/2 and -1/2 on the round sphere chart") {
        const Chart chart = Chart::sphere_stereographic(2, 1.0);
        const auto rep = build_gamma(2);
        const SpinorField plus = killing_transport(chart, rep, Complex{0.5, 0.0}, Point::Zero(2), random_spinor(2, gen));
        const SpinorField minus =
            killing_transport(chart, rep, Complex{-0.5, 0.0}, Point::Zero(2), random_spinor(2, gen));
        const SpinorField sum = plus + minus;
        for (int trial = 0; trial < 4; ++trial) {
            const Point x = random_point(chart, gen);
            for (int i = 0; i < 2; ++i) CHECK(penrose(sum, x, i).norm() < 1e-6);
        }
    }
    SUBCASE("imaginary constants on the hyperbolic chart") {
        const int m = 4;
        const Chart chart = Chart::hyperbolic_halfspace(m, -4.0 / (m + 2));
        const auto rep = build_gamma(m);
        Point x0 = Point::Zero(m);
        x0[m - 1] = 1.0;
        const Complex lambda = kI / std::sqrt(m + 2.0);
        const SpinorField sum = killing_transport(chart, rep, lambda, x0, random_spinor(4, gen)) +
                                killing_transport(chart, rep, -lambda, x0, random_spinor(4, gen));
        for (int trial = 0; trial < 3; ++trial) {
            const Point x = random_point(chart, gen);
            for (int i = 0; i < m; ++i) CHECK(penrose(sum, x, i).norm() < 1e-6);
        }
    }
}

TEST_CASE("Leibniz rule for Clifford multiplication by coordinate vector fields") {
    const Chart chart = Chart::hyperbolic_halfspace(3, -0.8);
    const auto rep = build_gamma(3);
    const SpinorField psi = random_trig_field(chart, rep, gen);
    for (int a = 0; a < 3; ++a) {
        // V = d_a = F e_a as a vector field; V . psi has components F gamma_a psi.
        SpinorField vpsi(chart, rep, [&chart, rep, a, psi](const Point& x) {
            return Spinor(chart.conformal_factor(x) * (rep->gamma(a) * psi.value(x)));
        });
        for (int trial = 0; trial < 3; ++trial) {
            const Point x = random_point(chart, gen);
            const double f = chart.conformal_factor(x);
            const Eigen::VectorXd u = chart.dlog_factor(x);
            const auto omega = chart.spin_connection(x);
            const auto npsi = covariant_derivative_all(psi, x);
            for (int i = 0; i < 3; ++i) {
                // nabla_{e_i} V = e_i(F) e_a + F nabla_{e_i} e_a with e_i(F) = u_i.
                Eigen::VectorXd w = Eigen::VectorXd::Zero(3);
                w[a] += u[i];
                for (int l = 0; l < 3; ++l) w[l] += f * omega[static_cast<std::size_t>(i)](a, l);
                const Spinor rhs =
                    clifford_mul(*rep, w, psi.value(x)) + f * (rep->gamma(a) * npsi[static_cast<std::size_t>(i)]);
                const Spinor lhs = covariant_derivative(vpsi, x, i);
                CHECK((lhs - rhs).norm() < 1e-6);
            }
        }
    }
}

TEST_CASE("FD component derivatives converge at second order, fourth with Richardson") {
    const Chart chart = Chart::hyperbolic_halfspace(2, -1.0);
    const auto rep = build_gamma(2);
    const SpinorField analytic = random_trig_field(chart, rep, gen);
    const SpinorField numeric(chart, rep, [analytic](const Point& x) { return analytic.value(x); });
    const Point x = random_point(chart, gen);

    auto err_at = [&](double h, bool richardson) {
        const SpinorField f = numeric.with_fd({h, richardson});
        double e = 0.0;
        for (int i = 0; i < 2; ++i) e = std::max(e, (f.partial(x, i) - analytic.partial(x, i)).norm());
        return e;
    };
    const double r2 = err_at(2e-3, false) / err_at(1e-3, false);
    CHECK(r2 == doctest::Approx(4.0).epsilon(0.15));
    const double r4 = err_at(4e-2, true) / err_at(2e-2, true);
    CHECK(r4 == doctest::Approx(16.0).epsilon(0.25));
}

TEST_CASE("second Dirac pass reproduces the Killing eigenvalue") {
    const int m = 3;
    const Chart chart = Chart::hyperbolic_halfspace(m, -4.0 / (m + 2));
    const auto rep = build_gamma(m);
    const Complex lambda = kI / std::sqrt(m + 2.0);
    Point x0 = Point::Zero(m);
    x0[m - 1] = 1.0;
    const SpinorField psi = killing_transport(chart, rep, lambda, x0, random_spinor(2, gen));
    const SpinorField dpsi = dirac_field(psi);
    // D^2 psi = m^2 lambda^2 psi = -(m^2/(m+2)) psi
    const double eigenvalue = -m * m / (m + 2.0);
    for (int trial = 0; trial < 3; ++trial) {
        const Point x = random_point(chart, gen);
        CHECK((dirac(dpsi, x) - eigenvalue * psi.value(x)).norm() < 1e-5);
    }
}

TEST_CASE("field algebra composes values and partials") {
    const Chart chart = Chart::euclidean(2);
    const auto rep = build_gamma(2);
    const SpinorField a = random_trig_field(chart, rep, gen);
    const SpinorField b = random_trig_field(chart, rep, gen);
    const Point x = random_point(chart, gen);
    CHECK(((a + b).value(x) - a.value(x) - b.value(x)).norm() < 1e-15);
    CHECK(((a - b).value(x) - a.value(x) + b.value(x)).norm() < 1e-15);
    const Complex s{0.3, -1.2};
    CHECK((a.scaled(s).value(x) - s * a.value(x)).norm() < 1e-15);
    CHECK((a + b).has_analytic_partials());

    const SpinorField other = random_trig_field(Chart::euclidean(3), build_gamma(3), gen);
    CHECK_THROWS_AS(a + other, std::invalid_argument);

    SpinorField tiny = SpinorField(chart, rep, [](const Point&) { return Spinor(Spinor::Zero(2)); }).with_fd({1e-14});
    CHECK_THROWS_AS(tiny.partial(x, 0), std::invalid_argument);
}
