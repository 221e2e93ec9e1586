#include <doctest.h>

#include "field_helpers.hpp"
#include "spinorlab/fd_oracles.hpp"
#include "spinorlab/immersions.hpp"

using namespace spinorlab;
using namespace spinorlab::testing;

namespace {
std::mt19937_64 gen(303);

double isometry_residual(const HypersurfaceImmersion& imm, const Point& x) {
    const Eigen::MatrixXd push = imm.pushforward(x);
    const Eigen::MatrixXd h = imm.ambient_metric(imm.map(x));
    const int m = imm.dim();
    double r = (push.transpose() * h * push - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
    const Point nu = imm.normal(x);
    r = std::max(r, std::abs(nu.dot(h * nu) - 1.0));
    r = std::max(r, (push.transpose() * h * nu).cwiseAbs().maxCoeff());
    return r;
}

double weingarten_residual(const HypersurfaceImmersion& imm, const Point& x, double h) {
    // FD of nu along e_j against -W e_j through the pushforward.
    const Eigen::MatrixXd push = imm.pushforward(x);
    const Eigen::MatrixXd w = imm.shape(x);
    double r = 0.0;
    for (int j = 0; j < imm.dim(); ++j) {
        Point expected = Point::Zero(imm.ambient_coord_dim());
        for (int l = 0; l < imm.dim(); ++l) expected -= w(j, l) * push.col(l);
        r = std::max(r, (fd_normal_derivative(imm, x, j, h) - expected).cwiseAbs().maxCoeff());
    }
    return r;
}

} // namespace

TEST_CASE("umbilic hyperbolic catalog: curvature, mean curvature, umbilicity") {
    SUBCASE("kappa = -1 is totally geodesic") {
        const auto imm = umbilic_hyperbolic(3, -1.0);
        const Point x = random_point(imm->intrinsic_chart(), gen);
        CHECK(imm->mean_curvature(x) == 0.0);
        CHECK(imm->shape(x).norm() == 0.0);
    }
    SUBCASE("kappa = -4/5, m = 3 has H = sqrt(1/5)") {
        const auto imm = umbilic_hyperbolic(3, -0.8);
        const Point x = random_point(imm->intrinsic_chart(), gen);
        CHECK(imm->mean_curvature(x) == doctest::Approx(std::sqrt(0.2)).epsilon(1e-15));
        CHECK((imm->shape(x) - imm->mean_curvature(x) * Eigen::MatrixXd::Identity(3, 3)).norm() < 1e-14);
    }
    SUBCASE("intrinsic curvature balances H^2 - 1 through the Gauss equation") {
        for (double kappa : {-1.0, -0.8, -0.5, -0.1}) {
            const auto imm = umbilic_hyperbolic(4, kappa);
            const Point x = random_point(imm->intrinsic_chart(), gen);
            const double m = 4.0;
            const double lhs = imm->intrinsic_chart().scalar_curvature(x);
            const double h = imm->mean_curvature(x);
            CHECK(lhs == doctest::Approx(m * (m - 1.0) * (h * h - 1.0)).epsilon(1e-12));
        }
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(umbilic_hyperbolic(1, -0.5), std::invalid_argument);
        CHECK_THROWS_AS(umbilic_hyperbolic(3, 0.2), std::invalid_argument);
        CHECK_THROWS_AS(umbilic_hyperbolic(3, -1.5), std::invalid_argument);
    }
}

TEST_CASE("catalog immersions are isometric with unit normals") {
    const std::vector<ImmersionPtr> imms = {flat_hyperplane(3), umbilic_hyperbolic(3, -0.8),
                                            umbilic_hyperbolic(5, -4.0 / 7.0), clifford_torus()};
    for (const auto& imm : imms)
        for (int trial = 0; trial < 10; ++trial)
            CHECK(isometry_residual(*imm, random_point(imm->intrinsic_chart(), gen)) < 1e-12);
}

TEST_CASE("Weingarten relation holds against the ambient FD oracle") {
    const std::vector<ImmersionPtr> imms = {flat_hyperplane(3), umbilic_hyperbolic(3, -0.8),
                                            umbilic_hyperbolic(4, -2.0 / 3.0), clifford_torus()};
    for (const auto& imm : imms)
        for (int trial = 0; trial < 5; ++trial)
            CHECK(weingarten_residual(*imm, random_point(imm->intrinsic_chart(), gen), 1e-5) < 1e-5);
}

TEST_CASE("mean curvature is constant along each catalog immersion") {
    for (const auto& imm : {umbilic_hyperbolic(3, -0.8), umbilic_hyperbolic(4, -0.5)}) {
        const double h0 = imm->mean_curvature(random_point(imm->intrinsic_chart(), gen));
        for (int trial = 0; trial < 10; ++trial)
            CHECK(std::abs(imm->mean_curvature(random_point(imm->intrinsic_chart(), gen)) - h0) < 1e-6);
    }
}

TEST_CASE("flat hyperplane: totally geodesic data") {
    const auto imm = flat_hyperplane(3);
    const Point x = random_point(imm->intrinsic_chart(), gen);
    CHECK(imm->shape(x).norm() == 0.0);
    CHECK(imm->second_fundamental_trace(x).norm() == 0.0);
    // constant normal: FD derivative vanishes
    for (int j = 0; j < 3; ++j) CHECK(fd_normal_derivative(*imm, x, j, 1e-5).norm() < 1e-12);
    CHECK_THROWS_AS(flat_hyperplane(1), std::invalid_argument);
}

TEST_CASE("Clifford torus: minimal with principal curvatures +1 and -1") {
    const auto imm = clifford_torus();
    CHECK(imm->intrinsic_chart().periods()[0] == doctest::Approx(2.0 * M_PI / std::sqrt(2.0)).epsilon(1e-15));
    for (int trial = 0; trial < 10; ++trial) {
        const Point x = random_point(imm->intrinsic_chart(), gen);
        CHECK(imm->mean_curvature(x) == 0.0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(imm->shape(x));
        CHECK(eig.eigenvalues()[0] == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(eig.eigenvalues()[1] == doctest::Approx(1.0).epsilon(1e-15));
        // embedding lands on the unit 3-sphere
        CHECK(std::abs(imm->map(x).norm() - 1.0) < 1e-15);
        CHECK(imm->second_fundamental_trace(x).norm() == 0.0);
    }
}

TEST_CASE("second fundamental trace equals m H nu and matches the ambient FD oracle") {
    SUBCASE("umbilic hyperbolic with the explicit constants") {
        const auto imm = umbilic_hyperbolic(3, -0.8);
        const Point x = random_point(imm->intrinsic_chart(), gen);
        const Point expected = 3.0 * std::sqrt(0.2) * imm->normal(x);
        CHECK((imm->second_fundamental_trace(x) - expected).norm() < 1e-14);
        CHECK((fd_tension(*imm, x, 1e-5) - expected).cwiseAbs().maxCoeff() < 1e-5);
    }
    SUBCASE("minimal immersions have vanishing tension") {
        for (const auto& imm : {flat_hyperplane(4), clifford_torus()}) {
            const Point x = random_point(imm->intrinsic_chart(), gen);
            CHECK(imm->second_fundamental_trace(x).norm() == 0.0);
            CHECK(fd_tension(*imm, x, 1e-5).cwiseAbs().maxCoeff() < 1e-5);
        }
    }
}

TEST_CASE("adapted-frame connection from the ambient route matches Gauss-Weingarten") {
    for (double kappa : {-0.8, -0.5}) {
        const int m = 3;
        for (int trial = 0; trial < 5; ++trial) {
            const auto imm = umbilic_hyperbolic(m, kappa);
            const Point x = random_point(imm->intrinsic_chart(), gen);
            const auto gw = imm->pullback_connection(x);
            const auto ambient = umbilic_pullback_connection_ambient(m, kappa, 1.0, x);
            for (int j = 0; j < m; ++j) CHECK((gw[j] - ambient[j]).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("ambient-route connection is invariant under constant metric rescaling") {
    const int m = 4;
    const double kappa = -2.0 / 3.0;
    for (int trial = 0; trial < 5; ++trial) {
        Point x(4);
        x << 0.2, -0.3, 0.1, 1.2;
        const auto base = umbilic_pullback_connection_ambient(m, kappa, 1.0, x);
        for (double lambda : {0.5, 2.0, 10.0}) {
            const auto scaled = umbilic_pullback_connection_ambient(m, kappa, lambda, x);
            for (int j = 0; j < m; ++j) CHECK((base[j] - scaled[j]).cwiseAbs().maxCoeff() < 1e-13);
        }
    }
}

TEST_CASE("immersion JSON descriptors") {
    CHECK(flat_hyperplane(3)->to_json() == "{\"kind\":\"flat_hyperplane\",\"m\":3}");
    CHECK(umbilic_hyperbolic(4, -0.5)->to_json() == "{\"kind\":\"umbilic_hyperbolic\",\"m\":4,\"kappa\":-0.5}");
    CHECK(clifford_torus()->to_json() == "{\"kind\":\"clifford_torus\",\"m\":2}");
}
