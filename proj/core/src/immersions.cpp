#include "spinorlab/immersions.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace spinorlab {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

std::string to_string(ImmersionKind kind) {
    switch (kind) {
        case ImmersionKind::FlatHyperplane: return "flat_hyperplane";
        case ImmersionKind::UmbilicHyperbolic: return "umbilic_hyperbolic";
        case ImmersionKind::CliffordTorus: return "clifford_torus";
    }
    return "unknown";
}

HypersurfaceImmersion::HypersurfaceImmersion(ImmersionKind kind, Chart chart, AmbientSpaceform ambient, int coord_dim)
    : kind_(kind), chart_(std::move(chart)), ambient_(ambient), m_(chart_.dim()), coord_dim_(coord_dim) {}

ImmersionPtr flat_hyperplane(int m) {
    if (m < 2) throw std::invalid_argument("flat_hyperplane: m must be >= 2");
    auto imm = std::shared_ptr<HypersurfaceImmersion>(
        new HypersurfaceImmersion(ImmersionKind::FlatHyperplane, Chart::euclidean(m), AmbientSpaceform{m + 1, 0.0}, m + 1));
    return imm;
}

ImmersionPtr umbilic_hyperbolic(int m, double kappa) {
    if (m < 2) throw std::invalid_argument("umbilic_hyperbolic: m must be >= 2");
    if (!(kappa >= -1.0 && kappa < 0.0))
        throw std::invalid_argument("umbilic_hyperbolic: kappa must lie in [-1, 0)");
    auto imm = std::shared_ptr<HypersurfaceImmersion>(new HypersurfaceImmersion(
        ImmersionKind::UmbilicHyperbolic, Chart::hyperbolic_halfspace(m, kappa), AmbientSpaceform{m + 1, -1.0}, m + 1));
    imm->mean_h_ = std::sqrt(1.0 + kappa);
    imm->cos_alpha_ = std::sqrt(-kappa);
    return imm;
}

ImmersionPtr clifford_torus() {
    const double period = 2.0 * M_PI / kSqrt2;
    auto imm = std::shared_ptr<HypersurfaceImmersion>(new HypersurfaceImmersion(
        ImmersionKind::CliffordTorus, Chart::flat_torus({period, period}), AmbientSpaceform{3, 1.0}, 4));
    return imm;
}

Point HypersurfaceImmersion::map(const Point& x) const {
    chart_.require_in_domain(x);
    switch (kind_) {
        case ImmersionKind::FlatHyperplane: {
            Point y = Point::Zero(m_ + 1);
            y.head(m_) = x;
            return y;
        }
        case ImmersionKind::UmbilicHyperbolic: {
            Point y = Point::Zero(m_ + 1);
            y[0] = x[m_ - 1] * mean_h_;
            for (int i = 0; i + 1 < m_; ++i) y[i + 1] = x[i];
            y[m_] = x[m_ - 1] * cos_alpha_;
            return y;
        }
        case ImmersionKind::CliffordTorus: {
            Point y(4);
            y << std::cos(kSqrt2 * x[0]), std::sin(kSqrt2 * x[0]), std::cos(kSqrt2 * x[1]), std::sin(kSqrt2 * x[1]);
            return y / kSqrt2;
        }
    }
    throw std::logic_error("unreachable");
}

Eigen::MatrixXd HypersurfaceImmersion::pushforward(const Point& x) const {
    chart_.require_in_domain(x);
    switch (kind_) {
        case ImmersionKind::FlatHyperplane: {
            Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m_ + 1, m_);
            p.topRows(m_).setIdentity();
            return p;
        }
        case ImmersionKind::UmbilicHyperbolic: {
            // f_* e_j = y_m * d_j with d_j the unit euclidean directions of
            // the tilted plane and y_m the half-space height at f(x).
            const double ym = x[m_ - 1] * cos_alpha_;
            Eigen::MatrixXd p = Eigen::MatrixXd::Zero(m_ + 1, m_);
            for (int j = 0; j + 1 < m_; ++j) p(j + 1, j) = ym;
            p(0, m_ - 1) = ym * mean_h_;
            p(m_, m_ - 1) = ym * cos_alpha_;
            return p;
        }
        case ImmersionKind::CliffordTorus: {
            const double c0 = std::cos(kSqrt2 * x[0]), s0 = std::sin(kSqrt2 * x[0]);
            const double c1 = std::cos(kSqrt2 * x[1]), s1 = std::sin(kSqrt2 * x[1]);
            Eigen::MatrixXd p = Eigen::MatrixXd::Zero(4, 2);
            p.col(0) << -s0, c0, 0.0, 0.0;
            p.col(1) << 0.0, 0.0, -s1, c1;
            return p;
        }
    }
    throw std::logic_error("unreachable");
}

Point HypersurfaceImmersion::normal(const Point& x) const {
    chart_.require_in_domain(x);
    switch (kind_) {
        case ImmersionKind::FlatHyperplane: {
            Point nu = Point::Zero(m_ + 1);
            nu[m_] = 1.0;
            return nu;
        }
        case ImmersionKind::UmbilicHyperbolic: {
            // Sign fixed so that W = +H Id with H >= 0.
            const double ym = x[m_ - 1] * cos_alpha_;
            Point nu = Point::Zero(m_ + 1);
            nu[0] = -ym * cos_alpha_;
            nu[m_] = ym * mean_h_;
            return nu;
        }
        case ImmersionKind::CliffordTorus: {
            const double c0 = std::cos(kSqrt2 * x[0]), s0 = std::sin(kSqrt2 * x[0]);
            const double c1 = std::cos(kSqrt2 * x[1]), s1 = std::sin(kSqrt2 * x[1]);
            Point nu(4);
            nu << -c0, -s0, c1, s1;
            return nu / kSqrt2;
        }
    }
    throw std::logic_error("unreachable");
}

Eigen::MatrixXd HypersurfaceImmersion::shape(const Point& x) const {
    chart_.require_in_domain(x);
    switch (kind_) {
        case ImmersionKind::FlatHyperplane:
            return Eigen::MatrixXd::Zero(m_, m_);
        case ImmersionKind::UmbilicHyperbolic:
            return mean_h_ * Eigen::MatrixXd::Identity(m_, m_);
        case ImmersionKind::CliffordTorus: {
            Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2, 2);
            w(0, 0) = 1.0;
            w(1, 1) = -1.0;
            return w;
        }
    }
    throw std::logic_error("unreachable");
}

double HypersurfaceImmersion::mean_curvature(const Point& x) const {
    chart_.require_in_domain(x);
    return kind_ == ImmersionKind::UmbilicHyperbolic ? mean_h_ : 0.0;
}

Point HypersurfaceImmersion::second_fundamental_trace(const Point& x) const {
    return (m_ * mean_curvature(x)) * normal(x);
}

std::vector<Eigen::MatrixXd> HypersurfaceImmersion::pullback_connection(const Point& x) const {
    const auto omega = chart_.spin_connection(x);
    const Eigen::MatrixXd w = shape(x);
    std::vector<Eigen::MatrixXd> conn(static_cast<std::size_t>(m_), Eigen::MatrixXd::Zero(m_ + 1, m_ + 1));
    for (int j = 0; j < m_; ++j) {
        auto& a = conn[static_cast<std::size_t>(j)];
        a.topLeftCorner(m_, m_) = omega[static_cast<std::size_t>(j)];
        for (int k = 0; k < m_; ++k) {
            a(k, m_) = w(j, k);   // g(W e_j, e_k) nu component of nabla_{e_j} E_k
            a(m_, k) = -w(j, k);  // nabla_{e_j} nu = -W e_j
        }
    }
    return conn;
}

Eigen::MatrixXd HypersurfaceImmersion::ambient_metric(const Point& y) const {
    if (y.size() != coord_dim_) throw std::invalid_argument("ambient_metric: coordinate dimension mismatch");
    switch (kind_) {
        case ImmersionKind::FlatHyperplane:
        case ImmersionKind::CliffordTorus:
            return Eigen::MatrixXd::Identity(coord_dim_, coord_dim_);
        case ImmersionKind::UmbilicHyperbolic: {
            const double g = 1.0 / y[m_];
            return (g * g) * Eigen::MatrixXd::Identity(coord_dim_, coord_dim_);
        }
    }
    throw std::logic_error("unreachable");
}

Point HypersurfaceImmersion::ambient_gamma(const Point& y, const Point& u, const Point& v) const {
    if (y.size() != coord_dim_ || u.size() != coord_dim_ || v.size() != coord_dim_)
        throw std::invalid_argument("ambient_gamma: coordinate dimension mismatch");
    switch (kind_) {
        case ImmersionKind::FlatHyperplane:
            return Point::Zero(coord_dim_);
        case ImmersionKind::UmbilicHyperbolic: {
            // Conformal half-space metric G^2 delta with log G = -log y_m.
            Point out = -(v[m_] * u + u[m_] * v) / y[m_];
            out[m_] += u.dot(v) / y[m_];
            return out;
        }
        case ImmersionKind::CliffordTorus:
            // Gauss formula of S^3 in R^4 for tangent fields: the normal
            // part of the flat derivative is <u, v> * position.
            return u.dot(v) * y;
    }
    throw std::logic_error("unreachable");
}

std::string HypersurfaceImmersion::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = to_string(kind_);
    j["m"] = m_;
    if (kind_ == ImmersionKind::UmbilicHyperbolic) j["kappa"] = chart_.curvature();
    return j.dump();
}

std::vector<Eigen::MatrixXd> umbilic_pullback_connection_ambient(int m, double kappa, double lambda, const Point& x) {
    if (m < 2) throw std::invalid_argument("umbilic_pullback_connection_ambient: m must be >= 2");
    if (!(kappa >= -1.0 && kappa < 0.0))
        throw std::invalid_argument("umbilic_pullback_connection_ambient: kappa must lie in [-1, 0)");
    if (!(lambda > 0.0)) throw std::invalid_argument("umbilic_pullback_connection_ambient: lambda must be positive");
    const Chart chart = Chart::hyperbolic_halfspace(m, kappa);
    chart.require_in_domain(x);

    const double h = std::sqrt(1.0 + kappa);
    const double ca = std::sqrt(-kappa);
    const double ym = x[m - 1] * ca;

    // Constant euclidean directions of the adapted frame: d_0..d_{m-1} span
    // the tilted plane, d_m is its euclidean normal.
    std::vector<Point> dir(static_cast<std::size_t>(m + 1), Point::Zero(m + 1));
    for (int j = 0; j + 1 < m; ++j) dir[static_cast<std::size_t>(j)][j + 1] = 1.0;
    dir[static_cast<std::size_t>(m - 1)][0] = h;
    dir[static_cast<std::size_t>(m - 1)][m] = ca;
    dir[static_cast<std::size_t>(m)][0] = -ca;
    dir[static_cast<std::size_t>(m)][m] = h;

    // Scaled ambient metric (lambda / y_m)^2 delta: unit adapted vectors are
    // (y_m / lambda) d_k; the Christoffel symbols of log(lambda / y_m) do not
    // depend on lambda.
    auto gamma_term = [&](const Point& u, const Point& v) {
        Point out = -(v[m] * u + u[m] * v) / ym;
        out[m] += u.dot(v) / ym;
        return out;
    };

    // Coordinate velocity of the fixed intrinsic frame e_j of H^m(kappa):
    // e_j = F^{-1} d_j-plane direction with F^{-1} = y_m.
    std::vector<Eigen::MatrixXd> conn(static_cast<std::size_t>(m), Eigen::MatrixXd::Zero(m + 1, m + 1));
    const double metric_scale = (lambda / ym) * (lambda / ym);
    for (int j = 0; j < m; ++j) {
        const Point vel = ym * dir[static_cast<std::size_t>(j)];
        for (int k = 0; k <= m; ++k) {
            const Point ek = (ym / lambda) * dir[static_cast<std::size_t>(k)];
            // e_j(E_k) = F^{-1} d/dx_j [ (y_m(x)/lambda) d_k ]; only the last
            // intrinsic coordinate moves the height, d y_m / d x_{m-1} = ca.
            Point deriv = Point::Zero(m + 1);
            if (j == m - 1) deriv = ym * (ca / lambda) * dir[static_cast<std::size_t>(k)];
            const Point cov = deriv + gamma_term(vel, ek);
            for (int l = 0; l <= m; ++l) {
                const Point el = (ym / lambda) * dir[static_cast<std::size_t>(l)];
                conn[static_cast<std::size_t>(j)](k, l) = metric_scale * cov.dot(el);
            }
        }
    }
    return conn;
}

} // namespace spinorlab
