#include "spinorlab/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace spinorlab {

std::string to_string(ChartKind kind) {
    switch (kind) {
        case ChartKind::Euclidean: return "euclidean";
        case ChartKind::HyperbolicHalfspace: return "hyperbolic_halfspace";
        case ChartKind::SphereStereographic: return "sphere_stereographic";
        case ChartKind::FlatTorus: return "flat_torus";
    }
    return "unknown";
}

Chart::Chart(ChartKind kind, int m, double kappa, std::vector<double> periods)
    : kind_(kind), m_(m), kappa_(kappa), periods_(std::move(periods)) {
    if (m_ < 1) throw std::invalid_argument("Chart: dimension must be >= 1");
}

Chart Chart::euclidean(int m) { return Chart(ChartKind::Euclidean, m, 0.0, {}); }

Chart Chart::hyperbolic_halfspace(int m, double kappa) {
    if (!(kappa < 0.0)) throw std::invalid_argument("hyperbolic_halfspace: kappa must be negative");
    return Chart(ChartKind::HyperbolicHalfspace, m, kappa, {});
}

Chart Chart::sphere_stereographic(int m, double kappa) {
    if (!(kappa > 0.0)) throw std::invalid_argument("sphere_stereographic: kappa must be positive");
    return Chart(ChartKind::SphereStereographic, m, kappa, {});
}

Chart Chart::flat_torus(std::vector<double> periods) {
    if (periods.empty()) throw std::invalid_argument("flat_torus: need at least one period");
    for (double p : periods)
        if (!(p > 0.0)) throw std::invalid_argument("flat_torus: periods must be positive");
    const int m = static_cast<int>(periods.size());
    return Chart(ChartKind::FlatTorus, m, 0.0, std::move(periods));
}

bool Chart::in_domain(const Point& x, double margin) const {
    if (x.size() != m_) return false;
    if (!x.allFinite()) return false;
    if (kind_ == ChartKind::HyperbolicHalfspace) return x[m_ - 1] > margin;
    return true;
}

void Chart::require_in_domain(const Point& x, double margin) const {
    if (x.size() != m_) throw std::invalid_argument("Chart: point dimension mismatch");
    if (!in_domain(x, margin))
        throw std::domain_error("Chart: point outside chart domain (margin " + std::to_string(margin) + ")");
}

double Chart::conformal_factor(const Point& x) const {
    require_in_domain(x);
    switch (kind_) {
        case ChartKind::Euclidean:
        case ChartKind::FlatTorus:
            return 1.0;
        case ChartKind::HyperbolicHalfspace:
            return 1.0 / (std::sqrt(-kappa_) * x[m_ - 1]);
        case ChartKind::SphereStereographic:
            return 2.0 / (1.0 + kappa_ * x.squaredNorm());
    }
    return 1.0;
}

Eigen::VectorXd Chart::dlog_factor(const Point& x) const {
    require_in_domain(x);
    Eigen::VectorXd u = Eigen::VectorXd::Zero(m_);
    switch (kind_) {
        case ChartKind::Euclidean:
        case ChartKind::FlatTorus:
            break;
        case ChartKind::HyperbolicHalfspace:
            u[m_ - 1] = -1.0 / x[m_ - 1];
            break;
        case ChartKind::SphereStereographic: {
            const double s = 1.0 + kappa_ * x.squaredNorm();
            u = (-2.0 * kappa_ / s) * x;
            break;
        }
    }
    return u;
}

Eigen::MatrixXd Chart::metric(const Point& x) const {
    const double f = conformal_factor(x);
    return (f * f) * Eigen::MatrixXd::Identity(m_, m_);
}

std::vector<Eigen::MatrixXd> Chart::christoffel(const Point& x) const {
    const Eigen::VectorXd u = dlog_factor(x);
    std::vector<Eigen::MatrixXd> gamma(static_cast<std::size_t>(m_), Eigen::MatrixXd::Zero(m_, m_));
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            for (int k = 0; k < m_; ++k) {
                double v = 0.0;
                if (i == j) v += u[k];
                if (i == k) v += u[j];
                if (j == k) v -= u[i];
                gamma[static_cast<std::size_t>(i)](j, k) = v;
            }
    return gamma;
}

Eigen::MatrixXd Chart::frame(const Point& x) const {
    return (1.0 / conformal_factor(x)) * Eigen::MatrixXd::Identity(m_, m_);
}

std::vector<Eigen::MatrixXd> Chart::spin_connection(const Point& x) const {
    const Eigen::VectorXd u = dlog_factor(x);
    const double finv = 1.0 / conformal_factor(x);
    std::vector<Eigen::MatrixXd> omega(static_cast<std::size_t>(m_), Eigen::MatrixXd::Zero(m_, m_));
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            for (int k = 0; k < m_; ++k) {
                double v = 0.0;
                if (i == k) v += u[j];
                if (i == j) v -= u[k];
                omega[static_cast<std::size_t>(i)](j, k) = finv * v;
            }
    return omega;
}

double Chart::scalar_curvature(const Point& x) const {
    require_in_domain(x);
    return static_cast<double>(m_) * (m_ - 1) * kappa_;
}

std::string Chart::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = to_string(kind_);
    j["m"] = m_;
    j["kappa"] = kappa_;
    if (kind_ == ChartKind::FlatTorus) j["periods"] = periods_;
    return j.dump();
}

Chart Chart::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "euclidean") return euclidean(j.at("m").get<int>());
    if (kind == "hyperbolic_halfspace") return hyperbolic_halfspace(j.at("m").get<int>(), j.at("kappa").get<double>());
    if (kind == "sphere_stereographic") return sphere_stereographic(j.at("m").get<int>(), j.at("kappa").get<double>());
    if (kind == "flat_torus") return flat_torus(j.at("periods").get<std::vector<double>>());
    throw std::invalid_argument("Chart::from_json: unknown kind '" + kind + "'");
}

bool operator==(const Chart& a, const Chart& b) {
    return a.kind_ == b.kind_ && a.m_ == b.m_ && a.kappa_ == b.kappa_ && a.periods_ == b.periods_;
}

Eigen::VectorXd spaceform_curvature(const AmbientSpaceform& amb, const Eigen::VectorXd& x,
                                    const Eigen::VectorXd& y, const Eigen::VectorXd& z) {
    if (x.size() != amb.n || y.size() != amb.n || z.size() != amb.n)
        throw std::invalid_argument("spaceform_curvature: vector length does not match ambient dimension");
    return amb.c * (y.dot(z) * x - x.dot(z) * y);
}

} // namespace spinorlab
