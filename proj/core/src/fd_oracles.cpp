#include "spinorlab/fd_oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace spinorlab {

namespace {

Point shifted(const Point& x, int axis, double delta) {
    Point y = x;
    y[axis] += delta;
    return y;
}

} // namespace

Eigen::MatrixXd fd_metric_partial(const Chart& chart, const Point& x, int axis, double h) {
    return (chart.metric(shifted(x, axis, h)) - chart.metric(shifted(x, axis, -h))) / (2.0 * h);
}

std::vector<Eigen::MatrixXd> fd_christoffel(const Chart& chart, const Point& x, double h) {
    const int m = chart.dim();
    chart.require_in_domain(x, 10.0 * h);
    std::vector<Eigen::MatrixXd> dg(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) dg[static_cast<std::size_t>(a)] = fd_metric_partial(chart, x, a, h);
    const Eigen::MatrixXd ginv = chart.metric(x).inverse();
    std::vector<Eigen::MatrixXd> gamma(static_cast<std::size_t>(m), Eigen::MatrixXd::Zero(m, m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                double acc = 0.0;
                for (int l = 0; l < m; ++l)
                    acc += 0.5 * ginv(i, l) *
                           (dg[static_cast<std::size_t>(j)](l, k) + dg[static_cast<std::size_t>(k)](l, j) -
                            dg[static_cast<std::size_t>(l)](j, k));
                gamma[static_cast<std::size_t>(i)](j, k) = acc;
            }
    return gamma;
}

std::vector<Eigen::MatrixXd> fd_spin_connection(const Chart& chart, const Point& x, double h) {
    const int m = chart.dim();
    chart.require_in_domain(x, 10.0 * h);
    const auto gamma = fd_christoffel(chart, x, h);
    const Eigen::MatrixXd frame = chart.frame(x);
    const Eigen::MatrixXd g = chart.metric(x);
    // d_a e_j^c by central differences of the frame evaluator.
    std::vector<Eigen::MatrixXd> dframe(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
        dframe[static_cast<std::size_t>(a)] = (chart.frame(shifted(x, a, h)) - chart.frame(shifted(x, a, -h))) / (2.0 * h);

    std::vector<Eigen::MatrixXd> omega(static_cast<std::size_t>(m), Eigen::MatrixXd::Zero(m, m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            // (nabla_{e_i} e_j)^c = e_i^a (d_a e_j^c + Gamma^c_{ab} e_j^b)
            Eigen::VectorXd cov = Eigen::VectorXd::Zero(m);
            for (int a = 0; a < m; ++a) {
                const double eia = frame(a, i);
                if (eia == 0.0) continue;
                for (int c = 0; c < m; ++c) {
                    double acc = dframe[static_cast<std::size_t>(a)](c, j);
                    for (int b = 0; b < m; ++b) acc += gamma[static_cast<std::size_t>(c)](a, b) * frame(b, j);
                    cov[c] += eia * acc;
                }
            }
            for (int k = 0; k < m; ++k) omega[static_cast<std::size_t>(i)](j, k) = cov.dot(g * frame.col(k));
        }
    }
    return omega;
}

std::vector<std::vector<Eigen::MatrixXd>> fd_riemann(const Chart& chart, const Point& x, double h) {
    const int m = chart.dim();
    chart.require_in_domain(x, 10.0 * h);
    const auto gamma = chart.christoffel(x);
    std::vector<std::vector<Eigen::MatrixXd>> dgamma(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        const auto gp = chart.christoffel(shifted(x, a, h));
        const auto gm = chart.christoffel(shifted(x, a, -h));
        dgamma[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(m));
        for (int c = 0; c < m; ++c)
            dgamma[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] =
                (gp[static_cast<std::size_t>(c)] - gm[static_cast<std::size_t>(c)]) / (2.0 * h);
    }
    std::vector<std::vector<Eigen::MatrixXd>> r(static_cast<std::size_t>(m),
                                                std::vector<Eigen::MatrixXd>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Eigen::MatrixXd rab = Eigen::MatrixXd::Zero(m, m);
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) {
                    double acc = dgamma[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)](b, d) -
                                 dgamma[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)](a, d);
                    for (int e = 0; e < m; ++e)
                        acc += gamma[static_cast<std::size_t>(c)](a, e) * gamma[static_cast<std::size_t>(e)](b, d) -
                               gamma[static_cast<std::size_t>(c)](b, e) * gamma[static_cast<std::size_t>(e)](a, d);
                    rab(c, d) = acc;
                }
            r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::move(rab);
        }
    return r;
}

double fd_sectional_curvature(const Chart& chart, const Point& x, int i, int j, double h) {
    if (i == j) throw std::invalid_argument("fd_sectional_curvature: need two distinct directions");
    const int m = chart.dim();
    const auto r = fd_riemann(chart, x, h);
    const Eigen::MatrixXd g = chart.metric(x);
    // R(d_i, d_j, d_j, d_i) = g_{ci} R^c_{ijj}
    double num = 0.0;
    for (int c = 0; c < m; ++c) num += g(c, i) * r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)](c, j);
    const double den = g(i, i) * g(j, j) - g(i, j) * g(i, j);
    return num / den;
}

double fd_scalar_curvature(const Chart& chart, const Point& x, double h) {
    const int m = chart.dim();
    const auto r = fd_riemann(chart, x, h);
    const Eigen::MatrixXd ginv = chart.metric(x).inverse();
    double s = 0.0;
    for (int b = 0; b < m; ++b)
        for (int d = 0; d < m; ++d) {
            double ric = 0.0;
            for (int a = 0; a < m; ++a) ric += r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)](a, d);
            s += ginv(b, d) * ric;
        }
    return s;
}

Point fd_normal_derivative(const HypersurfaceImmersion& imm, const Point& x, int j, double h) {
    const Chart& chart = imm.intrinsic_chart();
    chart.require_in_domain(x, 10.0 * h);
    const double finv = 1.0 / chart.conformal_factor(x);
    const Point dnu = (imm.normal(shifted(x, j, h)) - imm.normal(shifted(x, j, -h))) / (2.0 * h);
    const Point vel = (imm.map(shifted(x, j, h)) - imm.map(shifted(x, j, -h))) / (2.0 * h);
    return finv * (dnu + imm.ambient_gamma(imm.map(x), vel, imm.normal(x)));
}

Point fd_tension(const HypersurfaceImmersion& imm, const Point& x, double h) {
    const Chart& chart = imm.intrinsic_chart();
    chart.require_in_domain(x, 10.0 * h);
    const int m = imm.dim();
    const double finv = 1.0 / chart.conformal_factor(x);
    const auto omega = chart.spin_connection(x);
    const Eigen::MatrixXd push = imm.pushforward(x);
    const Point y = imm.map(x);

    Point out = Point::Zero(imm.ambient_coord_dim());
    for (int j = 0; j < m; ++j) {
        const Eigen::MatrixXd pp = imm.pushforward(shifted(x, j, h));
        const Eigen::MatrixXd pm = imm.pushforward(shifted(x, j, -h));
        const Point dpush = (pp.col(j) - pm.col(j)) / (2.0 * h);
        const Point vel = (imm.map(shifted(x, j, h)) - imm.map(shifted(x, j, -h))) / (2.0 * h);
        // nabla^N_{e_j}(f_* e_j) minus the intrinsic part f_*(nabla_{e_j} e_j)
        Point cov = finv * dpush + imm.ambient_gamma(y, finv * vel, push.col(j));
        for (int l = 0; l < m; ++l) cov -= omega[static_cast<std::size_t>(j)](j, l) * push.col(l);
        out += cov;
    }
    return out;
}

double fit_loglog_slope(const std::vector<double>& hs, const std::vector<double>& errs) {
    if (hs.size() != errs.size() || hs.size() < 2)
        throw std::invalid_argument("fit_loglog_slope: need matching lists with at least two entries");
    const auto n = static_cast<double>(hs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const double lx = std::log(hs[i]);
        const double ly = std::log(std::max(errs[i], 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace spinorlab
