#pragma once

// Shared field and point generators for the unit tests.

#include <memory>
#include <random>
#include <vector>

#include "spinorlab/spinor_fields.hpp"

namespace spinorlab::testing {

inline Spinor random_spinor(int dim, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Spinor s(dim);
    for (int i = 0; i < dim; ++i) s[i] = Complex{d(gen), d(gen)};
    return s;
}

inline Point random_point(const Chart& chart, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    const int m = chart.dim();
    Point x(m);
    switch (chart.kind()) {
        case ChartKind::HyperbolicHalfspace:
            for (int i = 0; i + 1 < m; ++i) x[i] = 0.4 * d(gen);
            x[m - 1] = 1.1 + 0.5 * d(gen);
            break;
        case ChartKind::SphereStereographic:
            for (int i = 0; i < m; ++i) x[i] = 0.8 * d(gen);
            break;
        case ChartKind::FlatTorus:
            for (int i = 0; i < m; ++i)
                x[i] = 0.5 * (d(gen) + 1.0) * chart.periods()[static_cast<std::size_t>(i)];
            break;
        default:
            for (int i = 0; i < m; ++i) x[i] = d(gen);
            break;
    }
    return x;
}

inline std::vector<Point> random_points(const Chart& chart, int n, std::mt19937_64& gen) {
    std::vector<Point> out;
    for (int i = 0; i < n; ++i) out.push_back(random_point(chart, gen));
    return out;
}

/// sum_t amp_t sin(k_t . x + c_t) with analytic partials; wave vectors are
/// period-commensurate on torus charts.
inline SpinorField random_trig_field(const Chart& chart, GammaRepPtr rep, std::mt19937_64& gen, int terms = 3) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::uniform_int_distribution<int> mode(-2, 2);
    const int m = chart.dim();
    const int dim = rep->dim_spinor();
    struct Term {
        Spinor amp;
        Eigen::VectorXd k;
        double phase;
    };
    auto tv = std::make_shared<std::vector<Term>>();
    for (int t = 0; t < terms; ++t) {
        Term term{random_spinor(dim, gen), Eigen::VectorXd(m), 3.1 * (d(gen) + 1.0)};
        for (int i = 0; i < m; ++i)
            term.k[i] = chart.kind() == ChartKind::FlatTorus
                            ? mode(gen) * 2.0 * M_PI / chart.periods()[static_cast<std::size_t>(i)]
                            : d(gen);
        tv->push_back(std::move(term));
    }
    auto value = [tv, dim](const Point& x) {
        Spinor s = Spinor::Zero(dim);
        for (const auto& t : *tv) s += std::sin(t.k.dot(x) + t.phase) * t.amp;
        return s;
    };
    auto partial = [tv, dim](const Point& x, int axis) {
        Spinor s = Spinor::Zero(dim);
        for (const auto& t : *tv) s += t.k[axis] * std::cos(t.k.dot(x) + t.phase) * t.amp;
        return s;
    };
    return SpinorField(chart, std::move(rep), value, partial);
}

/// Single nonzero Fourier mode on the flat torus.
inline SpinorField fourier_mode_field(const Chart& torus, GammaRepPtr rep, std::mt19937_64& gen) {
    std::uniform_int_distribution<int> mode(-2, 2);
    const int m = torus.dim();
    Eigen::VectorXd k(m);
    bool nonzero = false;
    while (!nonzero)
        for (int i = 0; i < m; ++i) {
            const int n = mode(gen);
            k[i] = n * 2.0 * M_PI / torus.periods()[static_cast<std::size_t>(i)];
            if (n != 0) nonzero = true;
        }
    Spinor amp = random_spinor(rep->dim_spinor(), gen);
    amp /= amp.norm();
    auto value = [amp, k](const Point& x) { return Spinor(std::exp(kI * k.dot(x)) * amp); };
    auto partial = [amp, k](const Point& x, int axis) {
        return Spinor((kI * k[axis]) * std::exp(kI * k.dot(x)) * amp);
    };
    return SpinorField(torus, std::move(rep), value, partial);
}

} // namespace spinorlab::testing
