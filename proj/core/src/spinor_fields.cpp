#include "spinorlab/spinor_fields.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace spinorlab {

SpinorField::SpinorField(Chart chart, GammaRepPtr rep, Value value)
    : chart_(std::move(chart)), rep_(std::move(rep)), value_(std::move(value)) {
    if (!rep_) throw std::invalid_argument("SpinorField: null representation");
    if (rep_->m() != chart_.dim()) throw std::invalid_argument("SpinorField: representation dimension does not match chart");
}

SpinorField::SpinorField(Chart chart, GammaRepPtr rep, Value value, Partial partial)
    : SpinorField(std::move(chart), std::move(rep), std::move(value)) {
    partial_ = std::move(partial);
}

SpinorField SpinorField::constant(const Chart& chart, GammaRepPtr rep, const Spinor& psi0) {
    if (psi0.size() != rep->dim_spinor()) throw std::invalid_argument("SpinorField::constant: spinor length mismatch");
    const Eigen::Index d = psi0.size();
    return SpinorField(
        chart, rep, [psi0](const Point&) { return psi0; },
        [d](const Point&, int) { return Spinor(Spinor::Zero(d)); });
}

SpinorField SpinorField::zero(const Chart& chart, GammaRepPtr rep) {
    return constant(chart, rep, Spinor::Zero(rep->dim_spinor()));
}

Spinor SpinorField::value(const Point& x) const {
    chart_.require_in_domain(x);
    return value_(x);
}

Spinor SpinorField::partial(const Point& x, int axis) const {
    if (axis < 0 || axis >= chart_.dim()) throw std::out_of_range("SpinorField::partial: axis out of range");
    if (partial_) return (*partial_)(x, axis);
    const double h = fd_.step;
    if (!(h > 1e-12)) throw std::invalid_argument("SpinorField::partial: FD step underflow");
    chart_.require_in_domain(x, 10.0 * h);
    auto central = [&](double step) {
        Point xp = x, xm = x;
        xp[axis] += step;
        xm[axis] -= step;
        return Spinor(((value_(xp) - value_(xm)) / (2.0 * step)).eval());
    };
    if (!fd_.richardson) return central(h);
    const Spinor dh = central(h);
    const Spinor dh2 = central(0.5 * h);
    return (4.0 * dh2 - dh) / 3.0;
}

SpinorField SpinorField::with_fd(FdScheme scheme) const {
    SpinorField out = *this;
    out.fd_ = scheme;
    return out;
}

SpinorField SpinorField::scaled(Complex a) const {
    SpinorField out = *this;
    Value v = value_;
    out.value_ = [v, a](const Point& x) { return Spinor(a * v(x)); };
    if (partial_) {
        Partial p = *partial_;
        out.partial_ = [p, a](const Point& x, int axis) { return Spinor(a * p(x, axis)); };
    }
    return out;
}

namespace {

void require_compatible(const SpinorField& a, const SpinorField& b) {
    if (!(a.chart() == b.chart())) throw std::invalid_argument("SpinorField: charts differ");
    if (a.rep().m() != b.rep().m() || a.rep().dim_spinor() != b.rep().dim_spinor())
        throw std::invalid_argument("SpinorField: representations differ");
}

} // namespace

SpinorField operator+(const SpinorField& a, const SpinorField& b) {
    require_compatible(a, b);
    auto va = a.value_;
    auto vb = b.value_;
    SpinorField out = a;
    out.value_ = [va, vb](const Point& x) { return Spinor(va(x) + vb(x)); };
    if (a.partial_ && b.partial_) {
        auto pa = *a.partial_;
        auto pb = *b.partial_;
        out.partial_ = [pa, pb](const Point& x, int axis) { return Spinor(pa(x, axis) + pb(x, axis)); };
    } else {
        out.partial_.reset();
    }
    return out;
}

SpinorField operator-(const SpinorField& a, const SpinorField& b) { return a + b.scaled(-1.0); }

std::vector<Spinor> covariant_derivative_all(const SpinorField& field, const Point& x) {
    const Chart& chart = field.chart();
    const GammaRep& rep = field.rep();
    const int m = chart.dim();
    const double finv = 1.0 / chart.conformal_factor(x);
    const auto omega = chart.spin_connection(x);
    const Spinor psi = field.value(x);

    // gamma_k psi reused across all directions.
    std::vector<Spinor> gpsi(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) gpsi[static_cast<std::size_t>(k)] = rep.gamma(k) * psi;

    std::vector<Spinor> out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        Spinor nabla = finv * field.partial(x, i);
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                const double w = omega[static_cast<std::size_t>(i)](j, k);
                if (w != 0.0) nabla += 0.25 * w * (rep.gamma(j) * gpsi[static_cast<std::size_t>(k)]);
            }
        out[static_cast<std::size_t>(i)] = std::move(nabla);
    }
    return out;
}

Spinor covariant_derivative(const SpinorField& field, const Point& x, int i) {
    if (i < 0 || i >= field.chart().dim()) throw std::out_of_range("covariant_derivative: frame index out of range");
    return covariant_derivative_all(field, x)[static_cast<std::size_t>(i)];
}

Spinor dirac(const SpinorField& field, const Point& x) {
    const auto nabla = covariant_derivative_all(field, x);
    Spinor out = Spinor::Zero(field.rep().dim_spinor());
    for (int j = 0; j < field.chart().dim(); ++j) out += field.rep().gamma(j) * nabla[static_cast<std::size_t>(j)];
    return out;
}

std::vector<Spinor> penrose_all(const SpinorField& field, const Point& x) {
    const int m = field.chart().dim();
    const auto nabla = covariant_derivative_all(field, x);
    Spinor d = Spinor::Zero(field.rep().dim_spinor());
    for (int j = 0; j < m; ++j) d += field.rep().gamma(j) * nabla[static_cast<std::size_t>(j)];
    std::vector<Spinor> out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        out[static_cast<std::size_t>(i)] = nabla[static_cast<std::size_t>(i)] + (1.0 / m) * (field.rep().gamma(i) * d);
    return out;
}

Spinor penrose(const SpinorField& field, const Point& x, int i) {
    if (i < 0 || i >= field.chart().dim()) throw std::out_of_range("penrose: frame index out of range");
    return penrose_all(field, x)[static_cast<std::size_t>(i)];
}

SpinorField dirac_field(const SpinorField& field, FdScheme outer) {
    SpinorField base = field;
    return SpinorField(field.chart(), field.rep_ptr(), [base](const Point& x) { return dirac(base, x); })
        .with_fd(outer);
}

namespace {

// Coordinate-derivative matrix of the Killing equation along axis d:
//   d psi / ds = F(x) [ lambda gamma_d - (1/4) sum_{jk} omega_d^{jk} gamma_j gamma_k ] psi
// with s the coordinate value on the segment.
Eigen::MatrixXcd transport_matrix(const Chart& chart, const GammaRep& rep, Complex lambda, const Point& x, int axis) {
    const int m = chart.dim();
    const double f = chart.conformal_factor(x);
    const auto omega = chart.spin_connection(x);
    Eigen::MatrixXcd a = lambda * rep.gamma(axis);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
            const double w = omega[static_cast<std::size_t>(axis)](j, k);
            if (w != 0.0) a -= 0.25 * w * (rep.gamma(j) * rep.gamma(k));
        }
    return f * a;
}

Spinor transport_segment(const Chart& chart, const GammaRep& rep, Complex lambda, Point x, int axis, double target,
                         Spinor psi, double max_step) {
    const double start = x[axis];
    const double length = std::abs(target - start);
    if (length < 1e-15) {
        x[axis] = target;
        return psi;
    }
    const int n = static_cast<int>(std::ceil(length / max_step));
    const double h = (target - start) / n;
    auto at = [&](double s) {
        Point y = x;
        y[axis] = s;
        return y;
    };
    double s = start;
    for (int step = 0; step < n; ++step) {
        const Eigen::MatrixXcd a1 = transport_matrix(chart, rep, lambda, at(s), axis);
        const Eigen::MatrixXcd a2 = transport_matrix(chart, rep, lambda, at(s + 0.5 * h), axis);
        const Eigen::MatrixXcd a4 = transport_matrix(chart, rep, lambda, at(s + h), axis);
        const Spinor k1 = a1 * psi;
        const Spinor k2 = a2 * (psi + 0.5 * h * k1);
        const Spinor k3 = a2 * (psi + 0.5 * h * k2);
        const Spinor k4 = a4 * (psi + h * k3);
        psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        s = start + (step + 1) * h;
    }
    return psi;
}

} // namespace

SpinorField killing_transport(const Chart& chart, GammaRepPtr rep, Complex lambda, const Point& x0,
                              const Spinor& psi0, const TransportOptions& opt) {
    chart.require_in_domain(x0);
    if (psi0.size() != rep->dim_spinor()) throw std::invalid_argument("killing_transport: spinor length mismatch");
    if (chart.kind() == ChartKind::HyperbolicHalfspace && std::abs(lambda.real()) > 1e-14)
        throw std::invalid_argument("killing_transport: hyperbolic charts need purely imaginary lambda");
    if (chart.kind() == ChartKind::SphereStereographic && std::abs(lambda.imag()) > 1e-14)
        throw std::invalid_argument("killing_transport: sphere charts need purely real lambda");
    if (!(opt.max_step > 0.0 && opt.max_step <= 1e-3))
        throw std::invalid_argument("killing_transport: max_step must lie in (0, 1e-3]");

    std::vector<int> order = opt.axis_order;
    if (order.empty()) {
        order.resize(static_cast<std::size_t>(chart.dim()));
        for (int i = 0; i < chart.dim(); ++i) order[static_cast<std::size_t>(i)] = i;
    }
    if (static_cast<int>(order.size()) != chart.dim())
        throw std::invalid_argument("killing_transport: axis order must list every coordinate once");

    const Point base = x0;
    const Spinor seed = psi0;
    const double max_step = opt.max_step;
    const Chart ch = chart;
    const GammaRepPtr rp = rep;

    auto eval = [ch, rp, lambda, base, seed, order, max_step](const Point& target) {
        ch.require_in_domain(target);
        Point x = base;
        Spinor psi = seed;
        for (int axis : order) {
            // Segment endpoints must stay inside the chart; for the
            // half-space this holds iff both endpoint heights are positive.
            Point end = x;
            end[axis] = target[axis];
            if (!ch.in_domain(end)) throw std::domain_error("killing_transport: path exits chart domain");
            psi = transport_segment(ch, *rp, lambda, x, axis, target[axis], std::move(psi), max_step);
            x = end;
        }
        return psi;
    };
    return SpinorField(chart, rep, eval);
}

SpinorField twistor_from_holomorphic(std::function<Complex(Complex)> hol, std::function<Complex(Complex)> antihol,
                                     GammaRepPtr rep) {
    if (rep->m() != 2) throw std::invalid_argument("twistor_from_holomorphic: representation must be two-dimensional");
    const Chart chart = Chart::euclidean(2);
    auto value = [hol, antihol](const Point& x) {
        const Complex z{x[0], x[1]};
        Spinor psi(2);
        psi[0] = antihol(std::conj(z));
        psi[1] = hol(z);
        return psi;
    };
    return SpinorField(chart, rep, value);
}

} // namespace spinorlab
