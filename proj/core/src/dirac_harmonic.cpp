#include "spinorlab/dirac_harmonic.hpp"

#include <cmath>
#include <stdexcept>

namespace spinorlab {

TwistedField::TwistedField(ImmersionPtr imm, std::vector<SpinorField> components)
    : imm_(std::move(imm)), components_(std::move(components)) {
    if (!imm_) throw std::invalid_argument("TwistedField: null immersion");
    if (static_cast<int>(components_.size()) != imm_->dim() + 1)
        throw std::invalid_argument("TwistedField: need m+1 components");
    for (const auto& c : components_)
        if (!(c.chart() == imm_->intrinsic_chart()))
            throw std::invalid_argument("TwistedField: component chart does not match immersion");
}

const SpinorField& TwistedField::component(int k) const {
    if (k < 0 || k >= count()) throw std::out_of_range("TwistedField::component: index out of range");
    return components_[static_cast<std::size_t>(k)];
}

std::vector<Spinor> TwistedField::values(const Point& x) const {
    std::vector<Spinor> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.value(x));
    return out;
}

double TwistedVector::norm() const {
    double s = 0.0;
    for (const auto& c : comps) s += c.squaredNorm();
    return std::sqrt(s);
}

TwistedField build_phi(const SpinorField& psi, const SpinorField& phi, ImmersionPtr imm) {
    if (!imm) throw std::invalid_argument("build_phi: null immersion");
    if (!(psi.chart() == imm->intrinsic_chart()) || !(phi.chart() == imm->intrinsic_chart()))
        throw std::invalid_argument("build_phi: fields must live on the immersion's intrinsic chart");
    if (psi.rep().m() != imm->dim() || phi.rep().m() != imm->dim())
        throw std::invalid_argument("build_phi: representation dimension mismatch");
    const int m = imm->dim();
    std::vector<SpinorField> comps;
    comps.reserve(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j < m; ++j) {
        const Eigen::MatrixXcd g = psi.rep().gamma(j);
        SpinorField base = psi;
        if (psi.has_analytic_partials()) {
            comps.emplace_back(
                psi.chart(), psi.rep_ptr(), [base, g](const Point& x) { return Spinor(g * base.value(x)); },
                [base, g](const Point& x, int axis) { return Spinor(g * base.partial(x, axis)); });
        } else {
            comps.emplace_back(psi.chart(), psi.rep_ptr(),
                               [base, g](const Point& x) { return Spinor(g * base.value(x)); });
        }
        comps.back() = comps.back().with_fd(psi.fd());
    }
    comps.push_back(phi);
    return TwistedField(std::move(imm), std::move(comps));
}

TwistedVector twisted_dirac_direct(const TwistedField& phi, const Point& x) {
    const HypersurfaceImmersion& imm = phi.immersion();
    return twisted_dirac_direct(phi, x, [&imm](const Point& p) { return imm.pullback_connection(p); });
}

TwistedVector twisted_dirac_direct(const TwistedField& phi, const Point& x, const PullbackConnectionFn& conn) {
    const HypersurfaceImmersion& imm = phi.immersion();
    const int m = imm.dim();
    const GammaRep& rep = phi.component(0).rep();
    const auto a = conn(x);

    std::vector<Spinor> sigma = phi.values(x);
    // gamma_j sigma_k reused by the connection contraction.
    std::vector<std::vector<Spinor>> gsigma(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        gsigma[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(m) + 1);
        for (int k = 0; k <= m; ++k)
            gsigma[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                rep.gamma(j) * sigma[static_cast<std::size_t>(k)];
    }

    TwistedVector out;
    out.comps.assign(static_cast<std::size_t>(m) + 1, Spinor::Zero(rep.dim_spinor()));
    for (int k = 0; k <= m; ++k) {
        const auto nabla = covariant_derivative_all(phi.component(k), x);
        for (int j = 0; j < m; ++j)
            out.comps[static_cast<std::size_t>(k)] += rep.gamma(j) * nabla[static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < m; ++j)
        for (int k = 0; k <= m; ++k)
            for (int l = 0; l <= m; ++l) {
                const double c = a[static_cast<std::size_t>(j)](k, l);
                if (c != 0.0)
                    out.comps[static_cast<std::size_t>(l)] += c * gsigma[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            }
    return out;
}

TwistedVector twisted_dirac_formula_general(const SpinorField& psi, const SpinorField& phi,
                                            const HypersurfaceImmersion& imm, const Point& x) {
    const int m = imm.dim();
    const GammaRep& rep = psi.rep();
    const Spinor psix = psi.value(x);
    const Spinor phix = phi.value(x);
    const Spinor dpsi = dirac(psi, x);
    const Spinor dphi = dirac(phi, x);
    const auto p = penrose_all(psi, x);
    const auto a = imm.pullback_connection(x);

    // Adapted-frame components of tr_g(nabla df) via the ambient metric.
    const Point y = imm.map(x);
    const Eigen::MatrixXd h = imm.ambient_metric(y);
    const Point trace = imm.second_fundamental_trace(x);
    const Eigen::MatrixXd push = imm.pushforward(x);
    Eigen::VectorXd trace_adapted(m + 1);
    for (int l = 0; l < m; ++l) trace_adapted[l] = trace.dot(h * push.col(l));
    trace_adapted[m] = trace.dot(h * imm.normal(x));

    TwistedVector out;
    out.comps.assign(static_cast<std::size_t>(m) + 1, Spinor::Zero(rep.dim_spinor()));
    const double coeff = (2.0 - m) / m;
    for (int l = 0; l < m; ++l)
        out.comps[static_cast<std::size_t>(l)] =
            coeff * (rep.gamma(l) * dpsi) - 2.0 * p[static_cast<std::size_t>(l)];
    out.comps[static_cast<std::size_t>(m)] = dphi;
    for (int l = 0; l <= m; ++l) out.comps[static_cast<std::size_t>(l)] -= trace_adapted[l] * psix;
    // sum_j e_j . phi (x) nabla^N_{e_j} nu, read off the normal row of the
    // adapted connection.
    for (int j = 0; j < m; ++j) {
        const Spinor gphi = rep.gamma(j) * phix;
        for (int l = 0; l <= m; ++l) {
            const double c = a[static_cast<std::size_t>(j)](m, l);
            if (c != 0.0) out.comps[static_cast<std::size_t>(l)] += c * gphi;
        }
    }
    return out;
}

TwistedVector twisted_dirac_formula_hyp(const SpinorField& psi, const SpinorField& phi,
                                        const HypersurfaceImmersion& imm, const Point& x) {
    const int m = imm.dim();
    const GammaRep& rep = psi.rep();
    const Spinor psix = psi.value(x);
    const Spinor phix = phi.value(x);
    const Spinor dpsi = dirac(psi, x);
    const Spinor dphi = dirac(phi, x);
    const auto p = penrose_all(psi, x);
    const Eigen::MatrixXd w = imm.shape(x);
    const double hmean = imm.mean_curvature(x);

    TwistedVector out;
    out.comps.assign(static_cast<std::size_t>(m) + 1, Spinor::Zero(rep.dim_spinor()));
    const double coeff = (2.0 - m) / m;
    for (int j = 0; j < m; ++j)
        out.comps[static_cast<std::size_t>(j)] = coeff * (rep.gamma(j) * dpsi) -
                                                 2.0 * p[static_cast<std::size_t>(j)] -
                                                 clifford_mul(rep, w.col(j), phix);
    out.comps[static_cast<std::size_t>(m)] = dphi - (m * hmean) * psix;
    return out;
}

namespace {

Eigen::VectorXd unit_vector(int n, int a) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[a] = 1.0;
    return e;
}

} // namespace

namespace {

Eigen::VectorXcd v_phi_direct_complex(const TwistedField& phi, const Point& x) {
    const HypersurfaceImmersion& imm = phi.immersion();
    const int m = imm.dim();
    const int n = m + 1;
    const GammaRep& rep = phi.component(0).rep();
    const AmbientSpaceform amb = imm.ambient();
    const std::vector<Spinor> sigma = phi.values(x);

    std::vector<std::vector<Spinor>> gsigma(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        gsigma[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            gsigma[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                rep.gamma(j) * sigma[static_cast<std::size_t>(k)];
    }

    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
    for (int a = 0; a < n; ++a) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < n; ++k) {
                const Eigen::VectorXd r = spaceform_curvature(amb, unit_vector(n, a), unit_vector(n, j), unit_vector(n, k));
                for (int l = 0; l < n; ++l) {
                    if (r[l] == 0.0) continue;
                    acc += r[l] * inner(gsigma[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)],
                                        sigma[static_cast<std::size_t>(l)]);
                }
            }
        v[a] = acc;
    }
    return v;
}

} // namespace

Eigen::VectorXd v_phi_direct(const TwistedField& phi, const Point& x) {
    return v_phi_direct_complex(phi, x).real();
}

double v_phi_imag_max(const TwistedField& phi, const Point& x) {
    return v_phi_direct_complex(phi, x).imag().cwiseAbs().maxCoeff();
}

Eigen::VectorXd v_phi_cross(const SpinorField& psi, const SpinorField& phi, const HypersurfaceImmersion& imm,
                            const Point& x) {
    const int m = imm.dim();
    const int n = m + 1;
    const GammaRep& rep = psi.rep();
    const AmbientSpaceform amb = imm.ambient();
    const Spinor psix = psi.value(x);
    const Spinor phix = phi.value(x);

    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (int a = 0; a < n; ++a) {
        double acc = 0.0;
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                const Eigen::VectorXd r = spaceform_curvature(amb, unit_vector(n, a), unit_vector(n, j), unit_vector(n, k));
                const double rnu = r[m];
                if (rnu == 0.0) continue;
                acc += rnu * inner(rep.gamma(j) * (rep.gamma(k) * psix), phix).real();
            }
        v[a] = 2.0 * acc;
    }
    return v;
}

Eigen::VectorXd v_phi_formula(const SpinorField& psi, const SpinorField& phi, const HypersurfaceImmersion& imm,
                              const Point& x) {
    const int m = imm.dim();
    Eigen::VectorXd v = Eigen::VectorXd::Zero(m + 1);
    v[m] = -2.0 * m * imm.ambient().c * inner(psi.value(x), phi.value(x)).real();
    return v;
}

ResidualPair residual(const SpinorField& psi, const SpinorField& phi, ImmersionPtr imm,
                      std::span<const Point> samples) {
    if (samples.empty()) throw std::invalid_argument("residual: empty sample set");
    const TwistedField field = build_phi(psi, phi, imm);
    const int m = imm->dim();
    ResidualPair out;
    for (const Point& x : samples) {
        out.dirac = std::max(out.dirac, twisted_dirac_direct(field, x).norm());
        Eigen::VectorXd mismatch = -0.5 * v_phi_direct(field, x);
        mismatch[m] += m * imm->mean_curvature(x);
        out.tension = std::max(out.tension, mismatch.norm());
    }
    return out;
}

double ConditionReport::max_residual() const {
    double r = 0.0;
    for (const auto& e : entries) r = std::max(r, e.residual);
    return r;
}

ConditionReport theorem1_conditions(const SpinorField& psi, const SpinorField& phi,
                                    const HypersurfaceImmersion& imm, const Point& x, double tolerance) {
    const int m = imm.dim();
    const GammaRep& rep = psi.rep();
    const double c = imm.ambient().c;
    const double hmean = imm.mean_curvature(x);
    const Spinor psix = psi.value(x);
    const Spinor phix = phi.value(x);
    const Spinor dphi = dirac(phi, x);

    ConditionReport report;
    report.tolerance = tolerance;

    if (m == 2) {
        report.branch = 1;
        const Eigen::MatrixXd w = imm.shape(x);
        // Pointwise eigenframe of W, eigenvalues ordered descending; for a
        // (near-)umbilical point any orthonormal frame works, tie-break by
        // coordinate order.
        Eigen::VectorXd top = unit_vector(2, 0), bottom = unit_vector(2, 1);
        double kappa1 = w(0, 0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(w);
        if (eig.eigenvalues()[1] - eig.eigenvalues()[0] > 1e-12) {
            kappa1 = eig.eigenvalues()[1];
            top = eig.eigenvectors().col(1);
            bottom = eig.eigenvectors().col(0);
        }
        const auto nabla = covariant_derivative_all(psi, x);
        const Spinor nabla_top = top[0] * nabla[0] + top[1] * nabla[1];
        const Spinor nabla_bottom = bottom[0] * nabla[0] + bottom[1] * nabla[1];
        const Spinor eigencond =
            clifford_mul(rep, top, nabla_top) - clifford_mul(rep, bottom, nabla_bottom) - kappa1 * phix;
        report.entries = {
            {"mean-curvature-zero", std::abs(hmean)},
            {"dirac-phi", dphi.norm()},
            {"curvature-inner-product", std::abs(c * inner(psix, phix).real())},
            {"principal-direction", eigencond.norm()},
        };
    } else {
        report.branch = 2;
        const Eigen::MatrixXd w = imm.shape(x);
        const double umbilic = (w - hmean * Eigen::MatrixXd::Identity(m, m)).norm();
        if (umbilic > 1e-8)
            throw std::invalid_argument("theorem1_conditions: immersion is not totally umbilical at the sample point");
        const Spinor dpsi = dirac(psi, x);
        const auto p = penrose_all(psi, x);
        double pnorm2 = 0.0;
        for (const auto& pi : p) pnorm2 += pi.squaredNorm();
        report.entries = {
            {"mean-curvature-balance", std::abs(hmean + c * inner(psix, phix).real())},
            {"dirac-phi", (dphi - (m * hmean) * psix).norm()},
            {"dirac-psi", (dpsi + (m * hmean / (m - 2.0)) * phix).norm()},
            {"penrose", std::sqrt(pnorm2)},
        };
    }
    report.pass = report.max_residual() <= tolerance;
    return report;
}

KillingSpinorPair construct_theorem2_pair(int m, const Spinor& seed, GammaRepPtr rep) {
    if (m < 3) throw std::invalid_argument("construct_theorem2_pair: m must be >= 3");
    if (seed.norm() == 0.0) throw std::invalid_argument("construct_theorem2_pair: zero seed");
    if (!rep) rep = build_gamma(m);
    if (seed.size() != rep->dim_spinor()) throw std::invalid_argument("construct_theorem2_pair: seed length mismatch");

    const double kappa = -4.0 / (m + 2);
    ImmersionPtr imm = umbilic_hyperbolic(m, kappa);
    const Chart chart = imm->intrinsic_chart();
    const Complex lambda = kI / std::sqrt(m + 2.0);

    Point x0 = Point::Zero(m);
    x0[m - 1] = 1.0;

    const Spinor seed_minus = (kI / (2.0 * std::sqrt(m + 2.0) * seed.squaredNorm())) * seed;
    SpinorField psi_plus = killing_transport(chart, rep, lambda, x0, seed);
    SpinorField psi_minus = killing_transport(chart, rep, -lambda, x0, seed_minus);

    KillingSpinorPair pair{imm,
                           psi_plus + psi_minus,
                           (psi_plus - psi_minus).scaled(kI * std::sqrt(m - 2.0)),
                           std::move(psi_plus),
                           std::move(psi_minus),
                           x0,
                           lambda};
    return pair;
}

std::pair<SpinorField, SpinorField> parallel_spinor_pair(ImmersionPtr imm, GammaRepPtr rep, const Spinor& seed) {
    if (!imm) throw std::invalid_argument("parallel_spinor_pair: null immersion");
    const ChartKind kind = imm->intrinsic_chart().kind();
    if (kind != ChartKind::Euclidean && kind != ChartKind::FlatTorus)
        throw std::invalid_argument("parallel_spinor_pair: intrinsic chart must be flat");
    const Point probe = Point::Zero(imm->dim());
    if (std::abs(imm->mean_curvature(probe)) > 1e-12)
        throw std::invalid_argument("parallel_spinor_pair: immersion must be minimal");
    if (seed.norm() == 0.0) throw std::invalid_argument("parallel_spinor_pair: zero seed");
    return {SpinorField::constant(imm->intrinsic_chart(), rep, seed), SpinorField::zero(imm->intrinsic_chart(), rep)};
}

TwistedField corollary_surface_pair(const SpinorField& psi_twistor, ImmersionPtr imm,
                                    std::span<const Point> check_points, double tolerance) {
    if (!imm) throw std::invalid_argument("corollary_surface_pair: null immersion");
    if (imm->dim() != 2) throw std::invalid_argument("corollary_surface_pair: requires a surface (m = 2)");
    for (const Point& x : check_points) {
        if (std::abs(imm->mean_curvature(x)) > tolerance)
            throw std::runtime_error("corollary_surface_pair: immersion is not minimal at a check point");
        const auto p = penrose_all(psi_twistor, x);
        double pnorm2 = 0.0;
        for (const auto& pi : p) pnorm2 += pi.squaredNorm();
        if (std::sqrt(pnorm2) > tolerance)
            throw std::runtime_error("corollary_surface_pair: Penrose residual exceeds tolerance at a check point");
    }
    return build_phi(psi_twistor, SpinorField::zero(imm->intrinsic_chart(), psi_twistor.rep_ptr()), imm);
}

RigidityReport clifford_torus_rigidity_check(const SpinorField& psi, const SpinorField& phi, ImmersionPtr imm,
                                             std::span<const Point> samples, double condition_tolerance,
                                             double rigidity_tolerance) {
    if (!imm || imm->kind() != ImmersionKind::CliffordTorus)
        throw std::invalid_argument("clifford_torus_rigidity_check: immersion must be the Clifford torus");
    if (samples.empty()) throw std::invalid_argument("clifford_torus_rigidity_check: empty sample set");

    RigidityReport report;
    for (const Point& x : samples) {
        const ConditionReport cond = theorem1_conditions(psi, phi, *imm, x, condition_tolerance);
        report.condition_residual = std::max(report.condition_residual, cond.max_residual());
        const auto nabla = covariant_derivative_all(psi, x);
        for (const auto& n : nabla) report.grad_residual = std::max(report.grad_residual, n.norm());
        report.phi_norm = std::max(report.phi_norm, phi.value(x).norm());
    }
    report.accepted = report.condition_residual <= condition_tolerance;
    report.passes = report.accepted && report.grad_residual <= rigidity_tolerance &&
                    report.phi_norm <= rigidity_tolerance;
    return report;
}

} // namespace spinorlab
