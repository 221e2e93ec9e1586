#include "spinorlab/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "spinorlab/dirac_harmonic.hpp"
#include "spinorlab/fd_oracles.hpp"

namespace spinorlab {

SuiteConfig SuiteConfig::from_json(const std::string& text) {
    SuiteConfig cfg;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed suite config: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("malformed suite config: expected a JSON object");
    if (j.contains("m")) cfg.m = j.at("m").get<int>();
    if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("h")) {
        if (j.at("h").is_array())
            cfg.h_list = j.at("h").get<std::vector<double>>();
        else
            cfg.h = j.at("h").get<double>();
    }
    if (j.contains("h_list")) cfg.h_list = j.at("h_list").get<std::vector<double>>();
    if (cfg.m < 1) throw std::invalid_argument("suite config: m must be >= 1");
    if (cfg.samples < 1) throw std::invalid_argument("suite config: samples must be >= 1");
    if (!(cfg.h > 0.0)) throw std::invalid_argument("suite config: h must be positive");
    return cfg;
}

std::string SuiteConfig::to_json() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["samples"] = samples;
    j["seed"] = seed;
    j["h"] = h;
    j["h_list"] = h_list;
    return j.dump();
}

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double a, double b) {
        std::uniform_real_distribution<double> d(a, b);
        return d(gen);
    }
    int integer(int a, int b) {
        std::uniform_int_distribution<int> d(a, b);
        return d(gen);
    }
    Complex cscalar() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }
    Spinor spinor(int dim) {
        Spinor s(dim);
        for (int i = 0; i < dim; ++i) s[i] = cscalar();
        return s;
    }
    Point point(const Chart& chart) {
        const int m = chart.dim();
        Point x(m);
        switch (chart.kind()) {
            case ChartKind::Euclidean:
                for (int i = 0; i < m; ++i) x[i] = uniform(-1.0, 1.0);
                break;
            case ChartKind::HyperbolicHalfspace:
                for (int i = 0; i + 1 < m; ++i) x[i] = uniform(-0.4, 0.4);
                x[m - 1] = uniform(0.6, 1.6);
                break;
            case ChartKind::SphereStereographic:
                for (int i = 0; i < m; ++i) x[i] = uniform(-0.8, 0.8);
                break;
            case ChartKind::FlatTorus:
                for (int i = 0; i < m; ++i) x[i] = uniform(0.0, chart.periods()[static_cast<std::size_t>(i)]);
                break;
        }
        return x;
    }
    std::vector<Point> points(const Chart& chart, int n) {
        std::vector<Point> out;
        out.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) out.push_back(point(chart));
        return out;
    }
};

// Smooth field sum_t amp_t sin(k_t . x + c_t) with analytic partials.  On
// torus charts the wave vectors are period-commensurate.
SpinorField random_trig_field(const Chart& chart, GammaRepPtr rep, Rng& rng, int terms = 3,
                              double freq_scale = 1.0) {
    const int m = chart.dim();
    const int dim = rep->dim_spinor();
    struct Term {
        Spinor amp;
        Eigen::VectorXd k;
        double phase;
    };
    auto terms_vec = std::make_shared<std::vector<Term>>();
    for (int t = 0; t < terms; ++t) {
        Term term{rng.spinor(dim), Eigen::VectorXd(m), rng.uniform(0.0, 6.28)};
        for (int i = 0; i < m; ++i) {
            if (chart.kind() == ChartKind::FlatTorus) {
                int n = rng.integer(-2, 2);
                term.k[i] = n * 2.0 * M_PI / chart.periods()[static_cast<std::size_t>(i)];
            } else {
                term.k[i] = rng.uniform(-freq_scale, freq_scale);
            }
        }
        terms_vec->push_back(std::move(term));
    }
    auto value = [terms_vec, dim](const Point& x) {
        Spinor s = Spinor::Zero(dim);
        for (const auto& t : *terms_vec) s += std::sin(t.k.dot(x) + t.phase) * t.amp;
        return s;
    };
    auto partial = [terms_vec, dim](const Point& x, int axis) {
        Spinor s = Spinor::Zero(dim);
        for (const auto& t : *terms_vec) s += t.k[axis] * std::cos(t.k.dot(x) + t.phase) * t.amp;
        return s;
    };
    return SpinorField(chart, std::move(rep), value, partial);
}

// Single nonzero Fourier mode amp * exp(i k . x) on the flat torus.
SpinorField fourier_mode_field(const Chart& torus, GammaRepPtr rep, Rng& rng) {
    const int m = torus.dim();
    const int dim = rep->dim_spinor();
    Eigen::VectorXd k(m);
    bool nonzero = false;
    while (!nonzero) {
        for (int i = 0; i < m; ++i) {
            const int n = rng.integer(-2, 2);
            k[i] = n * 2.0 * M_PI / torus.periods()[static_cast<std::size_t>(i)];
            if (n != 0) nonzero = true;
        }
    }
    Spinor amp = rng.spinor(dim);
    amp /= amp.norm();
    auto value = [amp, k](const Point& x) { return Spinor(std::exp(kI * k.dot(x)) * amp); };
    auto partial = [amp, k](const Point& x, int axis) {
        return Spinor((kI * k[axis]) * std::exp(kI * k.dot(x)) * amp);
    };
    return SpinorField(torus, std::move(rep), value, partial);
}

// Copy evaluating derivatives by central differences only.
SpinorField numeric_copy(const SpinorField& field, double h) {
    SpinorField base = field;
    return SpinorField(field.chart(), field.rep_ptr(), [base](const Point& x) { return base.value(x); })
        .with_fd({h, false});
}

struct Checks {
    std::vector<CheckRecord>& out;
    void add(std::string name, double residual, double tolerance, std::string detail = "") {
        out.push_back({std::move(name), residual, tolerance, residual <= tolerance, std::move(detail)});
    }
    // For lower-bound requirements: passes iff value >= bound.
    void add_at_least(std::string name, double value, double bound) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "value=%.6g, required>=%.3g", value, bound);
        out.push_back({std::move(name), std::max(0.0, bound - value), 0.0, value >= bound, buf});
    }
};

double max_norm(const Eigen::MatrixXd& a) { return a.cwiseAbs().maxCoeff(); }

TwistedVector tv_diff(const TwistedVector& a, const TwistedVector& b) {
    TwistedVector d;
    d.comps.reserve(a.comps.size());
    for (std::size_t i = 0; i < a.comps.size(); ++i) d.comps.push_back(a.comps[i] - b.comps[i]);
    return d;
}

// ---------------------------------------------------------------------------
// clifford: exact algebra of the representation for every dimension up to m.
// ---------------------------------------------------------------------------
void run_clifford(const SuiteConfig& cfg, Checks& checks, Rng& rng) {
    for (int m = 1; m <= cfg.m; ++m) {
        const GammaRepPtr rep = build_gamma(m);
        const int dim = rep->dim_spinor();
        char name[64];

        double anti = 0.0;
        double skew = 0.0;
        for (int j = 0; j < m; ++j) {
            skew = std::max(skew, (rep->gamma(j).adjoint() + rep->gamma(j)).cwiseAbs().maxCoeff());
            for (int k = 0; k < m; ++k) {
                Eigen::MatrixXcd acom = rep->gamma(j) * rep->gamma(k) + rep->gamma(k) * rep->gamma(j);
                if (j == k) acom += 2.0 * Eigen::MatrixXcd::Identity(dim, dim);
                anti = std::max(anti, acom.cwiseAbs().maxCoeff());
            }
        }
        std::snprintf(name, sizeof(name), "anticommutator-m%d", m);
        checks.add(name, anti, 0.0);
        std::snprintf(name, sizeof(name), "skew-hermitian-m%d", m);
        checks.add(name, skew, 0.0);

        if (m >= 3) {
            double cyc = 0.0;
            for (int l = 0; l < m; ++l)
                for (int j = 0; j < m; ++j)
                    for (int k = 0; k < m; ++k) {
                        if (l == j || j == k || l == k) continue;
                        const Eigen::MatrixXcd p = rep->gamma(l) * rep->gamma(j) * rep->gamma(k);
                        cyc = std::max(cyc, (p - rep->gamma(k) * rep->gamma(l) * rep->gamma(j)).cwiseAbs().maxCoeff());
                        cyc = std::max(cyc, (p - rep->gamma(j) * rep->gamma(k) * rep->gamma(l)).cwiseAbs().maxCoeff());
                    }
            std::snprintf(name, sizeof(name), "cyclic-triples-m%d", m);
            checks.add(name, cyc, 0.0);
        }

        double skew_inner = 0.0, square = 0.0, re_inner = 0.0, triple = 0.0;
        for (int draw = 0; draw < cfg.samples; ++draw) {
            const Spinor psi = rng.spinor(dim);
            const Spinor phi = rng.spinor(dim);
            Eigen::VectorXd v(m);
            for (int i = 0; i < m; ++i) v[i] = rng.uniform(-1.0, 1.0);
            v /= v.norm();
            square = std::max(square, (clifford_mul(*rep, v, clifford_mul(*rep, v, psi)) + psi).norm());
            for (int j = 0; j < m; ++j) {
                const Spinor gpsi = rep->gamma(j) * psi;
                skew_inner = std::max(skew_inner, std::abs(inner(gpsi, phi) + inner(psi, rep->gamma(j) * phi)));
                re_inner = std::max(re_inner, std::abs(inner(gpsi, psi).real()));
                for (int l = 0; l < m; ++l) {
                    // two coinciding indices (l, j, j)
                    triple = std::max(triple,
                                      std::abs(inner(rep->gamma(l) * (rep->gamma(j) * gpsi), psi).real()));
                    // (l, j, l) with the middle index distinct
                    triple = std::max(
                        triple, std::abs(inner(rep->gamma(l) * (rep->gamma(j) * (rep->gamma(l) * psi)), psi).real()));
                }
            }
        }
        std::snprintf(name, sizeof(name), "unit-square-m%d", m);
        checks.add(name, square, 1e-12);
        std::snprintf(name, sizeof(name), "skew-inner-m%d", m);
        checks.add(name, skew_inner, 1e-12);
        std::snprintf(name, sizeof(name), "re-inner-zero-m%d", m);
        checks.add(name, re_inner, 1e-12);
        std::snprintf(name, sizeof(name), "triple-coincide-m%d", m);
        checks.add(name, triple, 1e-12);
    }
}

// ---------------------------------------------------------------------------
// connection: analytic chart data against finite-difference oracles.
// ---------------------------------------------------------------------------
void run_connection(const SuiteConfig& cfg, Checks& checks, Rng& rng) {
    const double period = 2.0 * M_PI / std::sqrt(2.0);
    const std::vector<std::pair<std::string, Chart>> charts = {
        {"euclidean", Chart::euclidean(3)},
        {"hyperbolic", Chart::hyperbolic_halfspace(3, -1.0)},
        {"hyperbolic-k-0.8", Chart::hyperbolic_halfspace(3, -0.8)},
        {"sphere", Chart::sphere_stereographic(3, 1.0)},
        {"torus", Chart::flat_torus({period, period})},
    };
    const double h = cfg.h;
    const double hcurv = 1e-3;

    for (const auto& [label, chart] : charts) {
        const int m = chart.dim();
        double christoffel_resid = 0.0, spin_resid = 0.0, compat_resid = 0.0;
        double sectional_resid = 0.0, scalar_resid = 0.0, frame_resid = 0.0;
        for (int s = 0; s < cfg.samples; ++s) {
            const Point x = rng.point(chart);
            const auto gamma = chart.christoffel(x);
            const auto gamma_fd = fd_christoffel(chart, x, h);
            for (int i = 0; i < m; ++i)
                christoffel_resid = std::max(christoffel_resid,
                                             max_norm(Eigen::MatrixXd(gamma[static_cast<std::size_t>(i)] -
                                                                      gamma_fd[static_cast<std::size_t>(i)])));

            const auto omega = chart.spin_connection(x);
            const auto omega_fd = fd_spin_connection(chart, x, h);
            for (int i = 0; i < m; ++i)
                spin_resid = std::max(spin_resid, max_norm(Eigen::MatrixXd(omega[static_cast<std::size_t>(i)] -
                                                                           omega_fd[static_cast<std::size_t>(i)])));

            // metric compatibility: d_k g_ij = Gamma^l_{ki} g_lj + Gamma^l_{kj} g_li
            const Eigen::MatrixXd g = chart.metric(x);
            for (int k = 0; k < m; ++k) {
                const Eigen::MatrixXd dg = fd_metric_partial(chart, x, k, h);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) {
                        double rhs = 0.0;
                        for (int l = 0; l < m; ++l)
                            rhs += gamma[static_cast<std::size_t>(l)](k, i) * g(l, j) +
                                   gamma[static_cast<std::size_t>(l)](k, j) * g(l, i);
                        compat_resid = std::max(compat_resid, std::abs(dg(i, j) - rhs));
                    }
            }

            // orthonormality of the frame under g
            const Eigen::MatrixXd frame = chart.frame(x);
            frame_resid = std::max(
                frame_resid, max_norm(Eigen::MatrixXd(frame.transpose() * g * frame - Eigen::MatrixXd::Identity(m, m))));

            if (m >= 2) {
                const int i = rng.integer(0, m - 1);
                int j = rng.integer(0, m - 2);
                if (j >= i) ++j;
                sectional_resid =
                    std::max(sectional_resid, std::abs(fd_sectional_curvature(chart, x, i, j, hcurv) - chart.curvature()));
            }
            scalar_resid = std::max(scalar_resid, std::abs(fd_scalar_curvature(chart, x, hcurv) - chart.scalar_curvature(x)));
        }
        checks.add("christoffel-vs-fd-" + label, christoffel_resid, 1e-6);
        checks.add("spin-connection-vs-fd-" + label, spin_resid, 1e-6);
        checks.add("metric-compatibility-" + label, compat_resid, 1e-6);
        checks.add("frame-orthonormal-" + label, frame_resid, 1e-12);
        checks.add("sectional-vs-kappa-" + label, sectional_resid, 1e-4);
        checks.add("scalar-curvature-vs-fd-" + label, scalar_resid, 1e-4);
    }
}

// ---------------------------------------------------------------------------
// vphi-triple: the curvature pairing assembled three ways.
// ---------------------------------------------------------------------------
void run_vphi_triple(const SuiteConfig& cfg, Checks& checks, Rng& rng) {
    std::vector<std::pair<std::string, ImmersionPtr>> imms = {
        {"umbilic-m3", umbilic_hyperbolic(3, -4.0 / 5.0)},
        {"umbilic-m3-k-0.5", umbilic_hyperbolic(3, -0.5)},
        {"umbilic-m4", umbilic_hyperbolic(4, -4.0 / 6.0)},
        {"umbilic-m5", umbilic_hyperbolic(5, -4.0 / 7.0)},
        {"clifford-torus", clifford_torus()},
    };
    for (const auto& [label, imm] : imms) {
        const int m = imm->dim();
        const GammaRepPtr rep = build_gamma(m);
        const Chart& chart = imm->intrinsic_chart();
        double dc = 0.0, df = 0.0, cf = 0.0, zero_phi = 0.0, imag = 0.0;
        for (int draw = 0; draw < cfg.samples; ++draw) {
            const Point x = rng.point(chart);
            const SpinorField psi = SpinorField::constant(chart, rep, rng.spinor(rep->dim_spinor()));
            const SpinorField phi = SpinorField::constant(chart, rep, rng.spinor(rep->dim_spinor()));
            const TwistedField field = build_phi(psi, phi, imm);
            const Eigen::VectorXd direct = v_phi_direct(field, x);
            const Eigen::VectorXd cross = v_phi_cross(psi, phi, *imm, x);
            const Eigen::VectorXd formula = v_phi_formula(psi, phi, *imm, x);
            dc = std::max(dc, (direct - cross).cwiseAbs().maxCoeff());
            df = std::max(df, (direct - formula).cwiseAbs().maxCoeff());
            cf = std::max(cf, (cross - formula).cwiseAbs().maxCoeff());
            imag = std::max(imag, v_phi_imag_max(field, x));

            const TwistedField no_phi = build_phi(psi, SpinorField::zero(chart, rep), imm);
            zero_phi = std::max(zero_phi, v_phi_direct(no_phi, x).cwiseAbs().maxCoeff());
        }
        checks.add("direct-vs-cross-" + label, dc, 1e-8);
        checks.add("direct-vs-formula-" + label, df, 1e-8);
        checks.add("cross-vs-formula-" + label, cf, 1e-8);
        checks.add("vanishing-without-phi-" + label, zero_phi, 1e-10);
        checks.add("imag-part-" + label, imag, 1e-10);
    }
}

// ---------------------------------------------------------------------------
// lemma-cross: the twisted Dirac operator, direct definition against the two
// expansion formulas, plus the convergence order of the FD route.
// ---------------------------------------------------------------------------
void run_lemma_cross(const SuiteConfig& cfg, Checks& checks, Rng& rng) {
    std::vector<std::pair<std::string, ImmersionPtr>> imms = {
        {"flat-m3", flat_hyperplane(3)},
        {"umbilic-m3", umbilic_hyperbolic(3, -0.8)},
        {"umbilic-m4", umbilic_hyperbolic(4, -4.0 / 6.0)},
        {"clifford-torus", clifford_torus()},
    };
    const int pts = std::min(cfg.samples, 10);
    for (const auto& [label, imm] : imms) {
        const int m = imm->dim();
        const GammaRepPtr rep = build_gamma(m);
        const Chart& chart = imm->intrinsic_chart();
        const SpinorField psi = random_trig_field(chart, rep, rng);
        const SpinorField phi = random_trig_field(chart, rep, rng);
        const TwistedField field_fd = build_phi(numeric_copy(psi, cfg.h), numeric_copy(phi, cfg.h), imm);

        double dg = 0.0, dh = 0.0, gh = 0.0;
        for (int s = 0; s < pts; ++s) {
            const Point x = rng.point(chart);
            const TwistedVector direct = twisted_dirac_direct(field_fd, x);
            const TwistedVector general = twisted_dirac_formula_general(psi, phi, *imm, x);
            const TwistedVector hyp = twisted_dirac_formula_hyp(psi, phi, *imm, x);
            dg = std::max(dg, tv_diff(direct, general).norm());
            dh = std::max(dh, tv_diff(direct, hyp).norm());
            gh = std::max(gh, tv_diff(general, hyp).norm());
        }
        checks.add("direct-vs-general-" + label, dg, 1e-5);
        checks.add("direct-vs-hyp-" + label, dh, 1e-5);
        checks.add("general-vs-hyp-" + label, gh, 1e-10);
    }

    // Transported Killing-sum fields: both routes finite-difference.
    {
        const KillingSpinorPair pair = construct_theorem2_pair(3, Spinor(rng.spinor(2)));
        const Chart& chart = pair.imm->intrinsic_chart();
        const TwistedField field = build_phi(pair.psi, pair.phi, pair.imm);
        double dh = 0.0;
        for (int s = 0; s < std::min(pts, 5); ++s) {
            const Point x = rng.point(chart);
            dh = std::max(dh, tv_diff(twisted_dirac_direct(field, x),
                                      twisted_dirac_formula_hyp(pair.psi, pair.phi, *pair.imm, x))
                                  .norm());
        }
        checks.add("direct-vs-hyp-killing-m3", dh, 1e-5);
    }

    // Convergence of the FD disagreement on a curved immersion.
    {
        const ImmersionPtr imm = umbilic_hyperbolic(3, -0.8);
        const Chart& chart = imm->intrinsic_chart();
        const GammaRepPtr rep = build_gamma(3);
        const SpinorField psi = random_trig_field(chart, rep, rng);
        const SpinorField phi = random_trig_field(chart, rep, rng);
        const std::vector<Point> xs = rng.points(chart, 3);
        std::vector<double> errs;
        for (double h : cfg.h_list) {
            const TwistedField field_fd = build_phi(numeric_copy(psi, h), numeric_copy(phi, h), imm);
            double err = 0.0;
            for (const Point& x : xs)
                err = std::max(err, tv_diff(twisted_dirac_direct(field_fd, x),
                                            twisted_dirac_formula_hyp(psi, phi, *imm, x))
                                        .norm());
            errs.push_back(err);
        }
        const double slope = fit_loglog_slope(cfg.h_list, errs);
        checks.add_at_least("direct-vs-hyp-order", slope, 1.9);
    }
}

// ---------------------------------------------------------------------------
// theorem1: condition systems on the catalog cases, including the parallel
// spinor construction on minimal immersions.
// ---------------------------------------------------------------------------
void run_theorem1(const SuiteConfig& cfg, Checks& checks, Rng& rng) {
    const int pts = std::min(cfg.samples, 8);

    // Totally umbilical branch on the explicit m = 4 pair.
    {
        const GammaRepPtr rep = build_gamma(4);
        const KillingSpinorPair pair = construct_theorem2_pair(4, Spinor(rng.spinor(rep->dim_spinor())), rep);
        const Chart& chart = pair.imm->intrinsic_chart();
        std::vector<double> worst(4, 0.0);
        std::vector<std::string> names;
        for (int s = 0; s < pts; ++s) {
            const ConditionReport rep4 = theorem1_conditions(pair.psi, pair.phi, *pair.imm, rng.point(chart), 1e-5);
            names.clear();
            for (std::size_t i = 0; i < rep4.entries.size(); ++i) {
                worst[i] = std::max(worst[i], rep4.entries[i].residual);
                names.push_back(rep4.entries[i].name);
            }
        }
        for (std::size_t i = 0; i < names.size(); ++i) checks.add("thm2-m4-" + names[i], worst[i], 1e-5);
    }

    // Surface branch on the Clifford torus with a parallel spinor.
    {
        const ImmersionPtr imm = clifford_torus();
        const GammaRepPtr rep = build_gamma(2);
        const auto [psi, phi] = parallel_spinor_pair(imm, rep, rng.spinor(2));
        const Chart& chart = imm->intrinsic_chart();
        std::vector<double> worst(4, 0.0);
        std::vector<std::string> names;
        for (int s = 0; s < pts; ++s) {
            const ConditionReport r = theorem1_conditions(psi, phi, *imm, rng.point(chart), 1e-8);
            names.clear();
            for (std::size_t i = 0; i < r.entries.size(); ++i) {
                worst[i] = std::max(worst[i], r.entries[i].residual);
                names.push_back(r.entries[i].name);
            }
        }
        for (std::size_t i = 0; i < names.size(); ++i) checks.add("torus-parallel-" + names[i], worst[i], 1e-8);
    }

    // Closed-case conditions on the flat hyperplane (m >= 3, parallel pair):
    // W = 0, D_M phi = 0, nabla psi = 0, c Re<psi, phi> = 0.
    {
        const ImmersionPtr imm = flat_hyperplane(3);
        const GammaRepPtr rep = build_gamma(3);
        const auto [psi, phi] = parallel_spinor_pair(imm, rep, rng.spinor(2));
        const Chart& chart = imm->intrinsic_chart();
        double cond = 0.0, shape_norm = 0.0, grad = 0.0;
        for (int s = 0; s < pts; ++s) {
            const Point x = rng.point(chart);
            cond = std::max(cond, theorem1_conditions(psi, phi, *imm, x, 1e-8).max_residual());
            shape_norm = std::max(shape_norm, imm->shape(x).norm());
            for (const auto& n : covariant_derivative_all(psi, x)) grad = std::max(grad, n.norm());
        }
        checks.add("flat-closed-case-conditions", cond, 1e-8);
        checks.add("flat-closed-case-shape", shape_norm, 1e-12);
        checks.add("flat-closed-case-grad-psi", grad, 1e-8);
    }

    // Parallel spinor construction: both defining equations on the flat
    // hyperplane for m = 3, 4.
    for (int m : {3, 4}) {
        const ImmersionPtr imm = flat_hyperplane(m);
        const GammaRepPtr rep = build_gamma(m);
        const auto [psi, phi] = parallel_spinor_pair(imm, rep, rng.spinor(rep->dim_spinor()));
        const std::vector<Point> xs = rng.points(imm->intrinsic_chart(), pts);
        const ResidualPair r = residual(psi, phi, imm, xs);
        checks.add("parallel-prop-m" + std::to_string(m) + "-dirac", r.dirac, 1e-8);
        checks.add("parallel-prop-m" + std::to_string(m) + "-tension", r.tension, 1e-8);
    }

    // Equivalence, negative side: a Fourier mode on the torus violates the
    // conditions and the defining equations by an order-one margin.
    {
        const ImmersionPtr imm = clifford_torus();
        const GammaRepPtr rep = build_gamma(2);
        const SpinorField psi = fourier_mode_field(imm->intrinsic_chart(), rep, rng);
        const SpinorField phi = SpinorField::zero(imm->intrinsic_chart(), rep);
        const std::vector<Point> xs = rng.points(imm->intrinsic_chart(), pts);
        double cond = 0.0;
        for (const Point& x : xs) cond = std::max(cond, theorem1_conditions(psi, phi, *imm, x, 1e-6).max_residual());
        const ResidualPair r = residual(psi, phi, imm, xs);
        checks.add_at_least("equivalence-negative-conditions", cond, 1e-2);
        checks.add_at_least("equivalence-negative-dirac", r.dirac, 1e-2);
    }
}

// ---------------------------------------------------------------------------
// theorem2: the explicit Killing-spinor pair on H^m(-4/(m+2)).
// ---------------------------------------------------------------------------
void run_theorem2(const SuiteConfig& cfg, Checks& checks, Rng& rng) {
    const int m = cfg.m;
    if (m < 3) throw std::invalid_argument("theorem2 suite requires m >= 3");
    const GammaRepPtr rep = build_gamma(m);
    const Spinor seed = rng.spinor(rep->dim_spinor());
    const KillingSpinorPair pair = construct_theorem2_pair(m, seed, rep);
    const Chart& chart = pair.imm->intrinsic_chart();
    const double hmean = std::sqrt((m - 2.0) / (m + 2.0));

    checks.add("kappa-value", std::abs(chart.curvature() - (-4.0 / (m + 2))), 0.0);
    checks.add("mean-curvature-value", std::abs(pair.imm->mean_curvature(pair.basepoint) - hmean), 1e-15);

    const Complex ip = inner(pair.psi_plus.value(pair.basepoint), pair.psi_minus.value(pair.basepoint));
    checks.add("basepoint-normalization", std::abs(ip.imag() + 1.0 / (2.0 * std::sqrt(m + 2.0))), 1e-10);

    const std::vector<Point> xs = rng.points(chart, cfg.samples);
    const ResidualPair r = residual(pair.psi, pair.phi, pair.imm, xs);
    checks.add("dirac-residual", r.dirac, 1e-5);
    checks.add("tension-residual", r.tension, 1e-5);

    double constancy = 0.0;
    for (const Point& x : xs) {
        const Complex ipx = inner(pair.psi_plus.value(x), pair.psi_minus.value(x));
        constancy = std::max(constancy, std::abs(ipx - ip));
    }
    checks.add("killing-inner-constancy", constancy, 1e-6);

    double first_order = 0.0, cond_max = 0.0;
    for (const Point& x : xs) {
        first_order = std::max(
            first_order, ((m - 2.0) * dirac(pair.psi, x) + (m * hmean) * pair.phi.value(x)).norm());
        cond_max = std::max(cond_max, theorem1_conditions(pair.psi, pair.phi, *pair.imm, x, 1e-5).max_residual());
    }
    checks.add("first-order-identity", first_order, 1e-5);
    checks.add("theorem1-conditions", cond_max, 1e-5);

    // D_M^2 eigenvalue -m^2 H^2 / (m - 2), second pass on a coarser step.
    const double eigen = m * m * hmean * hmean / (m - 2.0);
    const SpinorField dpsi = dirac_field(pair.psi);
    const SpinorField dphi = dirac_field(pair.phi);
    double second_psi = 0.0, second_phi = 0.0;
    const int second_pts = std::min(cfg.samples, 6);
    for (int s = 0; s < second_pts; ++s) {
        const Point& x = xs[static_cast<std::size_t>(s)];
        second_psi = std::max(second_psi, (dirac(dpsi, x) + eigen * pair.psi.value(x)).norm());
        second_phi = std::max(second_phi, (dirac(dphi, x) + eigen * pair.phi.value(x)).norm());
    }
    checks.add("second-order-identity-psi", second_psi, 1e-4);
    checks.add("second-order-identity-phi", second_phi, 1e-4);

    // Gauss equation S_g = m(m-1) c + m^2 H^2 - |W|^2 against the intrinsic value.
    {
        const Point x = xs.front();
        const double w2 = pair.imm->shape(x).squaredNorm();
        const double rhs = m * (m - 1.0) * pair.imm->ambient().c + m * m * hmean * hmean - w2;
        checks.add("gauss-scalar-identity", std::abs(chart.scalar_curvature(x) - rhs), 1e-6);
    }

    // Negative control: doubling phi breaks the second equation by m H at
    // every point and shifts the first by a computable closed form.
    {
        const SpinorField phi2 = pair.phi.scaled(2.0);
        const TwistedField broken = build_phi(pair.psi, phi2, pair.imm);
        double min_tension = 1e300, dirac_dev = 0.0;
        for (const Point& x : xs) {
            Eigen::VectorXd mismatch = -0.5 * v_phi_direct(broken, x);
            mismatch[m] += m * pair.imm->mean_curvature(x);
            min_tension = std::min(min_tension, mismatch.norm());

            const double actual = twisted_dirac_direct(broken, x).norm();
            const double psin = pair.psi.value(x).squaredNorm();
            const double phin = pair.phi.value(x).squaredNorm();
            const double predicted =
                std::sqrt(m * hmean * hmean * phin + m * m * hmean * hmean * psin);
            dirac_dev = std::max(dirac_dev, std::abs(actual - predicted));
        }
        checks.add_at_least("negative-control-tension", min_tension, 0.1 * m * hmean);
        checks.add("negative-control-dirac-closedform", dirac_dev, 1e-4);
    }
}

// ---------------------------------------------------------------------------
// surface: twistor spinors from (anti)holomorphic data on the flat plane.
// ---------------------------------------------------------------------------
void run_surface(const SuiteConfig& cfg, Checks& checks, Rng& rng) {
    const ImmersionPtr imm = flat_hyperplane(2);
    const GammaRepPtr rep = build_gamma(2);
    const Chart& chart = imm->intrinsic_chart();
    const std::vector<Point> xs = rng.points(chart, cfg.samples);

    struct Case {
        std::string name;
        std::function<Complex(Complex)> hol;
        std::function<Complex(Complex)> antihol;
    };
    const std::vector<Case> cases = {
        {"constant", [](Complex) { return Complex{1.0, 0.0}; }, [](Complex) { return Complex{0.0, 0.0}; }},
        {"z", [](Complex z) { return z; }, [](Complex) { return Complex{0.0, 0.0}; }},
        {"zsq-conj", [](Complex z) { return z * z; }, [](Complex w) { return w; }},
    };
    for (const auto& c : cases) {
        const SpinorField psi = twistor_from_holomorphic(c.hol, c.antihol, rep);
        double pen = 0.0;
        for (const Point& x : xs)
            for (const auto& p : penrose_all(psi, x)) pen = std::max(pen, p.norm());
        checks.add("penrose-" + c.name, pen, 1e-8);

        const TwistedField field = corollary_surface_pair(psi, imm, xs, 1e-6);
        const ResidualPair r = residual(psi, field.component(2), imm, xs);
        checks.add("dirac-" + c.name, r.dirac, 1e-6);
        checks.add("tension-" + c.name, r.tension, 1e-6);
    }
}

// ---------------------------------------------------------------------------
// clifford-torus: surface conditions, rigidity, and the embedding data.
// ---------------------------------------------------------------------------
void run_clifford_torus(const SuiteConfig& cfg, Checks& checks, Rng& rng) {
    const ImmersionPtr imm = clifford_torus();
    const GammaRepPtr rep = build_gamma(2);
    const Chart& chart = imm->intrinsic_chart();
    const std::vector<Point> xs = rng.points(chart, cfg.samples);

    // Embedding sanity through R^4.
    double iso = 0.0, normal_resid = 0.0;
    for (const Point& x : xs) {
        const Eigen::MatrixXd push = imm->pushforward(x);
        iso = std::max(iso, max_norm(Eigen::MatrixXd(push.transpose() * push - Eigen::MatrixXd::Identity(2, 2))));
        const Point nu = imm->normal(x);
        normal_resid = std::max(normal_resid, std::abs(nu.dot(nu) - 1.0));
        normal_resid = std::max(normal_resid, (push.transpose() * nu).cwiseAbs().maxCoeff());
        normal_resid = std::max(normal_resid, std::abs(nu.dot(imm->map(x))));
    }
    checks.add("isometry-r4", iso, 1e-12);
    checks.add("normal-r4", normal_resid, 1e-12);
    const Point probe = xs.front();
    checks.add("mean-curvature", std::abs(imm->mean_curvature(probe)), 1e-15);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(imm->shape(probe));
    checks.add("principal-curvatures",
               std::max(std::abs(eig.eigenvalues()[0] + 1.0), std::abs(eig.eigenvalues()[1] - 1.0)), 1e-15);

    // Parallel pair passes the surface conditions and the rigidity check.
    const auto [psi, phi] = parallel_spinor_pair(imm, rep, rng.spinor(2));
    double cond = 0.0;
    for (const Point& x : xs) cond = std::max(cond, theorem1_conditions(psi, phi, *imm, x, 1e-6).max_residual());
    checks.add("parallel-conditions", cond, 1e-6);
    const RigidityReport rig = clifford_torus_rigidity_check(psi, phi, imm, xs, 1e-6, 1e-8);
    checks.add("rigidity-accepted", rig.accepted ? 0.0 : 1.0, 0.0);
    checks.add("rigidity-grad-psi", rig.grad_residual, 1e-8);
    checks.add("rigidity-phi-norm", rig.phi_norm, 1e-8);

    // Ten seeded non-parallel Fourier candidates must be rejected loudly.
    for (int k = 0; k < 10; ++k) {
        const SpinorField candidate = fourier_mode_field(chart, rep, rng);
        const RigidityReport rr =
            clifford_torus_rigidity_check(candidate, SpinorField::zero(chart, rep), imm, xs, 1e-6, 1e-8);
        char name[64];
        std::snprintf(name, sizeof(name), "reject-fourier-%d", k);
        checks.add_at_least(name, rr.accepted ? 0.0 : rr.condition_residual, 1e-2);
    }

    // Matching the candidate phi to the principal-direction condition moves
    // the violation into D_M phi; still rejected.
    {
        const SpinorField candidate = fourier_mode_field(chart, rep, rng);
        SpinorField base = candidate;
        auto phi_value = [base](const Point& x) {
            const auto nabla = covariant_derivative_all(base, x);
            Spinor out = base.rep().gamma(0) * nabla[0] - base.rep().gamma(1) * nabla[1];
            return out;  // kappa_1 = 1 on this torus
        };
        const SpinorField phi_c(chart, rep, phi_value);
        double dphi_resid = 0.0, principal = 0.0;
        for (const Point& x : xs) {
            const ConditionReport r = theorem1_conditions(candidate, phi_c, *imm, x, 1e-6);
            for (const auto& e : r.entries) {
                if (e.name == "dirac-phi") dphi_resid = std::max(dphi_resid, e.residual);
                if (e.name == "principal-direction") principal = std::max(principal, e.residual);
            }
        }
        checks.add("derived-phi-principal-condition", principal, 1e-6);
        checks.add_at_least("reject-derived-phi-dirac", dphi_resid, 1e-2);
    }
}

// ---------------------------------------------------------------------------
// rescaling: the adapted connection and D^f under ambient metric scaling.
// ---------------------------------------------------------------------------
void run_rescaling(const SuiteConfig& cfg, Checks& checks, Rng& rng) {
    const int m = std::max(cfg.m, 3);
    const double kappa = -4.0 / (m + 2);
    const ImmersionPtr imm = umbilic_hyperbolic(m, kappa);
    const GammaRepPtr rep = build_gamma(m);
    const Chart& chart = imm->intrinsic_chart();
    const SpinorField psi = random_trig_field(chart, rep, rng);
    const SpinorField phi = random_trig_field(chart, rep, rng);
    const TwistedField field = build_phi(psi, phi, imm);
    const std::vector<Point> xs = rng.points(chart, std::min(cfg.samples, 10));

    auto ambient_conn = [m, kappa](double lambda) {
        return [m, kappa, lambda](const Point& x) { return umbilic_pullback_connection_ambient(m, kappa, lambda, x); };
    };

    double base_dev = 0.0;
    std::vector<TwistedVector> baseline;
    for (const Point& x : xs) {
        baseline.push_back(twisted_dirac_direct(field, x));
        base_dev = std::max(base_dev, tv_diff(baseline.back(), twisted_dirac_direct(field, x, ambient_conn(1.0))).norm());
    }
    checks.add("ambient-route-lambda-1", base_dev, 1e-10);

    for (double lambda : {0.5, 2.0, 10.0}) {
        double dev = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i)
            dev = std::max(dev, tv_diff(baseline[i], twisted_dirac_direct(field, xs[i], ambient_conn(lambda))).norm());
        char name[32];
        std::snprintf(name, sizeof(name), "lambda-%g", lambda);
        checks.add(name, dev, 1e-8);
    }
}

// ---------------------------------------------------------------------------
// convergence: FD order of the Dirac and Penrose evaluations.
// ---------------------------------------------------------------------------
void run_convergence(const SuiteConfig& cfg, Checks& checks, Rng& rng) {
    const Chart chart = Chart::hyperbolic_halfspace(3, -0.8);
    const GammaRepPtr rep = build_gamma(3);
    const SpinorField reference = random_trig_field(chart, rep, rng);
    const std::vector<Point> xs = rng.points(chart, std::min(cfg.samples, 5));

    auto max_err = [&](const SpinorField& approx, bool use_penrose) {
        double err = 0.0;
        for (const Point& x : xs) {
            if (use_penrose) {
                const auto pa = penrose_all(approx, x);
                const auto pr = penrose_all(reference, x);
                for (std::size_t i = 0; i < pa.size(); ++i) err = std::max(err, (pa[i] - pr[i]).norm());
            } else {
                err = std::max(err, (dirac(approx, x) - dirac(reference, x)).norm());
            }
        }
        return err;
    };

    std::vector<double> dirac_errs, penrose_errs;
    for (double h : cfg.h_list) {
        SpinorField approx = numeric_copy(reference, h);
        dirac_errs.push_back(max_err(approx, false));
        penrose_errs.push_back(max_err(approx, true));
    }
    checks.add_at_least("dirac-fd-order", fit_loglog_slope(cfg.h_list, dirac_errs), 1.9);
    checks.add_at_least("penrose-fd-order", fit_loglog_slope(cfg.h_list, penrose_errs), 1.9);

    // Richardson extrapolation on a coarser ladder and a rougher field (the
    // fine ladder on slowly varying data sits at the rounding floor for an
    // O(h^4) scheme).
    const SpinorField rough = random_trig_field(chart, rep, rng, 3, 2.5);
    const std::vector<double> rich_steps = {2e-2, 1e-2, 5e-3};
    std::vector<double> rich_errs;
    for (double h : rich_steps) {
        SpinorField approx = numeric_copy(rough, h).with_fd({h, true});
        double err = 0.0;
        for (const Point& x : xs) err = std::max(err, (dirac(approx, x) - dirac(rough, x)).norm());
        rich_errs.push_back(err);
    }
    checks.add_at_least("dirac-richardson-order", fit_loglog_slope(rich_steps, rich_errs), 3.8);
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "clifford", "connection", "lemma-cross", "vphi-triple", "theorem1",
        "theorem2", "surface",    "clifford-torus", "rescaling", "convergence",
    };
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
    SuiteResult result;
    result.suite = name;
    result.seed = config.seed;
    result.fd_steps = {config.h};
    result.config_json = config.to_json();

    Rng rng(config.seed);
    Checks checks{result.checks};

    const auto start = std::chrono::steady_clock::now();
    if (name == "clifford") {
        run_clifford(config, checks, rng);
    } else if (name == "connection") {
        run_connection(config, checks, rng);
    } else if (name == "lemma-cross") {
        result.fd_steps = config.h_list;
        run_lemma_cross(config, checks, rng);
    } else if (name == "vphi-triple") {
        run_vphi_triple(config, checks, rng);
    } else if (name == "theorem1") {
        run_theorem1(config, checks, rng);
    } else if (name == "theorem2") {
        run_theorem2(config, checks, rng);
    } else if (name == "surface") {
        run_surface(config, checks, rng);
    } else if (name == "clifford-torus") {
        run_clifford_torus(config, checks, rng);
    } else if (name == "rescaling") {
        run_rescaling(config, checks, rng);
    } else if (name == "convergence") {
        result.fd_steps = config.h_list;
        run_convergence(config, checks, rng);
    } else {
        std::string known;
        for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
        throw std::invalid_argument("unknown suite '" + name + "' (known: " + known + ")");
    }
    const auto stop = std::chrono::steady_clock::now();
    result.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return result;
}

} // namespace spinorlab
