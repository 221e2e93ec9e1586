#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "spinorlab/clifford.hpp"
#include "spinorlab/geometry.hpp"

namespace spinorlab {

/// Central-difference scheme for component derivatives.  With richardson the
/// two-step extrapolation (4 D(h/2) - D(h)) / 3 upgrades O(h^2) to O(h^4).
struct FdScheme {
    double step = 1e-4;
    bool richardson = false;
};

/// Spinor field over a conformally flat chart, stored as a plain component
/// vector in the constant-spinor trivialization of the chart.  Values come
/// from an analytic closure or from an ODE-transported evaluator; component
/// derivatives come from an analytic partial closure when available and from
/// central differences otherwise.
class SpinorField {
public:
    using Value = std::function<Spinor(const Point&)>;
    using Partial = std::function<Spinor(const Point&, int)>;

    SpinorField(Chart chart, GammaRepPtr rep, Value value);
    SpinorField(Chart chart, GammaRepPtr rep, Value value, Partial partial);

    static SpinorField constant(const Chart& chart, GammaRepPtr rep, const Spinor& psi0);
    static SpinorField zero(const Chart& chart, GammaRepPtr rep);

    const Chart& chart() const { return chart_; }
    const GammaRep& rep() const { return *rep_; }
    GammaRepPtr rep_ptr() const { return rep_; }
    const FdScheme& fd() const { return fd_; }

    Spinor value(const Point& x) const;
    bool has_analytic_partials() const { return partial_.has_value(); }

    /// d/dx_axis of the component vector (analytic if available, else FD).
    Spinor partial(const Point& x, int axis) const;

    SpinorField with_fd(FdScheme scheme) const;

    /// Pointwise linear algebra; operands must share chart and representation.
    SpinorField scaled(Complex a) const;
    friend SpinorField operator+(const SpinorField& a, const SpinorField& b);
    friend SpinorField operator-(const SpinorField& a, const SpinorField& b);

private:
    Chart chart_;
    GammaRepPtr rep_;
    Value value_;
    std::optional<Partial> partial_;
    FdScheme fd_{};
};

/// nabla_{e_i} psi = F^{-1} d_i psi + (1/4) sum_{jk} omega_i^{jk} gamma_j gamma_k psi
/// in the chart trivialization.
Spinor covariant_derivative(const SpinorField& field, const Point& x, int i);

/// All frame directions at once (shares the FD stencil).
std::vector<Spinor> covariant_derivative_all(const SpinorField& field, const Point& x);

/// D_M psi = sum_j e_j . nabla_{e_j} psi.
Spinor dirac(const SpinorField& field, const Point& x);

/// P_{e_i} psi = nabla_{e_i} psi + (1/m) e_i . D_M psi.  The Clifford trace
/// sum_i e_i . P_{e_i} psi vanishes identically.
Spinor penrose(const SpinorField& field, const Point& x, int i);

/// All Penrose components, sharing one derivative stencil.
std::vector<Spinor> penrose_all(const SpinorField& field, const Point& x);

/// Wraps x -> D_M psi(x) as a field, so D_M^2 can be evaluated by a second
/// finite-difference pass with its own (coarser) step.
SpinorField dirac_field(const SpinorField& field, FdScheme outer = {2.5e-3, false});

struct TransportOptions {
    double max_step = 1e-3;            // RK4 step bound in chart units
    std::vector<int> axis_order = {};  // empty = coordinate order 0..m-1
};

/// Integrates nabla_{e(t)} psi = lambda e(t) . psi along an axis-aligned
/// polyline from x0 to the query point (coordinates moved in axis_order).
/// Deterministic given the path rule; path-independence holds exactly when
/// 4 lambda^2 equals the chart curvature and is asserted by tests, not
/// assumed.  For hyperbolic charts lambda must be purely imaginary, for
/// sphere charts purely real.
SpinorField killing_transport(const Chart& chart, GammaRepPtr rep, Complex lambda, const Point& x0,
                              const Spinor& psi0, const TransportOptions& opt = {});

/// Solutions of the two-dimensional twistor equation P psi = 0 on the flat
/// plane for the representation gamma_1 = i sigma_1, gamma_2 = i sigma_2.
///
/// Writing psi = (a, b) and z = x_1 + i x_2, the equation P_{e_1} psi =
/// P_{e_2} psi = 0 reduces componentwise to the Cauchy-Riemann systems
///
///   d_1 a = i d_2 a   (a anti-holomorphic: a = antihol(conj z))
///   d_1 b = -i d_2 b  (b holomorphic:      b = hol(z)),
///
/// so the kernel is parametrized by one holomorphic and one anti-holomorphic
/// function.  Both arguments are complex-analytic functions of their own
/// variable; the second is composed with conjugation.
SpinorField twistor_from_holomorphic(std::function<Complex(Complex)> hol,
                                     std::function<Complex(Complex)> antihol, GammaRepPtr rep);

} // namespace spinorlab
