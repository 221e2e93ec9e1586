#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spinorlab/geometry.hpp"

namespace spinorlab {

enum class ImmersionKind {
    FlatHyperplane,
    UmbilicHyperbolic,
    CliffordTorus,
};

std::string to_string(ImmersionKind kind);

/// Isometric hypersurface immersion f : M^m -> N^{m+1} into a spaceform,
/// carried as closed-form data over the intrinsic chart:
///   - map and pushforward columns f_* e_j in ambient coordinates,
///   - unit normal nu with W = -nabla^N nu and H = tr(W)/m,
///   - the pullback connection on the adapted frame (f_*e_1,...,f_*e_m, nu)
///     from the Gauss and Weingarten relations
///       nabla^N_X Y  = nabla^M_X Y + g(WX, Y) nu,
///       nabla^N_X nu = -WX.
///
/// Catalog:
///   flat_hyperplane(m)        R^m in R^{m+1}, W = 0, c = 0
///   umbilic_hyperbolic(m, k)  H^m(k) in H^{m+1}(-1), W = H Id, H^2 = k + 1,
///                             realized as the tilted half-space plane
///                             { y_0 = tan(alpha) y_m }, sin(alpha) = H
///   clifford_torus()          S^1(1/sqrt2) x S^1(1/sqrt2) in S^3 through the
///                             explicit R^4 embedding, W = diag(1, -1)
class HypersurfaceImmersion {
public:
    ImmersionKind kind() const { return kind_; }
    const Chart& intrinsic_chart() const { return chart_; }
    const AmbientSpaceform& ambient() const { return ambient_; }
    int dim() const { return m_; }
    /// Length of ambient coordinate vectors (m+1, except 4 for the torus
    /// whose ambient S^3 is carried through its R^4 embedding).
    int ambient_coord_dim() const { return coord_dim_; }

    Point map(const Point& x) const;
    /// Columns j = f_* e_j in ambient coordinates (h-orthonormal).
    Eigen::MatrixXd pushforward(const Point& x) const;
    Point normal(const Point& x) const;
    /// Shape operator in frame coordinates, symmetric.
    Eigen::MatrixXd shape(const Point& x) const;
    double mean_curvature(const Point& x) const;

    /// tr_g(nabla df) = m H nu in ambient coordinates.
    Point second_fundamental_trace(const Point& x) const;

    /// Connection matrices of the adapted frame: result[j](k, l) is the
    /// E_l-coefficient of nabla_{e_j} E_k, where E_0..E_{m-1} are the
    /// pushforward frame and E_m = nu.
    std::vector<Eigen::MatrixXd> pullback_connection(const Point& x) const;

    /// Ambient metric in coordinates at an ambient point.
    Eigen::MatrixXd ambient_metric(const Point& y) const;
    /// Christoffel correction Gamma(u, v) of the ambient connection at y, so
    /// that nabla^N_u V = u(V) + Gamma(u, V) componentwise.
    Point ambient_gamma(const Point& y, const Point& u, const Point& v) const;

    std::string to_json() const;

    friend std::shared_ptr<const HypersurfaceImmersion> flat_hyperplane(int m);
    friend std::shared_ptr<const HypersurfaceImmersion> umbilic_hyperbolic(int m, double kappa);
    friend std::shared_ptr<const HypersurfaceImmersion> clifford_torus();

private:
    HypersurfaceImmersion(ImmersionKind kind, Chart chart, AmbientSpaceform ambient, int coord_dim);

    ImmersionKind kind_;
    Chart chart_;
    AmbientSpaceform ambient_;
    int m_;
    int coord_dim_;
    // umbilic parameters
    double mean_h_ = 0.0;  // sin(alpha)
    double cos_alpha_ = 1.0;
};

using ImmersionPtr = std::shared_ptr<const HypersurfaceImmersion>;

ImmersionPtr flat_hyperplane(int m);                   // m >= 2
ImmersionPtr umbilic_hyperbolic(int m, double kappa);  // m >= 2, -1 <= kappa < 0
ImmersionPtr clifford_torus();

/// Adapted-frame connection matrices of the umbilic hypersurface computed
/// through the ambient metric lambda^2 h instead of the Gauss-Weingarten
/// relations: the adapted frame is re-normalized for the scaled metric and
/// differentiated with the scaled metric's Christoffel symbols, while the
/// intrinsic frame e_j of H^m(kappa) is kept fixed.  Constant rescaling does
/// not change the ambient Levi-Civita connection, so the result agrees with
/// pullback_connection for every lambda > 0.
std::vector<Eigen::MatrixXd> umbilic_pullback_connection_ambient(int m, double kappa, double lambda,
                                                                 const Point& x);

} // namespace spinorlab
