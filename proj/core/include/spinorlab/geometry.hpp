#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spinorlab {

using Point = Eigen::VectorXd;

enum class ChartKind {
    Euclidean,
    HyperbolicHalfspace,
    SphereStereographic,
    FlatTorus,
};

std::string to_string(ChartKind kind);

/// Conformally flat coordinate chart: metric g = F(x)^2 * (flat metric) with
///
///   euclidean / flat_torus :  F = 1
///   hyperbolic_halfspace   :  F = 1 / (sqrt(-kappa) x_m)   on { x_m > 0 }
///   sphere_stereographic   :  F = 2 / (1 + kappa |x|^2)
///
/// Each chart has constant sectional curvature kappa (zero for the flat
/// kinds).  The orthonormal frame is e_i = F^{-1} d_i throughout.
class Chart {
public:
    static Chart euclidean(int m);
    static Chart hyperbolic_halfspace(int m, double kappa); // kappa < 0
    static Chart sphere_stereographic(int m, double kappa); // kappa > 0
    static Chart flat_torus(std::vector<double> periods);

    ChartKind kind() const { return kind_; }
    int dim() const { return m_; }
    double curvature() const { return kappa_; }
    const std::vector<double>& periods() const { return periods_; }

    bool in_domain(const Point& x, double margin = 0.0) const;
    void require_in_domain(const Point& x, double margin = 0.0) const;

    double conformal_factor(const Point& x) const;
    /// Gradient of log F in coordinates.
    Eigen::VectorXd dlog_factor(const Point& x) const;

    /// g_{ij}(x) = F^2 delta_{ij}.
    Eigen::MatrixXd metric(const Point& x) const;

    /// Christoffel symbols of g = F^2 delta; result[i](j,k) = Gamma^i_{jk},
    /// from Gamma^i_{jk} = delta_{ij} u_k + delta_{ik} u_j - delta_{jk} u_i
    /// with u = grad log F.  Symmetric in (j,k).
    std::vector<Eigen::MatrixXd> christoffel(const Point& x) const;

    /// Orthonormal frame as columns in coordinates: e_i = F^{-1} d_i.
    Eigen::MatrixXd frame(const Point& x) const;

    /// Levi-Civita connection in the orthonormal frame,
    /// result[i](j,k) = omega_i^{jk} = g(nabla_{e_i} e_j, e_k)
    ///               = (delta_{ik} u_j - delta_{ij} u_k) / F.
    /// Antisymmetric in (j,k).
    std::vector<Eigen::MatrixXd> spin_connection(const Point& x) const;

    /// m(m-1) kappa for every supported chart.
    double scalar_curvature(const Point& x) const;

    std::string to_json() const;
    static Chart from_json(const std::string& text);

    friend bool operator==(const Chart& a, const Chart& b);

private:
    Chart(ChartKind kind, int m, double kappa, std::vector<double> periods);

    ChartKind kind_;
    int m_;
    double kappa_;
    std::vector<double> periods_;
};

/// Simply connected target model of constant sectional curvature c, used
/// through its curvature tensor only.
struct AmbientSpaceform {
    int n = 0;
    double c = 0.0;
};

/// R^N_{X,Y} Z = c (<Y,Z> X - <X,Z> Y) on orthonormal-frame components
/// (so <.,.> is the standard dot product).  Antisymmetric in (X,Y) and
/// satisfies the first Bianchi identity.
Eigen::VectorXd spaceform_curvature(const AmbientSpaceform& amb, const Eigen::VectorXd& x,
                                    const Eigen::VectorXd& y, const Eigen::VectorXd& z);

} // namespace spinorlab
