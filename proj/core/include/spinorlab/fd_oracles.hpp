#pragma once

#include <vector>

#include "spinorlab/geometry.hpp"
#include "spinorlab/immersions.hpp"

namespace spinorlab {

/// Finite-difference reference computations.  These never read the closed
/// forms they are compared against: Christoffel symbols come from central
/// differences of the metric, frame derivatives from differences of the
/// frame evaluator, curvature from differences of Christoffel symbols, and
/// immersion data from differences of the map, pushforward and normal
/// evaluators through the ambient connection.

/// d g / d x_axis by central differences of Chart::metric.
Eigen::MatrixXd fd_metric_partial(const Chart& chart, const Point& x, int axis, double h);

/// Gamma^i_{jk} = (1/2) g^{il} (d_j g_{lk} + d_k g_{lj} - d_l g_{jk}).
std::vector<Eigen::MatrixXd> fd_christoffel(const Chart& chart, const Point& x, double h);

/// omega_i^{jk} = g(nabla_{e_i} e_j, e_k) from FD frame derivatives and FD
/// Christoffel symbols.
std::vector<Eigen::MatrixXd> fd_spin_connection(const Chart& chart, const Point& x, double h);

/// Coordinate Riemann tensor R^c_{abd} (indices: R(d_a, d_b) d_d = R^c_{abd} d_c)
/// with analytic Christoffel values differentiated by central differences.
/// result[a][b] is the matrix (c, d).
std::vector<std::vector<Eigen::MatrixXd>> fd_riemann(const Chart& chart, const Point& x, double h);

/// Sectional curvature of the coordinate plane (i, j).
double fd_sectional_curvature(const Chart& chart, const Point& x, int i, int j, double h);

/// Scalar curvature g^{bd} R^a_{abd}.
double fd_scalar_curvature(const Chart& chart, const Point& x, double h);

/// nabla^N_{e_j} nu in ambient coordinates, from FD of the normal evaluator
/// plus the ambient Christoffel correction.
Point fd_normal_derivative(const HypersurfaceImmersion& imm, const Point& x, int j, double h);

/// sum_j (nabla df)(e_j, e_j) in ambient coordinates, from FD of the map and
/// pushforward evaluators through the ambient connection.
Point fd_tension(const HypersurfaceImmersion& imm, const Point& x, double h);

/// Least-squares slope of log(err) against log(h).
double fit_loglog_slope(const std::vector<double>& hs, const std::vector<double>& errs);

} // namespace spinorlab
