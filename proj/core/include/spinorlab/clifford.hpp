#pragma once

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

namespace spinorlab {

using Complex = std::complex<double>;
using Spinor = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Complex irreducible Clifford module of R^m with the negative-definite
/// convention
///
///   gamma_j gamma_k + gamma_k gamma_j = -2 delta_{jk} Id,
///
/// every gamma_j skew-Hermitian, acting on C^{2^{floor(m/2)}}.  All matrix
/// entries lie in {0, +-1, +-i}, so the relations hold exactly in double
/// precision (no rounding in products or anticommutators).
class GammaRep {
public:
    explicit GammaRep(int m);

    int m() const { return m_; }
    int dim_spinor() const { return dim_; }
    const std::vector<Eigen::MatrixXcd>& gammas() const { return gammas_; }
    const Eigen::MatrixXcd& gamma(int j) const;

    /// Matrix of Clifford multiplication by the tangent vector with
    /// orthonormal-frame components v: sum_j v_j gamma_j.
    Eigen::MatrixXcd clifford_matrix(const Eigen::VectorXd& v) const;

private:
    int m_;
    int dim_;
    std::vector<Eigen::MatrixXcd> gammas_;
};

using GammaRepPtr = std::shared_ptr<const GammaRep>;

/// Builds the representation for R^m.  Rejects m < 1.
GammaRepPtr build_gamma(int m);

/// (sum_j v_j gamma_j) psi.  Linear in v and psi.
Spinor clifford_mul(const GammaRep& rep, const Eigen::VectorXd& v, const Spinor& psi);

/// Hermitian inner product, linear in the first slot and conjugate-linear in
/// the second: inner(a psi, phi) = a inner(psi, phi) = conj(inner(phi, a psi)).
Complex inner(const Spinor& psi, const Spinor& phi);

} // namespace spinorlab
