#include "spinorlab/clifford.hpp"

#include <stdexcept>
#include <string>

namespace spinorlab {

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Eigen::Matrix2cd pauli(int k) {
    Eigen::Matrix2cd s;
    switch (k) {
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -kI, kI, 0; break;
        default: s << 1, 0, 0, -1; break;
    }
    return s;
}

// Hermitian generators E_j with E_j E_k + E_k E_j = +2 delta Id on
// C^{2^k} for R^{2k}, by Pauli doubling:
//   E'_j      = E_j (x) sigma_3   (j <= 2k-2)
//   E'_{2k-1} = Id  (x) sigma_1
//   E'_{2k}   = Id  (x) sigma_2
std::vector<Eigen::MatrixXcd> euclidean_generators(int k) {
    std::vector<Eigen::MatrixXcd> gen;
    if (k == 0) return gen;
    std::vector<Eigen::MatrixXcd> prev = euclidean_generators(k - 1);
    const Eigen::Index d = Eigen::Index(1) << (k - 1);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    gen.reserve(2 * k);
    for (const auto& g : prev) gen.push_back(kron(g, pauli(3)));
    gen.push_back(kron(id, pauli(1)));
    gen.push_back(kron(id, pauli(2)));
    return gen;
}

} // namespace

GammaRep::GammaRep(int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("GammaRep: dimension must be >= 1, got " + std::to_string(m));
    const int k = m / 2;
    dim_ = 1 << k;
    std::vector<Eigen::MatrixXcd> gen = euclidean_generators(k);
    if (m % 2 == 1) {
        // Odd dimension: append the volume element i^k E_1 ... E_{2k},
        // Hermitian with square Id and anticommuting with every E_j.
        Eigen::MatrixXcd vol = Eigen::MatrixXcd::Identity(dim_, dim_);
        for (const auto& g : gen) vol = vol * g;
        Complex phase{1.0, 0.0};
        for (int i = 0; i < k; ++i) phase *= kI;
        gen.push_back(phase * vol);
    }
    // Skew-Hermitian convention: gamma_j = i E_j squares to -Id.
    gammas_.reserve(gen.size());
    for (const auto& g : gen) gammas_.push_back(kI * g);
}

const Eigen::MatrixXcd& GammaRep::gamma(int j) const {
    if (j < 0 || j >= m_) throw std::out_of_range("GammaRep::gamma: index " + std::to_string(j) + " out of range");
    return gammas_[static_cast<std::size_t>(j)];
}

Eigen::MatrixXcd GammaRep::clifford_matrix(const Eigen::VectorXd& v) const {
    if (v.size() != m_) throw std::invalid_argument("clifford_matrix: vector length does not match dimension");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_, dim_);
    for (int j = 0; j < m_; ++j)
        if (v[j] != 0.0) out += v[j] * gammas_[static_cast<std::size_t>(j)];
    return out;
}

GammaRepPtr build_gamma(int m) { return std::make_shared<const GammaRep>(m); }

Spinor clifford_mul(const GammaRep& rep, const Eigen::VectorXd& v, const Spinor& psi) {
    if (v.size() != rep.m()) throw std::invalid_argument("clifford_mul: vector length does not match dimension");
    if (psi.size() != rep.dim_spinor()) throw std::invalid_argument("clifford_mul: spinor length does not match representation");
    Spinor out = Spinor::Zero(psi.size());
    for (int j = 0; j < rep.m(); ++j)
        if (v[j] != 0.0) out += v[j] * (rep.gamma(j) * psi);
    return out;
}

Complex inner(const Spinor& psi, const Spinor& phi) {
    if (psi.size() != phi.size()) throw std::invalid_argument("inner: spinor lengths differ");
    return phi.dot(psi); // Eigen conjugates the first factor of dot()
}

} // namespace spinorlab
