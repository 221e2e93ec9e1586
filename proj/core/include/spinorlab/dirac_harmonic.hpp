#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spinorlab/immersions.hpp"
#include "spinorlab/spinor_fields.hpp"

namespace spinorlab {

/// Section of Sigma M (x) f*TN along an immersion, stored as m+1 spinor
/// component fields against the adapted frame (f_*e_1, ..., f_*e_m, nu).
class TwistedField {
public:
    TwistedField(ImmersionPtr imm, std::vector<SpinorField> components);

    const HypersurfaceImmersion& immersion() const { return *imm_; }
    ImmersionPtr immersion_ptr() const { return imm_; }
    int count() const { return static_cast<int>(components_.size()); }
    const SpinorField& component(int k) const;
    std::vector<Spinor> values(const Point& x) const;

private:
    ImmersionPtr imm_;
    std::vector<SpinorField> components_;
};

/// Value of a twisted field (or of a twisted operator) at one point:
/// m+1 spinors in the adapted frame.
struct TwistedVector {
    std::vector<Spinor> comps;
    double norm() const;
};

/// Phi = sum_j e_j . psi (x) f_*e_j + phi (x) nu: component j is gamma_j psi,
/// component m is phi.
TwistedField build_phi(const SpinorField& psi, const SpinorField& phi, ImmersionPtr imm);

using PullbackConnectionFn = std::function<std::vector<Eigen::MatrixXd>(const Point&)>;

/// D^f Phi by direct evaluation of sum_j e_j . nabla_{e_j} on the stored
/// components: the Sigma M factor uses the chart spin connection, the f*TN
/// factor the immersion's adapted-frame connection matrices.
TwistedVector twisted_dirac_direct(const TwistedField& phi, const Point& x);
/// Same with an explicit adapted-frame connection (for connections computed
/// through an independent route, e.g. a rescaled ambient metric).
TwistedVector twisted_dirac_direct(const TwistedField& phi, const Point& x, const PullbackConnectionFn& conn);

/// Expansion of D^f Phi for a general immersed target:
///   sum_j ((2-m)/m e_j . D_M psi - 2 P_{e_j} psi) (x) f_*e_j
///   - psi (x) tr_g(nabla df) + (D_M phi) (x) nu + sum_j e_j . phi (x) nabla^N_{e_j} nu.
TwistedVector twisted_dirac_formula_general(const SpinorField& psi, const SpinorField& phi,
                                            const HypersurfaceImmersion& imm, const Point& x);

/// Hypersurface specialization:
///   sum_j ((2-m)/m e_j . D_M psi - 2 P_{e_j} psi - W e_j . phi) (x) e_j
///   + (D_M phi - m H psi) (x) nu.
TwistedVector twisted_dirac_formula_hyp(const SpinorField& psi, const SpinorField& phi,
                                        const HypersurfaceImmersion& imm, const Point& x);

/// V_Phi assembled from its definition h(V_Phi, Y) = sum_j <e_j . R^N_{Y, f_*e_j} Phi, Phi>
/// by testing Y against the adapted frame; returns adapted-frame components.
/// The sum is real; the discarded imaginary part is available separately.
Eigen::VectorXd v_phi_direct(const TwistedField& phi, const Point& x);
double v_phi_imag_max(const TwistedField& phi, const Point& x);

/// Cross-term form h(V_Phi, Y) = 2 sum_{jk} h(R^N_{Y, f_*e_j} f_*e_k, nu) Re<e_j . e_k . psi, phi>.
Eigen::VectorXd v_phi_cross(const SpinorField& psi, const SpinorField& phi, const HypersurfaceImmersion& imm,
                            const Point& x);

/// Spaceform closed form V_Phi = -2 m c Re<psi, phi> nu.
Eigen::VectorXd v_phi_formula(const SpinorField& psi, const SpinorField& phi, const HypersurfaceImmersion& imm,
                              const Point& x);

struct ResidualPair {
    double dirac = 0.0;    // max_x || D^f Phi ||
    double tension = 0.0;  // max_x || tr_g(nabla df) - V_Phi / 2 ||
};

/// Residuals of both defining equations over a sample set.
ResidualPair residual(const SpinorField& psi, const SpinorField& phi, ImmersionPtr imm,
                      std::span<const Point> samples);

struct ConditionEntry {
    std::string name;
    double residual = 0.0;
};

struct ConditionReport {
    int branch = 0;  // 1: surface case (m = 2), 2: totally umbilical m >= 3
    std::vector<ConditionEntry> entries;
    double tolerance = 0.0;
    bool pass = false;
    double max_residual() const;
};

/// Pointwise residuals of the equivalent condition system:
///   m = 2:  H = 0, D_M phi = 0, c Re<psi, phi> = 0,
///           e_1 . nabla_{e_1} psi - e_2 . nabla_{e_2} psi = kappa_1 phi
///           (e_1 a pointwise top eigenvector of W);
///   m >= 3 (totally umbilical):
///           H = -c Re<psi, phi>, D_M phi = m H psi,
///           D_M psi = -(m H / (m-2)) phi, P psi = 0.
/// Rejects non-umbilical inputs for m >= 3.
ConditionReport theorem1_conditions(const SpinorField& psi, const SpinorField& phi,
                                    const HypersurfaceImmersion& imm, const Point& x, double tolerance);

struct KillingSpinorPair {
    ImmersionPtr imm;
    SpinorField psi;        // psi_plus + psi_minus
    SpinorField phi;        // i sqrt(m-2) (psi_plus - psi_minus)
    SpinorField psi_plus;   // Killing constant +i/sqrt(m+2)
    SpinorField psi_minus;  // Killing constant -i/sqrt(m+2)
    Point basepoint;
    Complex lambda;         // +i/sqrt(m+2)
};

/// Explicit solution pair on the umbilic hypersurface H^m(-4/(m+2)) inside
/// H^{m+1}(-1), m >= 3: psi_plus transports the seed with Killing constant
/// +i/sqrt(m+2); psi_minus transports (i / (2 sqrt(m+2) |seed|^2)) seed with
/// the opposite constant, fixing Im<psi_plus, psi_minus> = -1/(2 sqrt(m+2))
/// at the basepoint.
KillingSpinorPair construct_theorem2_pair(int m, const Spinor& seed, GammaRepPtr rep = nullptr);

/// (psi, phi) = (constant spinor, 0) on a minimal immersion with flat
/// intrinsic chart; both defining equations then hold identically.
std::pair<SpinorField, SpinorField> parallel_spinor_pair(ImmersionPtr imm, GammaRepPtr rep, const Spinor& seed);

/// Phi for a twistor spinor on a minimal surface (m = 2, phi = 0).  Throws
/// if the mean curvature or the Penrose residual exceeds the tolerance at
/// any check point.
TwistedField corollary_surface_pair(const SpinorField& psi_twistor, ImmersionPtr imm,
                                    std::span<const Point> check_points, double tolerance);

struct RigidityReport {
    double condition_residual = 0.0;  // max Theorem-1 surface-case residual
    double grad_residual = 0.0;       // max ||nabla_{e_i} psi||
    double phi_norm = 0.0;            // max ||phi||
    bool accepted = false;            // condition_residual <= condition tol
    bool passes = false;              // accepted and rigidity residuals small
};

/// On the Clifford torus the surface-case conditions force nabla psi = 0 and
/// phi = 0; this re-states that conclusion as a pointwise check.  Inputs
/// failing the condition system are reported as rejected.
RigidityReport clifford_torus_rigidity_check(const SpinorField& psi, const SpinorField& phi, ImmersionPtr imm,
                                             std::span<const Point> samples, double condition_tolerance,
                                             double rigidity_tolerance);

} // namespace spinorlab
