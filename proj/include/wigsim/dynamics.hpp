#pragma once

#include <array>
#include <utility>
#include <vector>

#include "wigsim/grid.hpp"
#include "wigsim/wavefunction.hpp"

namespace wigsim {

// Physical constants of a run. Inertial and gravitational mass are carried
// separately; the dynamics only sees them through the effective acceleration
// g' = (m_g/m_i) g and gradient Gamma' = (m_g/m_i) Gamma, plus the p/m_i
// kinetic term. Gamma < 0 is supported by hyperbolic continuation of the
// trigonometric flow coefficients.
struct PhysParams {
    double m_i = 1.0;    // inertial mass
    double m_g = 1.0;    // gravitational mass
    double g = 0.0;      // linear acceleration
    double Gamma = 0.0;  // gravity gradient, 1/time^2
    double hbar = 1.0;
    double k = 0.0;      // effective laser wave number

    double g_prime() const { return (m_g / m_i) * g; }
    double gamma_prime() const { return (m_g / m_i) * Gamma; }
    double recoil(double j = 1.0) const { return j * hbar * k; }  // momentum kick
};

// Oscillator propagator coefficients for x = Gamma', evaluated without the
// 0/0 at x -> 0:
//   c  = cos(sqrt(x) t)              (cosh for x < 0)
//   s1 = sin(sqrt(x) t)/sqrt(x)      (-> t)
//   k1 = (1 - cos(sqrt(x) t))/x      (-> t^2/2)
// Series branch below |x| t^2 = 1e-8; product forms 2 sin^2(u/2) etc.
// elsewhere, so no catastrophic cancellation anywhere.
struct OscCoeffs {
    double c, s1, k1;
};
OscCoeffs osc_coeffs(double x, double t);

struct PhasePoint {
    double z, p;
};

// Affine phase-space map x -> M x + b for quadratic potentials. The 2x2
// matrix has unit determinant (symplectic).
struct AffineFlow {
    double zz = 1.0, zp = 0.0;
    double pz = 0.0, pp = 1.0;
    double off_z = 0.0, off_p = 0.0;
    double duration = 0.0;

    PhasePoint apply(PhasePoint x) const {
        return {zz * x.z + zp * x.p + off_z, pz * x.z + pp * x.p + off_p};
    }
    double det() const { return zz * pp - zp * pz; }
    AffineFlow inverse() const;

    static AffineFlow identity() { return {}; }
    static AffineFlow momentum_kick(double dp);
};

// second(first(x)); durations add.
AffineFlow compose(const AffineFlow& second, const AffineFlow& first);

// Classical flow of V(z) = m_g g z + (1/2) m_g Gamma z^2 over time t:
//   z(t) = z0 c + p0 s1/m_i - g' k1
//   p(t) = -m_i Gamma' s1 z0 + p0 c - m_i g' s1
AffineFlow classical_flow(const PhysParams& params, double t);

// V(z) = sum_j c[j] z^j, degree <= 6.
struct PolynomialPotential {
    std::array<double, 7> c{};

    double value(double z) const;
    double derivative(int order, double z) const;
    int degree() const;
};

PolynomialPotential gravity_potential(const PhysParams& params);

// Liouville transport W(x) = W0(flow^-1 x).
//
// The tabulated overload pulls back through the inverse map with bilinear
// interpolation and returns a field on W0's grid; the analytic overload
// evaluates the Gaussian's closed-form Wigner function at the pulled-back
// points, which is exact. Both throw ExtrapolationLoss when more than 1e-3
// of the field's integral is lost.
RealField transport(const RealField& W0, const AffineFlow& flow);
ComplexField transport(const ComplexField& W0, const AffineFlow& flow);
RealField transport(const GaussianState& psi0, const AffineFlow& flow,
                    const GridSpec& grid);

// Stationary Boltzmann weight exp(-p^2/(2 m_i kT) - V(z)/kT), normalized to
// one on the grid. A grid edge that the weight does not decay into acts as a
// hard wall, which is accepted only where the force presses the ensemble
// against it; otherwise NotNormalizable.
RealField thermal_distribution(const PhysParams& params, double kT,
                               const PolynomialPotential& V, const GridSpec& grid);

// Finite-difference residual of the classical Liouville equation
//   (d_t + (p/m_i) d_z - V'(z) d_p) W
// evaluated at the middle slice of a time series (>= 3 slices, spacing dt).
// Cells too close to the grid edge for the stencils are reported as zero.
RealField classical_liouville_residual(const std::vector<RealField>& W_series,
                                       double dt, const PhysParams& params,
                                       const PolynomialPotential& V);

// The odd-derivative quantum correction
//   L_odd W = sum_{l>=1} (-1)^l (hbar/2)^{2l} / (2l+1)! *
//             d^{2l+1}V/dz^{2l+1} * d^{2l+1}W/dp^{2l+1},
// truncated by the potential degree (<= 6, so l <= 2). Identically zero for
// quadratic potentials.
RealField quantum_correction_residual(const RealField& W,
                                      const PolynomialPotential& V,
                                      const PhysParams& params);

}  // namespace wigsim
