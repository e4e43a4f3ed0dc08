#pragma once

#include <iosfwd>
#include <string>

#include "wigsim/dynamics.hpp"
#include "wigsim/grid.hpp"
#include "wigsim/wavefunction.hpp"

namespace wigsim {

// Three-pulse sequence: beam splitter at t = 0, mirror at t = T, beam
// splitter at t = 2T, with laser phases phi(0), phi(T), phi(2T) and
// effective wave number k shared with PhysParams.
struct PulseSequence {
    double T = 1.0;
    double phi0 = 0.0;
    double phiT = 0.0;
    double phi2T = 0.0;
};

enum class Path { upper, lower, interference };

// Endpoints of the classical phase-space trajectories through the
// interferometer. The upper/lower points sit symmetrically around the
// interference point: (z_u,p_u) = (z_i,p_i) + (dz,dp)/2 and mirrored.
struct EndpointReport {
    double z_u, p_u;
    double z_l, p_l;
    double z_i, p_i;
    double delta_z, delta_p;
    double delta_s, delta_c;  // discrete trig second derivatives
};

struct Separation {
    double delta_z;  // hbar k / sqrt(m_i m_g) * delta_s / sqrt(Gamma)
    double delta_p;  // hbar k * delta_c
    double delta_s;  // sin(2 sqrt(G')T) - 2 sin(sqrt(G')T)   (sinh for G' < 0)
    double delta_c;  // cos(2 sqrt(G')T) - 2 cos(sqrt(G')T) + 1
};

struct WeakGradientTerms {
    double dphi_g;        // (m_g/m_i) k g T^2
    double dphi_g_tilde;  // dphi_g (1 - 7/12 Gamma' T^2)
    double recoil_phase;  // Gamma' T^2 * (hbar k^2 / 2 m_i) * T
    double dz_tilde;      // -(hbar k/m_i) Gamma' T^3
    double dp_tilde;      // -hbar k Gamma' T^2
};

struct ExitReport {
    double P_g1;         // exit-port population in |g1>
    double contrast;     // |<D>| in [0, 1]
    double beta;         // state phase arg <D>
    double total_phase;  // argument of the fringe cosine
    WeakGradientTerms weak;
};

// Momentum displacement by j*hbar*k (j in {-1, -1/2, +1/2, +1} in the pulse
// sequence; any value is accepted). Field overloads interpolate, the
// Gaussian overload is exact.
RealField kick(const RealField& W, double j, const PhysParams& params);
ComplexField kick(const ComplexField& W, double j, const PhysParams& params);
GaussianState kick(const GaussianState& psi0, double j, const PhysParams& params);

// The point map from t = 0 to t = 2T along one path: alternating momentum
// kicks and classical flows,
//   upper:        kick(+1), flow(T), kick(-1), flow(T)
//   lower:        flow(T), kick(+1), flow(T), kick(-1)
//   interference: kick(+1/2), flow(2T), kick(-1/2)
AffineFlow path_map(Path path, const PulseSequence& seq, const PhysParams& params);

// Final Wigner function of one path. Upper/lower outputs are real;
// the interference path carries exp(i dphi(z0,p0)) evaluated at the
// pulled-back initial point. The analytic overload is exact on the target
// grid; the field overload pulls back through the composite map with one
// bilinear interpolation.
ComplexField propagate_path(const GaussianState& psi0, Path path,
                            const PulseSequence& seq, const PhysParams& params,
                            const GridSpec& grid);
ComplexField propagate_path(const RealField& W0, Path path, const PulseSequence& seq,
                            const PhysParams& params);

EndpointReport endpoints(const PulseSequence& seq, const PhysParams& params,
                         double z0, double p0);

Separation separation(const PulseSequence& seq, const PhysParams& params);

// delta_phi = phi(2T) - 2 phi(T) + phi(0), the discrete acceleration of the
// laser phase.
double laser_phase_combination(const PulseSequence& seq);

// Phase picked up by the interference term, in initial coordinates:
//   dphi(z0,p0) = g' dp/(hbar Gamma') + k dz/2 + (dp z0 + dz p0)/hbar,
// with the Gamma -> 0 limit g' dp/(hbar Gamma') -> -(m_g/m_i) k g T^2 taken
// through the guarded trig kernels.
double interference_phase(const PulseSequence& seq, const PhysParams& params,
                          double z0, double p0);

// The same phase as the discrete second derivative of the trajectory
// started at (z0, p0 + hbar k/2):
//   k [ zbar(2T) - 2 zbar(T) + z0 ].
// Kept as a distinct closed-form route; the two must agree identically.
double interference_phase_from_trajectories(const PulseSequence& seq,
                                            const PhysParams& params, double z0,
                                            double p0);

// Exit probability valid for arbitrary sqrt(Gamma') T:
//   P_g1 = 1/2 [1 + |<D>|(dz,dp) cos(dphi + g dp/(hbar Gamma) + k dz/2 + beta)]
// with <D> the characteristic transform of the initial Wigner function at
// the path separation. The Gaussian overload evaluates <D> in closed form;
// the wavefunction overload uses the band-limited displacement expectation.
ExitReport exit_probability_exact(const PulseSequence& seq, const PhysParams& params,
                                  const GaussianState& psi0);
ExitReport exit_probability_exact(const PulseSequence& seq, const PhysParams& params,
                                  const WaveFunction& psi0);

// Weak-gradient (Gamma' T^2 << 1) closed form built from the shifted phase
// dphi_g_tilde, the recoil phase, and the displacement (dz_tilde, dp_tilde).
// Warns on stderr above Gamma' T^2 = 0.3.
ExitReport exit_probability_weak(const PulseSequence& seq, const PhysParams& params,
                                 const GaussianState& psi0);
ExitReport exit_probability_weak(const PulseSequence& seq, const PhysParams& params,
                                 const WaveFunction& psi0);

// W_g1 = 1/4 [W_u + W_l + e^{i dphi} W_i + e^{-i dphi} W_i*]; all inputs on
// one grid, output real within 1e-10 of the field scale.
RealField assemble_exit_wigner(const ComplexField& W_u, const ComplexField& W_l,
                               const ComplexField& W_i, double delta_phi);

// Flat "key = value" record and CSV row forms of an ExitReport.
void write_record(const ExitReport& r, std::ostream& os,
                  const std::vector<std::string>& provenance = {});
std::string exit_report_csv_header();
std::string exit_report_csv_row(const ExitReport& r);

}  // namespace wigsim
