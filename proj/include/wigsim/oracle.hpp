#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wigsim/dynamics.hpp"
#include "wigsim/grid.hpp"
#include "wigsim/interferometer.hpp"
#include "wigsim/wavefunction.hpp"

namespace wigsim::oracle {

// First-principles verification path: a two-component wavefunction driven
// through the pulse sequence by direct split-step integration, with no
// phase-space machinery anywhere.

// Internal components |g1>, |g2> on a shared position grid.
struct TwoComponentState {
    WaveFunction psi1, psi2;

    double total_norm_squared() const;
    void require_normalized(double tol = 1e-9) const;
};

struct SplitStepConfig {
    int n_steps = 256;  // per free-flight segment; dt = T / n_steps
};

// Instantaneous Raman pulse of area theta:
//   psi1' = cos(theta) psi1 - i sin(theta) e^{-i(k z + phi)} psi2
//   psi2' = cos(theta) psi2 - i sin(theta) e^{+i(k z + phi)} psi1
// theta = pi/4 is a beam splitter, pi/2 a mirror. Norm preserving.
TwoComponentState apply_pulse(const TwoComponentState& state, double theta, double k,
                              double phi);

// Strang-split propagation of both components under
// H = p^2/(2 m_i) + V(z) for a time T. Throws GridEscape when edge amplitude
// exceeds 1e-6 of the peak at any step.
TwoComponentState evolve(const TwoComponentState& state, const PhysParams& params,
                         const PolynomialPotential& V, double T,
                         const SplitStepConfig& cfg);

struct InterferometerRun {
    double P_g1 = 0.0;
    double P_g2 = 0.0;
    TwoComponentState exit_state;
    // the six stages: before/after each of the three pulses
    std::vector<std::pair<std::string, TwoComponentState>> ledger;
};

// pi/4 pulse at t=0, flight T, pi/2 pulse, flight T, pi/4 pulse; the atom
// starts in |g1> with center-of-mass state psi0.
InterferometerRun run_interferometer(const PulseSequence& seq, const PhysParams& params,
                                     const PolynomialPotential& V,
                                     const WaveFunction& psi0,
                                     const SplitStepConfig& cfg);

// Wigner function of the normalized |g1> exit component, for field-level
// comparison against the phase-space assembly.
RealField wigner_of_exit(const TwoComponentState& exit_state, const GridSpec& grid);

// Writes the six staged snapshots as "<prefix><stage>.csv", one file per
// ledger entry with rows "z,re_g1,im_g1,re_g2,im_g2".
void write_ledger_csv(const InterferometerRun& run, const std::string& prefix);

}  // namespace wigsim::oracle
