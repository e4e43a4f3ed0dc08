#pragma once

#include <complex>
#include <vector>

#include "wigsim/grid.hpp"
#include "wigsim/wavefunction.hpp"

namespace wigsim {

struct WignerOptions {
    double norm_tol = 1e-6;  // NonNormalized beyond this
    double edge_tol = 1e-6;  // GridTooSmall beyond this
};

// Wigner function of a pure state,
//
//   W(z,p) = 1/(2 pi hbar) * integral dzeta e^{-i p zeta/hbar}
//            psi*(z - zeta/2) psi(z + zeta/2),
//
// discretized as a sum over the jump coordinate zeta = 2 m dz and evaluated
// on the requested momentum grid by an exact chirp-z transform per z row.
// The wavefunction must be sampled on grid.zaxis().
RealField wigner_transform(const WaveFunction& psi, const GridSpec& grid,
                           const WignerOptions& opt = {});

// Marginals P(z) = sum_p W dp and P~(p) = sum_z W dz.
std::vector<double> marginal_position(const RealField& W);
std::vector<double> marginal_momentum(const RealField& W);

// Trace product 2 pi hbar * sum W1 W2 dz dp; equals |<psi1|psi2>|^2 for pure
// states. Fields must share grid and hbar.
double phase_space_overlap(const RealField& W1, const RealField& W2);

// Two-dimensional Fourier transform of a field,
//   W~(xi, q) = sum e^{i (xi p + q z)/hbar} W dz dp,
// equal to the expectation value of the displacement operator
// exp(i(xi p_hat + q z_hat)/hbar) when W is a state's Wigner function.
// Magnitude is the contrast |<D>|, argument the state phase beta.
cplx characteristic_transform(const RealField& W, double xi, double q);
cplx characteristic_transform(const ComplexField& W, double xi, double q);

// Direct wavefunction-side evaluation of the same expectation value,
//   <D> = e^{i xi q/(2 hbar)} * sum psi*(z) e^{i q z/hbar} psi(z + xi) dz,
// with the shift applied in momentum space (band-limited, exact for states
// contained in the grid). Independent of any phase-space field.
cplx displacement_expectation(const WaveFunction& psi, double xi, double q);

}  // namespace wigsim
