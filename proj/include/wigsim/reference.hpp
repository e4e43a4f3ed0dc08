#pragma once

#include "wigsim/dynamics.hpp"
#include "wigsim/grid.hpp"
#include "wigsim/phase_space.hpp"

// Serial reference implementations of the parallel kernels. They favor the
// most literal transcription of each formula (direct sums, no chirp-z, no
// threading) and exist so the fast paths can be checked against them; the
// benchmark tool times the two side by side.
namespace wigsim::ref {

// Direct evaluation of the jump-coordinate sum at every (z_j, p_m); returns
// the raw complex field so tests can inspect the imaginary residue.
ComplexField wigner_transform_serial(const WaveFunction& psi, const GridSpec& grid);

cplx characteristic_serial(const RealField& W, double xi, double q);

RealField transport_serial(const RealField& W0, const AffineFlow& flow);

double overlap_serial(const RealField& W1, const RealField& W2);

}  // namespace wigsim::ref
