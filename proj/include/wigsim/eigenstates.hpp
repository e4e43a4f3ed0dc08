#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "wigsim/dynamics.hpp"
#include "wigsim/grid.hpp"

namespace wigsim {

// Scaling data of the linear-potential energy eigenfunction
// u_E(z) = norm * Ai(kappa z - epsilon):
//   kappa   = (2 m_i m_g g / hbar^2)^{1/3}
//   epsilon = (2 m_i / (hbar^2 m_g^2 g^2))^{1/3} E
// The continuum states are not square integrable; norm is fixed so the
// oscillatory tail is |kappa z - epsilon|^{-1/4} sin(. + pi/4), i.e.
// norm = sqrt(pi).
struct AirySolution {
    double kappa;
    double epsilon;
    double norm;
};

AirySolution linear_potential_scaling(const PhysParams& params, double E);

std::vector<double> linear_potential_eigenfunction(const PhysParams& params,
                                                   double E, const ZGrid& grid);

// Ordered energy levels (n, E_n), n starting at the stated base quantum
// number of each spectrum.
struct Spectrum {
    std::vector<std::pair<int, double>> levels;
};

// CSV rows "n,E_n" with 17 significant digits.
void write_csv(const Spectrum& s, std::ostream& os,
               const std::vector<std::string>& provenance = {});

// Linear potential plus a hard wall at z = 0:
//   E_n = (m_g^2 g^2 hbar^2 / (2 m_i))^{1/3} a_{n+1},  n = 0, 1, ...
// where a_{n+1} are the Airy-zero magnitudes. Returns n_max levels
// (n = 0 .. n_max-1); n_max <= 100.
Spectrum bouncer_spectrum(const PhysParams& params, int n_max);

// Gravitational two-body bound states around a source mass M:
//   E_n = -(m_i m_g^2 (M G)^2 / (2 hbar^2)) / n^2,  n = 1, 2, ...
Spectrum gravitational_coulomb_spectrum(const PhysParams& params, double M,
                                        double G_newton, int n_max);

// Wigner function of the n-th harmonic eigenfunction (frequency omega, mass
// m_i), computed through the transform of the analytic wavefunction. n <= 30.
RealField harmonic_wigner_eigenstate(int n, double omega, const PhysParams& params,
                                     const GridSpec& grid);

// Finite-difference residual of the phase-space eigenvalue equation
//   [p^2/(2 m_i) + V - hbar^2/(8 m_i) d^2_z + L_even - E] W,
// with the even-derivative potential operator
//   L_even = sum_{l>=1} (-1)^l (hbar/2)^{2l}/(2l)! V^{(2l)} d^{2l}_p
// truncated by the degree of V (<= 6). Edge cells beyond stencil reach are
// reported as zero.
RealField phase_space_eigen_residual(const RealField& W, double E,
                                     const PolynomialPotential& V,
                                     const PhysParams& params);

}  // namespace wigsim
