#pragma once

#include <complex>
#include <vector>

#include "wigsim/grid.hpp"

namespace wigsim {

// Complex samples psi(z_j) of a center-of-mass state on a uniform z grid.
struct WaveFunction {
    ZGrid grid;
    double hbar = 1.0;
    std::vector<cplx> values;

    WaveFunction() = default;
    WaveFunction(const ZGrid& g, double hb)
        : grid(g), hbar(hb), values(static_cast<std::size_t>(g.n), cplx{}) {}

    double norm_squared() const;      // sum |psi|^2 dz
    void normalize();                 // scale to norm 1
    double edge_amplitude() const;    // max(|psi_0|, |psi_{n-1}|) / max|psi|

    // Throws NonNormalized / GridTooSmall when the respective tolerance is
    // exceeded.
    void require_normalized(double tol = 1e-6) const;
    void require_contained(double tol = 1e-6) const;
};

cplx overlap(const WaveFunction& a, const WaveFunction& b);  // <a|b>

// Minimum-uncertainty Gaussian centered at (z0, p0) with position width
// sigma_z (Var z = sigma_z^2, Var p = (hbar/2 sigma_z)^2):
//
//   psi(z) = (2 pi sigma^2)^(-1/4) exp[-(z-z0)^2/(4 sigma^2) + i p0 (z-z0)/hbar]
//
// Its Wigner function is known in closed form, which makes this state the
// first-class analytic input for transport and the interferometer paths.
struct GaussianState {
    double z0 = 0.0;
    double p0 = 0.0;
    double sigma_z = 1.0;
    double hbar = 1.0;

    cplx psi(double z) const;
    // W(z,p) = 1/(pi hbar) exp[-(z-z0)^2/(2 s^2) - 2 s^2 (p-p0)^2/hbar^2]
    double wigner(double z, double p) const;
    // Characteristic function integral exp(i(xi p + q z)/hbar) W dz dp.
    cplx characteristic(double xi, double q) const;

    WaveFunction sample(const ZGrid& grid) const;
};

// Normalized n-th harmonic-oscillator eigenfunction for mass m and
// frequency omega, evaluated by the stable normalized Hermite recurrence.
WaveFunction harmonic_eigenfunction(int n, double omega, double mass, double hbar,
                                    const ZGrid& grid);

// 1-D wavefunction CSV: header "# z_min,z_max,n,hbar", rows "z,re,im".
void write_csv(const WaveFunction& psi, std::ostream& os,
               const std::vector<std::string>& provenance = {});
WaveFunction read_wavefunction_csv(std::istream& is);

}  // namespace wigsim
