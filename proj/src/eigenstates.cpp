#include "wigsim/eigenstates.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "wigsim/airy.hpp"
#include "wigsim/fd.hpp"
#include "wigsim/phase_space.hpp"

namespace wigsim {

AirySolution linear_potential_scaling(const PhysParams& params, double E) {
    const double hb2 = params.hbar * params.hbar;
    const double kappa = std::cbrt(2.0 * params.m_i * params.m_g * params.g / hb2);
    const double eps =
        std::cbrt(2.0 * params.m_i / (hb2 * params.m_g * params.m_g * params.g * params.g)) *
        E;
    return {kappa, eps, std::sqrt(std::numbers::pi)};
}

std::vector<double> linear_potential_eigenfunction(const PhysParams& params,
                                                   double E, const ZGrid& grid) {
    const AirySolution s = linear_potential_scaling(params, E);
    std::vector<double> u(static_cast<std::size_t>(grid.n));
#pragma omp parallel for
    for (int j = 0; j < grid.n; ++j) {
        u[static_cast<std::size_t>(j)] = s.norm * airy_ai(s.kappa * grid.at(j) - s.epsilon);
    }
    return u;
}

void write_csv(const Spectrum& s, std::ostream& os,
               const std::vector<std::string>& provenance) {
    os << "# n,E_n\n";
    for (const auto& p : provenance) os << "# " << p << '\n';
    char buf[48];
    for (const auto& [n, e] : s.levels) {
        std::snprintf(buf, sizeof buf, "%d,%.17g", n, e);
        os << buf << '\n';
    }
}

Spectrum bouncer_spectrum(const PhysParams& params, int n_max) {
    if (n_max < 1 || n_max > 100) {
        throw std::invalid_argument("bouncer_spectrum: level count must be in [1, 100]");
    }
    const double scale = std::cbrt(params.m_g * params.m_g * params.g * params.g *
                                   params.hbar * params.hbar / (2.0 * params.m_i));
    const auto zeros = airy_zeros(n_max);
    Spectrum s;
    for (int n = 0; n < n_max; ++n) {
        s.levels.emplace_back(n, scale * zeros[static_cast<std::size_t>(n)]);
    }
    return s;
}

Spectrum gravitational_coulomb_spectrum(const PhysParams& params, double M,
                                        double G_newton, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("gravitational_coulomb_spectrum: n_max < 1");
    }
    const double mg_coupling = M * G_newton;
    const double rydberg = params.m_i * params.m_g * params.m_g * mg_coupling *
                           mg_coupling / (2.0 * params.hbar * params.hbar);
    Spectrum s;
    for (int n = 1; n <= n_max; ++n) {
        s.levels.emplace_back(n, -rydberg / (static_cast<double>(n) * n));
    }
    return s;
}

RealField harmonic_wigner_eigenstate(int n, double omega, const PhysParams& params,
                                     const GridSpec& grid) {
    if (n < 0 || n > 30) {
        throw std::invalid_argument("harmonic_wigner_eigenstate: n must be in [0, 30]");
    }
    WaveFunction psi =
        harmonic_eigenfunction(n, omega, params.m_i, params.hbar, grid.zaxis());
    psi.normalize();  // remove grid-level quadrature error before the transform
    return wigner_transform(psi, grid);
}

RealField phase_space_eigen_residual(const RealField& W, double E,
                                     const PolynomialPotential& V,
                                     const PhysParams& params) {
    if (V.degree() > 6) {
        throw std::invalid_argument("phase_space_eigen_residual: degree > 6");
    }
    const GridSpec& g = W.grid();
    const double hb = params.hbar;
    const double hb2 = hb * hb;
    // (-1)^l (hbar/2)^{2l} / (2l)! for l = 1, 2, 3
    const double c2 = -hb2 / 4.0 / 2.0;
    const double c4 = hb2 * hb2 / 16.0 / 24.0;
    const double c6 = -hb2 * hb2 * hb2 / 64.0 / 720.0;
    RealField r(g, W.hbar());
    const std::span<const double> v{W.values()};
#pragma omp parallel for
    for (int j = 1; j < g.n_z - 1; ++j) {
        const double z = g.z(j);
        const double v2 = V.derivative(2, z);
        const double v4 = V.derivative(4, z);
        const double v6 = V.derivative(6, z);
        const double vz = V.value(z);
        for (int m = 3; m < g.n_p - 3; ++m) {
            const std::size_t i = static_cast<std::size_t>(j) * g.n_p + m;
            const double p = g.p(m);
            double acc = (p * p / (2.0 * params.m_i) + vz - E) * W.values()[i];
            acc -= hb2 / (8.0 * params.m_i) *
                   fd::central(v, i, static_cast<std::size_t>(g.n_p), 2, g.dz());
            if (v2 != 0.0) acc += c2 * v2 * fd::central(v, i, 1, 2, g.dp());
            if (v4 != 0.0) acc += c4 * v4 * fd::central(v, i, 1, 4, g.dp());
            if (v6 != 0.0) acc += c6 * v6 * fd::central(v, i, 1, 6, g.dp());
            r.at(j, m) = acc;
        }
    }
    return r;
}

}  // namespace wigsim
