#include "wigsim/reference.hpp"

#include <cmath>
#include <numbers>

namespace wigsim::ref {

namespace {
constexpr double pi = std::numbers::pi;
}

ComplexField wigner_transform_serial(const WaveFunction& psi, const GridSpec& grid) {
    if (!(psi.grid == grid.zaxis())) {
        throw GridMismatch("wigner_transform_serial: psi not on grid.zaxis()");
    }
    const int n = grid.n_z;
    const double dz = grid.dz();
    const double hbar = psi.hbar;
    ComplexField W(grid, hbar);
    for (int j = 0; j < n; ++j) {
        const int reach = std::min(j, n - 1 - j);
        for (int l = 0; l < grid.n_p; ++l) {
            const double p = grid.p(l);
            cplx s{};
            for (int m = -reach; m <= reach; ++m) {
                const double zeta = 2.0 * m * dz;
                const cplx chi = std::conj(psi.values[static_cast<std::size_t>(j - m)]) *
                                 psi.values[static_cast<std::size_t>(j + m)];
                const double ang = -p * zeta / hbar;
                s += chi * cplx(std::cos(ang), std::sin(ang));
            }
            W.at(j, l) = s * (dz / (pi * hbar));
        }
    }
    return W;
}

cplx characteristic_serial(const RealField& W, double xi, double q) {
    const GridSpec& g = W.grid();
    cplx s{};
    for (int j = 0; j < g.n_z; ++j) {
        for (int m = 0; m < g.n_p; ++m) {
            const double ang = (xi * g.p(m) + q * g.z(j)) / W.hbar();
            s += cplx(std::cos(ang), std::sin(ang)) * W.at(j, m);
        }
    }
    return s * g.cell();
}

RealField transport_serial(const RealField& W0, const AffineFlow& flow) {
    const AffineFlow inv = flow.inverse();
    const GridSpec& g = W0.grid();
    RealField W(g, W0.hbar());
    for (int j = 0; j < g.n_z; ++j) {
        for (int m = 0; m < g.n_p; ++m) {
            const PhasePoint y = inv.apply({g.z(j), g.p(m)});
            const double fj = (y.z - g.z_min) / g.dz();
            const double fm = (y.p - g.p_min) / g.dp();
            const int j0 = static_cast<int>(std::floor(fj));
            const int m0 = static_cast<int>(std::floor(fm));
            if (j0 < 0 || j0 + 1 >= g.n_z || m0 < 0 || m0 + 1 >= g.n_p) continue;
            const double wz = fj - j0;
            const double wp = fm - m0;
            W.at(j, m) = W0.at(j0, m0) * (1.0 - wz) * (1.0 - wp) +
                         W0.at(j0 + 1, m0) * wz * (1.0 - wp) +
                         W0.at(j0, m0 + 1) * (1.0 - wz) * wp +
                         W0.at(j0 + 1, m0 + 1) * wz * wp;
        }
    }
    return W;
}

double overlap_serial(const RealField& W1, const RealField& W2) {
    require_same_grid(W1.grid(), W2.grid(), "overlap_serial");
    const GridSpec& g = W1.grid();
    double s = 0.0;
    for (int j = 0; j < g.n_z; ++j) {
        for (int m = 0; m < g.n_p; ++m) s += W1.at(j, m) * W2.at(j, m);
    }
    return 2.0 * pi * W1.hbar() * s * g.cell();
}

}  // namespace wigsim::ref
