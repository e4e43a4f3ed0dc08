#include "wigsim/phase_space.hpp"

#include <cmath>
#include <numbers>

#include "wigsim/fft.hpp"

namespace wigsim {

namespace {
constexpr double pi = std::numbers::pi;
}

RealField wigner_transform(const WaveFunction& psi, const GridSpec& grid,
                           const WignerOptions& opt) {
    if (!(psi.grid == grid.zaxis())) {
        throw GridMismatch("wigner_transform: psi must be sampled on grid.zaxis()");
    }
    psi.require_normalized(opt.norm_tol);
    psi.require_contained(opt.edge_tol);

    const int n = grid.n_z;
    const int big_m = n - 1;           // jump index m in [-big_m, big_m]
    const int n_zeta = 2 * n - 1;
    const double dz = grid.dz();
    const double hbar = psi.hbar;
    const double theta0 = 2.0 * dz * grid.p_min / hbar;
    const double dtheta = 2.0 * dz * grid.dp() / hbar;
    const double scale = dz / (pi * hbar);  // dzeta/(2 pi hbar)

    RealField W(grid, hbar);
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < n; ++j) {
        std::vector<cplx> chi(static_cast<std::size_t>(n_zeta), cplx{});
        const int reach = std::min(j, n - 1 - j);
        for (int m = -reach; m <= reach; ++m) {
            chi[static_cast<std::size_t>(m + big_m)] =
                std::conj(psi.values[static_cast<std::size_t>(j - m)]) *
                psi.values[static_cast<std::size_t>(j + m)];
        }
        const auto row = fft::chirp_z(chi, theta0, dtheta, grid.n_p);
        for (int l = 0; l < grid.n_p; ++l) {
            // undo the index shift m -> m + big_m
            const double ang = (theta0 + l * dtheta) * big_m;
            const cplx shift(std::cos(ang), std::sin(ang));
            W.at(j, l) = scale * (shift * row[static_cast<std::size_t>(l)]).real();
        }
    }
    return W;
}

std::vector<double> marginal_position(const RealField& W) {
    const GridSpec& g = W.grid();
    std::vector<double> P(static_cast<std::size_t>(g.n_z), 0.0);
#pragma omp parallel for
    for (int j = 0; j < g.n_z; ++j) {
        double s = 0.0;
        for (int m = 0; m < g.n_p; ++m) s += W.at(j, m);
        P[static_cast<std::size_t>(j)] = s * g.dp();
    }
    return P;
}

std::vector<double> marginal_momentum(const RealField& W) {
    const GridSpec& g = W.grid();
    std::vector<double> P(static_cast<std::size_t>(g.n_p), 0.0);
#pragma omp parallel for
    for (int m = 0; m < g.n_p; ++m) {
        double s = 0.0;
        for (int j = 0; j < g.n_z; ++j) s += W.at(j, m);
        P[static_cast<std::size_t>(m)] = s * g.dz();
    }
    return P;
}

double phase_space_overlap(const RealField& W1, const RealField& W2) {
    require_same_grid(W1.grid(), W2.grid(), "phase_space_overlap");
    if (W1.hbar() != W2.hbar()) {
        throw GridMismatch("phase_space_overlap: fields carry different hbar");
    }
    const GridSpec& g = W1.grid();
    // per-row partial sums combined in row order: deterministic for any
    // thread count
    std::vector<double> rows(static_cast<std::size_t>(g.n_z), 0.0);
#pragma omp parallel for
    for (int j = 0; j < g.n_z; ++j) {
        double s = 0.0;
        for (int m = 0; m < g.n_p; ++m) s += W1.at(j, m) * W2.at(j, m);
        rows[static_cast<std::size_t>(j)] = s;
    }
    double total = 0.0;
    for (double r : rows) total += r;
    return 2.0 * pi * W1.hbar() * total * g.cell();
}

namespace {

template <typename Field>
cplx characteristic_impl(const Field& W, double xi, double q) {
    const GridSpec& g = W.grid();
    const double hbar = W.hbar();
    std::vector<cplx> rows(static_cast<std::size_t>(g.n_z), cplx{});
#pragma omp parallel for
    for (int j = 0; j < g.n_z; ++j) {
        // e^{i(xi p + q z)/hbar} split into a per-row z factor and a p ladder
        cplx s{};
        const double base = xi * g.p_min / hbar;
        const double step = xi * g.dp() / hbar;
        for (int m = 0; m < g.n_p; ++m) {
            const double ang = base + m * step;
            s += cplx(std::cos(ang), std::sin(ang)) * W.at(j, m);
        }
        const double angz = q * g.z(j) / hbar;
        rows[static_cast<std::size_t>(j)] = s * cplx(std::cos(angz), std::sin(angz));
    }
    cplx total{};
    for (const cplx& r : rows) total += r;
    return total * g.cell();
}

}  // namespace

cplx characteristic_transform(const RealField& W, double xi, double q) {
    return characteristic_impl(W, xi, q);
}

cplx characteristic_transform(const ComplexField& W, double xi, double q) {
    return characteristic_impl(W, xi, q);
}

cplx displacement_expectation(const WaveFunction& psi, double xi, double q) {
    const int n = psi.grid.n;
    const double dz = psi.grid.step();
    const double hbar = psi.hbar;
    const double length = psi.grid.max - psi.grid.min;

    std::vector<cplx> shifted(psi.values);
    fft::transform(shifted, false);
    for (int k = 0; k < n; ++k) {
        const int kk = k < n / 2 ? k : k - n;
        const double p = 2.0 * pi * hbar * kk / length;
        const double ang = p * xi / hbar;
        shifted[static_cast<std::size_t>(k)] *= cplx(std::cos(ang), std::sin(ang));
    }
    fft::transform(shifted, true);

    cplx s{};
    for (int j = 0; j < n; ++j) {
        const double ang = q * psi.grid.at(j) / hbar;
        s += std::conj(psi.values[static_cast<std::size_t>(j)]) *
             cplx(std::cos(ang), std::sin(ang)) * shifted[static_cast<std::size_t>(j)];
    }
    const double half = xi * q / (2.0 * hbar);
    return s * dz * cplx(std::cos(half), std::sin(half));
}

}  // namespace wigsim
