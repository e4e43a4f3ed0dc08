#include "wigsim/wavefunction.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>

namespace wigsim {

namespace {
constexpr double pi = std::numbers::pi;
}

double WaveFunction::norm_squared() const {
    double s = 0.0;
    for (const cplx& v : values) s += std::norm(v);
    return s * grid.step();
}

void WaveFunction::normalize() {
    const double n2 = norm_squared();
    if (!(n2 > 0.0)) throw NonNormalized("WaveFunction::normalize: zero norm");
    const double inv = 1.0 / std::sqrt(n2);
    for (cplx& v : values) v *= inv;
}

double WaveFunction::edge_amplitude() const {
    double peak = 0.0;
    for (const cplx& v : values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return 0.0;
    return std::max(std::abs(values.front()), std::abs(values.back())) / peak;
}

void WaveFunction::require_normalized(double tol) const {
    if (std::abs(norm_squared() - 1.0) > tol) {
        throw NonNormalized("wavefunction norm deviates from 1 beyond tolerance");
    }
}

void WaveFunction::require_contained(double tol) const {
    if (edge_amplitude() > tol) {
        throw GridTooSmall("wavefunction has non-negligible amplitude at grid edges");
    }
}

cplx overlap(const WaveFunction& a, const WaveFunction& b) {
    if (!(a.grid == b.grid)) throw GridMismatch("overlap: wavefunction grids differ");
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        s += std::conj(a.values[i]) * b.values[i];
    }
    return s * a.grid.step();
}

cplx GaussianState::psi(double z) const {
    const double s2 = sigma_z * sigma_z;
    const double amp = std::pow(2.0 * pi * s2, -0.25);
    const double dz = z - z0;
    const double phase = p0 * dz / hbar;
    return amp * std::exp(-dz * dz / (4.0 * s2)) * cplx(std::cos(phase), std::sin(phase));
}

double GaussianState::wigner(double z, double p) const {
    const double s2 = sigma_z * sigma_z;
    const double dz = z - z0;
    const double dp = p - p0;
    return std::exp(-dz * dz / (2.0 * s2) - 2.0 * s2 * dp * dp / (hbar * hbar)) /
           (pi * hbar);
}

cplx GaussianState::characteristic(double xi, double q) const {
    const double s2 = sigma_z * sigma_z;
    const double mag =
        std::exp(-q * q * s2 / (2.0 * hbar * hbar) - xi * xi / (8.0 * s2));
    const double beta = (xi * p0 + q * z0) / hbar;
    return mag * cplx(std::cos(beta), std::sin(beta));
}

WaveFunction GaussianState::sample(const ZGrid& grid) const {
    WaveFunction w(grid, hbar);
    for (int j = 0; j < grid.n; ++j) w.values[static_cast<std::size_t>(j)] = psi(grid.at(j));
    return w;
}

WaveFunction harmonic_eigenfunction(int n, double omega, double mass, double hbar,
                                    const ZGrid& grid) {
    if (n < 0) throw std::invalid_argument("harmonic_eigenfunction: n < 0");
    const double alpha = std::sqrt(mass * omega / hbar);  // 1/length scale
    WaveFunction w(grid, hbar);
    for (int j = 0; j < grid.n; ++j) {
        const double x = alpha * grid.at(j);
        // h_k(x): orthonormal oscillator functions in dimensionless x
        double hk = std::pow(pi, -0.25) * std::exp(-0.5 * x * x);
        double hk_prev = 0.0;
        for (int k = 0; k < n; ++k) {
            const double next = std::sqrt(2.0 / (k + 1)) * x * hk -
                                std::sqrt(static_cast<double>(k) / (k + 1)) * hk_prev;
            hk_prev = hk;
            hk = next;
        }
        w.values[static_cast<std::size_t>(j)] = std::sqrt(alpha) * hk;
    }
    return w;
}

void write_csv(const WaveFunction& psi, std::ostream& os,
               const std::vector<std::string>& provenance) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "# %.17g,%.17g,%d,%.17g", psi.grid.min,
                  psi.grid.max, psi.grid.n, psi.hbar);
    os << buf << '\n';
    for (const auto& p : provenance) os << "# " << p << '\n';
    for (int j = 0; j < psi.grid.n; ++j) {
        const cplx v = psi.values[static_cast<std::size_t>(j)];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g", psi.grid.at(j), v.real(),
                      v.imag());
        os << buf << '\n';
    }
}

WaveFunction read_wavefunction_csv(std::istream& is) {
    std::string line;
    WaveFunction psi;
    bool have_header = false;
    std::size_t count = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (!have_header) {
                if (std::sscanf(line.c_str(), "# %lf,%lf,%d,%lf", &psi.grid.min,
                                &psi.grid.max, &psi.grid.n, &psi.hbar) == 4) {
                    psi.values.assign(static_cast<std::size_t>(psi.grid.n), cplx{});
                    have_header = true;
                }
            }
            continue;
        }
        if (!have_header) {
            throw std::invalid_argument("wavefunction CSV: missing header");
        }
        double z, re, im;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &z, &re, &im) != 3) {
            throw std::invalid_argument("wavefunction CSV: malformed row: " + line);
        }
        if (count >= psi.values.size()) {
            throw std::invalid_argument("wavefunction CSV: too many rows");
        }
        psi.values[count++] = cplx(re, im);
    }
    if (!have_header || count != psi.values.size()) {
        throw std::invalid_argument("wavefunction CSV: truncated");
    }
    return psi;
}

}  // namespace wigsim
