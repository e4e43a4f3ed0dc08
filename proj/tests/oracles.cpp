#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace test_oracle {

namespace {
constexpr double pi = std::numbers::pi;
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2 != 0) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return s * h / 3.0;
}

double wigner_quadrature(const std::function<cplx(double)>& psi, double z, double p,
                         double hbar, double zeta_max, int n_panels) {
    auto integrand = [&](double zeta) {
        const cplx v = std::conj(psi(z - 0.5 * zeta)) * psi(z + 0.5 * zeta);
        const double ang = -p * zeta / hbar;
        return (v * cplx(std::cos(ang), std::sin(ang))).real();
    };
    return simpson(integrand, -zeta_max, zeta_max, n_panels) / (2.0 * pi * hbar);
}

double airy_quadrature(double x) {
    if (x > 0.0) {
        const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
        auto integrand = [x](double u) {
            return std::exp(-std::sqrt(x) * u * u) * std::cos(u * u * u / 3.0);
        };
        const double u_max = 12.0 / std::pow(x, 0.25) + 4.0;
        return std::exp(-zeta) * simpson(integrand, 0.0, u_max, 20000) / pi;
    }
    auto integrand = [x](double s) {
        return std::exp(-s * s * s / 3.0 - 0.5 * x * s) *
               std::cos(0.5 * std::sqrt(3.0) * x * s + pi / 6.0);
    };
    // e^{-s^3/3} caps the tail; for x < 0 the growing e^{|x|s/2} is still
    // crushed well before s_max
    const double s_max = std::max(12.0, 2.5 * std::sqrt(std::abs(x)) + 8.0);
    return simpson(integrand, 0.0, s_max, 20000) / pi;
}

double oscillator_psi(int n, double omega, double mass, double hbar, double z) {
    const double alpha = std::sqrt(mass * omega / hbar);
    const double x = alpha * z;
    double h_prev = 0.0;
    double h = std::pow(pi, -0.25) * std::exp(-0.5 * x * x);
    for (int k = 0; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1)) * x * h -
                            std::sqrt(static_cast<double>(k) / (k + 1)) * h_prev;
        h_prev = h;
        h = next;
    }
    return std::sqrt(alpha) * h;
}

}  // namespace test_oracle
