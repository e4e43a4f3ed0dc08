#pragma once

#include <complex>
#include <functional>

// Test-side oracles, independent of the library's numerical paths: plain
// quadrature against analytic wavefunctions, a naive DFT, and an Airy
// integral representation. Deliberately slow and literal.
namespace test_oracle {

using cplx = std::complex<double>;

// Simpson quadrature of f over [a, b] with n panels (n even).
double simpson(const std::function<double(double)>& f, double a, double b, int n);

// Wigner function by direct quadrature over the jump coordinate,
//   W(z,p) = 1/(2 pi hbar) * int dzeta e^{-i p zeta/hbar}
//            psi*(z - zeta/2) psi(z + zeta/2),
// with psi supplied analytically; zeta_max bounds the support.
double wigner_quadrature(const std::function<cplx(double)>& psi, double z, double p,
                         double hbar, double zeta_max, int n_panels = 4096);

// Absolutely convergent rotated-contour representation
//   Ai(x) = (1/pi) int_0^inf e^{-s^3/3 - x s/2} cos(sqrt(3) x s / 2 + pi/6) ds;
// for x > 0 the contour through the saddle at i sqrt(x) is used instead,
//   Ai(x) = (e^{-zeta}/pi) int_0^inf e^{-sqrt(x) u^2} cos(u^3/3) du,
// which keeps the accuracy relative on the decaying wing.
double airy_quadrature(double x);

// Physicists' harmonic-oscillator eigenfunction psi_n(z) for mass m,
// frequency omega, evaluated through the normalized recurrence.
double oscillator_psi(int n, double omega, double mass, double hbar, double z);

}  // namespace test_oracle
