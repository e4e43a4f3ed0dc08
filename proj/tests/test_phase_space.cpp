// Wigner transform, marginals, trace product, and characteristic function,
// checked against direct quadrature of the jump-coordinate integral and
// against closed forms for Gaussian states.

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wigsim/phase_space.hpp"
#include "wigsim/reference.hpp"

using namespace wigsim;

namespace {

constexpr double pi = std::numbers::pi;

GridSpec test_grid() { return GridSpec::fft_matched(-16.0, 16.0, 256, 1.0); }

WaveFunction gaussian_on_grid(const GaussianState& s, const GridSpec& g) {
    WaveFunction psi = s.sample(g.zaxis());
    psi.normalize();
    return psi;
}

}  // namespace

TEST_CASE("Gaussian Wigner function matches quadrature and closed form at 32 points") {
    const GaussianState s{0.0, 0.0, 1.0, 1.0};
    const GridSpec g = test_grid();
    const RealField W = wigner_transform(gaussian_on_grid(s, g), g);

    auto psi = [&](double z) { return s.psi(z); };
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> jz(96, 160);  // stay near the packet
    std::uniform_int_distribution<int> jp(112, 144);
    for (int i = 0; i < 32; ++i) {
        const int j = jz(rng);
        const int m = jp(rng);
        const double want_quad =
            test_oracle::wigner_quadrature(psi, g.z(j), g.p(m), 1.0, 24.0);
        const double want_closed = s.wigner(g.z(j), g.p(m));
        CHECK(std::abs(W.at(j, m) - want_quad) < 1e-8);
        CHECK(std::abs(W.at(j, m) - want_closed) < 1e-8);
    }
}

TEST_CASE("Wigner transform integrates to one for normalized states") {
    const GridSpec g = test_grid();
    const GaussianState s{0.5, 1.0, 0.7, 1.0};
    const RealField W = wigner_transform(gaussian_on_grid(s, g), g);
    CHECK(W.integral() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sixth oscillator state: positive center and six radial sign changes") {
    const GridSpec g = test_grid();
    WaveFunction psi6 = harmonic_eigenfunction(6, 1.0, 1.0, 1.0, g.zaxis());
    psi6.normalize();
    const RealField W = wigner_transform(psi6, g);

    // value at the origin: quadrature oracle and the expected +1/(pi hbar)
    auto psi_fn = [&](double z) {
        return test_oracle::cplx(test_oracle::oscillator_psi(6, 1.0, 1.0, 1.0, z), 0.0);
    };
    const double w00 = test_oracle::wigner_quadrature(psi_fn, 0.0, 0.0, 1.0, 28.0);
    const int j0 = g.n_z / 2;  // z = 0 node
    const int m0 = g.n_p / 2;  // p = 0 node
    CHECK(g.z(j0) == doctest::Approx(0.0));
    CHECK(g.p(m0) == doctest::Approx(0.0));
    CHECK(W.at(j0, m0) > 0.0);
    CHECK(W.at(j0, m0) == doctest::Approx(1.0 / pi).epsilon(1e-6));
    CHECK(std::abs(W.at(j0, m0) - w00) < 1e-8);

    // six sign changes along the positive z axis at p = 0
    int changes = 0;
    double prev = W.at(j0, m0);
    for (int j = j0 + 1; j < g.n_z; ++j) {
        const double v = W.at(j, m0);
        if (std::abs(v) < 1e-12) continue;
        if (prev * v < 0.0) ++changes;
        prev = v;
    }
    CHECK(changes == 6);
}

TEST_CASE("position marginal reproduces |psi(z)|^2") {
    const GridSpec g = test_grid();
    const GaussianState s{-0.75, 0.5, 1.3, 1.0};
    const WaveFunction psi = gaussian_on_grid(s, g);
    const RealField W = wigner_transform(psi, g);
    const auto P = marginal_position(W);

    double sup = 0.0;
    for (int j = 0; j < g.n_z; ++j) {
        sup = std::max(sup, std::abs(P[static_cast<std::size_t>(j)] -
                                     std::norm(psi.values[static_cast<std::size_t>(j)])));
    }
    CHECK(sup < 1e-8);

    double total = 0.0;
    for (double v : P) total += v;
    CHECK(total * g.dz() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("position marginal of the sixth oscillator state") {
    const GridSpec g = test_grid();
    WaveFunction psi6 = harmonic_eigenfunction(6, 1.0, 1.0, 1.0, g.zaxis());
    psi6.normalize();
    const auto P = marginal_position(wigner_transform(psi6, g));
    double sup = 0.0;
    for (int j = 0; j < g.n_z; ++j) {
        const double u = test_oracle::oscillator_psi(6, 1.0, 1.0, 1.0, g.z(j));
        sup = std::max(sup, std::abs(P[static_cast<std::size_t>(j)] - u * u));
    }
    CHECK(sup < 1e-7);
}

TEST_CASE("momentum marginal: Gaussian of width hbar/(2 sigma), displaced peak") {
    const GridSpec g = test_grid();
    const double sigma = 1.0;
    const GaussianState s{0.0, 0.0, sigma, 1.0};
    const auto Pt = marginal_momentum(wigner_transform(gaussian_on_grid(s, g), g));

    const double sp = 0.5 / sigma;  // momentum width hbar/(2 sigma)
    double sup = 0.0;
    for (int m = 0; m < g.n_p; ++m) {
        const double p = g.p(m);
        const double want =
            std::exp(-p * p / (2.0 * sp * sp)) / std::sqrt(2.0 * pi * sp * sp);
        sup = std::max(sup, std::abs(Pt[static_cast<std::size_t>(m)] - want));
    }
    CHECK(sup < 1e-7);

    double total = 0.0;
    for (double v : Pt) total += v;
    CHECK(total * g.dp() == doctest::Approx(1.0).epsilon(1e-9));

    // displacement by p0 = 5 grid units moves the peak accordingly
    const GaussianState moved{0.0, 5.0, sigma, 1.0};
    const auto Pm = marginal_momentum(wigner_transform(gaussian_on_grid(moved, g), g));
    int argmax = 0;
    for (int m = 1; m < g.n_p; ++m) {
        if (Pm[static_cast<std::size_t>(m)] > Pm[static_cast<std::size_t>(argmax)]) argmax = m;
    }
    CHECK(std::abs(g.p(argmax) - 5.0) <= g.dp());
}

TEST_CASE("trace product: purity, orthogonality, displaced-Gaussian overlap") {
    const GridSpec g = test_grid();
    const GaussianState s{0.0, 0.0, 1.0, 1.0};
    const RealField W = wigner_transform(gaussian_on_grid(s, g), g);
    CHECK(phase_space_overlap(W, W) == doctest::Approx(1.0).epsilon(1e-6));

    WaveFunction h0 = harmonic_eigenfunction(0, 1.0, 1.0, 1.0, g.zaxis());
    WaveFunction h1 = harmonic_eigenfunction(1, 1.0, 1.0, 1.0, g.zaxis());
    h0.normalize();
    h1.normalize();
    const RealField W0 = wigner_transform(h0, g);
    const RealField W1 = wigner_transform(h1, g);
    CHECK(std::abs(phase_space_overlap(W0, W1)) < 1e-6);

    const double d = 1.5;
    const GaussianState moved{d, 0.0, 1.0, 1.0};
    const RealField Wd = wigner_transform(gaussian_on_grid(moved, g), g);
    CHECK(phase_space_overlap(W, Wd) ==
          doctest::Approx(std::exp(-d * d / 4.0)).epsilon(1e-6));
}

TEST_CASE("trace product requires a common grid") {
    const GridSpec g = test_grid();
    const GridSpec g2 = GridSpec::fft_matched(-16.0, 16.0, 128, 1.0);
    const GaussianState s{0.0, 0.0, 1.0, 1.0};
    const RealField W = wigner_transform(gaussian_on_grid(s, g), g);
    const RealField W2 = wigner_transform(gaussian_on_grid(s, g2), g2);
    CHECK_THROWS_AS(phase_space_overlap(W, W2), GridMismatch);
}

TEST_CASE("characteristic transform: normalization, Gaussian closed form, displaced phase") {
    const GridSpec g = test_grid();
    const GaussianState s{0.0, 0.0, 1.0, 1.0};
    const RealField W = wigner_transform(gaussian_on_grid(s, g), g);

    CHECK(std::abs(characteristic_transform(W, 0.0, 0.0) - cplx(1.0, 0.0)) < 1e-9);

    const double xi = 0.8, q = -1.1;
    const cplx got = characteristic_transform(W, xi, q);
    const double want = std::exp(-q * q / 2.0 - xi * xi / 8.0);  // sigma = hbar = 1
    CHECK(std::abs(got - cplx(want, 0.0)) < 1e-8);

    const GaussianState moved{0.4, -0.9, 1.0, 1.0};
    const RealField Wm = wigner_transform(gaussian_on_grid(moved, g), g);
    const cplx gm = characteristic_transform(Wm, xi, q);
    const double beta = xi * moved.p0 + q * moved.z0;  // hbar = 1
    CHECK(std::arg(gm * std::exp(cplx(0.0, -beta))) ==
          doctest::Approx(0.0).epsilon(1e-7));
    CHECK(std::abs(gm) == doctest::Approx(want).epsilon(1e-7));
}

TEST_CASE("characteristic transform equals the direct displacement expectation") {
    const GridSpec g = test_grid();
    const GaussianState s{0.3, -0.6, 1.1, 1.0};
    const WaveFunction psi = gaussian_on_grid(s, g);
    const RealField W = wigner_transform(psi, g);

    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        const double xi = u(rng);
        const double q = u(rng);
        const cplx field_side = characteristic_transform(W, xi, q);
        const cplx direct = displacement_expectation(psi, xi, q);
        CHECK(std::abs(field_side - direct) < 1e-6);
        // and both agree with the analytic Gaussian value
        CHECK(std::abs(direct - s.characteristic(xi, q)) < 1e-6);
    }
}

TEST_CASE("raw transform is real to 1e-10 of the field scale") {
    const GridSpec g = GridSpec::fft_matched(-16.0, 16.0, 128, 1.0);
    WaveFunction psi = harmonic_eigenfunction(3, 1.0, 1.0, 1.0, g.zaxis());
    psi.normalize();
    const ComplexField raw = ref::wigner_transform_serial(psi, g);
    double scale = 0.0;
    for (const cplx& v : raw.values()) scale = std::max(scale, std::abs(v));
    CHECK(raw.max_abs_imag() < 1e-10 * scale);
}

TEST_CASE("parallel chirp-z rows agree with the serial direct sum") {
    const GridSpec g = GridSpec::fft_matched(-12.0, 12.0, 128, 1.0);
    const GaussianState s{0.2, 0.9, 0.8, 1.0};
    const WaveFunction psi = gaussian_on_grid(s, g);
    const RealField fast = wigner_transform(psi, g);
    const ComplexField slow = ref::wigner_transform_serial(psi, g);
    double max_err = 0.0;
    for (int j = 0; j < g.n_z; ++j) {
        for (int m = 0; m < g.n_p; ++m) {
            max_err = std::max(max_err, std::abs(fast.at(j, m) - slow.at(j, m).real()));
        }
    }
    CHECK(max_err < 1e-11);

    const cplx a = characteristic_transform(fast, 0.7, -0.4);
    const cplx b = ref::characteristic_serial(fast, 0.7, -0.4);
    CHECK(std::abs(a - b) < 1e-12);
}

TEST_CASE("error paths: edge amplitude, normalization, grid mismatch") {
    const GridSpec g = test_grid();
    // sigma comparable to the box: visible amplitude at the edge
    const GaussianState wide{0.0, 0.0, 8.0, 1.0};
    WaveFunction psi = wide.sample(g.zaxis());
    psi.normalize();
    CHECK_THROWS_AS(wigner_transform(psi, g), GridTooSmall);

    const GaussianState s{0.0, 0.0, 1.0, 1.0};
    WaveFunction bad = s.sample(g.zaxis());
    for (cplx& v : bad.values) v *= 1.01;  // denormalize
    CHECK_THROWS_AS(wigner_transform(bad, g), NonNormalized);

    WaveFunction off = s.sample({-16.0, 16.0, 128});
    off.normalize();
    CHECK_THROWS_AS(wigner_transform(off, g), GridMismatch);
}

TEST_CASE("random pure superpositions: purity, realness, marginal consistency") {
    const GridSpec g = GridSpec::fft_matched(-16.0, 16.0, 256, 1.0);
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        // random combination of the first eight oscillator states
        WaveFunction psi(g.zaxis(), 1.0);
        for (int n = 0; n < 8; ++n) {
            const cplx c(u(rng), u(rng));
            const WaveFunction base = harmonic_eigenfunction(n, 1.0, 1.0, 1.0, g.zaxis());
            for (std::size_t i = 0; i < psi.values.size(); ++i) {
                psi.values[i] += c * base.values[i];
            }
        }
        psi.normalize();
        const RealField W = wigner_transform(psi, g);

        CHECK(W.integral() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(phase_space_overlap(W, W) == doctest::Approx(1.0).epsilon(1e-6));

        const auto P = marginal_position(W);
        double sup = 0.0;
        for (int j = 0; j < g.n_z; ++j) {
            sup = std::max(sup, std::abs(P[static_cast<std::size_t>(j)] -
                                         std::norm(psi.values[static_cast<std::size_t>(j)])));
        }
        CHECK(sup < 1e-7);

        const ComplexField raw = ref::wigner_transform_serial(psi, g);
        double scale = 0.0;
        for (const cplx& v : raw.values()) scale = std::max(scale, std::abs(v));
        CHECK(raw.max_abs_imag() < 1e-10 * scale);
    }
}
