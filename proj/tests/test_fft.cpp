#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "wigsim/fft.hpp"

using wigsim::fft::cplx;

namespace {

// reference DFT, O(N^2)
std::vector<cplx> naive_dft(const std::vector<cplx>& x, bool inverse) {
    const std::size_t n = x.size();
    std::vector<cplx> out(n);
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n; ++k) {
        cplx s{};
        for (std::size_t j = 0; j < n; ++j) {
            const double ang = sign * 2.0 * std::numbers::pi *
                               static_cast<double>(k) * static_cast<double>(j) /
                               static_cast<double>(n);
            s += x[j] * cplx(std::cos(ang), std::sin(ang));
        }
        out[k] = inverse ? s / static_cast<double>(n) : s;
    }
    return out;
}

std::vector<cplx> random_signal(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> x(n);
    for (auto& v : x) v = cplx(u(rng), u(rng));
    return x;
}

}  // namespace

TEST_CASE("radix-2 transform matches the naive DFT") {
    for (std::size_t n : {8u, 64u, 256u}) {
        auto x = random_signal(n, 17);
        auto want = naive_dft(x, false);
        auto got = x;
        wigsim::fft::transform(got, false);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(got[i] - want[i]) < 1e-10);
        }
    }
}

TEST_CASE("forward then inverse recovers the signal") {
    auto x = random_signal(512, 3);
    auto y = x;
    wigsim::fft::transform(y, false);
    wigsim::fft::transform(y, true);
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(std::abs(y[i] - x[i]) < 1e-12);
    }
}

TEST_CASE("transform rejects non-power-of-two sizes") {
    std::vector<cplx> x(12);
    CHECK_THROWS_AS(wigsim::fft::transform(x, false), std::invalid_argument);
}

TEST_CASE("chirp-z equals the direct sum on arbitrary angle grids") {
    // sizes deliberately not powers of two, output count != input count
    const auto x = random_signal(237, 5);
    const double theta0 = -1.37;
    const double dtheta = 0.0931;
    const int n_out = 101;
    const auto got = wigsim::fft::chirp_z(x, theta0, dtheta, n_out);
    for (int k = 0; k < n_out; ++k) {
        cplx want{};
        for (std::size_t n = 0; n < x.size(); ++n) {
            const double ang = (theta0 + k * dtheta) * static_cast<double>(n);
            want += x[n] * cplx(std::cos(ang), -std::sin(ang));
        }
        CHECK(std::abs(got[static_cast<std::size_t>(k)] - want) < 1e-10);
    }
}

TEST_CASE("chirp-z handles large phase products without drift") {
    const auto x = random_signal(1024, 11);
    const double theta0 = 0.0;
    const double dtheta = 2.0 * std::numbers::pi / 1024.0;
    // matching the plain DFT grid: compare against the radix-2 path
    auto want = x;
    wigsim::fft::transform(want, false);
    const auto got = wigsim::fft::chirp_z(x, theta0, dtheta, 1024);
    double max_err = 0.0;
    for (std::size_t i = 0; i < want.size(); ++i) {
        max_err = std::max(max_err, std::abs(got[i] - want[i]));
    }
    CHECK(max_err < 1e-9);
}
