#include "wigsim/fft.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wigsim::fft {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void transform(std::vector<cplx>& data, bool inverse) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("fft::transform: size must be a power of two");
    }
    // bit-reversal permutation
    for (std::size_t i = 0, j = 0; i < n; ++i) {
        if (j > i) std::swap(data[i], data[j]);
        std::size_t m = n >> 1;
        while (m >= 1 && (j & m)) {
            j ^= m;
            m >>= 1;
        }
        j |= m;
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * two_pi / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = data[i + k];
                const cplx v = w * data[i + k + len / 2];
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& c : data) c *= inv;
    }
}

std::vector<cplx> chirp_z(const std::vector<cplx>& x, double theta0,
                          double dtheta, int n_out) {
    const std::size_t n_in = x.size();
    if (n_out <= 0) return {};
    // k*n = (k^2 + n^2 - (k-n)^2)/2 turns the sum into a linear convolution
    // with the chirp exp(+i*dtheta*m^2/2).
    const std::size_t m = next_pow2(n_in + static_cast<std::size_t>(n_out) - 1);
    std::vector<cplx> a(m, cplx(0.0, 0.0));
    std::vector<cplx> b(m, cplx(0.0, 0.0));
    // Reduce the quadratic phase argument mod 2*pi in exact-ish arithmetic to
    // keep cos/sin accurate for large m^2.
    auto chirp = [dtheta](double mm) {
        const double half = 0.5 * dtheta;
        const double arg = std::remainder(half * mm, two_pi) * mm;
        return cplx(std::cos(arg), std::sin(arg));
    };
    for (std::size_t n = 0; n < n_in; ++n) {
        const double nn = static_cast<double>(n);
        const cplx lin(std::cos(theta0 * nn), -std::sin(theta0 * nn));
        a[n] = x[n] * lin * std::conj(chirp(nn));
    }
    // Lags k-n range over [-(n_in-1), n_out-1]; negative lags wrap around.
    for (std::size_t i = 0; i < static_cast<std::size_t>(n_out); ++i) {
        b[i] = chirp(static_cast<double>(i));
    }
    for (std::size_t i = 1; i < n_in; ++i) {
        b[m - i] = chirp(static_cast<double>(i));
    }
    transform(a, false);
    transform(b, false);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    transform(a, true);
    std::vector<cplx> out(static_cast<std::size_t>(n_out));
    for (int k = 0; k < n_out; ++k) {
        out[static_cast<std::size_t>(k)] =
            a[static_cast<std::size_t>(k)] * std::conj(chirp(static_cast<double>(k)));
    }
    return out;
}

}  // namespace wigsim::fft
