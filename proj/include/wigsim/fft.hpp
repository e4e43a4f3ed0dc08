#pragma once

#include <complex>
#include <vector>

namespace wigsim::fft {

using cplx = std::complex<double>;

// In-place radix-2 transform; data.size() must be a power of two.
// forward:  X_k = sum_n x_n exp(-2*pi*i*k*n/N)
// inverse:  x_n = (1/N) sum_k X_k exp(+2*pi*i*k*n/N)
void transform(std::vector<cplx>& data, bool inverse);

// Chirp-z (Bluestein) evaluation of a DFT-like sum on an arbitrary uniform
// angle grid:
//
//   out[k] = sum_n x[n] * exp(-i*(theta0 + k*dtheta)*n),   k = 0..n_out-1
//
// Works for any input length and output count; exact up to roundoff.
std::vector<cplx> chirp_z(const std::vector<cplx>& x, double theta0,
                          double dtheta, int n_out);

// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

}  // namespace wigsim::fft
