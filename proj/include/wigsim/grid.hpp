#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "wigsim/errors.hpp"

namespace wigsim {

using cplx = std::complex<double>;

// Uniform 1-D position grid, nodes z_j = min + j*step, j = 0..n-1.
// The right endpoint is excluded (periodic/FFT convention), so
// step = (max - min)/n.
struct ZGrid {
    double min = 0.0;
    double max = 0.0;
    int n = 0;

    double step() const { return (max - min) / n; }
    double at(int j) const { return min + j * step(); }
    bool operator==(const ZGrid&) const = default;
};

// Rectangular (z, p) phase-space grid. Both axis counts must be powers of
// two and at least 8. Spacings dz = (z_max - z_min)/n_z, dp analogous; the
// upper edges are excluded, matching ZGrid.
struct GridSpec {
    double z_min = 0.0, z_max = 0.0;
    int n_z = 0;
    double p_min = 0.0, p_max = 0.0;
    int n_p = 0;

    double dz() const { return (z_max - z_min) / n_z; }
    double dp() const { return (p_max - p_min) / n_p; }
    double z(int j) const { return z_min + j * dz(); }
    double p(int m) const { return p_min + m * dp(); }
    double cell() const { return dz() * dp(); }
    ZGrid zaxis() const { return {z_min, z_max, n_z}; }

    bool operator==(const GridSpec&) const = default;

    // Throws std::invalid_argument on degenerate extents or non-power-of-two
    // counts below 8.
    void validate() const;

    // Momentum axis matched to the z sampling: span pi*hbar/dz centered on
    // zero with n_p = n_z. On such a grid marginals and the purity integral
    // of states within the half band |p| < pi*hbar/(2 dz) close exactly.
    static GridSpec fft_matched(double z_min, double z_max, int n_z, double hbar);
};

namespace detail {
template <typename T>
class FieldBase {
public:
    FieldBase() = default;
    FieldBase(const GridSpec& grid, double hbar)
        : grid_(grid), hbar_(hbar),
          values_(static_cast<std::size_t>(grid.n_z) * grid.n_p, T{}) {
        grid_.validate();
    }

    const GridSpec& grid() const { return grid_; }
    double hbar() const { return hbar_; }

    T& at(int j, int m) { return values_[static_cast<std::size_t>(j) * grid_.n_p + m]; }
    const T& at(int j, int m) const {
        return values_[static_cast<std::size_t>(j) * grid_.n_p + m];
    }
    std::vector<T>& values() { return values_; }
    const std::vector<T>& values() const { return values_; }

private:
    GridSpec grid_;
    double hbar_ = 1.0;
    std::vector<T> values_;  // row-major, z outer / p inner
};
}  // namespace detail

// Real-valued samples W(z_j, p_m); the carrier for Wigner functions and
// classical distributions.
class RealField : public detail::FieldBase<double> {
public:
    using FieldBase::FieldBase;

    double integral() const;  // sum W dz dp
    bool all_finite() const;
};

// Complex-valued samples; interference-path Wigner functions are genuinely
// complex.
class ComplexField : public detail::FieldBase<cplx> {
public:
    using FieldBase::FieldBase;

    ComplexField(const RealField& re);  // imaginary part zero

    cplx integral() const;
    double max_abs_imag() const;
    // Real part; throws NumericError if |Im| exceeds tol * max|value|.
    RealField real_part(double tol = 1e-10) const;
};

// CSV format shared by both field types:
//   # z_min,z_max,n_z,p_min,p_max,n_p,hbar
//   z,p,re[,im]   (n_z*n_p rows, z-major)
// Values are printed with 17 significant digits so the round trip is
// bit-faithful. Extra '#' lines after the header are ignored on read.
void write_csv(const RealField& f, std::ostream& os,
               const std::vector<std::string>& provenance = {});
void write_csv(const ComplexField& f, std::ostream& os,
               const std::vector<std::string>& provenance = {});
RealField read_real_csv(std::istream& is);
ComplexField read_complex_csv(std::istream& is);

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what);

}  // namespace wigsim
