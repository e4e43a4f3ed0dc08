#include "wigsim/grid.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace wigsim {

namespace {

bool pow2_at_least_8(int n) { return n >= 8 && (n & (n - 1)) == 0; }

void append_g17(std::string& s, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    s += buf;
}

}  // namespace

void GridSpec::validate() const {
    if (!(z_max > z_min) || !(p_max > p_min)) {
        throw std::invalid_argument("GridSpec: empty axis extent");
    }
    if (!pow2_at_least_8(n_z) || !pow2_at_least_8(n_p)) {
        throw std::invalid_argument("GridSpec: axis counts must be powers of two >= 8");
    }
}

GridSpec GridSpec::fft_matched(double z_min, double z_max, int n_z, double hbar) {
    // The jump coordinate is sampled at zeta = 2 m dz, so the transform is
    // faithful on the half band |p| < pi hbar/(2 dz); the matched span makes
    // the momentum sum over the z-phases close exactly.
    const double dz = (z_max - z_min) / n_z;
    const double p_half = 0.5 * std::numbers::pi * hbar / dz;
    GridSpec g{z_min, z_max, n_z, -p_half, p_half, n_z};
    g.validate();
    return g;
}

double RealField::integral() const {
    double s = 0.0;
    for (double v : values()) s += v;
    return s * grid().cell();
}

bool RealField::all_finite() const {
    for (double v : values()) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

ComplexField::ComplexField(const RealField& re)
    : FieldBase<cplx>(re.grid(), re.hbar()) {
    for (std::size_t i = 0; i < values().size(); ++i) {
        values()[i] = cplx(re.values()[i], 0.0);
    }
}

cplx ComplexField::integral() const {
    cplx s(0.0, 0.0);
    for (const cplx& v : values()) s += v;
    return s * grid().cell();
}

double ComplexField::max_abs_imag() const {
    double m = 0.0;
    for (const cplx& v : values()) m = std::max(m, std::abs(v.imag()));
    return m;
}

RealField ComplexField::real_part(double tol) const {
    double scale = 0.0;
    for (const cplx& v : values()) scale = std::max(scale, std::abs(v));
    if (scale > 0.0 && max_abs_imag() > tol * scale) {
        throw NumericError("ComplexField::real_part: imaginary part above tolerance");
    }
    RealField out(grid(), hbar());
    for (std::size_t i = 0; i < values().size(); ++i) {
        out.values()[i] = values()[i].real();
    }
    return out;
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
    if (!(a == b)) {
        throw GridMismatch(std::string(what) + ": fields live on different grids");
    }
}

namespace {

void write_header(std::ostream& os, const GridSpec& g, double hbar,
                  const std::vector<std::string>& provenance) {
    std::string line = "# ";
    append_g17(line, g.z_min);
    line += ',';
    append_g17(line, g.z_max);
    line += ',' + std::to_string(g.n_z) + ',';
    append_g17(line, g.p_min);
    line += ',';
    append_g17(line, g.p_max);
    line += ',' + std::to_string(g.n_p) + ',';
    append_g17(line, hbar);
    os << line << '\n';
    for (const auto& p : provenance) os << "# " << p << '\n';
}

template <typename Field, typename Emit>
void write_rows(std::ostream& os, const Field& f, Emit emit) {
    const GridSpec& g = f.grid();
    for (int j = 0; j < g.n_z; ++j) {
        for (int m = 0; m < g.n_p; ++m) {
            std::string line;
            append_g17(line, g.z(j));
            line += ',';
            append_g17(line, g.p(m));
            emit(line, f.at(j, m));
            os << line << '\n';
        }
    }
}

struct Header {
    GridSpec grid;
    double hbar;
};

Header read_header(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] != '#') {
            throw std::invalid_argument("field CSV: missing '#' header line");
        }
        Header h;
        if (std::sscanf(line.c_str(), "# %lf,%lf,%d,%lf,%lf,%d,%lf", &h.grid.z_min,
                        &h.grid.z_max, &h.grid.n_z, &h.grid.p_min, &h.grid.p_max,
                        &h.grid.n_p, &h.hbar) != 7) {
            throw std::invalid_argument("field CSV: malformed header line");
        }
        h.grid.validate();
        return h;
    }
    throw std::invalid_argument("field CSV: empty stream");
}

template <typename Field, typename Parse>
Field read_rows(std::istream& is, const Header& h, Parse parse) {
    Field f(h.grid, h.hbar);
    std::size_t count = 0;
    const std::size_t total = f.values().size();
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (count >= total) {
            throw std::invalid_argument("field CSV: more rows than n_z*n_p");
        }
        f.values()[count++] = parse(line);
    }
    if (count != total) {
        throw std::invalid_argument("field CSV: fewer rows than n_z*n_p");
    }
    return f;
}

}  // namespace

void write_csv(const RealField& f, std::ostream& os,
               const std::vector<std::string>& provenance) {
    write_header(os, f.grid(), f.hbar(), provenance);
    write_rows(os, f, [](std::string& line, double v) {
        line += ',';
        append_g17(line, v);
    });
}

void write_csv(const ComplexField& f, std::ostream& os,
               const std::vector<std::string>& provenance) {
    write_header(os, f.grid(), f.hbar(), provenance);
    write_rows(os, f, [](std::string& line, const cplx& v) {
        line += ',';
        append_g17(line, v.real());
        line += ',';
        append_g17(line, v.imag());
    });
}

RealField read_real_csv(std::istream& is) {
    const Header h = read_header(is);
    return read_rows<RealField>(is, h, [](const std::string& line) {
        double z, p, re;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &z, &p, &re) != 3) {
            throw std::invalid_argument("field CSV: malformed row: " + line);
        }
        return re;
    });
}

ComplexField read_complex_csv(std::istream& is) {
    const Header h = read_header(is);
    return read_rows<ComplexField>(is, h, [](const std::string& line) {
        double z, p, re, im;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &z, &p, &re, &im) != 4) {
            throw std::invalid_argument("field CSV: malformed row: " + line);
        }
        return cplx(re, im);
    });
}

}  // namespace wigsim
