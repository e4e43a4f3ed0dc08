#include "wigsim/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "wigsim/fd.hpp"

namespace wigsim {

namespace fd {

double central(std::span<const double> v, std::size_t i, std::size_t stride,
               int order, double h) {
    auto a = [&](int off) {
        return off >= 0 ? v[i + static_cast<std::size_t>(off) * stride]
                        : v[i - static_cast<std::size_t>(-off) * stride];
    };
    switch (order) {
        case 1: return (a(1) - a(-1)) / (2.0 * h);
        case 2: return (a(1) - 2.0 * a(0) + a(-1)) / (h * h);
        case 3:
            return (-0.5 * a(-2) + a(-1) - a(1) + 0.5 * a(2)) / (h * h * h);
        case 4:
            return (a(-2) - 4.0 * a(-1) + 6.0 * a(0) - 4.0 * a(1) + a(2)) /
                   (h * h * h * h);
        case 5:
            return (-0.5 * a(-3) + 2.0 * a(-2) - 2.5 * a(-1) + 2.5 * a(1) -
                    2.0 * a(2) + 0.5 * a(3)) /
                   (h * h * h * h * h);
        case 6:
            return (a(-3) - 6.0 * a(-2) + 15.0 * a(-1) - 20.0 * a(0) + 15.0 * a(1) -
                    6.0 * a(2) + a(3)) /
                   (h * h * h * h * h * h);
        default:
            throw std::invalid_argument("fd::central: order must be 1..6");
    }
}

}  // namespace fd

OscCoeffs osc_coeffs(double x, double t) {
    const double u2 = x * t * t;
    if (std::abs(u2) < 1e-8) {
        // C = sum (-x)^k t^{2k} / (2k)!  etc.; five terms leave the
        // truncation far below double roundoff at this threshold.
        const double t2 = t * t;
        double c = 1.0, s1 = t, k1 = t2 / 2.0;
        double term_c = 1.0, term_s = t, term_k = t2 / 2.0;
        for (int k = 1; k <= 4; ++k) {
            term_c *= -x * t2 / ((2 * k - 1) * (2 * k));
            term_s *= -x * t2 / ((2 * k) * (2 * k + 1));
            term_k *= -x * t2 / ((2 * k + 1) * (2 * k + 2));
            c += term_c;
            s1 += term_s;
            k1 += term_k;
        }
        return {c, s1, k1};
    }
    if (u2 > 0.0) {
        const double u = std::sqrt(u2);
        const double sh = std::sin(0.5 * u);
        return {std::cos(u), t * std::sin(u) / u, 2.0 * sh * sh * t * t / u2};
    }
    const double v = std::sqrt(-u2);
    const double sh = std::sinh(0.5 * v);
    return {std::cosh(v), t * std::sinh(v) / v, -2.0 * sh * sh * t * t / u2};
}

AffineFlow AffineFlow::inverse() const {
    // det = 1 for flows; use the exact adjugate anyway
    const double d = det();
    AffineFlow inv;
    inv.zz = pp / d;
    inv.zp = -zp / d;
    inv.pz = -pz / d;
    inv.pp = zz / d;
    inv.off_z = -(inv.zz * off_z + inv.zp * off_p);
    inv.off_p = -(inv.pz * off_z + inv.pp * off_p);
    inv.duration = -duration;
    return inv;
}

AffineFlow AffineFlow::momentum_kick(double dp) {
    AffineFlow f;
    f.off_p = dp;
    return f;
}

AffineFlow compose(const AffineFlow& second, const AffineFlow& first) {
    AffineFlow f;
    f.zz = second.zz * first.zz + second.zp * first.pz;
    f.zp = second.zz * first.zp + second.zp * first.pp;
    f.pz = second.pz * first.zz + second.pp * first.pz;
    f.pp = second.pz * first.zp + second.pp * first.pp;
    const PhasePoint b = second.apply({first.off_z, first.off_p});
    f.off_z = b.z;
    f.off_p = b.p;
    f.duration = first.duration + second.duration;
    return f;
}

AffineFlow classical_flow(const PhysParams& params, double t) {
    const double x = params.gamma_prime();
    const double gp = params.g_prime();
    const OscCoeffs o = osc_coeffs(x, t);
    AffineFlow f;
    f.zz = o.c;
    f.zp = o.s1 / params.m_i;
    f.pz = -params.m_i * x * o.s1;
    f.pp = o.c;
    f.off_z = -gp * o.k1;
    f.off_p = -params.m_i * gp * o.s1;
    f.duration = t;
    return f;
}

double PolynomialPotential::value(double z) const {
    double v = 0.0;
    for (int j = 6; j >= 0; --j) v = v * z + c[static_cast<std::size_t>(j)];
    return v;
}

double PolynomialPotential::derivative(int order, double z) const {
    if (order < 0) throw std::invalid_argument("PolynomialPotential: negative order");
    if (order > 6) return 0.0;
    // differentiate the coefficient array `order` times, then Horner
    std::array<double, 7> d = c;
    for (int rep = 0; rep < order; ++rep) {
        for (int j = 0; j < 6; ++j) {
            d[static_cast<std::size_t>(j)] = (j + 1) * d[static_cast<std::size_t>(j) + 1];
        }
        d[6] = 0.0;
    }
    double v = 0.0;
    for (int j = 6; j >= 0; --j) v = v * z + d[static_cast<std::size_t>(j)];
    return v;
}

int PolynomialPotential::degree() const {
    for (int j = 6; j >= 1; --j) {
        if (c[static_cast<std::size_t>(j)] != 0.0) return j;
    }
    return 0;
}

PolynomialPotential gravity_potential(const PhysParams& params) {
    PolynomialPotential V;
    V.c[1] = params.m_g * params.g;
    V.c[2] = 0.5 * params.m_g * params.Gamma;
    return V;
}

namespace {

void check_mass_conserved(double before, double after, const char* what) {
    if (std::abs(after - before) > 1e-3 * std::max(std::abs(before), 1e-12)) {
        throw ExtrapolationLoss(std::string(what) +
                                ": more than 1e-3 of the field integral left the grid");
    }
}

template <typename T>
T bilinear(const detail::FieldBase<T>& f, double z, double p, bool& outside) {
    const GridSpec& g = f.grid();
    const double fj = (z - g.z_min) / g.dz();
    const double fm = (p - g.p_min) / g.dp();
    const int j0 = static_cast<int>(std::floor(fj));
    const int m0 = static_cast<int>(std::floor(fm));
    if (j0 < 0 || j0 + 1 >= g.n_z || m0 < 0 || m0 + 1 >= g.n_p) {
        outside = true;
        return T{};
    }
    const double wz = fj - j0;
    const double wp = fm - m0;
    return f.at(j0, m0) * ((1.0 - wz) * (1.0 - wp)) +
           f.at(j0 + 1, m0) * (wz * (1.0 - wp)) +
           f.at(j0, m0 + 1) * ((1.0 - wz) * wp) + f.at(j0 + 1, m0 + 1) * (wz * wp);
}

template <typename Field>
Field pull_back(const Field& W0, const AffineFlow& flow) {
    const AffineFlow inv = flow.inverse();
    const GridSpec& g = W0.grid();
    Field W(g, W0.hbar());
#pragma omp parallel for
    for (int j = 0; j < g.n_z; ++j) {
        for (int m = 0; m < g.n_p; ++m) {
            const PhasePoint y = inv.apply({g.z(j), g.p(m)});
            bool outside = false;
            W.at(j, m) = bilinear(W0, y.z, y.p, outside);
        }
    }
    return W;
}

}  // namespace

RealField transport(const RealField& W0, const AffineFlow& flow) {
    RealField W = pull_back(W0, flow);
    check_mass_conserved(W0.integral(), W.integral(), "transport");
    return W;
}

ComplexField transport(const ComplexField& W0, const AffineFlow& flow) {
    ComplexField W = pull_back(W0, flow);
    // |integral| is a poor mass proxy for phase-oscillating fields; compare
    // the absolute sums instead
    auto abs_sum = [](const ComplexField& f) {
        double s = 0.0;
        for (const cplx& v : f.values()) s += std::abs(v);
        return s * f.grid().cell();
    };
    check_mass_conserved(abs_sum(W0), abs_sum(W), "transport");
    return W;
}

RealField transport(const GaussianState& psi0, const AffineFlow& flow,
                    const GridSpec& grid) {
    const AffineFlow inv = flow.inverse();
    RealField W(grid, psi0.hbar);
#pragma omp parallel for
    for (int j = 0; j < grid.n_z; ++j) {
        for (int m = 0; m < grid.n_p; ++m) {
            const PhasePoint y = inv.apply({grid.z(j), grid.p(m)});
            W.at(j, m) = psi0.wigner(y.z, y.p);
        }
    }
    check_mass_conserved(1.0, W.integral(), "transport");
    return W;
}

RealField thermal_distribution(const PhysParams& params, double kT,
                               const PolynomialPotential& V, const GridSpec& grid) {
    if (!(kT > 0.0)) throw std::invalid_argument("thermal_distribution: kT <= 0");
    RealField f(grid, params.hbar);
    double v_min = V.value(grid.z(0));
    for (int j = 1; j < grid.n_z; ++j) v_min = std::min(v_min, V.value(grid.z(j)));
#pragma omp parallel for
    for (int j = 0; j < grid.n_z; ++j) {
        const double vz = (V.value(grid.z(j)) - v_min) / kT;
        for (int m = 0; m < grid.n_p; ++m) {
            const double p = grid.p(m);
            f.at(j, m) = std::exp(-p * p / (2.0 * params.m_i * kT) - vz);
        }
    }

    double peak = 0.0;
    for (double v : f.values()) peak = std::max(peak, v);
    auto z_edge_density = [&](int j) {
        double m = 0.0;
        for (int mm = 0; mm < grid.n_p; ++mm) m = std::max(m, f.at(j, mm));
        return m;
    };
    auto p_edge_density = [&](int m) {
        double mx = 0.0;
        for (int j = 0; j < grid.n_z; ++j) mx = std::max(mx, f.at(j, m));
        return mx;
    };
    if (p_edge_density(0) > 1e-3 * peak || p_edge_density(grid.n_p - 1) > 1e-3 * peak) {
        throw NotNormalizable(
            "thermal_distribution: Boltzmann weight does not decay at the momentum "
            "edge");
    }
    // a non-decaying z edge is only acceptable where the force presses the
    // ensemble against it (hard-wall reading, e.g. the bounce geometry)
    const bool low_wall = V.derivative(1, grid.z(0)) > 0.0;
    const bool high_wall = V.derivative(1, grid.z(grid.n_z - 1)) < 0.0;
    if (z_edge_density(0) > 1e-3 * peak && !low_wall) {
        throw NotNormalizable("thermal_distribution: weight grows past z_min");
    }
    if (z_edge_density(grid.n_z - 1) > 1e-3 * peak && !high_wall) {
        throw NotNormalizable("thermal_distribution: weight grows past z_max");
    }

    const double total = f.integral();
    for (double& v : f.values()) v /= total;
    return f;
}

RealField classical_liouville_residual(const std::vector<RealField>& W_series,
                                       double dt, const PhysParams& params,
                                       const PolynomialPotential& V) {
    if (W_series.size() < 3) {
        throw std::invalid_argument(
            "classical_liouville_residual: need >= 3 time slices");
    }
    const std::size_t c = W_series.size() / 2;
    const RealField& Wc = W_series[c];
    const RealField& Wm = W_series[c - 1];
    const RealField& Wp = W_series[c + 1];
    require_same_grid(Wc.grid(), Wm.grid(), "classical_liouville_residual");
    require_same_grid(Wc.grid(), Wp.grid(), "classical_liouville_residual");
    const GridSpec& g = Wc.grid();
    RealField r(g, Wc.hbar());
    const std::span<const double> vc{Wc.values()};
#pragma omp parallel for
    for (int j = 1; j < g.n_z - 1; ++j) {
        for (int m = 1; m < g.n_p - 1; ++m) {
            const std::size_t i = static_cast<std::size_t>(j) * g.n_p + m;
            const double dWdt = (Wp.values()[i] - Wm.values()[i]) / (2.0 * dt);
            const double dWdz =
                fd::central(vc, i, static_cast<std::size_t>(g.n_p), 1, g.dz());
            const double dWdp = fd::central(vc, i, 1, 1, g.dp());
            r.at(j, m) = dWdt + (g.p(m) / params.m_i) * dWdz -
                         V.derivative(1, g.z(j)) * dWdp;
        }
    }
    return r;
}

RealField quantum_correction_residual(const RealField& W,
                                      const PolynomialPotential& V,
                                      const PhysParams& params) {
    if (V.degree() > 6) {
        throw std::invalid_argument("quantum_correction_residual: degree > 6");
    }
    const GridSpec& g = W.grid();
    const double hb = params.hbar;
    // (-1)^l (hbar/2)^{2l} / (2l+1)!  for l = 1, 2
    const double c1 = -(hb * hb / 4.0) / 6.0;
    const double c2 = (hb * hb * hb * hb / 16.0) / 120.0;
    RealField r(g, W.hbar());
    const std::span<const double> v{W.values()};
#pragma omp parallel for
    for (int j = 0; j < g.n_z; ++j) {
        const double v3 = V.derivative(3, g.z(j));
        const double v5 = V.derivative(5, g.z(j));
        if (v3 == 0.0 && v5 == 0.0) continue;
        for (int m = 3; m < g.n_p - 3; ++m) {
            const std::size_t i = static_cast<std::size_t>(j) * g.n_p + m;
            double acc = 0.0;
            if (v3 != 0.0) acc += c1 * v3 * fd::central(v, i, 1, 3, g.dp());
            if (v5 != 0.0) acc += c2 * v5 * fd::central(v, i, 1, 5, g.dp());
            r.at(j, m) = acc;
        }
    }
    return r;
}

}  // namespace wigsim
