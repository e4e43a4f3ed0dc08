#include "wigsim/interferometer.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "wigsim/phase_space.hpp"

namespace wigsim {

namespace {

// dphi(z0, p0) = c0 + cz z0 + cp p0 for the interference term
struct AffinePhase {
    double c0, cz, cp;
    double at(double z0, double p0) const { return c0 + cz * z0 + cp * p0; }
};

AffinePhase interference_phase_coeffs(const PulseSequence& seq,
                                      const PhysParams& params) {
    const Separation s = separation(seq, params);
    const double x = params.gamma_prime();
    const OscCoeffs o = osc_coeffs(x, seq.T);
    // g' delta_c / Gamma' evaluated without the 0/0: delta_c / Gamma' = -2 c k1
    const double dc_over_gamma = -2.0 * o.c * o.k1;
    const double c0 =
        params.k * (params.g_prime() * dc_over_gamma + 0.5 * s.delta_z);
    return {c0, s.delta_p / params.hbar, s.delta_z / params.hbar};
}

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

WeakGradientTerms weak_terms(const PulseSequence& seq, const PhysParams& params) {
    const double T = seq.T;
    const double eps = params.gamma_prime() * T * T;
    const double dphi_g = params.k * params.g_prime() * T * T;
    WeakGradientTerms w;
    w.dphi_g = dphi_g;
    w.dphi_g_tilde = dphi_g * (1.0 - 7.0 / 12.0 * eps);
    w.recoil_phase = eps * params.hbar * params.k * params.k / (2.0 * params.m_i) * T;
    w.dz_tilde = -params.recoil() / params.m_i * params.gamma_prime() * T * T * T;
    w.dp_tilde = -params.recoil() * params.gamma_prime() * T * T;
    return w;
}

ExitReport assemble_report(const PulseSequence& seq, const PhysParams& params,
                           cplx characteristic_value, double grav_phase) {
    ExitReport r;
    r.contrast = clamp01(std::abs(characteristic_value));
    r.beta = std::arg(characteristic_value);
    r.total_phase = laser_phase_combination(seq) + grav_phase + r.beta;
    r.P_g1 = 0.5 * (1.0 + r.contrast * std::cos(r.total_phase));
    r.weak = weak_terms(seq, params);
    return r;
}

double sum_abs(const ComplexField& f) {
    double s = 0.0;
    for (const cplx& v : f.values()) s += std::abs(v);
    return s * f.grid().cell();
}

}  // namespace

RealField kick(const RealField& W, double j, const PhysParams& params) {
    return transport(W, AffineFlow::momentum_kick(params.recoil(j)));
}

ComplexField kick(const ComplexField& W, double j, const PhysParams& params) {
    return transport(W, AffineFlow::momentum_kick(params.recoil(j)));
}

GaussianState kick(const GaussianState& psi0, double j, const PhysParams& params) {
    GaussianState out = psi0;
    out.p0 += params.recoil(j);
    return out;
}

AffineFlow path_map(Path path, const PulseSequence& seq, const PhysParams& params) {
    const AffineFlow flight = classical_flow(params, seq.T);
    const double hk = params.recoil();
    const auto kick_by = [](double dp) { return AffineFlow::momentum_kick(dp); };
    switch (path) {
        case Path::upper:
            return compose(flight, compose(kick_by(-hk), compose(flight, kick_by(hk))));
        case Path::lower:
            return compose(kick_by(-hk), compose(flight, compose(kick_by(hk), flight)));
        case Path::interference:
            return compose(kick_by(-0.5 * hk),
                           compose(classical_flow(params, 2.0 * seq.T), kick_by(0.5 * hk)));
    }
    throw std::invalid_argument("path_map: unknown path");
}

ComplexField propagate_path(const GaussianState& psi0, Path path,
                            const PulseSequence& seq, const PhysParams& params,
                            const GridSpec& grid) {
    const AffineFlow inv = path_map(path, seq, params).inverse();
    const bool interference = path == Path::interference;
    const AffinePhase phase = interference ? interference_phase_coeffs(seq, params)
                                           : AffinePhase{0.0, 0.0, 0.0};
    ComplexField W(grid, psi0.hbar);
#pragma omp parallel for
    for (int j = 0; j < grid.n_z; ++j) {
        for (int m = 0; m < grid.n_p; ++m) {
            const PhasePoint y = inv.apply({grid.z(j), grid.p(m)});
            const double w0 = psi0.wigner(y.z, y.p);
            if (interference) {
                const double ang = phase.at(y.z, y.p);
                W.at(j, m) = w0 * cplx(std::cos(ang), std::sin(ang));
            } else {
                W.at(j, m) = cplx(w0, 0.0);
            }
        }
    }
    if (std::abs(sum_abs(W) - 1.0) > 1e-3) {
        throw ExtrapolationLoss("propagate_path: grid does not contain the final state");
    }
    return W;
}

ComplexField propagate_path(const RealField& W0, Path path, const PulseSequence& seq,
                            const PhysParams& params) {
    const GridSpec& g = W0.grid();
    const AffineFlow inv = path_map(path, seq, params).inverse();
    const bool interference = path == Path::interference;
    const AffinePhase phase = interference ? interference_phase_coeffs(seq, params)
                                           : AffinePhase{0.0, 0.0, 0.0};
    ComplexField W(g, W0.hbar());
    double before = 0.0;
    for (double v : W0.values()) before += std::abs(v);
    before *= g.cell();
#pragma omp parallel for
    for (int j = 0; j < g.n_z; ++j) {
        for (int m = 0; m < g.n_p; ++m) {
            const PhasePoint y = inv.apply({g.z(j), g.p(m)});
            const double fj = (y.z - g.z_min) / g.dz();
            const double fm = (y.p - g.p_min) / g.dp();
            const int j0 = static_cast<int>(std::floor(fj));
            const int m0 = static_cast<int>(std::floor(fm));
            if (j0 < 0 || j0 + 1 >= g.n_z || m0 < 0 || m0 + 1 >= g.n_p) continue;
            const double wz = fj - j0;
            const double wp = fm - m0;
            const double w0 = W0.at(j0, m0) * (1.0 - wz) * (1.0 - wp) +
                              W0.at(j0 + 1, m0) * wz * (1.0 - wp) +
                              W0.at(j0, m0 + 1) * (1.0 - wz) * wp +
                              W0.at(j0 + 1, m0 + 1) * wz * wp;
            if (interference) {
                const double ang = phase.at(y.z, y.p);
                W.at(j, m) = w0 * cplx(std::cos(ang), std::sin(ang));
            } else {
                W.at(j, m) = cplx(w0, 0.0);
            }
        }
    }
    if (std::abs(sum_abs(W) - before) > 1e-3 * std::max(before, 1e-12)) {
        throw ExtrapolationLoss("propagate_path: more than 1e-3 of the field left the grid");
    }
    return W;
}

EndpointReport endpoints(const PulseSequence& seq, const PhysParams& params,
                         double z0, double p0) {
    const double x = params.gamma_prime();
    const double gp = params.g_prime();
    const double hk = params.recoil();
    const OscCoeffs o1 = osc_coeffs(x, seq.T);
    const OscCoeffs o2 = osc_coeffs(x, 2.0 * seq.T);

    EndpointReport r;
    r.delta_z = -2.0 * hk / params.m_i * o1.s1 * x * o1.k1;
    r.delta_p = -2.0 * hk * o1.c * x * o1.k1;
    r.delta_s = -2.0 * std::sqrt(std::abs(x)) * o1.s1 * x * o1.k1;
    r.delta_c = -2.0 * o1.c * x * o1.k1;
    r.z_i = -gp * o2.k1 + z0 * o2.c + (p0 + 0.5 * hk) * o2.s1 / params.m_i;
    r.p_i = -params.m_i * gp * o2.s1 - params.m_i * x * o2.s1 * z0 + p0 * o2.c -
            0.5 * hk * x * o2.k1;
    r.z_u = r.z_i + 0.5 * r.delta_z;
    r.z_l = r.z_i - 0.5 * r.delta_z;
    r.p_u = r.p_i + 0.5 * r.delta_p;
    r.p_l = r.p_i - 0.5 * r.delta_p;
    return r;
}

Separation separation(const PulseSequence& seq, const PhysParams& params) {
    const EndpointReport r = endpoints(seq, params, 0.0, 0.0);
    return {r.delta_z, r.delta_p, r.delta_s, r.delta_c};
}

double laser_phase_combination(const PulseSequence& seq) {
    return seq.phi2T - 2.0 * seq.phiT + seq.phi0;
}

double interference_phase(const PulseSequence& seq, const PhysParams& params,
                          double z0, double p0) {
    return interference_phase_coeffs(seq, params).at(z0, p0);
}

double interference_phase_from_trajectories(const PulseSequence& seq,
                                            const PhysParams& params, double z0,
                                            double p0) {
    const double p_half = p0 + 0.5 * params.recoil();
    const double z_2T = classical_flow(params, 2.0 * seq.T).apply({z0, p_half}).z;
    const double z_T = classical_flow(params, seq.T).apply({z0, p_half}).z;
    return params.k * (z_2T - 2.0 * z_T + z0);
}

ExitReport exit_probability_exact(const PulseSequence& seq, const PhysParams& params,
                                  const GaussianState& psi0) {
    const Separation s = separation(seq, params);
    const cplx ctf = psi0.characteristic(s.delta_z, s.delta_p);
    return assemble_report(seq, params, ctf, interference_phase(seq, params, 0.0, 0.0));
}

ExitReport exit_probability_exact(const PulseSequence& seq, const PhysParams& params,
                                  const WaveFunction& psi0) {
    psi0.require_normalized();
    const Separation s = separation(seq, params);
    const cplx ctf = displacement_expectation(psi0, s.delta_z, s.delta_p);
    return assemble_report(seq, params, ctf, interference_phase(seq, params, 0.0, 0.0));
}

namespace {

ExitReport weak_impl(const PulseSequence& seq, const PhysParams& params,
                     cplx ctf_tilde) {
    const double eps = params.gamma_prime() * seq.T * seq.T;
    if (eps >= 0.3) {
        std::fprintf(stderr,
                     "wigsim: exit_probability_weak called at Gamma' T^2 = %.3g; "
                     "the expansion assumes Gamma' T^2 << 1\n",
                     eps);
    }
    const WeakGradientTerms w = weak_terms(seq, params);
    ExitReport r;
    r.contrast = clamp01(std::abs(ctf_tilde));
    r.beta = std::arg(ctf_tilde);
    r.total_phase = laser_phase_combination(seq) - w.dphi_g_tilde - w.recoil_phase + r.beta;
    r.P_g1 = 0.5 * (1.0 + r.contrast * std::cos(r.total_phase));
    r.weak = w;
    return r;
}

}  // namespace

ExitReport exit_probability_weak(const PulseSequence& seq, const PhysParams& params,
                                 const GaussianState& psi0) {
    const WeakGradientTerms w = weak_terms(seq, params);
    return weak_impl(seq, params, psi0.characteristic(w.dz_tilde, w.dp_tilde));
}

ExitReport exit_probability_weak(const PulseSequence& seq, const PhysParams& params,
                                 const WaveFunction& psi0) {
    const WeakGradientTerms w = weak_terms(seq, params);
    return weak_impl(seq, params,
                     displacement_expectation(psi0, w.dz_tilde, w.dp_tilde));
}

RealField assemble_exit_wigner(const ComplexField& W_u, const ComplexField& W_l,
                               const ComplexField& W_i, double delta_phi) {
    require_same_grid(W_u.grid(), W_l.grid(), "assemble_exit_wigner");
    require_same_grid(W_u.grid(), W_i.grid(), "assemble_exit_wigner");
    const cplx rot(std::cos(delta_phi), std::sin(delta_phi));
    double scale = 0.0;
    double max_imag = 0.0;
    for (const cplx& v : W_u.values()) scale = std::max(scale, std::abs(v));
    for (const cplx& v : W_u.values()) max_imag = std::max(max_imag, std::abs(v.imag()));
    for (const cplx& v : W_l.values()) max_imag = std::max(max_imag, std::abs(v.imag()));
    if (scale > 0.0 && max_imag > 1e-10 * scale) {
        throw NumericError("assemble_exit_wigner: upper/lower inputs are not real");
    }
    RealField W(W_u.grid(), W_u.hbar());
#pragma omp parallel for
    for (std::size_t i = 0; i < W.values().size(); ++i) {
        W.values()[i] = 0.25 * (W_u.values()[i].real() + W_l.values()[i].real() +
                                2.0 * (rot * W_i.values()[i]).real());
    }
    return W;
}

void write_record(const ExitReport& r, std::ostream& os,
                  const std::vector<std::string>& provenance) {
    for (const auto& p : provenance) os << "# " << p << '\n';
    char buf[96];
    auto put = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%s = %.17g", key, v);
        os << buf << '\n';
    };
    put("P_g1", r.P_g1);
    put("contrast", r.contrast);
    put("beta", r.beta);
    put("total_phase", r.total_phase);
    put("dphi_g", r.weak.dphi_g);
    put("dphi_g_tilde", r.weak.dphi_g_tilde);
    put("recoil_phase", r.weak.recoil_phase);
    put("dz_tilde", r.weak.dz_tilde);
    put("dp_tilde", r.weak.dp_tilde);
}

std::string exit_report_csv_header() {
    return "P_g1,contrast,beta,total_phase,dphi_g,dphi_g_tilde,recoil_phase,"
           "dz_tilde,dp_tilde";
}

std::string exit_report_csv_row(const ExitReport& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g", r.P_g1,
                  r.contrast, r.beta, r.total_phase, r.weak.dphi_g, r.weak.dphi_g_tilde,
                  r.weak.recoil_phase, r.weak.dz_tilde, r.weak.dp_tilde);
    return buf;
}

}  // namespace wigsim
