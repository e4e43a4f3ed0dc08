#include "wigsim/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "wigsim/fft.hpp"
#include "wigsim/phase_space.hpp"

namespace wigsim::oracle {

namespace {
constexpr double pi = std::numbers::pi;
}

double TwoComponentState::total_norm_squared() const {
    return psi1.norm_squared() + psi2.norm_squared();
}

void TwoComponentState::require_normalized(double tol) const {
    if (std::abs(total_norm_squared() - 1.0) > tol) {
        throw NonNormalized("TwoComponentState: total norm deviates from 1");
    }
}

TwoComponentState apply_pulse(const TwoComponentState& state, double theta, double k,
                              double phi) {
    if (!(state.psi1.grid == state.psi2.grid)) {
        throw GridMismatch("apply_pulse: components on different grids");
    }
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    TwoComponentState out = state;
    const ZGrid& g = state.psi1.grid;
    for (int j = 0; j < g.n; ++j) {
        const double ang = k * g.at(j) + phi;
        const cplx up(std::cos(ang), std::sin(ang));      // e^{+i(kz+phi)}
        const cplx minus_i_st(0.0, -st);
        const std::size_t i = static_cast<std::size_t>(j);
        const cplx a = state.psi1.values[i];
        const cplx b = state.psi2.values[i];
        out.psi1.values[i] = ct * a + minus_i_st * std::conj(up) * b;
        out.psi2.values[i] = ct * b + minus_i_st * up * a;
    }
    return out;
}

namespace {

// half-step potential phases and full-step kinetic phases are precomputed
// once per segment
struct SegmentTables {
    std::vector<cplx> half_potential;
    std::vector<cplx> kinetic;
};

SegmentTables make_tables(const ZGrid& g, const PhysParams& params,
                          const PolynomialPotential& V, double dt) {
    SegmentTables t;
    t.half_potential.resize(static_cast<std::size_t>(g.n));
    t.kinetic.resize(static_cast<std::size_t>(g.n));
    const double hbar = params.hbar;
    for (int j = 0; j < g.n; ++j) {
        const double ang = -0.5 * dt * V.value(g.at(j)) / hbar;
        t.half_potential[static_cast<std::size_t>(j)] = cplx(std::cos(ang), std::sin(ang));
    }
    const double length = g.max - g.min;
    for (int j = 0; j < g.n; ++j) {
        const int kk = j < g.n / 2 ? j : j - g.n;
        const double p = 2.0 * pi * hbar * kk / length;
        const double ang = -dt * p * p / (2.0 * params.m_i * hbar);
        t.kinetic[static_cast<std::size_t>(j)] = cplx(std::cos(ang), std::sin(ang));
    }
    return t;
}

void check_contained(const WaveFunction& psi) {
    if (psi.edge_amplitude() > 1e-6) {
        throw GridEscape("evolve: wavefunction reached the grid edge");
    }
}

void step_component(WaveFunction& psi, const SegmentTables& t) {
    auto& v = psi.values;
    const std::size_t n = v.size();
    for (std::size_t j = 0; j < n; ++j) v[j] *= t.half_potential[j];
    fft::transform(v, false);
    for (std::size_t j = 0; j < n; ++j) v[j] *= t.kinetic[j];
    fft::transform(v, true);
    for (std::size_t j = 0; j < n; ++j) v[j] *= t.half_potential[j];
}

}  // namespace

TwoComponentState evolve(const TwoComponentState& state, const PhysParams& params,
                         const PolynomialPotential& V, double T,
                         const SplitStepConfig& cfg) {
    if (cfg.n_steps < 1) throw std::invalid_argument("evolve: n_steps < 1");
    const double dt = T / cfg.n_steps;
    const SegmentTables tables = make_tables(state.psi1.grid, params, V, dt);
    TwoComponentState s = state;
    for (int step = 0; step < cfg.n_steps; ++step) {
        step_component(s.psi1, tables);
        step_component(s.psi2, tables);
        check_contained(s.psi1);
        check_contained(s.psi2);
    }
    return s;
}

InterferometerRun run_interferometer(const PulseSequence& seq, const PhysParams& params,
                                     const PolynomialPotential& V,
                                     const WaveFunction& psi0,
                                     const SplitStepConfig& cfg) {
    psi0.require_normalized(1e-9);
    InterferometerRun run;
    TwoComponentState s;
    s.psi1 = psi0;
    s.psi2 = WaveFunction(psi0.grid, psi0.hbar);  // empty |g2>

    auto record = [&run](const char* label, const TwoComponentState& st) {
        run.ledger.emplace_back(label, st);
    };

    record("before_first_pulse", s);
    s = apply_pulse(s, pi / 4.0, params.k, seq.phi0);
    record("after_first_pulse", s);
    s = evolve(s, params, V, seq.T, cfg);
    record("before_second_pulse", s);
    s = apply_pulse(s, pi / 2.0, params.k, seq.phiT);
    record("after_second_pulse", s);
    s = evolve(s, params, V, seq.T, cfg);
    record("before_third_pulse", s);
    s = apply_pulse(s, pi / 4.0, params.k, seq.phi2T);
    record("after_third_pulse", s);

    s.require_normalized(1e-9);
    run.P_g1 = s.psi1.norm_squared();
    run.P_g2 = s.psi2.norm_squared();
    run.exit_state = s;
    return run;
}

RealField wigner_of_exit(const TwoComponentState& exit_state, const GridSpec& grid) {
    WaveFunction psi = exit_state.psi1;
    psi.normalize();
    return wigner_transform(psi, grid);
}

void write_ledger_csv(const InterferometerRun& run, const std::string& prefix) {
    for (const auto& [label, st] : run.ledger) {
        std::ofstream out(prefix + label + ".csv");
        if (!out) {
            throw std::runtime_error("write_ledger_csv: cannot open " + prefix + label);
        }
        const ZGrid& g = st.psi1.grid;
        char buf[192];
        std::snprintf(buf, sizeof buf, "# %.17g,%.17g,%d,%.17g", g.min, g.max, g.n,
                      st.psi1.hbar);
        out << buf << '\n' << "# stage = " << label << '\n';
        for (int j = 0; j < g.n; ++j) {
            const std::size_t i = static_cast<std::size_t>(j);
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g", g.at(j),
                          st.psi1.values[i].real(), st.psi1.values[i].imag(),
                          st.psi2.values[i].real(), st.psi2.values[i].imag());
            out << buf << '\n';
        }
    }
}

}  // namespace wigsim::oracle
