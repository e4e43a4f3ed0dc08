// wigsim: phase-space simulation front end.
//
// Subcommands: transform, propagate, ifm, ifm-sweep, eigen, oracle-compare.
// Runs are configured by "key = value" files plus overriding flags; every
// output starts with the resolved configuration so a result can be
// reproduced from the file alone. Exit codes: 0 ok, 2 configuration error,
// 3 numeric failure.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "config.hpp"
#include "wigsim/dynamics.hpp"
#include "wigsim/eigenstates.hpp"
#include "wigsim/interferometer.hpp"
#include "wigsim/oracle.hpp"
#include "wigsim/phase_space.hpp"

namespace {

using namespace wigsim;
using wigsim_cli::Config;
using wigsim_cli::ConfigError;

constexpr double two_pi = 2.0 * std::numbers::pi;

std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

PhysParams params_from(Config& cfg) {
    PhysParams par;
    par.m_i = cfg.num("m_i", 1.0);
    par.m_g = cfg.num("m_g", 1.0);
    par.g = cfg.num("g", 0.0);
    par.Gamma = cfg.num("gamma", 0.0);
    par.hbar = cfg.num("hbar", 1.0);
    par.k = cfg.num("k", 0.0);
    if (par.m_i <= 0.0 || par.m_g <= 0.0) throw ConfigError("masses must be positive");
    return par;
}

PulseSequence sequence_from(Config& cfg) {
    PulseSequence seq;
    seq.T = cfg.num("T", 1.0);
    seq.phi0 = cfg.num("phi0", 0.0);
    seq.phiT = cfg.num("phiT", 0.0);
    seq.phi2T = cfg.num("phi2T", 0.0);
    if (seq.T <= 0.0) throw ConfigError("key 'T': interrogation time must be positive");
    return seq;
}

GaussianState state_from(Config& cfg, double hbar) {
    GaussianState s;
    s.z0 = cfg.num("z0", 0.0);
    s.p0 = cfg.num("p0", 0.0);
    s.sigma_z = cfg.num("sigma", 1.0);
    s.hbar = hbar;
    if (s.sigma_z <= 0.0) throw ConfigError("key 'sigma': width must be positive");
    return s;
}

GridSpec grid_from(Config& cfg, double hbar) {
    const double z_min = cfg.num("z_min", -16.0);
    const double z_max = cfg.num("z_max", 16.0);
    const int n_z = cfg.integer("n_z", 256);
    if (cfg.has("p_min") || cfg.has("p_max")) {
        GridSpec g{z_min,
                   z_max,
                   n_z,
                   cfg.require_num("p_min"),
                   cfg.require_num("p_max"),
                   cfg.integer("n_p", n_z)};
        g.validate();
        return g;
    }
    cfg.integer("n_p", n_z);  // consumed even when the matched span is used
    return GridSpec::fft_matched(z_min, z_max, n_z, hbar);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file: " + path);
    return out;
}

std::string stem_of(const std::string& path) {
    const auto dot = path.find_last_of('.');
    return dot == std::string::npos ? path : path.substr(0, dot);
}

std::vector<std::string> provenance(const std::string& command, const Config& cfg) {
    std::vector<std::string> lines{"command = " + command};
    const auto resolved = cfg.provenance();
    lines.insert(lines.end(), resolved.begin(), resolved.end());
    return lines;
}

// Position span that keeps the split-step run inside the box: initial
// spread, classical excursion of both arms, and a margin of 12 sigma.
ZGrid oracle_grid(Config& cfg, const PhysParams& par, const PulseSequence& seq,
                  const GaussianState& psi0) {
    if (cfg.has("oracle_z_min") || cfg.has("oracle_z_max")) {
        return {cfg.require_num("oracle_z_min"), cfg.require_num("oracle_z_max"),
                cfg.integer("oracle_n", 2048)};
    }
    const double sp = psi0.hbar / (2.0 * psi0.sigma_z);
    const double p_reach = std::abs(psi0.p0) + std::abs(par.recoil()) + 6.0 * sp;
    const double t_total = 2.0 * seq.T;
    double span = 12.0 * psi0.sigma_z + p_reach / par.m_i * t_total +
                  std::abs(par.g_prime()) * t_total * t_total;
    if (par.gamma_prime() != 0.0) {
        // amplitude growth of the gradient term; cosh covers the inverted
        // (Gamma < 0) case as well
        const double arg = std::sqrt(std::abs(par.gamma_prime())) * t_total;
        span *= std::cosh(std::min(arg, 5.0));
    }
    const double lo = psi0.z0 - span;
    const double hi = psi0.z0 + span;
    return {lo, hi, cfg.integer("oracle_n", 2048)};
}

double run_oracle_once(const PulseSequence& seq, const PhysParams& par,
                       const GaussianState& psi0, const ZGrid& zg, int n_steps) {
    WaveFunction psi = psi0.sample(zg);
    psi.normalize();
    const auto run = oracle::run_interferometer(
        seq, par, gravity_potential(par), psi, oracle::SplitStepConfig{n_steps});
    return run.P_g1;
}

int cmd_transform(Config& cfg) {
    const PhysParams par = params_from(cfg);
    const GridSpec grid = grid_from(cfg, par.hbar);
    const std::string state = cfg.str("state", "gaussian");
    const std::string out_path = cfg.str("out", "transform.csv");

    RealField W(grid, par.hbar);
    if (state == "gaussian") {
        WaveFunction psi = state_from(cfg, par.hbar).sample(grid.zaxis());
        psi.normalize();
        W = wigner_transform(psi, grid);
    } else if (state == "harmonic") {
        const int n = cfg.integer("n", 0);
        const double omega = cfg.num("omega", 1.0);
        W = harmonic_wigner_eigenstate(n, omega, par, grid);
    } else {
        throw ConfigError("key 'state': expected gaussian or harmonic, got " + state);
    }
    cfg.reject_unknown();

    const auto prov = provenance("transform", cfg);
    auto out = open_out(out_path);
    write_csv(W, out, prov);

    const auto Pz = marginal_position(W);
    auto out_z = open_out(stem_of(out_path) + "_marginal_z.csv");
    for (const auto& line : prov) out_z << "# " << line << '\n';
    out_z << "# z,P\n";
    for (int j = 0; j < grid.n_z; ++j) {
        out_z << g17(grid.z(j)) << ',' << g17(Pz[static_cast<std::size_t>(j)]) << '\n';
    }
    const auto Pp = marginal_momentum(W);
    auto out_p = open_out(stem_of(out_path) + "_marginal_p.csv");
    for (const auto& line : prov) out_p << "# " << line << '\n';
    out_p << "# p,P\n";
    for (int m = 0; m < grid.n_p; ++m) {
        out_p << g17(grid.p(m)) << ',' << g17(Pp[static_cast<std::size_t>(m)]) << '\n';
    }
    return 0;
}

int cmd_propagate(Config& cfg) {
    const PhysParams par = params_from(cfg);
    const GridSpec grid = grid_from(cfg, par.hbar);
    const GaussianState psi0 = state_from(cfg, par.hbar);
    const double t = cfg.require_num("t");
    const std::string out_path = cfg.str("out", "propagate.csv");
    cfg.reject_unknown();

    const RealField W = transport(psi0, classical_flow(par, t), grid);
    auto out = open_out(out_path);
    write_csv(W, out, provenance("propagate", cfg));
    return 0;
}

int cmd_ifm(Config& cfg) {
    const PhysParams par = params_from(cfg);
    const PulseSequence seq = sequence_from(cfg);
    const GaussianState psi0 = state_from(cfg, par.hbar);
    const std::string out_path = cfg.str("out", "ifm.txt");
    const std::string check = cfg.str("check", "");
    const int draws = cfg.integer("endpoint_draws", 0);
    const unsigned seed = static_cast<unsigned>(cfg.integer("seed", 1));
    const std::string endpoints_path = cfg.str("endpoints_out", "");
    const std::string ledger_prefix = cfg.str("ledger_out", "");
    ZGrid zg{0, 1, 8};
    int n_steps = 0;
    if (check == "oracle") {
        zg = oracle_grid(cfg, par, seq, psi0);
        n_steps = cfg.integer("n_steps", 256);
    } else if (!check.empty()) {
        throw ConfigError("key 'check': only 'oracle' is supported");
    } else if (!ledger_prefix.empty()) {
        throw ConfigError("key 'ledger_out': requires --check oracle");
    }
    cfg.reject_unknown();

    const ExitReport r = exit_probability_exact(seq, par, psi0);
    auto out = open_out(out_path);
    write_record(r, out, provenance("ifm", cfg));
    if (check == "oracle") {
        WaveFunction psi = psi0.sample(zg);
        psi.normalize();
        const auto run = oracle::run_interferometer(
            seq, par, gravity_potential(par), psi, oracle::SplitStepConfig{n_steps});
        out << "P_g1_oracle = " << g17(run.P_g1) << '\n';
        out << "oracle_abs_err = " << g17(std::abs(run.P_g1 - r.P_g1)) << '\n';
        if (!ledger_prefix.empty()) oracle::write_ledger_csv(run, ledger_prefix);
    }

    if (draws > 0) {
        const std::string path =
            endpoints_path.empty() ? stem_of(out_path) + "_endpoints.csv" : endpoints_path;
        auto eout = open_out(path);
        for (const auto& line : provenance("ifm", cfg)) eout << "# " << line << '\n';
        eout << "# z0,p0,z_u,p_u,z_l,p_l,z_i,p_i,delta_z,delta_p\n";
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> uz(psi0.z0 - 3.0 * psi0.sigma_z,
                                                  psi0.z0 + 3.0 * psi0.sigma_z);
        const double sp = psi0.hbar / (2.0 * psi0.sigma_z);
        std::uniform_real_distribution<double> up(psi0.p0 - 3.0 * sp, psi0.p0 + 3.0 * sp);
        for (int i = 0; i < draws; ++i) {
            const double z0 = uz(rng), p0 = up(rng);
            const EndpointReport e = endpoints(seq, par, z0, p0);
            eout << g17(z0) << ',' << g17(p0) << ',' << g17(e.z_u) << ',' << g17(e.p_u)
                 << ',' << g17(e.z_l) << ',' << g17(e.p_l) << ',' << g17(e.z_i) << ','
                 << g17(e.p_i) << ',' << g17(e.delta_z) << ',' << g17(e.delta_p)
                 << '\n';
        }
    }
    return 0;
}

int cmd_ifm_sweep(Config& cfg) {
    const PhysParams par = params_from(cfg);
    PulseSequence seq = sequence_from(cfg);
    const GaussianState psi0 = state_from(cfg, par.hbar);
    const int n_points = cfg.integer("n_points", 64);
    const std::string out_path = cfg.str("out", "sweep.csv");
    const std::string check = cfg.str("check", "");
    ZGrid zg{0, 1, 8};
    int n_steps = 0;
    if (check == "oracle") {
        zg = oracle_grid(cfg, par, seq, psi0);
        n_steps = cfg.integer("n_steps", 256);
    } else if (!check.empty()) {
        throw ConfigError("key 'check': only 'oracle' is supported");
    }
    cfg.reject_unknown();
    if (n_points < 2) throw ConfigError("key 'n_points': need at least 2");

    // parameter points are independent; rows are emitted in index order
    // whatever the completion order
    std::vector<std::string> rows(static_cast<std::size_t>(n_points));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_points; ++i) {
        const double dphi = two_pi * i / n_points;
        PulseSequence point = seq;
        // place the swept combination phi(2T) - 2 phi(T) + phi(0) at dphi
        point.phi2T = dphi + 2.0 * seq.phiT - seq.phi0;
        const ExitReport r = exit_probability_exact(point, par, psi0);
        std::string row = g17(dphi) + ',' + g17(r.P_g1);
        if (check == "oracle") {
            const double p_oracle = run_oracle_once(point, par, psi0, zg, n_steps);
            row += ',' + g17(p_oracle) + ',' + g17(std::abs(p_oracle - r.P_g1));
        }
        rows[static_cast<std::size_t>(i)] = std::move(row);
    }

    auto out = open_out(out_path);
    for (const auto& line : provenance("ifm-sweep", cfg)) out << "# " << line << '\n';
    out << (check == "oracle" ? "# dphi,P_g1,P_g1_oracle,abs_err\n" : "# dphi,P_g1\n");
    for (const auto& row : rows) out << row << '\n';
    return 0;
}

int cmd_eigen(Config& cfg) {
    const PhysParams par = params_from(cfg);
    const std::string which = cfg.str("which", "bouncer");
    const int n_max = cfg.integer("n_max", 10);
    const std::string out_path = cfg.str("out", "eigen.csv");

    Spectrum s;
    if (which == "bouncer") {
        s = bouncer_spectrum(par, n_max);
    } else if (which == "coulomb") {
        const double M = cfg.require_num("M");
        const double G = cfg.require_num("G_newton");
        s = gravitational_coulomb_spectrum(par, M, G, n_max);
    } else {
        throw ConfigError("key 'which': expected bouncer or coulomb, got " + which);
    }
    cfg.reject_unknown();

    auto out = open_out(out_path);
    write_csv(s, out, provenance("eigen", cfg));
    return 0;
}

int cmd_oracle_compare(Config& cfg) {
    PhysParams par = params_from(cfg);
    PulseSequence seq = sequence_from(cfg);
    const GaussianState psi0 = state_from(cfg, par.hbar);
    const int n_gamma = cfg.integer("n_gamma", 5);
    const int n_phi = cfg.integer("n_phi", 5);
    const double eps_max = cfg.num("gamma_t2_max", 0.25);
    const int n_steps = cfg.integer("n_steps", 256);
    const std::string out_path = cfg.str("out", "oracle_compare.csv");
    // fixed box wide enough for the strongest gradient in the scan
    PhysParams worst = par;
    worst.Gamma = eps_max / (seq.T * seq.T) * par.m_i / par.m_g;
    const ZGrid zg = oracle_grid(cfg, worst, seq, psi0);
    cfg.reject_unknown();

    const int total = n_gamma * n_phi;
    std::vector<std::string> rows(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < total; ++idx) {
        const int i = idx / n_phi;
        const int j = idx % n_phi;
        const double eps = eps_max * i / std::max(1, n_gamma - 1);
        PhysParams point_par = par;
        point_par.Gamma = eps / (seq.T * seq.T) * par.m_i / par.m_g;  // Gamma' T^2 = eps
        const double dphi = two_pi * j / n_phi;
        PulseSequence point = seq;
        point.phi2T = dphi + 2.0 * seq.phiT - seq.phi0;
        const ExitReport r = exit_probability_exact(point, point_par, psi0);
        const double p_oracle = run_oracle_once(point, point_par, psi0, zg, n_steps);
        rows[static_cast<std::size_t>(idx)] = g17(eps) + ',' + g17(dphi) + ',' +
                                              g17(r.P_g1) + ',' + g17(p_oracle) + ',' +
                                              g17(std::abs(p_oracle - r.P_g1));
    }

    auto out = open_out(out_path);
    for (const auto& line : provenance("oracle-compare", cfg)) out << "# " << line << '\n';
    out << "# gamma_t2,dphi,P_exact,P_oracle,abs_err\n";
    for (const auto& row : rows) out << row << '\n';
    return 0;
}

void usage(std::ostream& os) {
    os << "usage: wigsim <transform|propagate|ifm|ifm-sweep|eigen|oracle-compare>\n"
          "              [--config PATH] [--out PATH] [--check oracle]\n"
          "              [--grid NZ,NP] [--seed N] [key=value ...]\n";
}

int dispatch(const std::string& command, Config& cfg) {
    if (command == "transform") return cmd_transform(cfg);
    if (command == "propagate") return cmd_propagate(cfg);
    if (command == "ifm") return cmd_ifm(cfg);
    if (command == "ifm-sweep") return cmd_ifm_sweep(cfg);
    if (command == "eigen") return cmd_eigen(cfg);
    if (command == "oracle-compare") return cmd_oracle_compare(cfg);
    throw ConfigError("unknown command: " + command);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        usage(std::cerr);
        return 2;
    }
    const std::string command = argv[1];
    if (command == "--help" || command == "-h" || command == "help") {
        usage(std::cout);
        return 0;
    }
    Config cfg;
    try {
        // file first, flags override
        for (int i = 2; i < argc; ++i) {
            if (std::strcmp(argv[i], "--config") == 0 && i + 1 < argc) {
                cfg.load_file(argv[++i]);
            }
        }
        for (int i = 2; i < argc; ++i) {
            const std::string arg = argv[i];
            if (arg == "--config") {
                ++i;  // handled above
            } else if (arg == "--out" && i + 1 < argc) {
                cfg.set("out", argv[++i]);
            } else if (arg == "--check" && i + 1 < argc) {
                cfg.set("check", argv[++i]);
            } else if (arg == "--seed" && i + 1 < argc) {
                cfg.set("seed", argv[++i]);
            } else if (arg == "--grid" && i + 1 < argc) {
                const std::string counts = argv[++i];
                const auto comma = counts.find(',');
                if (comma == std::string::npos) {
                    throw ConfigError("--grid expects NZ,NP");
                }
                cfg.set("n_z", counts.substr(0, comma));
                cfg.set("n_p", counts.substr(comma + 1));
            } else if (arg.find('=') != std::string::npos) {
                const auto eq = arg.find('=');
                cfg.set(arg.substr(0, eq), arg.substr(eq + 1));
            } else {
                throw ConfigError("unrecognized argument: " + arg);
            }
        }
        return dispatch(command, cfg);
    } catch (const ConfigError& e) {
        std::cerr << "wigsim: config error: " << e.what() << '\n';
        return 2;
    } catch (const wigsim::NumericError& e) {
        std::cerr << "wigsim: numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "wigsim: config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "wigsim: error: " << e.what() << '\n';
        return 3;
    }
}
