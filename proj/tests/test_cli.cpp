// Drives the installed binary end to end: exit codes, determinism,
// provenance headers, and the physics of the emitted CSV files.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "wigsim/interferometer.hpp"

namespace {

namespace fs = std::filesystem;

std::string tmp_path(const std::string& name) {
    return (fs::temp_directory_path() / ("wigsim_test_" + name)).string();
}

int run_cli(const std::string& args, const std::string& stderr_to = "") {
    std::string cmd = std::string(WIGSIM_CLI_PATH) + " " + args;
    cmd += stderr_to.empty() ? " 2>/dev/null" : " 2>" + stderr_to;
    const int status = std::system(cmd.c_str());
    return status < 0 ? status : WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<double>> csv_rows(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        rows.push_back(std::move(row));
    }
    return rows;
}

double record_value(const std::string& text, const std::string& key) {
    const auto pos = text.find(key + " = ");
    REQUIRE(pos != std::string::npos);
    return std::strtod(text.c_str() + pos + key.size() + 3, nullptr);
}

}  // namespace

TEST_CASE("config errors exit with code 2 and name the offender") {
    const std::string err = tmp_path("err.txt");
    CHECK(run_cli("transform bogus_key=1 --out " + tmp_path("x.csv"), err) == 2);
    CHECK(slurp(err).find("bogus_key") != std::string::npos);

    CHECK(run_cli("transform sigma=abc --out " + tmp_path("x.csv"), err) == 2);
    CHECK(slurp(err).find("sigma") != std::string::npos);

    CHECK(run_cli("no-such-command", err) == 2);
    CHECK(run_cli("transform --grid 64", err) == 2);
    CHECK(run_cli("ifm --check fourier", err) == 2);
}

TEST_CASE("numeric failures exit with code 3") {
    // a state this wide reaches the grid edge: GridTooSmall
    const std::string err = tmp_path("err3.txt");
    CHECK(run_cli("transform sigma=8 --out " + tmp_path("x.csv"), err) == 3);
}

TEST_CASE("transform: normalized field and provenance header") {
    const std::string out = tmp_path("gauss.csv");
    REQUIRE(run_cli("transform sigma=1 --out " + out) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("# command = transform") != std::string::npos);
    CHECK(text.find("# sigma = 1") != std::string::npos);

    const auto rows = csv_rows(out);
    REQUIRE(rows.size() == 256u * 256u);
    const double dp = rows[1][1] - rows[0][1];
    const double dz = rows[256][0] - rows[0][0];
    double total = 0.0;
    for (const auto& r : rows) total += r[2];
    CHECK(total * dz * dp == doctest::Approx(1.0).epsilon(1e-6));

    // marginal files exist and are normalized
    const auto mz = csv_rows(tmp_path("gauss_marginal_z.csv"));
    REQUIRE(mz.size() == 256);
    double pz = 0.0;
    for (const auto& r : mz) pz += r[1];
    CHECK(pz * dz == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("transform: sixth oscillator state shows the six-ring structure") {
    const std::string out = tmp_path("h6.csv");
    REQUIRE(run_cli("transform state=harmonic n=6 --out " + out) == 0);
    const auto rows = csv_rows(out);
    REQUIRE(rows.size() == 256u * 256u);
    // walk the p = 0 column from z = 0 outward: six sign changes
    int changes = 0;
    double prev = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (std::abs(r[1]) > 1e-9 || r[0] < 0.0) continue;  // p = 0, z >= 0 only
        if (std::abs(r[2]) < 1e-12) continue;
        if (prev != 0.0 && prev * r[2] < 0.0) ++changes;
        prev = r[2];
    }
    CHECK(changes == 6);
}

TEST_CASE("identical configuration gives byte-identical output") {
    const std::string cfg = tmp_path("sweep.cfg");
    {
        std::ofstream f(cfg);
        f << "# sweep configuration\n"
             "k = 10\n"
             "gamma = 0.2\n"
             "T = 1\n"
             "sigma = 1\n"
             "n_points = 16\n";
    }
    const std::string out1 = tmp_path("sweep1.csv");
    const std::string out2 = tmp_path("sweep2.csv");
    REQUIRE(run_cli("ifm-sweep --config " + cfg + " --out " + out1) == 0);
    REQUIRE(run_cli("ifm-sweep --config " + cfg + " --out " + out2) == 0);
    std::string a = slurp(out1), b = slurp(out2);
    // the out path itself appears in the provenance header; normalize it
    const auto scrub = [](std::string s, const std::string& path) {
        for (auto pos = s.find(path); pos != std::string::npos; pos = s.find(path)) {
            s.erase(pos, path.size());
        }
        return s;
    };
    CHECK(scrub(a, out1) == scrub(b, out2));
}

TEST_CASE("ifm record reproduces the linear-potential fringe") {
    // delta_phi_g = k g T^2 = 3 pi / 2 with k = 3 pi / 2, g = T = 1
    const double k = 3.0 * std::numbers::pi / 2.0;
    char args[256];
    std::snprintf(args, sizeof args, "ifm k=%.17g g=1 T=1 phi2T=2.0 --out %s", k,
                  tmp_path("ifm.txt").c_str());
    REQUIRE(run_cli(args) == 0);
    const std::string text = slurp(tmp_path("ifm.txt"));
    const double want = 0.5 * (1.0 + std::cos(2.0 - 3.0 * std::numbers::pi / 2.0));
    CHECK(record_value(text, "P_g1") == doctest::Approx(want).epsilon(1e-12));
    CHECK(record_value(text, "dphi_g") ==
          doctest::Approx(3.0 * std::numbers::pi / 2.0).epsilon(1e-12));
}

TEST_CASE("sweep fringe fit recovers the characteristic-function contrast") {
    const std::string out = tmp_path("fit.csv");
    REQUIRE(run_cli("ifm-sweep k=10 gamma=0.2 T=1 sigma=1 n_points=64 --out " + out) ==
            0);
    const auto rows = csv_rows(out);
    REQUIRE(rows.size() == 64);
    // least squares for P = a + b cos(dphi) + c sin(dphi)
    double sb = 0.0, sc = 0.0;
    for (const auto& r : rows) {
        sb += r[1] * std::cos(r[0]);
        sc += r[1] * std::sin(r[0]);
    }
    const double contrast = 2.0 * 2.0 * std::hypot(sb, sc) / rows.size();

    wigsim::PhysParams par;
    par.k = 10.0;
    par.Gamma = 0.2;
    const wigsim::ExitReport r = wigsim::exit_probability_exact(
        {1.0, 0, 0, 0}, par, wigsim::GaussianState{0, 0, 1, 1});
    CHECK(contrast == doctest::Approx(r.contrast).epsilon(1e-3));
}

TEST_CASE("oracle check column stays below 1e-3") {
    const std::string out = tmp_path("chk.csv");
    REQUIRE(run_cli("ifm-sweep k=8 gamma=0.1 T=1 sigma=1 n_points=4 n_steps=256 "
                    "--check oracle --out " +
                    out) == 0);
    const auto rows = csv_rows(out);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        REQUIRE(r.size() == 4);
        CHECK(r[3] < 1e-3);
    }
}

TEST_CASE("endpoint draws are seeded and land on the midpoint identity") {
    const std::string out = tmp_path("ep.txt");
    const std::string eps = tmp_path("ep_endpoints.csv");
    REQUIRE(run_cli("ifm k=5 gamma=0.3 T=0.8 endpoint_draws=32 --seed 7 "
                    "endpoints_out=" + eps + " --out " + out) == 0);
    const auto rows = csv_rows(eps);
    REQUIRE(rows.size() == 32);
    for (const auto& r : rows) {
        // columns: z0,p0,z_u,p_u,z_l,p_l,z_i,p_i,dz,dp
        CHECK(std::abs(0.5 * (r[2] + r[4]) - r[6]) < 1e-12);
        CHECK(std::abs(0.5 * (r[3] + r[5]) - r[7]) < 1e-12);
    }
    // same seed, same draws
    const std::string eps2 = tmp_path("ep_endpoints2.csv");
    REQUIRE(run_cli("ifm k=5 gamma=0.3 T=0.8 endpoint_draws=32 --seed 7 "
                    "endpoints_out=" + eps2 + " --out " + out) == 0);
    CHECK(csv_rows(eps2) == rows);
}

TEST_CASE("oracle ledger snapshots serialize to six stage files") {
    const std::string out = tmp_path("led.txt");
    const std::string prefix = tmp_path("ledger_");
    REQUIRE(run_cli("ifm k=6 g=1.2 T=0.7 --check oracle n_steps=64 ledger_out=" +
                    prefix + " --out " + out) == 0);
    const char* stages[] = {"before_first_pulse",  "after_first_pulse",
                            "before_second_pulse", "after_second_pulse",
                            "before_third_pulse",  "after_third_pulse"};
    for (const char* stage : stages) {
        const auto rows = csv_rows(prefix + stage + ".csv");
        REQUIRE(rows.size() == 2048);  // default oracle grid
        REQUIRE(rows[0].size() == 5);  // z, re/im of both components
        // total norm is one at every recorded stage
        double norm = 0.0;
        const double dz = rows[1][0] - rows[0][0];
        for (const auto& r : rows) {
            norm += r[1] * r[1] + r[2] * r[2] + r[3] * r[3] + r[4] * r[4];
        }
        CHECK(norm * dz == doctest::Approx(1.0).epsilon(1e-9));
    }
    // ledger output requires the oracle data to exist
    CHECK(run_cli("ifm k=6 ledger_out=" + prefix + " --out " + out) == 2);
}

TEST_CASE("eigen command: row counts, ordering, Rydberg ladder, mass scaling") {
    const std::string b1 = tmp_path("b1.csv");
    REQUIRE(run_cli("eigen which=bouncer n_max=10 g=1.7 --out " + b1) == 0);
    const auto rows = csv_rows(b1);
    REQUIRE(rows.size() == 10);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        CHECK(rows[i][1] < rows[i + 1][1]);
    }

    const std::string c1 = tmp_path("c1.csv");
    REQUIRE(run_cli("eigen which=coulomb M=2 G_newton=0.7 n_max=6 --out " + c1) == 0);
    const auto crows = csv_rows(c1);
    REQUIRE(crows.size() == 6);
    const double ladder = crows[0][1];  // E_n n^2 constant
    for (const auto& r : crows) {
        CHECK(r[1] * r[0] * r[0] == doctest::Approx(ladder).epsilon(1e-12));
    }

    // doubling m_g scales every bouncer level by 2^(2/3)
    const std::string b2 = tmp_path("b2.csv");
    REQUIRE(run_cli("eigen which=bouncer n_max=10 g=1.7 m_g=2 --out " + b2) == 0);
    const auto rows2 = csv_rows(b2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows2[i][1] / rows[i][1] ==
              doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-12));
    }
}

TEST_CASE("shipped configuration files stay valid") {
    const std::string root = WIGSIM_SOURCE_DIR;
    REQUIRE(run_cli("ifm-sweep --config " + root + "/configs/fringe_scan.cfg --out " +
                    tmp_path("cfg_fringe.csv")) == 0);
    REQUIRE(run_cli("eigen --config " + root + "/configs/bouncer.cfg --out " +
                    tmp_path("cfg_bouncer.csv")) == 0);
    REQUIRE(run_cli("transform --config " + root + "/configs/cat_field.cfg --out " +
                    tmp_path("cfg_cat.csv")) == 0);
    REQUIRE(run_cli("ifm-sweep --config " + root +
                    "/configs/gradient_sweep_oracle.cfg --out " +
                    tmp_path("cfg_grad.csv")) == 0);
    CHECK(csv_rows(tmp_path("cfg_fringe.csv")).size() == 64);
    CHECK(csv_rows(tmp_path("cfg_bouncer.csv")).size() == 10);
    for (const auto& r : csv_rows(tmp_path("cfg_grad.csv"))) CHECK(r[3] < 1e-3);
}
