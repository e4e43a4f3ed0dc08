#include <random>
#include <sstream>

#include "doctest.h"
#include "wigsim/grid.hpp"
#include "wigsim/wavefunction.hpp"

using namespace wigsim;

TEST_CASE("GridSpec validation rejects bad axes") {
    CHECK_THROWS_AS((GridSpec{0, 1, 12, -1, 1, 16}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{0, 1, 4, -1, 1, 16}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{1, 1, 16, -1, 1, 16}.validate()), std::invalid_argument);
    CHECK_NOTHROW((GridSpec{0, 1, 16, -1, 1, 32}.validate()));
}

TEST_CASE("field CSV round-trip is bit-faithful") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    GridSpec g{-2.5, 3.75, 16, -1.25, 4.5, 8};
    RealField f(g, 0.7);
    for (double& v : f.values()) v = std::exp(u(rng)) * u(rng);

    std::stringstream s;
    write_csv(f, s, {"origin = test", "note = round trip"});
    RealField back = read_real_csv(s);

    CHECK(back.grid() == f.grid());
    CHECK(back.hbar() == f.hbar());
    for (std::size_t i = 0; i < f.values().size(); ++i) {
        CHECK(back.values()[i] == f.values()[i]);  // exact, not approximate
    }
}

TEST_CASE("complex field CSV round-trip is bit-faithful") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    GridSpec g{-1, 1, 8, -1, 1, 8};
    ComplexField f(g, 1.0);
    for (cplx& v : f.values()) v = cplx(u(rng), u(rng)) * std::exp(u(rng) * 20.0);

    std::stringstream s;
    write_csv(f, s);
    ComplexField back = read_complex_csv(s);
    for (std::size_t i = 0; i < f.values().size(); ++i) {
        CHECK(back.values()[i] == f.values()[i]);
    }
}

TEST_CASE("truncated field CSV is rejected") {
    GridSpec g{-1, 1, 8, -1, 1, 8};
    RealField f(g, 1.0);
    std::stringstream s;
    write_csv(f, s);
    std::string text = s.str();
    text.resize(text.size() / 2);
    std::stringstream cut(text);
    CHECK_THROWS_AS(read_real_csv(cut), std::invalid_argument);
}

TEST_CASE("wavefunction CSV round-trip") {
    GaussianState psi0{0.3, -1.2, 0.8, 1.0};
    WaveFunction psi = psi0.sample({-10, 10, 64});
    std::stringstream s;
    write_csv(psi, s, {"stage = test"});
    WaveFunction back = read_wavefunction_csv(s);
    CHECK(back.grid == psi.grid);
    for (std::size_t i = 0; i < psi.values.size(); ++i) {
        CHECK(back.values[i] == psi.values[i]);
    }
}

TEST_CASE("real_part rejects genuinely complex fields") {
    GridSpec g{-1, 1, 8, -1, 1, 8};
    ComplexField f(g, 1.0);
    f.values()[10] = cplx(1.0, 0.5);
    CHECK_THROWS_AS(f.real_part(), NumericError);
    f.values()[10] = cplx(1.0, 1e-14);
    CHECK_NOTHROW(f.real_part());
}
