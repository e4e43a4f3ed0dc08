// Times the OpenMP kernels against their serial reference implementations
// on a production-sized grid and reports the agreement between the two.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>

#include "wigsim/dynamics.hpp"
#include "wigsim/phase_space.hpp"
#include "wigsim/reference.hpp"

using namespace wigsim;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warm up
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms, double max_diff) {
    std::printf("%-24s %10.2f ms %10.2f ms %8.2fx   max |diff| %.3g\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, max_diff);
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 512;
    const GridSpec grid = GridSpec::fft_matched(-20.0, 20.0, n, 1.0);
    const GaussianState state{0.3, 0.8, 1.0, 1.0};
    WaveFunction psi = state.sample(grid.zaxis());
    psi.normalize();

    std::printf("grid %d x %d\n", grid.n_z, grid.n_p);
    std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    {
        RealField fast(grid, 1.0);
        ComplexField slow(grid, 1.0);
        const double t_par = time_ms([&] { fast = wigner_transform(psi, grid); }, 3);
        const double t_ser =
            time_ms([&] { slow = ref::wigner_transform_serial(psi, grid); }, 1);
        double diff = 0.0;
        for (std::size_t i = 0; i < fast.values().size(); ++i) {
            diff = std::max(diff,
                            std::abs(fast.values()[i] - slow.values()[i].real()));
        }
        report("wigner_transform", t_ser, t_par, diff);
    }

    {
        RealField W(grid, 1.0);
        for (int j = 0; j < grid.n_z; ++j) {
            for (int m = 0; m < grid.n_p; ++m) W.at(j, m) = state.wigner(grid.z(j), grid.p(m));
        }
        PhysParams par;
        par.g = 0.5;
        par.Gamma = 0.3;
        const AffineFlow flow = classical_flow(par, 0.5);
        RealField fast(grid, 1.0);
        RealField slow(grid, 1.0);
        const double t_par = time_ms([&] { fast = transport(W, flow); }, 5);
        const double t_ser = time_ms([&] { slow = ref::transport_serial(W, flow); }, 5);
        double diff = 0.0;
        for (std::size_t i = 0; i < fast.values().size(); ++i) {
            diff = std::max(diff, std::abs(fast.values()[i] - slow.values()[i]));
        }
        report("transport", t_ser, t_par, diff);

        cplx a{}, b{};
        const double t_par_c =
            time_ms([&] { a = characteristic_transform(W, 0.7, -0.4); }, 10);
        const double t_ser_c =
            time_ms([&] { b = ref::characteristic_serial(W, 0.7, -0.4); }, 10);
        report("characteristic", t_ser_c, t_par_c, std::abs(a - b));

        double ov_fast = 0.0, ov_slow = 0.0;
        const double t_par_o = time_ms([&] { ov_fast = phase_space_overlap(W, W); }, 10);
        const double t_ser_o = time_ms([&] { ov_slow = ref::overlap_serial(W, W); }, 10);
        report("overlap", t_ser_o, t_par_o, std::abs(ov_fast - ov_slow));
    }
    return 0;
}
