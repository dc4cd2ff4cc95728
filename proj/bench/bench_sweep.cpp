// Compares the parallel sweep against the serial reference on the
// decay-rate ratio kernel and reports wall times and speedup. The
// comparison also asserts bitwise-identical output, so the benchmark
// doubles as an end-to-end determinism check at map scale.
//
// Usage: bench_sweep [grid_size] [workers]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "zeno/pipelines.hpp"
#include "zeno/spectral.hpp"
#include "zeno/sweep.hpp"

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 100;
    const int workers = argc > 2 ? std::atoi(argv[2]) : 8;

    zeno::AxisSpec tau_axis{"tau", 0.02, 5.0, n, zeno::AxisScale::Log};
    zeno::AxisSpec alpha_axis{"alpha", 0.05, 1.0, n, zeno::AxisScale::Log};
    zeno::SpectralParams p;
    zeno::QuadratureOptions q;

    auto kernel = [&](double tau, double alpha) {
        zeno::SpectralParams local = p;
        local.alpha = alpha;
        return zeno::effective_decay_rate(tau, local, q) /
                   zeno::natural_decay_rate(local) -
               1.0;
    };

    using clock = std::chrono::steady_clock;

    auto t0 = clock::now();
    auto serial = zeno::run_sweep_serial({tau_axis, alpha_axis, {}}, kernel);
    const double serial_s = std::chrono::duration<double>(clock::now() - t0).count();

    t0 = clock::now();
    auto parallel = zeno::run_sweep({tau_axis, alpha_axis, {}}, kernel, workers);
    const double parallel_s = std::chrono::duration<double>(clock::now() - t0).count();

    const bool identical =
        serial.cells.size() == parallel.cells.size() &&
        std::memcmp(serial.cells.data(), parallel.cells.data(),
                    serial.cells.size() * sizeof(double)) == 0;

    std::printf("grid            : %dx%d\n", n, n);
    std::printf("serial          : %.3f s\n", serial_s);
    std::printf("parallel (%2d)   : %.3f s\n", workers, parallel_s);
    std::printf("speedup         : %.2fx\n", serial_s / parallel_s);
    std::printf("bitwise identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
