#include "zeno/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zeno {

void AxisSpec::validate() const {
    if (count < 1) throw InvalidGrid("axis '" + name + "': count must be >= 1");
    if (count > 1 && !(min < max)) throw InvalidGrid("axis '" + name + "': min must be < max");
    if (scale == AxisScale::Log && !(min > 0.0))
        throw InvalidGrid("axis '" + name + "': log scale requires min > 0");
}

std::vector<double> AxisSpec::points() const {
    validate();
    std::vector<double> pts(count);
    if (count == 1) {
        pts[0] = min;
        return pts;
    }
    if (scale == AxisScale::Linear) {
        const double step = (max - min) / (count - 1);
        for (int i = 0; i < count; ++i) pts[i] = min + step * i;
    } else {
        const double lmin = std::log(min), lmax = std::log(max);
        const double step = (lmax - lmin) / (count - 1);
        for (int i = 0; i < count; ++i) pts[i] = std::exp(lmin + step * i);
    }
    pts.front() = min;  // exp(log(min)) can be off by one ulp
    pts.back() = max;
    return pts;
}

void GridSpec::validate() const {
    x.validate();
    y.validate();
}

namespace {

void finalize(HeatmapGrid& grid) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : grid.cells)
        if (!std::isnan(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    grid.min_value = std::isfinite(lo) ? lo : 0.0;
    grid.max_value = std::isfinite(hi) ? hi : 0.0;
    std::sort(grid.errors.begin(), grid.errors.end(), [](const CellError& a, const CellError& b) {
        return a.iy != b.iy ? a.iy < b.iy : a.ix < b.ix;
    });
}

} // namespace

HeatmapGrid run_sweep(const GridSpec& spec, const CellKernel& kernel, int workers) {
    spec.validate();
    if (workers < 1) throw InvalidGrid("run_sweep: workers must be >= 1");
    if (!kernel) throw InvalidGrid("run_sweep: null kernel");

    const auto xs = spec.x.points();
    const auto ys = spec.y.points();
    const int nx = spec.x.count, ny = spec.y.count;
    const long total = static_cast<long>(nx) * ny;

    HeatmapGrid grid{spec, std::vector<double>(total, std::numeric_limits<double>::quiet_NaN()), 0, 0, {}};
    std::mutex error_mutex;
    std::atomic<long> done{0};
    std::atomic<long> next_report{std::max<long>(1, total / 20)};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
    for (long idx = 0; idx < total; ++idx) {
        const int ix = static_cast<int>(idx % nx);
        const int iy = static_cast<int>(idx / nx);
        try {
            grid.cells[idx] = kernel(xs[ix], ys[iy]);
        } catch (const std::exception& e) {
            std::lock_guard lock(error_mutex);
            grid.errors.push_back({ix, iy, e.what()});
        }
        const long d = ++done;
        long expected = next_report.load();
        while (d >= expected && total >= 20 &&
               next_report.compare_exchange_weak(expected, expected + std::max<long>(1, total / 20))) {
            std::fprintf(stderr, "sweep: %ld/%ld cells (%.0f%%)\n", d, total,
                         100.0 * static_cast<double>(d) / static_cast<double>(total));
            break;
        }
    }

    finalize(grid);
    return grid;
}

HeatmapGrid run_sweep_serial(const GridSpec& spec, const CellKernel& kernel) {
    spec.validate();
    if (!kernel) throw InvalidGrid("run_sweep_serial: null kernel");

    const auto xs = spec.x.points();
    const auto ys = spec.y.points();
    const int nx = spec.x.count, ny = spec.y.count;

    HeatmapGrid grid{spec,
                     std::vector<double>(static_cast<std::size_t>(nx) * ny,
                                         std::numeric_limits<double>::quiet_NaN()),
                     0,
                     0,
                     {}};
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            try {
                grid.cells[static_cast<std::size_t>(iy) * nx + ix] = kernel(xs[ix], ys[iy]);
            } catch (const std::exception& e) {
                grid.errors.push_back({ix, iy, e.what()});
            }
        }
    finalize(grid);
    return grid;
}

SignMap to_sign_map(const HeatmapGrid& h, double zero_band) {
    if (zero_band < 0.0) throw InvalidGrid("to_sign_map: zero_band must be >= 0");
    SignMap s{h.spec, std::vector<int>(h.cells.size(), 0), 0, false};
    for (std::size_t i = 0; i < h.cells.size(); ++i) {
        const double v = h.cells[i];
        if (std::isnan(v)) {
            s.had_nan = true;
            s.cells[i] = 0;
        } else if (v > zero_band) {
            s.cells[i] = 1;
            ++s.positive_count;
        } else if (v < -zero_band) {
            s.cells[i] = -1;
        }
    }
    return s;
}

} // namespace zeno
