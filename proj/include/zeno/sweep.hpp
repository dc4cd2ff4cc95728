#ifndef ZENO_SWEEP_HPP
#define ZENO_SWEEP_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zeno/errors.hpp"

namespace zeno {

enum class AxisScale { Linear, Log };

struct AxisSpec {
    std::string name;
    double min = 0.0;
    double max = 1.0;
    int count = 1;
    AxisScale scale = AxisScale::Linear;

    void validate() const;
    /// count sample points; min and max inclusive (a single-point axis
    /// sits at min).
    std::vector<double> points() const;
};

struct GridSpec {
    AxisSpec x;
    AxisSpec y;
    std::map<std::string, double> fixed_params;

    void validate() const;
};

struct CellError {
    int ix, iy;
    std::string message;
};

struct HeatmapGrid {
    GridSpec spec;
    std::vector<double> cells;  // row-major over y then x: cells[iy * nx + ix]
    double min_value = 0.0;
    double max_value = 0.0;
    std::vector<CellError> errors;  // failed cells hold NaN

    double at(int ix, int iy) const { return cells[static_cast<std::size_t>(iy) * spec.x.count + ix]; }
};

struct SignMap {
    GridSpec spec;
    std::vector<int> cells;  // -1 / 0 / +1, same layout as HeatmapGrid
    int positive_count = 0;
    bool had_nan = false;

    int at(int ix, int iy) const { return cells[static_cast<std::size_t>(iy) * spec.x.count + ix]; }
};

using CellKernel = std::function<double(double x, double y)>;

/// Parallel sweep over the grid. Cells are independent work units
/// assembled by position, so the result is identical for any worker
/// count. A throwing kernel marks its cell NaN and records the error;
/// the sweep never aborts. Progress is reported on stderr in 5% steps.
HeatmapGrid run_sweep(const GridSpec& spec, const CellKernel& kernel, int workers);

/// Serial reference implementation, kept for equivalence testing and
/// benchmarking against the parallel path.
HeatmapGrid run_sweep_serial(const GridSpec& spec, const CellKernel& kernel);

/// Sign conversion with a symmetric zero band; NaN cells map to 0 and
/// set the had_nan flag.
SignMap to_sign_map(const HeatmapGrid& h, double zero_band);

} // namespace zeno

#endif
