#ifndef ZENO_IO_HPP
#define ZENO_IO_HPP

#include <filesystem>
#include <string>

#include "zeno/sweep.hpp"

namespace zeno {

inline constexpr const char* kCodeVersion = "zeno-maps 0.1.0";

/// 17 significant digits: shortest text that round-trips any double.
std::string format_double(double v);

/// Header `x,y,value`, row-major over y then x, LF line endings.
std::string csv_string(const HeatmapGrid& grid);
std::string csv_string(const SignMap& map);
void write_csv(const HeatmapGrid& grid, const std::filesystem::path& path);
void write_csv(const SignMap& map, const std::filesystem::path& path);

/// Binary PPM (P6). Sign maps use a fixed diverging ramp (-1 blue,
/// 0 white, +1 red); heatmaps a min-to-max sequential ramp.
void write_ppm(const HeatmapGrid& grid, const std::filesystem::path& path);
void write_ppm(const SignMap& map, const std::filesystem::path& path);

/// SVG rendering with axis labels.
void write_svg(const HeatmapGrid& grid, const std::filesystem::path& path);
void write_svg(const SignMap& map, const std::filesystem::path& path);

} // namespace zeno

#endif
