#include "zeno/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace zeno {

namespace {

void write_file(const std::filesystem::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

struct Rgb {
    unsigned char r, g, b;
};

Rgb diverging_color(int sign) {
    if (sign < 0) return {59, 76, 192};   // blue
    if (sign > 0) return {180, 4, 38};    // red
    return {255, 255, 255};
}

// compact sequential ramp (dark blue -> green -> yellow)
Rgb sequential_color(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const auto lerp = [](double a, double b, double f) {
        return static_cast<unsigned char>(std::lround(a + (b - a) * f));
    };
    if (t < 0.5) {
        const double f = t / 0.5;
        return {lerp(68, 33, f), lerp(1, 144, f), lerp(84, 140, f)};
    }
    const double f = (t - 0.5) / 0.5;
    return {lerp(33, 253, f), lerp(144, 231, f), lerp(140, 37, f)};
}

template <typename CellColor>
std::string ppm_string(const GridSpec& spec, const CellColor& color_at) {
    const int nx = spec.x.count, ny = spec.y.count;
    std::string out = "P6\n" + std::to_string(nx) + " " + std::to_string(ny) + "\n255\n";
    out.reserve(out.size() + static_cast<std::size_t>(nx) * ny * 3);
    // image top row = highest y value
    for (int iy = ny - 1; iy >= 0; --iy)
        for (int ix = 0; ix < nx; ++ix) {
            const Rgb c = color_at(ix, iy);
            out.push_back(static_cast<char>(c.r));
            out.push_back(static_cast<char>(c.g));
            out.push_back(static_cast<char>(c.b));
        }
    return out;
}

template <typename CellColor>
std::string svg_string(const GridSpec& spec, const CellColor& color_at) {
    const int nx = spec.x.count, ny = spec.y.count;
    constexpr int cell = 8, margin = 48;
    const int w = nx * cell + 2 * margin, h = ny * cell + 2 * margin;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n";
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            const Rgb c = color_at(ix, iy);
            out << "<rect x=\"" << margin + ix * cell << "\" y=\""
                << margin + (ny - 1 - iy) * cell << "\" width=\"" << cell << "\" height=\""
                << cell << "\" fill=\"rgb(" << int(c.r) << "," << int(c.g) << "," << int(c.b)
                << ")\"/>\n";
        }
    out << "<text x=\"" << w / 2 << "\" y=\"" << h - 12
        << "\" text-anchor=\"middle\" font-size=\"14\">" << spec.x.name << " ["
        << format_double(spec.x.min) << ", " << format_double(spec.x.max) << "]</text>\n";
    out << "<text x=\"16\" y=\"" << h / 2 << "\" text-anchor=\"middle\" font-size=\"14\" "
        << "transform=\"rotate(-90 16 " << h / 2 << ")\">" << spec.y.name << " ["
        << format_double(spec.y.min) << ", " << format_double(spec.y.max) << "]</text>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_string(const HeatmapGrid& grid) {
    const auto xs = grid.spec.x.points();
    const auto ys = grid.spec.y.points();
    std::string out = "x,y,value\n";
    for (int iy = 0; iy < grid.spec.y.count; ++iy)
        for (int ix = 0; ix < grid.spec.x.count; ++ix)
            out += format_double(xs[ix]) + "," + format_double(ys[iy]) + "," +
                   format_double(grid.at(ix, iy)) + "\n";
    return out;
}

std::string csv_string(const SignMap& map) {
    const auto xs = map.spec.x.points();
    const auto ys = map.spec.y.points();
    std::string out = "x,y,value\n";
    for (int iy = 0; iy < map.spec.y.count; ++iy)
        for (int ix = 0; ix < map.spec.x.count; ++ix)
            out += format_double(xs[ix]) + "," + format_double(ys[iy]) + "," +
                   std::to_string(map.at(ix, iy)) + "\n";
    return out;
}

void write_csv(const HeatmapGrid& grid, const std::filesystem::path& path) {
    write_file(path, csv_string(grid));
}

void write_csv(const SignMap& map, const std::filesystem::path& path) {
    write_file(path, csv_string(map));
}

void write_ppm(const HeatmapGrid& grid, const std::filesystem::path& path) {
    const double lo = grid.min_value, span = grid.max_value - grid.min_value;
    write_file(path, ppm_string(grid.spec, [&](int ix, int iy) {
                   const double v = grid.at(ix, iy);
                   if (std::isnan(v)) return Rgb{128, 128, 128};
                   return sequential_color(span > 0.0 ? (v - lo) / span : 0.5);
               }));
}

void write_ppm(const SignMap& map, const std::filesystem::path& path) {
    write_file(path, ppm_string(map.spec, [&](int ix, int iy) {
                   return diverging_color(map.at(ix, iy));
               }));
}

void write_svg(const HeatmapGrid& grid, const std::filesystem::path& path) {
    const double lo = grid.min_value, span = grid.max_value - grid.min_value;
    write_file(path, svg_string(grid.spec, [&](int ix, int iy) {
                   const double v = grid.at(ix, iy);
                   if (std::isnan(v)) return Rgb{128, 128, 128};
                   return sequential_color(span > 0.0 ? (v - lo) / span : 0.5);
               }));
}

void write_svg(const SignMap& map, const std::filesystem::path& path) {
    write_file(path, svg_string(map.spec, [&](int ix, int iy) {
                   return diverging_color(map.at(ix, iy));
               }));
}

} // namespace zeno
