#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zeno/io.hpp"
#include "zeno/sweep.hpp"

using namespace zeno;
namespace fs = std::filesystem;

namespace {

HeatmapGrid sample_grid() {
    GridSpec g;
    g.x = {"tau", 0.0, 2.0, 3, AxisScale::Linear};
    g.y = {"alpha", 1.0, 2.0, 2, AxisScale::Linear};
    return run_sweep_serial(g, [](double x, double y) { return x / 3.0 - y; });
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("format_double round-trips doubles through text") {
    for (double v : {1.0 / 3.0, 0.1, 1e-17, -2.5e300, 0.0, 123456789.123456789}) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("csv layout: header, order, line endings") {
    auto grid = sample_grid();
    const std::string csv = csv_string(grid);
    CHECK(csv.rfind("x,y,value\n", 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.back() == '\n');

    // 1 header + 6 data rows, row-major over y then x
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    CHECK(line == "0,1," + format_double(grid.at(0, 0)));
    std::getline(in, line);
    CHECK(line == "1,1," + format_double(grid.at(1, 0)));
    int rows = 2;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 6);

    // values parse back to the exact stored doubles
    const double parsed = std::strtod(csv_string(grid).substr(
        csv.find("0,1,") + 4).c_str(), nullptr);
    CHECK(parsed == grid.at(0, 0));
}

TEST_CASE("sign map csv holds bare integers") {
    auto sign = to_sign_map(sample_grid(), 1e-12);
    const std::string csv = csv_string(sign);
    CHECK(csv.rfind("x,y,value\n", 0) == 0);
    CHECK(csv.find("0,1,-1\n") != std::string::npos);
}

TEST_CASE("csv output is deterministic") {
    const std::string a = csv_string(sample_grid());
    const std::string b = csv_string(sample_grid());
    CHECK(a == b);
}

TEST_CASE("ppm header and payload size") {
    const fs::path dir = fs::temp_directory_path() / "zeno_io_test";
    fs::create_directories(dir);

    auto grid = sample_grid();
    const fs::path ppm = dir / "grid.ppm";
    write_ppm(grid, ppm);
    const std::string data = slurp(ppm);
    CHECK(data.rfind("P6\n3 2\n255\n", 0) == 0);
    CHECK(data.size() == std::string("P6\n3 2\n255\n").size() + 3u * 2u * 3u);

    auto sign = to_sign_map(grid, 1e-12);
    const fs::path spm = dir / "sign.ppm";
    write_ppm(sign, spm);
    const std::string sdata = slurp(spm);
    CHECK(sdata.rfind("P6\n3 2\n255\n", 0) == 0);
    // all-negative map renders as uniform blue
    CHECK(static_cast<unsigned char>(sdata[sdata.size() - 3]) == 59);
    CHECK(static_cast<unsigned char>(sdata[sdata.size() - 1]) == 192);

    fs::remove_all(dir);
}

TEST_CASE("svg contains cells and axis labels") {
    const fs::path dir = fs::temp_directory_path() / "zeno_io_test_svg";
    fs::create_directories(dir);
    const fs::path svg = dir / "grid.svg";
    write_svg(sample_grid(), svg);
    const std::string data = slurp(svg);
    CHECK(data.rfind("<svg", 0) == 0);
    CHECK(data.find("tau [0, 2]") != std::string::npos);
    CHECK(data.find("alpha [1, 2]") != std::string::npos);
    // one rect per cell
    std::size_t rects = 0, pos = 0;
    while ((pos = data.find("<rect", pos)) != std::string::npos) {
        ++rects;
        ++pos;
    }
    CHECK(rects == 6);
    fs::remove_all(dir);
}

TEST_CASE("file writes round-trip byte-identically") {
    const fs::path dir = fs::temp_directory_path() / "zeno_io_test_rt";
    fs::create_directories(dir);
    auto grid = sample_grid();
    write_csv(grid, dir / "a.csv");
    write_csv(grid, dir / "b.csv");
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
    CHECK(slurp(dir / "a.csv") == csv_string(grid));
    fs::remove_all(dir);
}
