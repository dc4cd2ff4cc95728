// zeno: command-line frontend for the decay-rate and non-Markovianity maps.
//
// Subcommands: decay-rate, zeno-map, nm-map, rc-map, oracle-check.
// Configuration is a JSON document; every leaf is overridable by a flag of
// the same dotted name (e.g. --spectral.alpha 0.1). A run writes the map
// CSV plus a JSON sidecar holding the fully resolved config; pointing
// --config at a sidecar reproduces the CSV byte for byte.
//
// Exit codes: 0 success, 2 config error, 3 numerical error,
// 4 oracle-check failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zeno/bipartite.hpp"
#include "zeno/io.hpp"
#include "zeno/linalg.hpp"
#include "zeno/oracle.hpp"
#include "zeno/pipelines.hpp"
#include "zeno/rcsink.hpp"
#include "zeno/spectral.hpp"
#include "zeno/sweep.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitOracle = 4;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json default_config(const std::string& command) {
    json cfg;
    cfg["command"] = command;
    cfg["spectral"] = {{"coupling", 0.01},
                       {"alpha", 0.25},
                       {"delta_omega", 1.0},
                       {"tunneling", 2.0}};
    cfg["quadrature"] = {{"abs_tol", 1e-12},
                         {"rel_tol", 1e-9},
                         {"tail_tol", 1e-10},
                         {"max_subdivisions", 2000}};
    cfg["bell"] = {{"a", 0.70710678118654752}, {"b", 0.70710678118654752}};
    cfg["model"] = {{"tau", nullptr},
                    {"n_measurements", 20},
                    {"coupling_v", 1.0},
                    {"lambda_c", 0.0}};
    cfg["partition"] = "qq";
    cfg["workers"] = 1;
    cfg["seed"] = 12345;
    cfg["out"] = ".";
    cfg["formats"] = json::array({"csv", "json"});

    auto axis = [](const char* name, double min, double max, int count,
                   const char* scale) {
        return json{{"name", name}, {"min", min}, {"max", max},
                    {"count", count}, {"scale", scale}};
    };
    if (command == "zeno-map") {
        cfg["grid"] = {{"x", axis("tau", 0.02, 5.0, 50, "log")},
                       {"y", axis("alpha", 0.05, 1.0, 50, "log")}};
    } else if (command == "nm-map") {
        cfg["grid"] = {{"x", axis("tau1", 0.05, 5.0, 40, "log")},
                       {"y", axis("tau2", 0.05, 5.0, 40, "log")}};
    } else if (command == "rc-map") {
        cfg["grid"] = {{"x", axis("t", 0.0, 10.0, 40, "linear")},
                       {"y", axis("lambda_c", 0.0, 3.0, 40, "linear")}};
        cfg["model"]["tau"] = 0.1;
    }
    return cfg;
}

// Merge src over dst, recursing into objects so partial configs keep the
// defaults for everything they do not mention.
void merge_into(json& dst, const json& src) {
    if (!src.is_object() || !dst.is_object()) {
        dst = src;
        return;
    }
    for (auto it = src.begin(); it != src.end(); ++it) {
        if (dst.contains(it.key()))
            merge_into(dst[it.key()], it.value());
        else
            dst[it.key()] = it.value();
    }
}

// Apply `--dotted.path value` overrides left in the argument list after the
// named flags were consumed.
void apply_overrides(json& cfg, const std::vector<std::string>& extras) {
    for (std::size_t i = 0; i < extras.size(); ++i) {
        const std::string& flag = extras[i];
        if (flag.rfind("--", 0) != 0)
            throw ConfigError("unrecognized argument: " + flag);
        std::string path = flag.substr(2);
        std::string value;
        const auto eq = path.find('=');
        if (eq != std::string::npos) {
            value = path.substr(eq + 1);
            path = path.substr(0, eq);
        } else {
            if (i + 1 >= extras.size())
                throw ConfigError("missing value for --" + path);
            value = extras[++i];
        }
        for (auto& c : path)
            if (c == '.') c = '/';
        const json::json_pointer ptr("/" + path);
        json parsed;
        try {
            parsed = json::parse(value);
        } catch (const json::exception&) {
            parsed = value;  // bare strings (axis names, scales, paths)
        }
        try {
            cfg.at(ptr);  // override may only touch known fields
        } catch (const json::exception&) {
            throw ConfigError("unknown config field: --" + flag.substr(2));
        }
        cfg[ptr] = parsed;
    }
}

double require_number(const json& cfg, const char* path) {
    const json::json_pointer ptr(path);
    json v;
    try {
        v = cfg.at(ptr);
    } catch (const json::exception&) {
        throw ConfigError(std::string("missing config field: ") + path);
    }
    if (!v.is_number())
        throw ConfigError(std::string("config field ") + path +
                          " must be a number");
    return v.get<double>();
}

zeno::SpectralParams spectral_from(const json& cfg) {
    zeno::SpectralParams p;
    p.coupling = require_number(cfg, "/spectral/coupling");
    p.alpha = require_number(cfg, "/spectral/alpha");
    p.delta_omega = require_number(cfg, "/spectral/delta_omega");
    p.tunneling = require_number(cfg, "/spectral/tunneling");
    p.validate();
    return p;
}

zeno::QuadratureOptions quadrature_from(const json& cfg) {
    zeno::QuadratureOptions q;
    q.abs_tol = require_number(cfg, "/quadrature/abs_tol");
    q.rel_tol = require_number(cfg, "/quadrature/rel_tol");
    q.tail_tol = require_number(cfg, "/quadrature/tail_tol");
    q.max_subdivisions =
        static_cast<int>(require_number(cfg, "/quadrature/max_subdivisions"));
    q.validate();
    return q;
}

zeno::BellState bell_from(const json& cfg) {
    zeno::BellState b{require_number(cfg, "/bell/a"), require_number(cfg, "/bell/b")};
    b.validate();
    return b;
}

zeno::AxisSpec axis_from(const json& cfg, const char* which) {
    const json& a = cfg["grid"][which];
    zeno::AxisSpec spec;
    spec.name = a.value("name", std::string(which));
    spec.min = require_number(cfg, (std::string("/grid/") + which + "/min").c_str());
    spec.max = require_number(cfg, (std::string("/grid/") + which + "/max").c_str());
    spec.count =
        static_cast<int>(require_number(cfg, (std::string("/grid/") + which + "/count").c_str()));
    const std::string scale = a.value("scale", std::string("linear"));
    if (scale == "linear")
        spec.scale = zeno::AxisScale::Linear;
    else if (scale == "log")
        spec.scale = zeno::AxisScale::Log;
    else
        throw ConfigError("grid scale must be 'linear' or 'log', got '" + scale + "'");
    spec.validate();
    return spec;
}

zeno::Partition partition_from(const json& cfg) {
    const std::string p = cfg.value("partition", std::string("qq"));
    if (p == "qq") return zeno::Partition::QubitQubit;
    if (p == "rr") return zeno::Partition::ReservoirReservoir;
    if (p == "qr") return zeno::Partition::QubitReservoir;
    throw ConfigError("partition must be qq, rr, or qr, got '" + p + "'");
}

int workers_from(const json& cfg) {
    const int w = static_cast<int>(require_number(cfg, "/workers"));
    if (w < 1) throw ConfigError("workers must be >= 1");
    return w;
}

std::vector<std::string> formats_from(const json& cfg) {
    std::vector<std::string> fmts;
    for (const auto& f : cfg["formats"]) {
        const std::string s = f.get<std::string>();
        if (s != "csv" && s != "json" && s != "ppm" && s != "svg")
            throw ConfigError("format must be csv, json, ppm, or svg, got '" + s + "'");
        fmts.push_back(s);
    }
    return fmts;
}

bool wants(const std::vector<std::string>& fmts, const char* f) {
    return std::find(fmts.begin(), fmts.end(), f) != fmts.end();
}

json error_list(const zeno::HeatmapGrid& grid) {
    json errs = json::array();
    for (const auto& e : grid.errors)
        errs.push_back({{"ix", e.ix}, {"iy", e.iy}, {"message", e.message}});
    return errs;
}

void write_outputs(const zeno::HeatmapGrid& grid, const json& cfg,
                   const std::string& stem, double elapsed_s, json results) {
    const fs::path out_dir = cfg["out"].get<std::string>();
    fs::create_directories(out_dir);
    const auto fmts = formats_from(cfg);

    // CSV and the sidecar are the reproducibility contract; always written
    zeno::write_csv(grid, out_dir / (stem + ".csv"));

    results["min"] = grid.min_value;
    results["max"] = grid.max_value;
    results["failed_cells"] = error_list(grid);
    json sidecar;
    sidecar["code_version"] = zeno::kCodeVersion;
    sidecar["config"] = cfg;
    sidecar["results"] = std::move(results);
    sidecar["timings"] = {{"sweep_seconds", elapsed_s}};
    std::ofstream(out_dir / (stem + ".json")) << sidecar.dump(2) << "\n";

    if (wants(fmts, "ppm")) zeno::write_ppm(grid, out_dir / (stem + ".ppm"));
    if (wants(fmts, "svg")) zeno::write_svg(grid, out_dir / (stem + ".svg"));
}

int cmd_decay_rate(const json& cfg) {
    const auto p = spectral_from(cfg);
    const auto q = quadrature_from(cfg);
    const double tau = require_number(cfg, "/model/tau");
    const auto cls = zeno::classify_zeno(tau, p, q);
    const double g0 = zeno::natural_decay_rate(p);
    json out;
    out["tau"] = tau;
    out["gamma"] = cls.ratio * g0;
    out["gamma0"] = g0;
    out["ratio"] = cls.ratio;
    out["class"] = cls.regime == zeno::ZenoRegime::Zeno       ? "Zeno"
                   : cls.regime == zeno::ZenoRegime::AntiZeno ? "AntiZeno"
                                                              : "Boundary";
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

int cmd_zeno_map(const json& cfg) {
    const auto p = spectral_from(cfg);
    const auto q = quadrature_from(cfg);
    const auto t0 = std::chrono::steady_clock::now();
    auto grid = zeno::zeno_ratio_map(axis_from(cfg, "x"), axis_from(cfg, "y"), p, q,
                                     workers_from(cfg));
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0).count();
    const auto sign = zeno::to_sign_map(grid, zeno::kZenoBoundaryBand);
    json results;
    results["positive_count"] = sign.positive_count;
    write_outputs(grid, cfg, "zeno-map", secs, std::move(results));
    return 0;
}

int cmd_nm_map(const json& cfg) {
    const auto q = quadrature_from(cfg);
    zeno::MeasurementModel m;
    m.n_measurements = static_cast<int>(require_number(cfg, "/model/n_measurements"));
    m.spectral1 = spectral_from(cfg);
    m.spectral2 = m.spectral1;
    m.validate();
    const auto t0 = std::chrono::steady_clock::now();
    auto grid = zeno::nonmarkov_delta_map(axis_from(cfg, "x"), axis_from(cfg, "y"),
                                          partition_from(cfg), bell_from(cfg), m, q,
                                          workers_from(cfg));
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0).count();
    const auto sign = zeno::to_sign_map(grid, zeno::kSignZeroBand);
    json results;
    results["positive_count"] = sign.positive_count;
    write_outputs(grid, cfg, "nm-map", secs, std::move(results));
    return 0;
}

int cmd_rc_map(const json& cfg) {
    zeno::RCParams p;
    p.coupling = require_number(cfg, "/model/coupling_v");
    p.bell = bell_from(cfg);
    const double tau = require_number(cfg, "/model/tau");
    const auto t0 = std::chrono::steady_clock::now();
    auto grid = zeno::rc_map(axis_from(cfg, "x"), axis_from(cfg, "y"), tau, p,
                             workers_from(cfg));
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0).count();
    const auto sign = zeno::to_sign_map(grid, zeno::kSignZeroBand);
    json results;
    results["positive_count"] = sign.positive_count;
    write_outputs(grid, cfg, "rc-map", secs, std::move(results));
    return 0;
}

// Randomized oracle suites: closed-form reduced matrices against the
// 16-dim partial trace, and the analytic sink amplitudes against RK4.
int cmd_oracle_check(const json& cfg) {
    const auto seed = cfg["seed"].get<std::uint64_t>();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    bool all_ok = true;

    {
        constexpr std::size_t dims[] = {2, 2, 2, 2};
        int failures = 0;
        for (int rep = 0; rep < 500; ++rep) {
            const double a = std::sqrt(uni(rng));
            zeno::BellState bell{a, std::sqrt(1.0 - a * a)};
            zeno::SurvivalAmplitudes s1{uni(rng), 0.0}, s2{uni(rng), 0.0};
            s1.v = std::sqrt(1.0 - s1.u * s1.u);
            s2.v = std::sqrt(1.0 - s2.u * s2.u);
            const auto joint = zeno::full_state_oracle(bell, s1, s2).projector();
            const struct {
                zeno::Partition part;
                std::size_t keep[2];
            } cases[] = {{zeno::Partition::QubitQubit, {0, 1}},
                         {zeno::Partition::ReservoirReservoir, {2, 3}},
                         {zeno::Partition::QubitReservoir, {0, 3}}};
            for (const auto& c : cases) {
                const auto traced = zeno::partial_trace(joint, dims, c.keep);
                const auto closed =
                    zeno::reduced_density_entries(c.part, bell, s1, s2);
                if ((traced - closed).frobenius_norm() >= 1e-12) ++failures;
            }
        }
        const bool ok = failures == 0;
        all_ok = all_ok && ok;
        std::printf("[%s] reduced matrices vs 16-dim partial trace (500 random draws)\n",
                    ok ? "PASS" : "FAIL");
    }

    {
        int failures = 0;
        for (int rep = 0; rep < 100; ++rep) {
            zeno::RCParams p;
            p.coupling = 0.5 + 1.5 * uni(rng);
            p.lambda_c = 3.9 * uni(rng);
            const double t = 20.0 * uni(rng);
            const auto cf = zeno::rc_amplitudes(t, p);
            const auto rk = zeno::oracle::rk4_rc_amplitudes(t, p);
            if (std::abs(cf.xi2 - rk.xi2) >= 1e-6 ||
                std::abs(cf.eta2 - rk.eta2) >= 1e-6 ||
                std::abs(cf.chi2 - rk.chi2) >= 1e-6)
                ++failures;
            if (std::abs(cf.xi2 + cf.eta2 + cf.chi2 - 1.0) > 1e-10) ++failures;
        }
        const bool ok = failures == 0;
        all_ok = all_ok && ok;
        std::printf("[%s] sink amplitudes vs RK4 stepping (100 random draws)\n",
                    ok ? "PASS" : "FAIL");
    }

    {
        const auto p = spectral_from(cfg);
        const auto q = quadrature_from(cfg);
        int failures = 0;
        for (double tau : {0.05, 0.2, 0.5, 1.0, 2.0}) {
            const double fast = zeno::effective_decay_rate(tau, p, q);
            const double ref = zeno::oracle::trapezoid_decay_rate(tau, p);
            if (std::abs(fast - ref) > 1e-6 * ref) ++failures;
        }
        const bool ok = failures == 0;
        all_ok = all_ok && ok;
        std::printf("[%s] decay rate vs trapezoid quadrature (5 intervals)\n",
                    ok ? "PASS" : "FAIL");
    }

    return all_ok ? 0 : kExitOracle;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeno / anti-Zeno phase maps and non-Markovianity maps"};
    app.require_subcommand(1);
    app.allow_extras();

    std::string config_path, out_dir, partition;
    std::vector<std::string> formats;
    int workers = -1;
    std::uint64_t seed = 0;
    bool seed_set = false;

    std::vector<CLI::App*> subs;
    for (const char* name :
         {"decay-rate", "zeno-map", "nm-map", "rc-map", "oracle-check"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->allow_extras();
        sub->add_option("--config", config_path, "JSON config or a previous run's sidecar");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--format", formats, "csv|json|ppm|svg (repeatable)");
        sub->add_option("--workers", workers, "sweep worker count");
        sub->add_option("--partition", partition, "qq|rr|qr");
        sub->add_option("--seed", seed, "randomized suite seed")
            ->each([&](const std::string&) { seed_set = true; });
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitConfig;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    try {
        json cfg = default_config(command);
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw ConfigError("cannot read config file: " + config_path);
            json loaded;
            try {
                loaded = json::parse(in);
            } catch (const json::exception& e) {
                throw ConfigError("config parse error: " + std::string(e.what()));
            }
            // a sidecar wraps the original config under "config"
            if (loaded.contains("config")) loaded = loaded["config"];
            if (loaded.contains("command") &&
                loaded["command"].get<std::string>() != command)
                throw ConfigError("config is for command '" +
                                  loaded["command"].get<std::string>() + "'");
            merge_into(cfg, loaded);
        }
        apply_overrides(cfg, sub->remaining());
        if (!out_dir.empty()) cfg["out"] = out_dir;
        if (workers > 0) cfg["workers"] = workers;
        if (!partition.empty()) cfg["partition"] = partition;
        if (seed_set) cfg["seed"] = seed;
        if (!formats.empty()) {
            json f = json::array({"csv", "json"});  // contract outputs stay on
            for (const auto& s : formats)
                if (s != "csv" && s != "json") f.push_back(s);
            cfg["formats"] = f;
        }
        formats_from(cfg);  // validate

        if (command == "decay-rate") return cmd_decay_rate(cfg);
        if (command == "zeno-map") return cmd_zeno_map(cfg);
        if (command == "nm-map") return cmd_nm_map(cfg);
        if (command == "rc-map") return cmd_rc_map(cfg);
        return cmd_oracle_check(cfg);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const zeno::InvalidGrid& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const zeno::InvalidState& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const json::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kExitNumerical;
    }
}
