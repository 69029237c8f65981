#include "fourpt/fourpt.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

enum Exit { kPass = 0, kTheoremFailed = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string input;
    std::string out = ".";
    std::size_t samples = 0; // 0: value from the curve spec
    double tol = 1e-6;
    std::string t_spec;
    std::uint64_t seed = 1;
    std::string r_spec;
    std::string format;
    std::size_t population = 0;
    std::string geometry = "euclidean";
    bool force = false;
};

struct Text {
    char* p = nullptr;
    ~Text() { fp_string_free(p); }
};

using CurvePtr = std::unique_ptr<fp_curve, decltype(&fp_curve_free)>;
using FrontPtr = std::unique_ptr<fp_front, decltype(&fp_front_free)>;

void check(fp_status s) {
    if (s == FP_OK) return;
    throw UsageError(fp_last_error());
}

// "0.5", "0.1,0.2" or "start:stop:step" (stop included).
std::vector<double> parse_grid(const std::string& spec) {
    auto num = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || !std::isfinite(v)) throw UsageError("bad number '" + s + "' in '" + spec + "'");
        return v;
    };
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
        if (parts.size() != 3) throw UsageError("grid must be start:stop:step");
        const double a = num(parts[0]), b = num(parts[1]), h = num(parts[2]);
        if (!(h > 0.0) || b < a) throw UsageError("grid needs step > 0 and stop >= start");
        const auto n = static_cast<std::size_t>(std::floor((b - a) / h + 1e-9));
        for (std::size_t i = 0; i <= n; ++i) out.push_back(a + h * static_cast<double>(i));
        return out;
    }
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ',');) out.push_back(num(part));
    if (out.empty()) throw UsageError("empty value list");
    return out;
}

std::set<std::string> parse_formats(const std::string& spec, const std::set<std::string>& fallback) {
    if (spec.empty()) return fallback;
    std::set<std::string> out;
    std::stringstream ss(spec);
    for (std::string f; std::getline(ss, f, ',');) {
        if (f != "csv" && f != "svg" && f != "json") throw UsageError("unknown format '" + f + "'");
        out.insert(f);
    }
    return out;
}

void write_file(const fs::path& path, const char* text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw UsageError("cannot write '" + path.string() + "'");
    os << text;
}

fs::path prepare_out(const RunConfig& cfg) {
    fs::path dir(cfg.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw UsageError("cannot create output directory '" + cfg.out + "'");
    return dir;
}

std::string stem(const RunConfig& cfg) { return fs::path(cfg.input).stem().string(); }

CurvePtr load(const RunConfig& cfg) {
    if (cfg.input.empty()) throw UsageError("--input is required");
    fp_curve* c = nullptr;
    check(fp_curve_from_file(cfg.input.c_str(), cfg.samples, &c));
    return CurvePtr(c, fp_curve_free);
}

fp_options options(const RunConfig& cfg, const std::vector<double>& t_grid) {
    fp_options o{};
    o.tol = cfg.tol;
    o.crossing_tol = -1.0;
    o.t_grid = t_grid.empty() ? nullptr : t_grid.data();
    o.n_t = t_grid.size();
    o.force = cfg.force ? 1 : 0;
    return o;
}

void export_curve(const fp_curve* c, const fs::path& base, const std::set<std::string>& formats) {
    for (const auto& f : formats) {
        Text t;
        check(fp_curve_export(c, f.c_str(), &t.p));
        write_file(base.string() + "." + f, t.p);
    }
}

int cmd_analyze(const RunConfig& cfg) {
    const auto curve = load(cfg);
    const auto dir = prepare_out(cfg);
    const auto formats = parse_formats(cfg.format, {"csv", "json"});
    const std::string name = stem(cfg);
    const fp_options opt = options(cfg, {});
    if (formats.count("json")) {
        Text report;
        check(fp_analyze(curve.get(), &opt, &report.p));
        write_file(dir / (name + "_analysis.json"), report.p);
    }
    if (formats.count("csv")) {
        Text profile;
        check(fp_curve_export(curve.get(), "profile_csv", &profile.p));
        write_file(dir / (name + "_profile.csv"), profile.p);
        fp_curve_info info{};
        check(fp_curve_info_get(curve.get(), &info));
        if (info.geometry == FP_EUCLIDEAN) {
            Text sp;
            check(fp_curve_export(curve.get(), "spectrum_csv", &sp.p));
            write_file(dir / (name + "_spectrum.csv"), sp.p);
        }
    }
    if (formats.count("svg")) export_curve(curve.get(), dir / name, {"svg"});
    return kPass;
}

int cmd_propagate(const RunConfig& cfg) {
    if (cfg.t_spec.empty()) throw UsageError("--t is required");
    const auto t_grid = parse_grid(cfg.t_spec);
    const auto curve = load(cfg);
    const auto dir = prepare_out(cfg);
    const auto formats = parse_formats(cfg.format, {"csv", "json", "svg"});
    const std::string name = stem(cfg);
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        fp_front* raw = nullptr;
        check(fp_propagate(curve.get(), t_grid[i], &raw));
        const FrontPtr front(raw, fp_front_free);
        char idx[16];
        std::snprintf(idx, sizeof idx, "%03zu", i);
        for (const char* f : {"csv", "svg"}) {
            if (!formats.count(f)) continue;
            Text t;
            check(fp_front_export(front.get(), f, &t.p));
            write_file(dir / (name + "_front_" + idx + "." + f), t.p);
        }
    }
    if (formats.count("json")) {
        Text report;
        check(fp_propagate_report(curve.get(), t_grid.data(), t_grid.size(), &report.p));
        write_file(dir / (name + "_propagate.json"), report.p);
    }
    return kPass;
}

int cmd_verify(const RunConfig& cfg) {
    const std::vector<double> t_grid = cfg.t_spec.empty() ? std::vector<double>{} : parse_grid(cfg.t_spec);
    const fp_options opt = options(cfg, t_grid);
    const auto dir = prepare_out(cfg);
    Text report;
    int pass = 0;
    std::string file;
    if (cfg.population > 0) {
        fp_geometry g = FP_EUCLIDEAN;
        if (cfg.geometry == "spherical") g = FP_SPHERICAL;
        else if (cfg.geometry == "hyperbolic") g = FP_HYPERBOLIC;
        else if (cfg.geometry != "euclidean") throw UsageError("unknown geometry '" + cfg.geometry + "'");
        check(fp_verify_population(g, cfg.population, cfg.seed, cfg.samples ? cfg.samples : 1024, &opt, &report.p,
                                   &pass));
        file = "population_" + cfg.geometry + "_verify.json";
    } else {
        const auto curve = load(cfg);
        check(fp_verify(curve.get(), &opt, &report.p, &pass));
        file = stem(cfg) + "_verify.json";
    }
    write_file(dir / file, report.p);
    std::cout << (pass ? "all checks passed" : "a theorem check failed") << " (" << (dir / file).string() << ")\n";
    return pass ? kPass : kTheoremFailed;
}

int cmd_counterexample(const RunConfig& cfg) {
    const auto radii = parse_grid(cfg.r_spec.empty() ? "1.0:3.0:0.5" : cfg.r_spec);
    for (double r : radii)
        if (!(r > 0.0)) throw UsageError("--r values must be positive");
    const std::size_t n = cfg.samples ? cfg.samples : 4096;
    const auto dir = prepare_out(cfg);
    const auto formats = parse_formats(cfg.format, {"json", "svg"});
    Text report;
    int pass = 0;
    check(fp_counterexample(radii.data(), radii.size(), 0.0, 0.0, n, &report.p, &pass));
    if (formats.count("json")) write_file(dir / "counterexample.json", report.p);
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const std::set<std::string> per_curve = [&] {
            std::set<std::string> s;
            if (formats.count("svg")) s.insert("svg");
            if (formats.count("csv")) s.insert("csv");
            return s;
        }();
        if (per_curve.empty()) continue;
        std::ostringstream spec;
        spec.precision(17);
        spec << R"({"geometry":"hyperbolic","representation":"rounded_semicircle","r":)" << radii[i] << "}";
        fp_curve* raw = nullptr;
        check(fp_curve_from_json(spec.str().c_str(), n, &raw));
        const CurvePtr curve(raw, fp_curve_free);
        char name[32];
        std::snprintf(name, sizeof name, "semicircle_%03zu", i);
        export_curve(curve.get(), dir / name, per_curve);
    }
    std::cout << (pass ? "counterexample reproduced" : "counterexample not reproduced") << '\n';
    return pass ? kPass : kTheoremFailed;
}

int cmd_export(const RunConfig& cfg) {
    const auto curve = load(cfg);
    const auto dir = prepare_out(cfg);
    export_curve(curve.get(), dir / stem(cfg), parse_formats(cfg.format, {"csv", "json", "svg"}));
    return kPass;
}

void validate(const RunConfig& cfg) {
    if (cfg.samples != 0 && (cfg.samples < 64 || (cfg.samples & (cfg.samples - 1)) != 0))
        throw UsageError("--samples must be a power of two >= 64");
    if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed curves of constant-curvature surfaces: curvature, wavefronts and four-point checks"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input,-i", cfg.input, "curve-spec JSON file")->envname("FOURPT_INPUT");
        if (needs_input) in->required();
        sub->add_option("--out,-o", cfg.out, "output directory")->envname("FOURPT_OUT");
        sub->add_option("--samples,-n", cfg.samples, "samples per curve (power of two >= 64)")
            ->envname("FOURPT_SAMPLES");
        sub->add_option("--tol", cfg.tol, "pass threshold for residuals and deviations")->envname("FOURPT_TOL");
        sub->add_option("--t", cfg.t_spec, "time value, list a,b,c or grid start:stop:step")->envname("FOURPT_T");
        sub->add_option("--seed", cfg.seed, "seed for random populations")->envname("FOURPT_SEED");
        sub->add_option("--r", cfg.r_spec, "semicircle radius, list or grid")->envname("FOURPT_R");
        sub->add_option("--format", cfg.format, "comma-separated subset of csv,svg,json")->envname("FOURPT_FORMAT");
    };

    auto* analyze = app.add_subcommand("analyze", "curvature profile and attainment points");
    common(analyze, true);
    auto* propagate = app.add_subcommand("propagate", "wavefront snapshots over --t");
    common(propagate, true);
    auto* verify = app.add_subcommand("verify", "theorem suite for a curve or a random population");
    common(verify, false);
    verify->add_option("--population", cfg.population, "size of a seeded random population")
        ->envname("FOURPT_POPULATION");
    verify->add_option("--geometry", cfg.geometry, "population geometry")->envname("FOURPT_GEOMETRY");
    verify->add_flag("--force", cfg.force, "run the hyperbolic collapse on non-convex curves")
        ->envname("FOURPT_FORCE");
    auto* counter = app.add_subcommand("counterexample", "rounded-semicircle construction over --r");
    common(counter, false);
    auto* exporter = app.add_subcommand("export", "re-emit a curve as csv, svg or json");
    common(exporter, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        validate(cfg);
        if (*analyze) return cmd_analyze(cfg);
        if (*propagate) return cmd_propagate(cfg);
        if (*verify) {
            if (cfg.population == 0 && cfg.input.empty()) throw UsageError("verify needs --input or --population");
            return cmd_verify(cfg);
        }
        if (*counter) return cmd_counterexample(cfg);
        if (*exporter) return cmd_export(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
