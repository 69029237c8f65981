#include <doctest.h>

#include "fourpt/io.hpp"
#include "fourpt/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

using namespace fourpt;

namespace {

const std::string kSource = FOURPT_SOURCE_DIR;

template <class F>
void check_code(ErrorCode code, F&& f) {
    try {
        f();
        FAIL("no error raised");
    } catch (const Error& e) {
        CHECK(e.code() == code);
    }
}

std::string read(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Same keys, same order, same strings and flags; numbers agree to a
// relative 1e-9 or an absolute 1e-9 for residual-sized values.
void compare_json(const Report& got, const Report& want, const std::string& path) {
    INFO(path);
    if (got.is_number_integer() && want.is_number_integer()) {
        CHECK(got.get<long long>() == want.get<long long>());
        return;
    }
    REQUIRE(got.type() == want.type());
    if (got.is_object()) {
        REQUIRE(got.size() == want.size());
        auto a = got.begin();
        auto b = want.begin();
        for (; a != got.end(); ++a, ++b) {
            REQUIRE(a.key() == b.key());
            compare_json(a.value(), b.value(), path + "." + a.key());
        }
    } else if (got.is_array()) {
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) compare_json(got[i], want[i], path + "[" + std::to_string(i) + "]");
    } else if (got.is_number_float()) {
        const double x = got.get<double>(), y = want.get<double>();
        CHECK(std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(y)));
    } else {
        CHECK(got == want);
    }
}

} // namespace

TEST_CASE("curve specs parse into every representation") {
    auto s = parse_curve_spec(R"({"geometry": "euclidean", "representation": "ellipse", "a": 2, "b": 1, "n_samples": 256})");
    CHECK(s.geometry == Geometry::euclidean);
    CHECK(s.n_samples == 256);
    auto c = build_curve(s);
    CHECK(c.size() == 256);
    CHECK(build_curve(s, 512).size() == 512);

    s = parse_curve_spec(R"({"geometry": "spherical", "representation": "perturbed_circle", "rho": 0.8,
                             "perturbations": [[2, 0.05, 0.0]]})");
    CHECK(build_curve(s).geometry == Geometry::spherical);
    s = parse_curve_spec(R"({"geometry": "spherical", "representation": "tennis_ball", "a": 0.7})");
    CHECK(build_curve(s).A == doctest::Approx(2 * M_PI).epsilon(1e-10));
    s = parse_curve_spec(R"({"geometry": "hyperbolic", "representation": "hyperbolic_circle", "rho": 1.0})");
    CHECK(build_curve(s).L == doctest::Approx(2 * M_PI * std::sinh(1.0)).epsilon(1e-12));
    s = parse_curve_spec(R"({"geometry": "hyperbolic", "representation": "rounded_semicircle", "r": 2.0})");
    CHECK(s.semicircle.r == 2.0);

    std::string pts = "[";
    for (int j = 0; j < 32; ++j) {
        const double u = 2 * M_PI * j / 32;
        pts += (j ? "," : "") + std::string("[") + std::to_string(std::cos(u)) + "," + std::to_string(std::sin(u)) + "]";
    }
    pts += "]";
    s = parse_curve_spec(R"({"geometry": "euclidean", "representation": "samples", "n_samples": 64, "points": )" + pts + "}");
    CHECK(build_curve(s).L == doctest::Approx(2 * M_PI).epsilon(1e-5));
}

TEST_CASE("malformed and invalid specs") {
    check_code(ErrorCode::ParseError, [] { parse_curve_spec("{\"geometry\": "); });
    check_code(ErrorCode::ParseError, [] { load_curve_spec(kSource + "/tests/data/does_not_exist.json"); });
    check_code(ErrorCode::SchemaError, [] { parse_curve_spec(R"({"geometry": "elliptic", "representation": "ellipse"})"); });
    check_code(ErrorCode::SchemaError, [] { parse_curve_spec(R"({"geometry": "euclidean", "representation": "tennis_ball"})"); });
    check_code(ErrorCode::SchemaError,
               [] { parse_curve_spec(R"({"geometry": "euclidean", "representation": "ellipse", "a": 2, "b": 1, "n_samples": 100})"); });
    check_code(ErrorCode::SchemaError, [] { parse_curve_spec(R"([1, 2, 3])"); });
    check_code(ErrorCode::NonConvex, [] { build_curve(load_curve_spec(kSource + "/tests/data/nonconvex.json")); });
}

TEST_CASE("text artifacts") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0 / 3) == "0.333333333333");

    const auto c = build_curve(parse_curve_spec(R"({"geometry": "euclidean", "representation": "ellipse", "a": 2, "b": 1, "n_samples": 64})"));
    auto csv = curve_csv(c);
    CHECK(csv.rfind("s,x,y,k\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 65);
    CHECK(profile_csv(c).rfind("param,k,mean,deviation\n", 0) == 0);
    CHECK(spectrum_csv(c).rfind("n,cos_amp,sin_amp,magnitude\n", 0) == 0);
    CHECK(front_csv(propagate(c, -0.5)).rfind("s,x,y,regularity\n", 0) == 0);
    CHECK(curve_svg(c).find("<svg") != std::string::npos);
    CHECK(front_svg(propagate(c, -0.5)).find("<svg") != std::string::npos);
    CHECK(curve_csv(c) == csv);

    const auto j = nlohmann::json::parse(curve_json(c));
    CHECK(j.at("points").size() == 64);

    const auto sph = build_curve(parse_curve_spec(R"({"geometry": "spherical", "representation": "perturbed_circle", "rho": 0.7, "n_samples": 64})"));
    CHECK(curve_csv(sph).rfind("s,x,y,z,k_g,tau\n", 0) == 0);
    check_code(ErrorCode::InvalidSpec, [&] { spectrum_csv(sph); });
    const auto hyp = build_curve(parse_curve_spec(R"({"geometry": "hyperbolic", "representation": "hyperbolic_circle", "rho": 0.7, "n_samples": 64})"));
    CHECK(curve_csv(hyp).rfind("s,x0,x1,x2,k\n", 0) == 0);
    CHECK(front_csv(propagate(hyp, 0.1)).rfind("s,x0,x1,x2,regularity\n", 0) == 0);
}

TEST_CASE("verify report matches the golden file") {
    const auto c = build_curve(load_curve_spec(kSource + "/curves/ellipse_2_1.json"));
    const auto r = verify_report(c, VerifyOptions{});
    CHECK(r.at("schema_version") == kSchemaVersion);
    CHECK(r.at("pass").get<bool>());
    CHECK(r.at("checks").at("four_vertex").at("crossings") == 4);
    compare_json(r, Report::parse(read(kSource + "/tests/golden/verify_ellipse.json")), "$");
}

TEST_CASE("counterexample report matches the golden file") {
    const std::vector<double> r = {2.0};
    const auto rep = counterexample_report(r, RoundedSemicircleSpec{}, 4096);
    CHECK(rep.at("attainment_count") == 2);
    CHECK(rep.at("pass").get<bool>());
    compare_json(rep, Report::parse(read(kSource + "/tests/golden/counterexample_r2.json")), "$");
}

TEST_CASE("reports for every geometry pass") {
    for (const char* f : {"oval_fourier", "sphere_perturbed", "tennis_ball", "hyperbolic_oval"}) {
        INFO(f);
        const auto c = build_curve(load_curve_spec(kSource + "/curves/" + f + ".json"));
        CHECK(verify_report(c, VerifyOptions{}).at("pass").get<bool>());
        CHECK(analyze_report(c, VerifyOptions{}).contains("schema_version"));
    }
    const auto pop = population_report(Geometry::hyperbolic, 4, 3, 1024, VerifyOptions{});
    CHECK(pop.at("pass").get<bool>());
    CHECK(dump(pop) == dump(population_report(Geometry::hyperbolic, 4, 3, 1024, VerifyOptions{})));
}

TEST_CASE("non-horocyclically-convex curves skip the collapse check") {
    const auto s = build_curve(load_curve_spec(kSource + "/curves/rounded_semicircle.json"));
    const auto r = verify_report(s, VerifyOptions{});
    CHECK(r.at("checks").at("horocyclic_convexity").at("horocyclic_convex") == false);
}
