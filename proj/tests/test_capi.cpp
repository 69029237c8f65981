#include <doctest.h>

#include "fourpt/fourpt.h"

#include <cmath>
#include <cstring>
#include <string>
#include <thread>

namespace {

const std::string kSource = FOURPT_SOURCE_DIR;

struct Text {
    char* p = nullptr;
    ~Text() { fp_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

} // namespace

TEST_CASE("curve lifecycle through the C interface") {
    fp_curve* c = nullptr;
    REQUIRE(fp_curve_from_file((kSource + "/curves/ellipse_2_1.json").c_str(), 0, &c) == FP_OK);
    fp_curve_info info{};
    REQUIRE(fp_curve_info_get(c, &info) == FP_OK);
    CHECK(info.geometry == FP_EUCLIDEAN);
    CHECK(info.n_samples == 4096);
    CHECK(info.length == doctest::Approx(9.688448220547675).epsilon(1e-12));
    CHECK(info.area == doctest::Approx(2 * M_PI).epsilon(1e-12));
    CHECK(info.min_curvature == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(info.max_curvature == doctest::Approx(2.0).epsilon(1e-10));

    Text rep;
    int pass = 0;
    REQUIRE(fp_verify(c, nullptr, &rep.p, &pass) == FP_OK);
    CHECK(pass == 1);
    CHECK(rep.str().find("\"crossings\": 4") != std::string::npos);

    Text ana;
    REQUIRE(fp_analyze(c, nullptr, &ana.p) == FP_OK);
    CHECK(ana.str().find("\"schema_version\": 1") != std::string::npos);

    for (const char* f : {"csv", "json", "svg", "profile_csv", "spectrum_csv"}) {
        Text out;
        CHECK(fp_curve_export(c, f, &out.p) == FP_OK);
        CHECK(std::strlen(out.p) > 100);
    }
    Text none;
    CHECK(fp_curve_export(c, "pdf", &none.p) == FP_ERR_INVALID_ARGUMENT);
    CHECK(none.p == nullptr);

    fp_front* f = nullptr;
    REQUIRE(fp_propagate(c, -info.length / (2 * M_PI), &f) == FP_OK);
    fp_front_info fi{};
    REQUIRE(fp_front_info_get(f, &fi) == FP_OK);
    CHECK(fi.cusp_count == 4);
    CHECK(std::abs(fi.signed_length) < 1e-10);
    CHECK(fi.regular == 0);
    Text fcsv;
    CHECK(fp_front_export(f, "csv", &fcsv.p) == FP_OK);
    CHECK(fcsv.str().rfind("s,x,y,regularity", 0) == 0);
    fp_front_free(f);

    const double t[] = {-0.5, 0.0, 0.5};
    Text prop;
    CHECK(fp_propagate_report(c, t, 3, &prop.p) == FP_OK);
    fp_curve_free(c);
}

TEST_CASE("error reporting") {
    fp_curve* c = nullptr;
    CHECK(fp_curve_from_json("{\"geometry\": ", 0, &c) == FP_ERR_PARSE);
    CHECK(c == nullptr);
    CHECK(std::string(fp_last_error()).find("ParseError") != std::string::npos);
    CHECK(fp_curve_from_json(R"({"geometry": "flat", "representation": "ellipse"})", 0, &c) == FP_ERR_SCHEMA);
    CHECK(fp_curve_from_json(R"({"geometry": "euclidean", "representation": "support_fourier", "coeffs": [[0, 1, 0], [3, 0.2, 0]]})",
                             0, &c) == FP_ERR_NON_CONVEX);
    CHECK(fp_curve_from_file((kSource + "/tests/data/nope.json").c_str(), 0, &c) == FP_ERR_PARSE);
    CHECK(fp_curve_from_json(nullptr, 0, &c) == FP_ERR_INVALID_ARGUMENT);
    CHECK(fp_curve_info_get(nullptr, nullptr) == FP_ERR_INVALID_ARGUMENT);

    REQUIRE(fp_curve_from_json(R"({"geometry": "euclidean", "representation": "ellipse", "a": 1, "b": 1, "n_samples": 64})", 0, &c) ==
            FP_OK);
    CHECK(std::string(fp_last_error()).empty());
    fp_front* f = nullptr;
    REQUIRE(fp_propagate(c, -1.0, &f) == FP_OK);
    fp_front_info fi{};
    fp_front_info_get(f, &fi);
    CHECK(std::abs(fi.signed_length) < 1e-12);
    fp_front_free(f);
    Text rep;
    int pass = -1;
    CHECK(fp_verify(c, nullptr, &rep.p, &pass) == FP_OK);
    CHECK(pass == 1);
    CHECK(rep.str().find("\"degenerate\": true") != std::string::npos);
    fp_curve_free(c);

    CHECK(std::string(fp_status_name(FP_ERR_COTH_DOMAIN)) == "CothDomain");
    CHECK(std::string(fp_version()) == "1.0.0");
}

TEST_CASE("errors are per thread") {
    fp_curve* c = nullptr;
    CHECK(fp_curve_from_json("[", 0, &c) == FP_ERR_PARSE);
    std::string other;
    std::thread th([&] { other = fp_last_error(); });
    th.join();
    CHECK(other.empty());
    CHECK_FALSE(std::string(fp_last_error()).empty());
}

TEST_CASE("populations and the counterexample") {
    Text rep;
    int pass = 0;
    fp_options opt{};
    CHECK(fp_verify_population(FP_SPHERICAL, 3, 17, 1024, &opt, &rep.p, &pass) == FP_OK);
    CHECK(pass == 1);
    Text again;
    fp_verify_population(FP_SPHERICAL, 3, 17, 1024, &opt, &again.p, &pass);
    CHECK(rep.str() == again.str());
    CHECK(fp_verify_population(FP_EUCLIDEAN, 0, 1, 1024, &opt, &rep.p, &pass) == FP_ERR_INVALID_ARGUMENT);

    const double r[] = {2.0};
    Text ce;
    CHECK(fp_counterexample(r, 1, 0, 0, 0, &ce.p, &pass) == FP_OK);
    CHECK(pass == 1);
    CHECK(ce.str().find("\"attainment_count\": 2") != std::string::npos);
}
