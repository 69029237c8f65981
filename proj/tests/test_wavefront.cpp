#include <doctest.h>

#include "fourpt/wavefront_euclidean.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>

using namespace fourpt;
using oracle::pi;

namespace {

template <class F>
void check_code(ErrorCode code, F&& f) {
    try {
        f();
        FAIL("no error raised");
    } catch (const Error& e) {
        CHECK(e.code() == code);
    }
}

SampledCurve circle(double r, std::size_t n = 256) { return build_oval(SupportOval::fourier({{0, r, 0}}, n)); }

std::vector<Vec3> square(double side) {
    const double a = side / 2;
    return {{-a, -a, 0}, {a, -a, 0}, {a, a, 0}, {-a, a, 0}};
}

const SampledCurve& ellipse() {
    static const SampledCurve c = build_oval(SupportOval::ellipse(2, 1, 4096));
    return c;
}

} // namespace

TEST_CASE("unit circle fronts") {
    const auto c = circle(1);
    auto f = propagate(c, 1.0);
    CHECK(f.signed_length == doctest::Approx(4 * pi).epsilon(1e-13));
    CHECK(f.area == doctest::Approx(4 * pi).epsilon(1e-13));
    CHECK(f.cusps.empty());
    CHECK(front_curvature(f, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(norm(f.points[10]) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(f.winding == doctest::Approx(1.0));

    f = propagate(c, -1.0);
    CHECK(std::abs(f.signed_length) < 1e-13);
    CHECK(norm(f.points[3]) < 1e-13);
}

TEST_CASE("front curvature at a cusp is refused") {
    const auto c = circle(0.5);
    const auto f = propagate(c, -0.5);
    check_code(ErrorCode::AtCusp, [&] { front_curvature(f, 0); });
}

TEST_CASE("ellipse fronts") {
    const auto& c = ellipse();
    const double t = -0.8;
    const auto f = propagate(c, t);
    // Cusps where R(alpha) = -t, from 4 / h^3 = 0.8.
    const double h = std::cbrt(4 / 0.8);
    const double a0 = std::acos(std::sqrt((h * h - 1) / 3));
    std::vector<double> expected = {a0, pi - a0, pi + a0, 2 * pi - a0};
    auto got = f.cusps;
    std::sort(got.begin(), got.end());
    REQUIRE(got.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-9));
    for (std::size_t i = 0; i < f.size(); i += 101) {
        if (f.factor[i] * f.factor[i] < 1e-6) continue;
        const double R = oracle::ellipse_radius(2, 1, c.param[i]);
        CHECK(front_curvature(f, i) == doctest::Approx(1 / (R + t)).epsilon(1e-10));
    }
    int flips = 0;
    for (std::size_t i = 0; i < f.size(); ++i) flips += f.regularity[i] != f.regularity[(i + 1) % f.size()];
    CHECK(flips == 4);
    CHECK(f.winding == doctest::Approx(1.0));
}

TEST_CASE("Steiner formulas on the ellipse") {
    const auto& c = ellipse();
    const auto rep = steiner_check(c, linspace(-0.6, 1.0, 17));
    REQUIRE(rep.rows.size() == 17);
    CHECK(rep.max_rel_deviation < 1e-10);
    CHECK(rep.max_area_rate_deviation < 1e-2);
    CHECK(rep.rows[6].length_formula == doctest::Approx(c.L).epsilon(1e-12));
    const auto crit = propagate(c, -c.L / (2 * pi));
    CHECK(std::abs(crit.signed_length) < 1e-10);
}

TEST_CASE("isoperimetric defect") {
    CHECK(isoperimetric_defect(Geometry::euclidean, 8, 4) == doctest::Approx(64 - 16 * pi));
    CHECK(isoperimetric_defect(Geometry::spherical, 2, 1) == doctest::Approx(4 - (4 * pi - 1)));
    CHECK(isoperimetric_defect(Geometry::hyperbolic, 2, 1) == doctest::Approx(4 - (4 * pi + 1)));
    const auto& c = ellipse();
    CHECK(std::abs(isoperimetric_defect(circle(1), 0.3)) < 1e-12);
    const double d0 = isoperimetric_defect(c, 0.0);
    for (double t : {-0.7, 0.4, 1.5})
        CHECK(isoperimetric_defect(c, t) == doctest::Approx(d0).epsilon(1e-10));
    const auto rep = defect_invariance(c, linspace(-0.5, 0.5, 11));
    CHECK(rep.max_rel_deviation < 1e-10);
}

TEST_CASE("critical front") {
    const auto cf = critical_front(ellipse());
    CHECK(cf.cusp_count == 4);
    CHECK(cf.attainment.count() == 4);
    CHECK(cf.max_param_mismatch < 1e-8);
    CHECK(std::abs(cf.front.signed_length) < 1e-10);
    check_code(ErrorCode::DegenerateProfile, [] { critical_front(circle(1)); });
}

TEST_CASE("front curvature at attainment points equals the front average") {
    const auto rep = propagation_lemma_check(ellipse(), std::vector<double>{-0.4, -0.2, 0.2, 0.4, 1.0});
    CHECK(rep.attainment_params.size() == 4);
    CHECK(rep.max_deviation < 1e-8);
}

TEST_CASE("enclosure inequality") {
    auto rep = enclosure_inequality_check(circle(1), square(2.2));
    CHECK(rep.margin == doctest::Approx(8.8 - 2 * pi).epsilon(1e-12));
    CHECK(rep.pass);

    std::vector<Vec3> ring;
    for (int j = 0; j < 4096; ++j) {
        const double a = 2 * pi * j / 4096;
        ring.push_back({1.01 * std::cos(a), 1.01 * std::sin(a), 0});
    }
    rep = enclosure_inequality_check(circle(1), ring);
    CHECK(rep.pass);
    CHECK(rep.margin == doctest::Approx(0.02 * pi).epsilon(1e-3));

    const auto& c = ellipse();
    const auto f = propagate(c, 0.1);
    rep = enclosure_inequality_check(c, f.points);
    CHECK(rep.pass);
    CHECK(rep.margin == doctest::Approx(0.2 * pi).epsilon(1e-5));

    check_code(ErrorCode::NotContained, [] { enclosure_inequality_check(circle(1), square(1.9)); });
    CHECK(winding_number(square(2), Vec3{0, 0, 0}) == 1);
    CHECK(winding_number(square(2), Vec3{3, 0, 0}) == 0);
}

TEST_CASE("front family consistency") {
    const auto& c = ellipse();
    CHECK(length_rate_residual(c, 0.3) < 1e-5);
    CHECK(semigroup_deviation(c, 0.2, 0.3) < 1e-8);
    CHECK(semigroup_deviation(c, 0.2, -0.9) < 1e-8);
    const auto f = propagate(c, 0.25);
    const auto fc = front_as_curve(f);
    CHECK(fc.L == doctest::Approx(c.L + 2 * pi * 0.25).epsilon(1e-10));
    const auto meas = measured_front_curvature_samples(f);
    for (std::size_t i = 0; i < f.size(); i += 211) CHECK(meas[i] == doctest::Approx(front_curvature(f, i)).epsilon(1e-7));
}
