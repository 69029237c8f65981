#include <doctest.h>

#include "fourpt/geometry_sphere.hpp"
#include "fourpt/population.hpp"
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

const SphereCurve& generic() {
    static const std::vector<Harmonic> p = {{2, 0.05, 0.02}, {3, 0.0, 0.03}};
    static const SphereCurve c = perturbed_sphere_circle(0.8, p, 2048);
    return c;
}

} // namespace

TEST_CASE("circles of latitude") {
    const auto great = perturbed_sphere_circle(pi / 2, {}, 128);
    for (double k : great.k_g()) CHECK(std::abs(k) < 1e-12);
    CHECK(great.A() == doctest::Approx(2 * pi).epsilon(1e-12));

    for (double rho : {pi / 4, pi / 3, 1.2}) {
        const auto c = perturbed_sphere_circle(rho, {}, 256);
        CHECK(c.L() == doctest::Approx(2 * pi * std::sin(rho)).epsilon(1e-13));
        CHECK(c.A() == doctest::Approx(2 * pi * (1 - std::cos(rho))).epsilon(1e-13));
        for (double k : c.k_g()) CHECK(k == doctest::Approx(1 / std::tan(rho)).epsilon(1e-12));
        CHECK(c.gauss_bonnet_residual() < 1e-12);
    }
}

TEST_CASE("geodesic curvature from explicit frames") {
    // Latitude circle at polar angle rho, parametrised by azimuth.
    const double rho = 0.9;
    std::vector<Vec3> x, d1, d2;
    for (int j = 0; j < 64; ++j) {
        const double u = 2 * pi * j / 64, s = std::sin(rho), c = std::cos(rho);
        x.push_back({s * std::cos(u), s * std::sin(u), c});
        d1.push_back({-s * std::sin(u), s * std::cos(u), 0});
        d2.push_back({-s * std::cos(u), -s * std::sin(u), 0});
    }
    const auto k = geodesic_curvature(x, d1, d2);
    for (double v : k) CHECK(v == doctest::Approx(std::cos(rho) / std::sin(rho)).epsilon(1e-14));
    const auto ks = geodesic_curvature(x);
    for (double v : ks) CHECK(v == doctest::Approx(std::cos(rho) / std::sin(rho)).epsilon(1e-12));

    x[3] = 1.01 * x[3];
    check_code(ErrorCode::BadParametrization, [&] { geodesic_curvature(x); });
}

TEST_CASE("closed forms for spherical fronts") {
    auto f = propagate_sphere(perturbed_sphere_circle(pi / 4, {}, 256), pi / 4);
    CHECK(f.signed_length == doctest::Approx(2 * pi).epsilon(1e-12));
    for (std::size_t i = 0; i < f.size(); i += 31) CHECK(std::abs(f.points[i].z) < 1e-12);
    for (std::size_t i = 0; i < f.size(); i += 31) CHECK(std::abs(front_curvature(f, i)) < 1e-12);
    const auto fc = sphere_front_forms(2 * pi * std::sin(pi / 4), 2 * pi * (1 - std::cos(pi / 4)), pi / 4);
    CHECK(fc.length == doctest::Approx(2 * pi).epsilon(1e-14));
    CHECK(fc.area == doctest::Approx(2 * pi).epsilon(1e-14));

    f = propagate_sphere(perturbed_sphere_circle(pi / 6, {}, 256), -pi / 6);
    CHECK(std::abs(f.signed_length) < 1e-12);
    CHECK(norm(f.points[5] - Vec3{0, 0, 1}) < 1e-12);

    const auto& c = generic();
    for (double t : {-0.3, 0.2, 0.5}) {
        const auto g = propagate_sphere(c, t);
        const auto forms = sphere_front_forms(c.L(), c.A(), t);
        CHECK(g.signed_length == doctest::Approx(forms.length).epsilon(1e-10));
        CHECK(g.area == doctest::Approx(forms.area).epsilon(1e-10));
    }
}

TEST_CASE("spherical front family consistency") {
    const auto& c = generic();
    CHECK(c.gauss_bonnet_residual() < 1e-10);
    const auto t = linspace(-0.3, 0.3, 11);
    CHECK(defect_invariance(c.curve(), t).max_rel_deviation < 1e-9);
    CHECK(length_rate_residual(c.curve(), 0.2) < 1e-5);
    CHECK(semigroup_deviation(c.curve(), 0.1, 0.15) < 1e-8);

    const auto p = curvature_profile(c.curve());
    const auto m = count_mean_crossings(p, default_crossing_tol(p));
    CHECK(m.count() >= 4);
    CHECK(propagation_lemma_check(c.curve(), t, m.crossings).max_deviation < 1e-8);
}

TEST_CASE("non-convex sphere curves do not propagate") {
    check_code(ErrorCode::NonConvex, [] { propagate_sphere(tennis_ball_curve(0.7, 256), 0.1); });
}

TEST_CASE("equatorial front") {
    const auto& c = generic();
    const auto eq = equatorial_front(c);
    CHECK(eq.t == doctest::Approx(std::atan((2 * pi - c.A()) / c.L())).epsilon(1e-14));
    CHECK(eq.area_residual < 1e-10);
    CHECK_FALSE(eq.inflections.degenerate);
    CHECK(eq.inflections.count >= 4);
    CHECK(eq.inflections.count % 2 == 0);

    const auto circ = equatorial_front(perturbed_sphere_circle(0.6, {}, 256));
    CHECK(circ.inflections.degenerate);
    CHECK(circ.t == doctest::Approx(pi / 2 - 0.6).epsilon(1e-12));
}

TEST_CASE("regular embedded fronts and the spherical diameter") {
    const auto circ = perturbed_sphere_circle(pi / 4, {}, 256);
    CHECK(spherical_diameter(circ) == doctest::Approx(pi / 2).epsilon(1e-10));
    const auto rep = check_regular_embedded(circ, pi / 4);
    CHECK(rep.regular);
    CHECK(rep.embedded);
    CHECK(rep.self_tangency_time == doctest::Approx(3 * pi / 4).epsilon(1e-10));

    const auto& c = generic();
    const auto eq = equatorial_front(c);
    const auto r2 = check_regular_embedded(c, eq.t);
    CHECK(r2.regular);
    CHECK(r2.embedded);
    CHECK(hemisphere_centre(c).has_value());

    check_code(ErrorCode::NotInHemisphere, [] { check_regular_embedded(tennis_ball_curve(0.7, 512), 0.1); });
}

TEST_CASE("tennis ball seam") {
    for (double a : {0.6, 0.7, 0.85}) {
        const auto c = tennis_ball_curve(a, 2048);
        CHECK(c.A() == doctest::Approx(2 * pi).epsilon(1e-12));
        const auto inf = tennis_ball_check(c);
        CHECK_FALSE(inf.degenerate);
        CHECK(inf.count == 4);
    }
    check_code(ErrorCode::NotBisecting, [] { tennis_ball_check(perturbed_sphere_circle(1.0, {}, 256)); });
    check_code(ErrorCode::InvalidSpec, [] { tennis_ball_curve(0.4, 256); });
}

TEST_CASE("torsion") {
    const auto tb = total_torsion(tennis_ball_curve(0.7, 2048));
    CHECK(std::abs(tb.total) < 1e-10);
    CHECK(tb.zeros.count >= 4);

    const auto g = total_torsion(generic());
    CHECK(std::abs(g.total) < 1e-10);
    CHECK(g.zeros.count >= 4);
    // On the unit sphere the Frenet torsion is dk_g/ds / (1 + k_g^2). The
    // library uses third derivatives, so roundoff grows like N^3 eps.
    const auto& c = generic().curve();
    const TrigSeries kg(c.k);
    const auto dk = kg.derivative(1);
    for (std::size_t i = 0; i < c.size(); i += 97) {
        const double expect = dk[i] / c.speed[i] / (1 + c.k[i] * c.k[i]);
        CHECK(g.tau[i] == doctest::Approx(expect).epsilon(1e-6).scale(0.1));
    }

    const auto lat = total_torsion(perturbed_sphere_circle(0.7, {}, 256));
    CHECK(lat.zeros.degenerate);
    CHECK(std::abs(lat.total) < 1e-12);

    // Space curvature on the unit sphere is at least 1, so a great circle is
    // a planar Frenet curve rather than a breakdown.
    const auto great = total_torsion(perturbed_sphere_circle(pi / 2, {}, 256));
    CHECK(great.zeros.degenerate);
}

TEST_CASE("random sphere population") {
    const auto pop = random_sphere_curves(8, 5, 1024);
    REQUIRE(pop.size() == 8);
    for (const auto& c : pop) {
        CHECK(*std::min_element(c.k_g().begin(), c.k_g().end()) >= 0.05);
        CHECK(hemisphere_centre(c).has_value());
        CHECK(c.gauss_bonnet_residual() < 1e-9);
    }
}

TEST_CASE("sphere samples") {
    std::vector<Vec3> pts;
    for (int j = 0; j < 64; ++j) {
        const double u = 2 * pi * j / 64, r = 0.7;
        pts.push_back({std::sin(r) * std::cos(u), std::sin(r) * std::sin(u), std::cos(r)});
    }
    const auto c = sphere_from_samples(pts, 512);
    CHECK(c.L() == doctest::Approx(2 * pi * std::sin(0.7)).epsilon(1e-12));
    CHECK(c.k_g()[0] == doctest::Approx(1 / std::tan(0.7)).epsilon(1e-10));
}
