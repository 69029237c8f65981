#include <doctest.h>

#include "fourpt/curve_model.hpp"
#include "fourpt/sturm_hurwitz.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace fourpt;
using oracle::pi;

namespace {

std::vector<double> sample(std::size_t n, const std::function<double(double)>& f) {
    std::vector<double> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = f(2 * pi * j / n);
    return v;
}

template <class F>
void check_code(ErrorCode code, F&& f) {
    try {
        f();
        FAIL("no error raised");
    } catch (const Error& e) {
        CHECK(e.code() == code);
    }
}

} // namespace

TEST_CASE("spectrum of single harmonics") {
    auto sp = spectrum(sample(64, [](double a) { return std::cos(2 * a); }));
    CHECK(sp.n_max == 16);
    CHECK(sp.harmonics[2].cos_amp == doctest::Approx(1.0).epsilon(1e-14));
    for (int n = 0; n <= sp.n_max; ++n)
        if (n != 2) CHECK(sp.harmonics[n].magnitude() < 1e-14);

    sp = spectrum(sample(64, [](double) { return 1.0; }));
    CHECK(sp.harmonics[0].cos_amp == doctest::Approx(1.0));
    CHECK(sp.max_amplitude() < 1e-14);

    const auto v = sample(128, [](double a) { return 0.3 * std::sin(3 * a) + 0.1 * std::cos(5 * a); });
    sp = spectrum(v, 10);
    CHECK(sp.harmonics.size() == 11);
    CHECK(sp.harmonics[3].sin_amp == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(sp.harmonics[5].cos_amp == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(parseval_residual(sp, v) < 1e-12);
    CHECK(first_nontrivial_harmonic(sp, default_amp_tol(sp)) == 3);
}

TEST_CASE("spectrum validates its grid") {
    const auto v = sample(64, [](double a) { return std::cos(a); });
    check_code(ErrorCode::InvalidSpec, [&] { spectrum(v, 17); });
    auto u = uniform_grid(64);
    CHECK(spectrum(u, v).harmonics[1].cos_amp == doctest::Approx(1.0));
    u[5] += 1e-3;
    check_code(ErrorCode::NonUniformGrid, [&] { spectrum(u, v); });
}

TEST_CASE("first nontrivial harmonic") {
    auto sp = spectrum(sample(64, [](double a) { return std::cos(7 * a); }));
    CHECK(first_nontrivial_harmonic(sp, 1e-9) == 7);
    sp = spectrum(sample(64, [](double) { return 0.0; }));
    CHECK_FALSE(first_nontrivial_harmonic(sp, 1e-9).has_value());
}

TEST_CASE("sign change counts") {
    CHECK(count_sign_changes(sample(256, [](double a) { return std::sin(2 * a); }), 1e-9) == 4);
    auto f = [](double a) { return std::sin(a) + 0.1 * std::sin(3 * a); };
    CHECK(count_sign_changes(sample(256, f), 1e-9) == int(oracle::periodic_roots(f).size()));
    CHECK(count_sign_changes(sample(256, f), 1e-9) == 2);
    CHECK(count_sign_changes(sample(64, [](double) { return 1.0; }), 1e-9) == 0);
    check_code(ErrorCode::AllBelowTolerance, [] { count_sign_changes(sample(64, [](double) { return 0.0; }), 1e-9); });
    // A dip that only touches zero is not a sign change.
    CHECK(count_sign_changes(sample(256, [](double a) { return 1 + std::cos(a); }), 1e-9) == 0);
}

TEST_CASE("radius profile of the ellipse") {
    const auto c = build_oval(SupportOval::ellipse(2, 1, 1024));
    const auto R = radius_by_normal_angle(c, 256);
    REQUIRE(R.size() == 256);
    for (std::size_t j = 0; j < R.size(); j += 17)
        CHECK(R[j] == doctest::Approx(oracle::ellipse_radius(2, 1, 2 * pi * j / 256)).epsilon(1e-9));

    const auto rep = verify_sturm_hurwitz(R);
    CHECK(rep.first_harmonic == 2);
    CHECK(rep.sign_changes == 4);
    CHECK(rep.pass);
    CHECK(rep.removed_mean == doctest::Approx(c.L / (2 * pi)).epsilon(1e-10));

    const auto sp = spectrum(R);
    CHECK(std::abs(sp.harmonics[1].magnitude()) < 1e-10 * sp.max_amplitude());
}

TEST_CASE("lowest harmonic bounds the zeros from below") {
    auto rep = verify_sturm_hurwitz(sample(256, [](double a) { return 5 + std::cos(3 * a) + 0.2 * std::cos(4 * a); }));
    CHECK(rep.first_harmonic == 3);
    CHECK(rep.sign_changes >= 6);
    CHECK(rep.pass);

    rep = verify_sturm_hurwitz(sample(256, [](double a) { return std::cos(a); }));
    CHECK(rep.first_harmonic == 1);
    CHECK(rep.sign_changes == 2);

    rep = verify_sturm_hurwitz(sample(64, [](double) { return 2.0; }));
    CHECK(rep.degenerate);
}

TEST_CASE("random trigonometric polynomials") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> pick_m(1, 6);
    std::uniform_real_distribution<double> amp(-1, 1);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = pick_m(rng);
        std::vector<std::array<double, 3>> terms;
        for (int n = m; n <= m + 8; ++n) terms.push_back({double(n), amp(rng), amp(rng)});
        auto f = [&](double a) {
            double v = 0;
            for (const auto& t : terms) v += t[1] * std::cos(t[0] * a) + t[2] * std::sin(t[0] * a);
            return v;
        };
        const auto rep = verify_sturm_hurwitz(sample(512, f));
        REQUIRE(rep.first_harmonic == m);
        CHECK(rep.sign_changes >= 2 * m);
        CHECK(rep.sign_changes == int(oracle::periodic_roots(f, 20000).size()));
    }
}
