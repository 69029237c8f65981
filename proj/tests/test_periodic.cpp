#include <doctest.h>

#include "fourpt/periodic.hpp"

#include <cmath>
#include <numbers>

using namespace fourpt;

namespace {
constexpr double pi = std::numbers::pi;

std::vector<double> sample(std::size_t n, double (*f)(double)) {
    std::vector<double> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = f(2 * pi * j / n);
    return v;
}

double f0(double u) { return 0.3 + std::cos(3 * u) + 0.5 * std::sin(2 * u); }
double f1(double u) { return -3 * std::sin(3 * u) + std::cos(2 * u); }
double f2(double u) { return -9 * std::cos(3 * u) - 2 * std::sin(2 * u); }
} // namespace

TEST_CASE("trig series recovers amplitudes and derivatives") {
    const auto v = sample(32, f0);
    TrigSeries ts(v);
    CHECK(ts.mean() == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(ts.cos_amp(3) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ts.sin_amp(2) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(ts.cos_amp(5)) < 1e-14);
    CHECK(ts.nyquist() == 16);

    const auto d1 = ts.derivative(1), d2 = ts.derivative(2);
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double u = 2 * pi * j / v.size();
        CHECK(std::abs(d1[j] - f1(u)) < 1e-12);
        CHECK(std::abs(d2[j] - f2(u)) < 1e-11);
    }
    for (double u : {0.1, 1.7, 4.4}) {
        CHECK(std::abs(ts(u) - f0(u)) < 1e-13);
        CHECK(std::abs(ts(u, 1) - f1(u)) < 1e-12);
        CHECK(std::abs(ts(u, 2) - f2(u)) < 1e-11);
    }
}

TEST_CASE("antiderivative includes the secular term") {
    const auto v = sample(64, [](double u) { return 1 + std::cos(u); });
    const auto F = TrigSeries(v).antiderivative();
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double u = 2 * pi * j / v.size();
        CHECK(std::abs(F[j] - (u + std::sin(u))) < 1e-12);
    }
}

TEST_CASE("spectral derivative of a smooth non-polynomial function") {
    auto g = [](double u) { return std::exp(std::sin(u)); };
    std::vector<double> v(128);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = g(2 * pi * j / v.size());
    const auto d = spectral_derivative(v, 1);
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double u = 2 * pi * j / v.size();
        CHECK(std::abs(d[j] - std::cos(u) * g(u)) < 1e-12);
    }
}

TEST_CASE("grid helpers") {
    const auto u = uniform_grid(8);
    REQUIRE(u.size() == 8);
    CHECK(u[0] == 0.0);
    CHECK(u[4] == doctest::Approx(pi));
    CHECK(is_power_of_two(1024));
    CHECK_FALSE(is_power_of_two(1000));
    CHECK_FALSE(is_power_of_two(0));
}
