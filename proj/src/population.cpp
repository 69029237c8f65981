#include "fourpt/population.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace fourpt {

namespace {

std::vector<Harmonic> draw(std::mt19937_64& rng, int lo, int hi, double scale) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Harmonic> out;
    for (int n = lo; n <= hi; ++n) {
        const double s = scale / static_cast<double>(n * n - 1);
        out.push_back({n, s * u(rng), s * u(rng)});
    }
    return out;
}

double min_of(std::span<const double> v) { return *std::min_element(v.begin(), v.end()); }

} // namespace

std::vector<SupportOval> random_ovals(std::size_t count, std::uint64_t seed, std::size_t n_samples, int lo, int hi) {
    std::mt19937_64 rng(seed);
    std::vector<SupportOval> out;
    // R = 1 + sum (1 - n^2)(a cos + b sin); checked on a coarse grid first.
    auto radius_ok = [](const std::vector<Harmonic>& c, std::size_t m) {
        for (std::size_t j = 0; j < m; ++j) {
            const double a = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
            double r = 1.0;
            for (const auto& h : c)
                r += (1.0 - h.n * h.n) * (h.cos_amp * std::cos(h.n * a) + h.sin_amp * std::sin(h.n * a));
            if (!(r > 0.05)) return false;
        }
        return true;
    };
    while (out.size() < count) {
        auto coeffs = draw(rng, lo, hi, 0.3);
        if (!radius_ok(coeffs, 256) || !radius_ok(coeffs, 4096)) continue;
        coeffs.insert(coeffs.begin(), Harmonic{0, 1.0, 0.0});
        out.push_back(SupportOval::fourier(coeffs, n_samples));
    }
    return out;
}

std::vector<SphereCurve> random_sphere_curves(std::size_t count, std::uint64_t seed, std::size_t n_samples) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.5, 1.1);
    std::vector<SphereCurve> out;
    while (out.size() < count) {
        const double rho = radius(rng);
        const auto pert = draw(rng, 2, 5, 0.15 * rho);
        try {
            SphereCurve c = perturbed_sphere_circle(rho, pert, n_samples);
            if (min_of(c.k_g()) >= 0.05 && hemisphere_centre(c)) out.push_back(std::move(c));
        } catch (const Error&) {
        }
    }
    return out;
}

std::vector<HyperbolicCurve> random_horocyclic_curves(std::size_t count, std::uint64_t seed, std::size_t n_samples) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.4, 1.2);
    std::vector<HyperbolicCurve> out;
    while (out.size() < count) {
        const double rho = radius(rng);
        const auto pert = draw(rng, 2, 5, 0.15 * rho);
        try {
            HyperbolicCurve c = hyperbolic_circle(rho, pert, n_samples);
            if (min_of(c.k()) >= 1.05) out.push_back(std::move(c));
        } catch (const Error&) {
        }
    }
    return out;
}

} // namespace fourpt
