#include "fourpt/sturm_hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fourpt {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double SpectrumTerm::magnitude() const { return std::hypot(cos_amp, sin_amp); }

double Spectrum::max_amplitude() const {
    double m = 0.0;
    for (const auto& h : harmonics)
        if (h.n >= 1) m = std::max(m, h.magnitude());
    return m;
}

Spectrum spectrum(std::span<const double> values, int n_max) {
    const std::size_t n = values.size();
    if (n < 4 || n % 2 != 0) throw Error(ErrorCode::NonUniformGrid, "need an even number of periodic samples");
    const int limit = static_cast<int>(n / 4);
    if (n_max < 0) n_max = limit;
    if (n_max > limit) throw Error(ErrorCode::InvalidSpec, "sample count must be at least 4 * n_max");

    const TrigSeries series(values);
    Spectrum sp;
    sp.n_max = n_max;
    sp.source_mean = series.mean();
    sp.harmonics.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int k = 0; k <= n_max; ++k)
        sp.harmonics.push_back({k, series.cos_amp(static_cast<std::size_t>(k)), series.sin_amp(static_cast<std::size_t>(k))});
    return sp;
}

Spectrum spectrum(std::span<const double> params, std::span<const double> values, int n_max) {
    if (params.size() != values.size()) throw Error(ErrorCode::NonUniformGrid, "params and values differ in length");
    const double h = kTwoPi / static_cast<double>(params.size());
    for (std::size_t i = 1; i < params.size(); ++i)
        if (std::abs(params[i] - params[i - 1] - h) > 1e-9 * h)
            throw Error(ErrorCode::NonUniformGrid, "parameter spacing is not 2 pi / N");
    return spectrum(values, n_max);
}

double parseval_residual(const Spectrum& sp, std::span<const double> values) {
    double ms = 0.0;
    for (double v : values) ms += (v - sp.source_mean) * (v - sp.source_mean);
    ms /= static_cast<double>(values.size());
    double energy = 0.0;
    for (const auto& h : sp.harmonics)
        if (h.n >= 1) energy += 0.5 * (h.cos_amp * h.cos_amp + h.sin_amp * h.sin_amp);
    return ms == 0.0 ? energy : std::abs(energy - ms) / ms;
}

double default_amp_tol(const Spectrum& sp) { return 1e-9 * sp.max_amplitude(); }

std::optional<int> first_nontrivial_harmonic(const Spectrum& sp, double amp_tol) {
    for (const auto& h : sp.harmonics)
        if (h.n >= 1 && h.magnitude() > amp_tol) return h.n;
    return std::nullopt;
}

int count_sign_changes(std::span<const double> values, double tol) {
    const auto transitions = band_transitions(values, tol);
    bool any_out = false;
    for (double v : values) any_out = any_out || std::abs(v) > tol;
    if (!any_out) throw Error(ErrorCode::AllBelowTolerance, "function indistinguishable from zero");
    return static_cast<int>(std::count_if(transitions.begin(), transitions.end(),
                                          [](const BandTransition& t) { return t.sign_change; }));
}

SturmHurwitzReport verify_sturm_hurwitz(std::span<const double> values) {
    SturmHurwitzReport rep;
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    rep.removed_mean = mean;

    std::vector<double> centred(values.begin(), values.end());
    double peak = 0.0;
    for (double& v : centred) {
        v -= mean;
        peak = std::max(peak, std::abs(v));
    }
    const auto sp = spectrum(centred);
    rep.first_harmonic = first_nontrivial_harmonic(sp, default_amp_tol(sp));
    // Roundoff around a large mean is not a function to count zeros of.
    if (!rep.first_harmonic || peak <= 1e-12 * std::abs(mean)) {
        rep.degenerate = true;
        return rep;
    }
    try {
        rep.sign_changes = count_sign_changes(centred, 1e-9 * peak);
    } catch (const Error&) {
        rep.degenerate = true;
        return rep;
    }
    rep.pass = rep.sign_changes >= 2 * *rep.first_harmonic;
    return rep;
}

std::vector<double> radius_by_normal_angle(const SampledCurve& oval, std::size_t m) {
    const std::size_t n = oval.size();
    // Unwrapped normal angle minus parameter is periodic for winding number 1.
    std::vector<double> excess(n);
    double prev = 0.0, turn = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 nu = oval.outward_normal(i);
        double a = std::atan2(nu.y, nu.x);
        if (i > 0) {
            while (a + turn - prev > std::numbers::pi) turn -= kTwoPi;
            while (a + turn - prev < -std::numbers::pi) turn += kTwoPi;
        }
        prev = a + turn;
        excess[i] = prev - oval.param[i];
    }
    const TrigSeries phase(excess);
    const double a0 = excess[0];
    auto angle = [&](double u) { return u + phase(u); };

    std::vector<double> out(m);
    std::size_t seg = 0;
    for (std::size_t j = 0; j < m; ++j) {
        const double target = a0 + kTwoPi * static_cast<double>(j) / static_cast<double>(m);
        while (seg + 1 < n && oval.param[seg + 1] + excess[seg + 1] <= target) ++seg;
        const double lo = oval.param[seg];
        const double hi = seg + 1 < n ? oval.param[seg + 1] : kTwoPi;
        double u = lo;
        const double alo = oval.param[seg] + excess[seg];
        const double ahi = seg + 1 < n ? oval.param[seg + 1] + excess[seg + 1] : kTwoPi + a0;
        if (ahi > alo) u = lo + (hi - lo) * (target - alo) / (ahi - alo);
        for (int it = 0; it < 8; ++it) {
            const double f = angle(u) - target;
            const double df = 1.0 + phase(u, 1);
            u -= f / df;
            if (std::abs(f) < 1e-15) break;
        }
        out[j] = 1.0 / oval.curvature_at(std::fmod(u + kTwoPi, kTwoPi));
    }
    return out;
}

} // namespace fourpt
