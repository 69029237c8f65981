#include "fourpt/geometry_sphere.hpp"

#include "vector_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fourpt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

double arc_distance(const Vec3& a, const Vec3& b) {
    return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

void require_on_sphere(std::span<const Vec3> points, double tol) {
    for (const auto& p : points)
        if (std::abs(norm(p) - 1.0) > tol) throw Error(ErrorCode::BadParametrization, "sample off the unit sphere");
}

} // namespace

SphereCurve::SphereCurve(SampledCurve curve) : curve_(std::move(curve)) {
    if (curve_.geometry != Geometry::spherical) throw Error(ErrorCode::InvalidSpec, "not a spherical curve");
    require_on_sphere(curve_.points, 1e-10);
    // Two independent area values: the 1-form integral and Gauss-Bonnet.
    const bool convex = std::all_of(curve_.k.begin(), curve_.k.end(), [](double k) { return k > 0.0; });
    if (convex && gauss_bonnet_residual() > 1e-5)
        throw Error(ErrorCode::BadParametrization, "enclosed area disagrees with the Gauss-Bonnet area");
}

double SphereCurve::gauss_bonnet_residual() const {
    return std::abs(integrate_ds(curve_, curve_.k) - (kTwoPi - curve_.A));
}

std::vector<double> geodesic_curvature(std::span<const Vec3> points, std::span<const Vec3> d1,
                                       std::span<const Vec3> d2) {
    require_on_sphere(points, 1e-8);
    std::vector<double> k(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (norm(d1[i]) < 1e-12) throw Error(ErrorCode::BadParametrization, "vanishing speed");
        k[i] = frame_curvature(Geometry::spherical, points[i], d1[i], d2[i]);
    }
    return k;
}

std::vector<double> geodesic_curvature(std::span<const Vec3> points) {
    const detail::VectorSeries series(points);
    return geodesic_curvature(points, series.derivative(1), series.derivative(2));
}

SphereCurve perturbed_sphere_circle(double rho0, std::span<const Harmonic> perturbations, std::size_t n_samples) {
    if (n_samples < 16 || !is_power_of_two(n_samples))
        throw Error(ErrorCode::DegenerateSampling, "n_samples must be a power of two >= 16");
    std::vector<Vec3> pts(n_samples);
    const auto phi = uniform_grid(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        double rho = rho0;
        for (const auto& h : perturbations) rho += h.cos_amp * std::cos(h.n * phi[i]) + h.sin_amp * std::sin(h.n * phi[i]);
        if (!(rho > 0.0 && rho < kPi)) throw Error(ErrorCode::InvalidSpec, "polar radius leaves (0, pi)");
        pts[i] = {std::sin(rho) * std::cos(phi[i]), std::sin(rho) * std::sin(phi[i]), std::cos(rho)};
    }
    return SphereCurve(assemble_curve({Geometry::spherical, std::move(pts), {}, {}, {}, true}));
}

SphereCurve tennis_ball_curve(double a, std::size_t n_samples) {
    if (!(a > 0.5 && a < 1.0)) throw Error(ErrorCode::InvalidSpec, "tennis-ball parameter a must lie in (1/2, 1)");
    if (n_samples < 16 || !is_power_of_two(n_samples))
        throw Error(ErrorCode::DegenerateSampling, "n_samples must be a power of two >= 16");
    const double b = 1.0 - a;
    const double c = 2.0 * std::sqrt(a * b);
    std::vector<Vec3> pts(n_samples);
    const auto u = uniform_grid(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i)
        pts[i] = normalized(Vec3{a * std::cos(u[i]) + b * std::cos(3 * u[i]), a * std::sin(u[i]) - b * std::sin(3 * u[i]),
                                 c * std::sin(2 * u[i])});
    return SphereCurve(assemble_curve({Geometry::spherical, std::move(pts), {}, {}, {}, true}));
}

SphereCurve sphere_from_samples(std::span<const Vec3> points, std::size_t n_samples, bool allow_nonconvex) {
    return SphereCurve(curve_from_samples(Geometry::spherical, points, n_samples, allow_nonconvex));
}

SphereFrontForms sphere_front_forms(double L, double A, double t) {
    return {L * std::cos(t) + (kTwoPi - A) * std::sin(t), kTwoPi + L * std::sin(t) - (kTwoPi - A) * std::cos(t)};
}

Front propagate_sphere(const SphereCurve& curve, double t) {
    const auto k = curve.k_g();
    if (*std::min_element(k.begin(), k.end()) <= 0.0)
        throw Error(ErrorCode::NonConvex, "spherical propagation needs k_g > 0");
    return propagate(curve.curve(), t);
}

SignCount count_profile_sign_changes(std::span<const double> params, std::span<const double> values, double scale) {
    SignCount out;
    const double tol = 1e-7 * std::max(1.0, scale);
    const auto transitions = band_transitions(values, tol);
    bool any_out = false;
    for (double v : values) any_out = any_out || std::abs(v) > tol;
    if (!any_out) {
        out.degenerate = true;
        return out;
    }
    const std::size_t n = values.size();
    const double h = kTwoPi / static_cast<double>(n);
    for (const auto& tr : transitions) {
        if (!tr.sign_change) continue;
        double where = params[tr.from];
        std::size_t step = 0;
        for (std::size_t i = tr.from; i != tr.to; i = (i + 1) % n, ++step) {
            const std::size_t j = (i + 1) % n;
            if ((values[i] > 0.0) != (values[j] > 0.0)) {
                where = params[tr.from] + h * (static_cast<double>(step) + values[i] / (values[i] - values[j]));
                break;
            }
        }
        out.params.push_back(std::fmod(where, kTwoPi));
    }
    out.count = static_cast<int>(out.params.size());
    return out;
}

EquatorialResult equatorial_front(const SphereCurve& curve) {
    EquatorialResult out;
    out.t = std::atan2(kTwoPi - curve.A(), curve.L());
    out.front = propagate_sphere(curve, out.t);
    out.area_residual = std::abs(out.front.area - kTwoPi);
    const auto k = curve.k_g();
    double scale = 0.0;
    for (double v : k) scale = std::max(scale, std::abs(v));
    out.inflections = count_profile_sign_changes(curve.curve().param, measured_front_curvature_samples(out.front), scale);
    return out;
}

std::optional<Vec3> hemisphere_centre(const SphereCurve& curve) {
    const auto& pts = curve.curve().points;
    Vec3 mean;
    for (const auto& p : pts) mean += p;
    for (const Vec3& cand : {mean, curve.curve().centre}) {
        if (norm(cand) < 1e-12) continue;
        const Vec3 p = normalized(cand);
        if (std::all_of(pts.begin(), pts.end(), [&](const Vec3& x) { return dot(p, x) > 0.0; })) return p;
    }
    return std::nullopt;
}

double spherical_diameter(const SphereCurve& curve) {
    const auto& pts = curve.curve().points;
    const std::size_t n = pts.size();
    const std::size_t stride = std::max<std::size_t>(1, n / 256);
    std::size_t bi = 0, bj = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; i += stride)
        for (std::size_t j = i + stride; j < n; j += stride) {
            const double d = arc_distance(pts[i], pts[j]);
            if (d > best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    // Local refinement on the full grid.
    for (bool improved = true; improved;) {
        improved = false;
        const std::size_t ci = bi, cj = bj;
        for (std::size_t di = 0; di <= 2 * stride; ++di)
            for (std::size_t dj = 0; dj <= 2 * stride; ++dj) {
                const std::size_t i = (ci + n - stride + di) % n;
                const std::size_t j = (cj + n - stride + dj) % n;
                const double d = arc_distance(pts[i], pts[j]);
                if (d > best) {
                    best = d;
                    bi = i;
                    bj = j;
                    improved = true;
                }
            }
    }
    return best;
}

EmbeddingReport check_regular_embedded(const SphereCurve& curve, double t) {
    if (!hemisphere_centre(curve)) throw Error(ErrorCode::NotInHemisphere, "no open hemisphere contains the curve");
    EmbeddingReport rep;
    rep.t = t;
    const double cot_t = std::cos(t) / std::sin(t);
    const auto k = curve.k_g();
    rep.cusp_margin = cot_t + *std::min_element(k.begin(), k.end());
    rep.diameter = spherical_diameter(curve);
    rep.self_tangency_time = kPi - 0.5 * rep.diameter;
    rep.embed_margin = rep.self_tangency_time - t;
    rep.regular = rep.cusp_margin > 0.0;
    rep.embedded = rep.diameter < kPi && rep.self_tangency_time > kPi / 2 && rep.embed_margin > 0.0;
    return rep;
}

SignCount tennis_ball_check(const SphereCurve& curve) {
    if (std::abs(curve.A() - kTwoPi) > 1e-6) throw Error(ErrorCode::NotBisecting, "curve does not bisect the sphere");
    const auto k = curve.k_g();
    double scale = 0.0;
    for (double v : k) scale = std::max(scale, std::abs(v));
    return count_profile_sign_changes(curve.curve().param, k, scale);
}

TorsionReport total_torsion(const SphereCurve& curve) {
    const SampledCurve& c = curve.curve();
    const detail::VectorSeries series(c.points);
    const auto d1 = series.derivative(1), d2 = series.derivative(2), d3 = series.derivative(3);
    TorsionReport rep;
    rep.tau.resize(c.size());
    double scale = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Vec3 b = cross(d1[i], d2[i]);
        const double sp = norm(d1[i]);
        if (norm(b) < 1e-8 * sp * sp * sp) throw Error(ErrorCode::FrenetBreakdown, "space curvature vanishes");
        rep.tau[i] = det(d1[i], d2[i], d3[i]) / dot(b, b);
        scale = std::max(scale, std::abs(rep.tau[i]));
    }
    rep.total = integrate_ds(c, rep.tau);
    rep.zeros = count_profile_sign_changes(c.param, rep.tau, scale);
    return rep;
}

} // namespace fourpt
