#include "fourpt/front.hpp"

#include "vector_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fourpt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kCuspGuard = 1e-6;

double wrap(double u) {
    u = std::fmod(u, kTwoPi);
    return u < 0.0 ? u + kTwoPi : u;
}

double oriented_curvature(Geometry g, const Vec3& y, const Vec3& d1, const Vec3& d2, const Vec3& base_tangent) {
    const double num = g == Geometry::euclidean ? cross2(d1, d2) : det(y, d1, d2);
    const double along = metric_dot(g, d1, base_tangent) / metric_norm(g, base_tangent);
    return num / (metric_dot(g, d1, d1) * along);
}

} // namespace

PropagationCoeffs propagation_coeffs(Geometry g, double t) {
    switch (g) {
    case Geometry::euclidean: return {1.0, t, 0.0};
    case Geometry::spherical: return {std::cos(t), std::sin(t), -std::sin(t)};
    case Geometry::hyperbolic: return {std::cosh(t), std::sinh(t), std::sinh(t)};
    }
    return {};
}

Front propagate(const SampledCurve& base, double t) {
    return propagate(std::make_shared<const SampledCurve>(base), t);
}

Front propagate(std::shared_ptr<const SampledCurve> base, double t) {
    const SampledCurve& c = *base;
    const std::size_t n = c.size();
    const auto pc = propagation_coeffs(c.geometry, t);

    Front f;
    f.t = t;
    f.points.resize(n);
    f.factor.resize(n);
    f.regularity.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        f.points[i] = pc.C * c.points[i] + pc.S * c.outward_normal(i);
        f.factor[i] = pc.C + c.k[i] * pc.S;
        f.regularity[i] = (f.factor[i] > 0.0) - (f.factor[i] < 0.0);
    }
    if (c.smooth) {
        f.velocity = detail::spectral_vectors(f.points, 1);
    } else {
        f.velocity.resize(n);
        for (std::size_t i = 0; i < n; ++i) f.velocity[i] = f.factor[i] * c.velocity[i];
    }

    const auto regular_fn = [&](double u) { return pc.C + c.curvature_at(wrap(u)) * pc.S; };
    for (const auto& tr : band_transitions(f.factor, 0.0)) {
        if (!tr.sign_change) continue;
        double a = c.param[tr.from], b = c.param[tr.to];
        if (b <= a) b += kTwoPi;
        f.cusps.push_back(wrap(bisect_root(regular_fn, a, b, 1e-12)));
    }
    std::sort(f.cusps.begin(), f.cusps.end());

    f.signed_length = integrate_ds(c, f.factor);
    f.area = enclosed_area(c.geometry, f.points, f.velocity, c.centre);

    if (c.geometry == Geometry::euclidean) {
        std::vector<double> angles;
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(f.factor[i]) < 1e-9) continue;
            const Vec3 d = f.factor[i] > 0.0 ? f.velocity[i] : -f.velocity[i];
            angles.push_back(std::atan2(d.y, d.x));
        }
        double turn = 0.0;
        for (std::size_t j = 0; j < angles.size(); ++j) {
            double step = angles[(j + 1) % angles.size()] - angles[j];
            while (step > std::numbers::pi) step -= kTwoPi;
            while (step < -std::numbers::pi) step += kTwoPi;
            turn += step;
        }
        f.winding = turn / kTwoPi;
    }

    f.base = std::move(base);
    return f;
}

double front_curvature(const Front& front, std::size_t i) {
    const SampledCurve& c = *front.base;
    const double u = c.param[i];
    for (double cusp : front.cusps) {
        const double gap = std::abs(u - cusp);
        if (std::min(gap, kTwoPi - gap) < kCuspGuard) throw Error(ErrorCode::AtCusp, "sample inside cusp guard band");
    }
    if (std::abs(front.factor[i]) < 1e-14) throw Error(ErrorCode::AtCusp, "regularity factor vanishes");
    const auto pc = propagation_coeffs(c.geometry, front.t);
    return (c.k[i] * pc.C + pc.dC) / front.factor[i];
}

double front_average_curvature(const Front& front) {
    const Geometry g = front.base->geometry;
    return (kTwoPi - model_curvature(g) * front.area) / front.signed_length;
}

double isoperimetric_defect(Geometry g, double length, double area) {
    return length * length - area * (4.0 * std::numbers::pi - model_curvature(g) * area);
}

double measured_front_curvature(const Front& front, double u) {
    const SampledCurve& c = *front.base;
    const detail::VectorSeries ys(front.points), xs(c.points);
    return oriented_curvature(c.geometry, ys(u), ys(u, 1), ys(u, 2), xs(u, 1));
}

std::vector<double> measured_front_curvature_samples(const Front& front) {
    const SampledCurve& c = *front.base;
    const detail::VectorSeries ys(front.points);
    const auto d1 = ys.derivative(1), d2 = ys.derivative(2);
    std::vector<double> out(front.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = oriented_curvature(c.geometry, front.points[i], d1[i], d2[i], c.velocity[i]);
    return out;
}

SampledCurve front_as_curve(const Front& front) {
    for (double f : front.factor)
        if (!(f > 0.0)) throw Error(ErrorCode::AtCusp, "front is not regular");
    CurveSamples in;
    in.geometry = front.base->geometry;
    in.points = front.points;
    in.velocity = front.velocity;
    in.smooth = front.base->smooth;
    if (!in.smooth) {
        in.k.resize(front.size());
        for (std::size_t i = 0; i < front.size(); ++i) in.k[i] = front_curvature(front, i);
    }
    return assemble_curve(std::move(in));
}

LemmaReport propagation_lemma_check(const SampledCurve& curve, std::span<const double> t_grid,
                                    std::span<const double> attainment_params) {
    LemmaReport rep;
    rep.attainment_params.assign(attainment_params.begin(), attainment_params.end());
    rep.t_grid.assign(t_grid.begin(), t_grid.end());
    auto base = std::make_shared<const SampledCurve>(curve);
    for (double t : t_grid) {
        const Front f = propagate(base, t);
        const double mean_t = front_average_curvature(f);
        const detail::VectorSeries ys(f.points), xs(curve.points);
        double worst = 0.0;
        const auto pc = propagation_coeffs(curve.geometry, t);
        for (double u : attainment_params) {
            // Piecewise constructions are not resolved by trigonometric
            // interpolation; their front curvature comes from the exact profile.
            const double kb = curve.smooth ? 0.0 : curve.curvature_at(u);
            const double k = curve.smooth ? oriented_curvature(curve.geometry, ys(u), ys(u, 1), ys(u, 2), xs(u, 1))
                                          : (kb * pc.C + pc.dC) / (pc.C + kb * pc.S);
            worst = std::max(worst, std::abs(k - mean_t));
        }
        rep.max_deviation_per_t.push_back(worst);
        rep.max_deviation = std::max(rep.max_deviation, worst);
    }
    return rep;
}

DefectReport defect_invariance(const SampledCurve& curve, std::span<const double> t_grid) {
    DefectReport rep;
    rep.t_grid.assign(t_grid.begin(), t_grid.end());
    rep.base_defect = isoperimetric_defect(curve.geometry, curve.L, curve.A);
    auto base = std::make_shared<const SampledCurve>(curve);
    const double scale = std::abs(rep.base_defect) > 0.0 ? std::abs(rep.base_defect) : 1.0;
    for (double t : t_grid) {
        const Front f = propagate(base, t);
        const double d = isoperimetric_defect(curve.geometry, f.signed_length, f.area);
        rep.defect.push_back(d);
        rep.max_rel_deviation = std::max(rep.max_rel_deviation, std::abs(d - rep.base_defect) / scale);
    }
    return rep;
}

double length_rate_residual(const SampledCurve& curve, double t, double step) {
    auto base = std::make_shared<const SampledCurve>(curve);
    const Front plus = propagate(base, t + step), minus = propagate(base, t - step), mid = propagate(base, t);
    const double rate = (plus.signed_length - minus.signed_length) / (2.0 * step);
    return std::abs(rate - (kTwoPi - model_curvature(curve.geometry) * mid.area));
}

double semigroup_deviation(const SampledCurve& curve, double t1, double t2) {
    const Front first = propagate(curve, t1);
    const Front twice = propagate(front_as_curve(first), t2);
    const Front once = propagate(curve, t1 + t2);
    double worst = 0.0;
    for (std::size_t i = 0; i < once.size(); ++i) worst = std::max(worst, norm(twice.points[i] - once.points[i]));
    return worst;
}

std::vector<double> linspace(double start, double stop, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = n == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

} // namespace fourpt
