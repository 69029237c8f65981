#include "fourpt/wavefront_euclidean.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fourpt {

namespace {
constexpr double kPi = std::numbers::pi;

double rel_err(double measured, double exact, double scale) {
    return std::abs(measured - exact) / std::max(std::abs(exact), scale);
}
} // namespace

SteinerReport steiner_check(const SampledCurve& curve, std::span<const double> t_grid) {
    if (curve.geometry != Geometry::euclidean) throw Error(ErrorCode::InvalidSpec, "Steiner formulas are planar");
    SteinerReport rep;
    auto base = std::make_shared<const SampledCurve>(curve);
    // Guards the relative error where a closed form passes through zero.
    const double len_scale = 1e-3 * curve.L;
    const double area_scale = 1e-3 * curve.L * curve.L;
    for (double t : t_grid) {
        const Front f = propagate(base, t);
        SteinerRow row;
        row.t = t;
        row.length = f.signed_length;
        row.length_formula = curve.L + 2.0 * kPi * t;
        row.area = f.area;
        row.area_formula = curve.A + curve.L * t + kPi * t * t;
        row.length_rel_err = rel_err(row.length, row.length_formula, len_scale);
        row.area_rel_err = rel_err(row.area, row.area_formula, area_scale);
        rep.max_rel_deviation = std::max({rep.max_rel_deviation, row.length_rel_err, row.area_rel_err});
        rep.rows.push_back(row);
    }
    for (std::size_t i = 1; i + 1 < rep.rows.size(); ++i) {
        const auto& lo = rep.rows[i - 1];
        const auto& hi = rep.rows[i + 1];
        const double rate = (hi.area - lo.area) / (hi.t - lo.t);
        rep.max_area_rate_deviation =
            std::max(rep.max_area_rate_deviation, rel_err(rate, rep.rows[i].length, len_scale));
    }
    return rep;
}

double isoperimetric_defect(const SampledCurve& curve, double t) {
    const Front f = propagate(curve, t);
    return isoperimetric_defect(curve.geometry, f.signed_length, f.area);
}

CriticalFront critical_front(const SampledCurve& curve, double tol) {
    const auto profile = curvature_profile(curve);
    CriticalFront out;
    out.attainment = count_mean_crossings(profile, tol > 0.0 ? tol : default_crossing_tol(profile));
    out.front = propagate(curve, -1.0 / profile.mean);
    out.cusp_count = out.front.cusps.size();
    for (double c : out.front.cusps) {
        double best = 2.0 * kPi;
        for (double a : out.attainment.crossings) {
            const double gap = std::abs(c - a);
            best = std::min(best, std::min(gap, 2.0 * kPi - gap));
        }
        out.max_param_mismatch = std::max(out.max_param_mismatch, best);
    }
    return out;
}

LemmaReport propagation_lemma_check(const SampledCurve& curve, std::span<const double> t_grid) {
    const auto profile = curvature_profile(curve);
    MeanCrossings crossings;
    try {
        crossings = count_mean_crossings(profile, default_crossing_tol(profile));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateProfile) throw;
        // Every sample attains the mean on a circle.
        crossings.crossings = curve.param;
    }
    return propagation_lemma_check(curve, t_grid, crossings.crossings);
}

int winding_number(std::span<const Vec3> loop, const Vec3& p) {
    int wn = 0;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3& a = loop[i];
        const Vec3& b = loop[(i + 1) % n];
        const double side = cross2(b - a, p - a);
        if (a.y <= p.y) {
            if (b.y > p.y && side > 0.0) ++wn;
        } else if (b.y <= p.y && side < 0.0) {
            --wn;
        }
    }
    return wn;
}

EnclosureReport enclosure_inequality_check(const SampledCurve& inner, std::span<const Vec3> outer) {
    if (outer.size() < 3) throw Error(ErrorCode::NotContained, "outer loop needs at least three vertices");
    for (const auto& p : inner.points)
        if (winding_number(outer, p) == 0) throw Error(ErrorCode::NotContained, "inner curve leaves the outer domain");
    // Strictness: no outer vertex may lie on or inside the inner convex curve.
    for (const auto& q : outer)
        if (winding_number(inner.points, q) != 0)
            throw Error(ErrorCode::NotContained, "outer boundary touches the inner curve");

    EnclosureReport rep;
    rep.inner_length = inner.L;
    for (std::size_t i = 0; i < outer.size(); ++i) rep.outer_length += norm(outer[(i + 1) % outer.size()] - outer[i]);
    rep.margin = rep.outer_length - rep.inner_length;
    rep.pass = rep.margin > 0.0;
    return rep;
}

} // namespace fourpt
