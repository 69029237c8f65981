#include "fourpt/geometry_hyperbolic.hpp"

#include "vector_series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace fourpt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

void require_on_hyperboloid(std::span<const Vec3> points, double tol) {
    for (const auto& p : points)
        if (std::abs(mdot(p, p) + 1.0) > tol || p.x <= 0.0)
            throw Error(ErrorCode::BadParametrization, "sample off the upper sheet of the hyperboloid");
}

// Moving frame (x, T, N) of a unit-speed curve:
//   x' = T,  T' = x + k N,  N' = -k T.
struct Frame {
    Vec3 x, T, N;
};

Frame frame_rate(const Frame& f, double k) { return {f.T, f.x + k * f.N, -k * f.T}; }

Frame axpy(const Frame& f, double h, const Frame& d) { return {f.x + h * d.x, f.T + h * d.T, f.N + h * d.N}; }

Frame rk4_step(const Frame& f, double s, double h, const SemicircleLayout& lay) {
    const Frame k1 = frame_rate(f, lay.curvature(s));
    const Frame k2 = frame_rate(axpy(f, 0.5 * h, k1), lay.curvature(s + 0.5 * h));
    const Frame k3 = frame_rate(axpy(f, 0.5 * h, k2), lay.curvature(s + 0.5 * h));
    const Frame k4 = frame_rate(axpy(f, h, k3), lay.curvature(s + h));
    return {f.x + (h / 6.0) * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
            f.T + (h / 6.0) * (k1.T + 2.0 * k2.T + 2.0 * k3.T + k4.T),
            f.N + (h / 6.0) * (k1.N + 2.0 * k2.N + 2.0 * k3.N + k4.N)};
}

std::vector<double> breakpoints(const SemicircleLayout& lay) {
    const double f = lay.flat_half, c = lay.ramp, L = lay.length;
    return {f, f + c, f + 2 * c, L - f - 2 * c, L - f - c, L - f};
}

// Integrates the frame over [s0, s1], never stepping across a curvature kink.
Frame advance(Frame f, double s0, double s1, const SemicircleLayout& lay) {
    std::vector<double> stops;
    for (double b : breakpoints(lay))
        if (b > s0 && b < s1) stops.push_back(b);
    stops.push_back(s1);
    double s = s0;
    for (double stop : stops) {
        const double kmax = std::max({1.0, std::abs(lay.curvature(s)), std::abs(lay.curvature(stop)),
                                      std::abs(lay.curvature(0.5 * (s + stop)))});
        const double hmax = std::min(1e-3, 5e-3 / kmax);
        const auto steps = static_cast<std::size_t>(std::ceil((stop - s) / hmax));
        const double h = steps ? (stop - s) / static_cast<double>(steps) : 0.0;
        for (std::size_t i = 0; i < steps; ++i) f = rk4_step(f, s + h * static_cast<double>(i), h, lay);
        s = stop;
    }
    return f;
}

// Samples are packed into the two corners by a smooth change of parameter:
//   du/ds proportional to 1 + gain * sum_j exp(-((s - c_j) / width)^2).
struct CornerParam {
    double length = 0.0, width = 0.0, gain = 0.0, total = 0.0;
    std::array<double, 2> centre{};

    CornerParam(const SemicircleLayout& lay, double gain_) : length(lay.length), gain(gain_) {
        width = 1.5 * lay.ramp;
        centre = {lay.flat_half + lay.ramp, lay.length - lay.flat_half - lay.ramp};
        total = raw(length);
    }
    double bump_integral(double x) const { return 0.5 * std::sqrt(kPi) * width * std::erf(x / width); }
    double raw(double s) const {
        double v = s;
        for (double c : centre) v += gain * (bump_integral(s - c) - bump_integral(-c));
        return v;
    }
    double raw_rate(double s) const {
        double v = 1.0;
        for (double c : centre) v += gain * std::exp(-std::pow((s - c) / width, 2));
        return v;
    }
    double u_of_s(double s) const { return kTwoPi * raw(s) / total; }
    double du_ds(double s) const { return kTwoPi * raw_rate(s) / total; }
    double s_of_u(double u) const {
        u = std::fmod(u, kTwoPi);
        if (u < 0.0) u += kTwoPi;
        double lo = 0.0, hi = length, s = u / kTwoPi * length;
        for (int it = 0; it < 100; ++it) {
            const double f = u_of_s(s) - u;
            if (std::abs(f) < 1e-15) break;
            if (f > 0.0) hi = s;
            else lo = s;
            double next = s - f / du_ds(s);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            if (hi - lo < 1e-15 * length) break;
            s = next;
        }
        return s;
    }
};

const Frame kStart{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};

// Mirror symmetry about the axis {x1 = 0}: the half curve must end on the
// axis with its normal inside the axis plane.
std::array<double, 2> closure_defect(SemicircleLayout lay) {
    lay.length = 2.0 * (lay.flat_half + 2.0 * lay.ramp + lay.arc_half);
    const Frame end = advance(kStart, 0.0, 0.5 * lay.length, lay);
    return {end.x.y, end.N.y};
}

double smooth_step(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / x), b = std::exp(-1.0 / (1.0 - x));
    return a / (a + b);
}

} // namespace

const char* to_string(CurvatureClass c) {
    switch (c) {
    case CurvatureClass::circle_like: return "circle";
    case CurvatureClass::horocycle_like: return "horocycle";
    case CurvatureClass::equidistant_like: return "equidistant";
    }
    return "?";
}

HyperbolicCurve::HyperbolicCurve(SampledCurve curve) : curve_(std::move(curve)) {
    if (curve_.geometry != Geometry::hyperbolic) throw Error(ErrorCode::InvalidSpec, "not a hyperbolic curve");
    require_on_hyperboloid(curve_.points, 1e-10);
    classes_.reserve(curve_.size());
    for (double k : curve_.k) {
        if (k > 1.0 + kHorocyclicMargin) classes_.push_back(CurvatureClass::circle_like);
        else if (k >= 1.0 - kHorocyclicMargin) classes_.push_back(CurvatureClass::horocycle_like);
        else classes_.push_back(CurvatureClass::equidistant_like);
    }
    horocyclic_convex_ = *std::min_element(curve_.k.begin(), curve_.k.end()) > 1.0 + kHorocyclicMargin;
}

double HyperbolicCurve::gauss_bonnet_residual() const {
    return std::abs(integrate_ds(curve_, curve_.k) - (kTwoPi + curve_.A));
}

std::vector<double> geodesic_curvature_h(std::span<const Vec3> points, std::span<const Vec3> d1,
                                         std::span<const Vec3> d2) {
    require_on_hyperboloid(points, 1e-8);
    std::vector<double> k(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(mdot(d1[i], d1[i]) > 1e-24)) throw Error(ErrorCode::BadParametrization, "velocity is not spacelike");
        k[i] = frame_curvature(Geometry::hyperbolic, points[i], d1[i], d2[i]);
    }
    return k;
}

std::vector<double> geodesic_curvature_h(std::span<const Vec3> points) {
    const detail::VectorSeries series(points);
    return geodesic_curvature_h(points, series.derivative(1), series.derivative(2));
}

HyperbolicCurve hyperbolic_circle(double rho0, std::span<const Harmonic> perturbations, std::size_t n_samples) {
    if (n_samples < 16 || !is_power_of_two(n_samples))
        throw Error(ErrorCode::DegenerateSampling, "n_samples must be a power of two >= 16");
    std::vector<Vec3> pts(n_samples);
    const auto phi = uniform_grid(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        double rho = rho0;
        for (const auto& h : perturbations) rho += h.cos_amp * std::cos(h.n * phi[i]) + h.sin_amp * std::sin(h.n * phi[i]);
        if (!(rho > 0.0)) throw Error(ErrorCode::InvalidSpec, "radius must stay positive");
        pts[i] = {std::cosh(rho), std::sinh(rho) * std::cos(phi[i]), std::sinh(rho) * std::sin(phi[i])};
    }
    return HyperbolicCurve(assemble_curve({Geometry::hyperbolic, std::move(pts), {}, {}, {}, true}));
}

HyperbolicCurve hyperbolic_from_samples(std::span<const Vec3> points, std::size_t n_samples, bool allow_nonconvex) {
    return HyperbolicCurve(curve_from_samples(Geometry::hyperbolic, points, n_samples, allow_nonconvex));
}

HorocyclicReport check_horocyclic_convexity(const HyperbolicCurve& curve, double margin) {
    const auto k = curve.k();
    const auto it = std::min_element(k.begin(), k.end());
    const auto idx = static_cast<std::size_t>(it - k.begin());
    return {*it > 1.0 + margin, *it, curve.curve().param[idx]};
}

HyperbolicFrontForms hyperbolic_front_forms(double L, double A, double t) {
    return {L * std::cosh(t) + (kTwoPi + A) * std::sinh(t), -kTwoPi + L * std::sinh(t) + (kTwoPi + A) * std::cosh(t)};
}

Front propagate_hyperbolic(const HyperbolicCurve& curve, double t, bool force) {
    if (!curve.horocyclic_convex() && !force) {
        const double c = std::cosh(t), s = std::sinh(t);
        for (double k : curve.k())
            if (c + k * s <= 0.0)
                throw Error(ErrorCode::NotHorocyclicallyConvex,
                            "front develops a cusp and the curve is not horocyclically convex");
    }
    return propagate(curve.curve(), t);
}

CollapseResult collapse_front(const HyperbolicCurve& curve, bool force) {
    if (!curve.horocyclic_convex() && !force)
        throw Error(ErrorCode::NotHorocyclicallyConvex, "collapse time needs a horocyclically convex curve");
    CollapseResult out;
    out.theorem_applies = curve.horocyclic_convex();
    out.mean_k = average_curvature(curve.curve());
    if (!(out.mean_k > 1.0)) throw Error(ErrorCode::CothDomain, "(2 pi + A) / L <= 1");
    out.t = -std::atanh(1.0 / out.mean_k);
    out.front = propagate(curve.curve(), out.t);
    const double tol = 1e-7 * out.mean_k;
    out.degenerate = std::all_of(curve.k().begin(), curve.k().end(),
                                 [&](double k) { return std::abs(k - out.mean_k) <= tol; });
    out.cusp_count = out.front.cusps.size();
    return out;
}

double SemicircleLayout::curvature(double s) const {
    s = std::fmod(s, length);
    if (s < 0.0) s += length;
    if (s > 0.5 * length) s = length - s;
    const double eps = ramp_start, circle = arc_curvature;
    if (s <= flat_half) return eps;
    if (s <= flat_half + ramp) return eps + (peak - eps) * smooth_step((s - flat_half) / ramp);
    if (s <= flat_half + 2.0 * ramp) return peak + (circle - peak) * smooth_step((s - flat_half - ramp) / ramp);
    return circle;
}

SemicircleLayout rounded_semicircle_layout(const RoundedSemicircleSpec& spec) {
    if (!(spec.r > 0.0) || !(spec.corner_scale > 0.0) || !(spec.flat_deviation > 0.0))
        throw Error(ErrorCode::InvalidSpec, "r, corner_scale and flat_deviation must be positive");
    SemicircleLayout lay;
    lay.ramp = spec.corner_scale;
    lay.ramp_start = spec.flat_deviation;
    lay.arc_curvature = 1.0 / std::tanh(spec.r);
    // The two ramps together turn the tangent by a right angle.
    lay.peak = (kPi / 2.0 - 0.5 * (lay.ramp_start + lay.arc_curvature) * lay.ramp) / lay.ramp;
    if (!(lay.peak > std::max(lay.ramp_start, lay.arc_curvature)))
        throw Error(ErrorCode::InvalidSpec, "corner_scale too large for a right-angle corner");

    std::array<double, 2> p{spec.r - lay.ramp, 0.5 * kPi * std::sinh(spec.r)};
    auto residual = [&](const std::array<double, 2>& q) {
        SemicircleLayout trial = lay;
        trial.flat_half = q[0];
        trial.arc_half = q[1];
        return closure_defect(trial);
    };
    auto fnorm = [](const std::array<double, 2>& f) { return std::hypot(f[0], f[1]); };
    auto f = residual(p);
    for (int it = 0; it < 60 && fnorm(f) > 1e-13; ++it) {
        const double h = 1e-7;
        const auto fa = residual({p[0] + h, p[1]});
        const auto fb = residual({p[0], p[1] + h});
        const double j00 = (fa[0] - f[0]) / h, j10 = (fa[1] - f[1]) / h;
        const double j01 = (fb[0] - f[0]) / h, j11 = (fb[1] - f[1]) / h;
        const double detj = j00 * j11 - j01 * j10;
        if (detj == 0.0) break;
        const std::array<double, 2> step{(j11 * f[0] - j01 * f[1]) / detj, (-j10 * f[0] + j00 * f[1]) / detj};
        double lambda = 1.0;
        for (int k = 0; k < 30; ++k, lambda *= 0.5) {
            const std::array<double, 2> q{p[0] - lambda * step[0], p[1] - lambda * step[1]};
            if (q[0] <= 0.0 || q[1] <= 0.0) continue;
            const auto fq = residual(q);
            if (fnorm(fq) < fnorm(f)) {
                p = q;
                f = fq;
                break;
            }
        }
    }
    if (fnorm(f) > 1e-9 || p[0] <= 0.0 || p[1] <= 0.0)
        throw Error(ErrorCode::InvalidSpec, "rounded semicircle does not close for these parameters");
    lay.flat_half = p[0];
    lay.arc_half = p[1];
    lay.length = 2.0 * (lay.flat_half + 2.0 * lay.ramp + lay.arc_half);
    lay.closure_error = fnorm(f);
    return lay;
}

HyperbolicCurve build_rounded_semicircle(const RoundedSemicircleSpec& spec, std::size_t n_samples) {
    if (n_samples < 16 || !is_power_of_two(n_samples))
        throw Error(ErrorCode::DegenerateSampling, "n_samples must be a power of two >= 16");
    const SemicircleLayout lay = rounded_semicircle_layout(spec);

    const CornerParam param(lay, 30.0);

    CurveSamples in;
    in.geometry = Geometry::hyperbolic;
    in.smooth = false;
    in.points.resize(n_samples);
    in.velocity.resize(n_samples);
    in.k.resize(n_samples);
    const auto u = uniform_grid(n_samples);
    Frame f = kStart;
    double s_prev = 0.0;
    for (std::size_t j = 0; j < n_samples; ++j) {
        const double s = param.s_of_u(u[j]);
        if (j > 0) f = advance(f, s_prev, s, lay);
        s_prev = s;
        in.points[j] = f.x / std::sqrt(-mdot(f.x, f.x));
        in.velocity[j] = f.T / param.du_ds(s);
        in.k[j] = lay.curvature(s);
    }
    in.curvature_fn = [lay, param](double v) { return lay.curvature(param.s_of_u(v)); };
    return HyperbolicCurve(assemble_curve(std::move(in)));
}

double semicircle_mean_curvature(double r) {
    return kPi * (1.0 + std::cosh(r)) / (2.0 * r + kPi * std::sinh(r));
}

double counterexample_threshold(double xtol) {
    const auto g = [](double r) { return 1.0 / std::tanh(r) - semicircle_mean_curvature(r); };
    return bisect_root(g, 0.1, 5.0, xtol);
}

CounterexampleReport counterexample_verdict(const RoundedSemicircleSpec& spec, std::size_t n_samples) {
    const HyperbolicCurve curve = build_rounded_semicircle(spec, n_samples);
    CounterexampleReport rep;
    rep.spec = spec;
    rep.threshold_r = counterexample_threshold();
    rep.coth_r = 1.0 / std::tanh(spec.r);
    rep.mean_k_exact = semicircle_mean_curvature(spec.r);
    rep.mean_k_measured = average_curvature(curve.curve());
    rep.length = curve.L();
    rep.area = curve.A();
    rep.min_k = *std::min_element(curve.k().begin(), curve.k().end());
    rep.convex = rep.min_k > 0.0;
    rep.horocyclic_convex = curve.horocyclic_convex();
    rep.mean_below_coth = rep.mean_k_measured < rep.coth_r;
    const auto profile = curvature_profile(curve.curve());
    const auto crossings = count_mean_crossings(profile, default_crossing_tol(profile));
    rep.attainment_params = crossings.crossings;
    rep.attainment_count = crossings.count();
    rep.counterexample = rep.convex && !rep.horocyclic_convex && rep.attainment_count == 2;
    return rep;
}

} // namespace fourpt
