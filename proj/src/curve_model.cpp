#include "fourpt/curve_model.hpp"

#include "vector_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fourpt {

using detail::coordinate;
using detail::spectral_vectors;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Orthonormal frame (e1, e2) of the tangent plane at the centre, oriented so
// that det(centre, e1, e2) > 0.
std::pair<Vec3, Vec3> centre_frame(Geometry g, const Vec3& p) {
    if (g == Geometry::spherical) {
        const Vec3 trial = std::abs(p.x) < 0.6 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        const Vec3 e1 = normalized(trial - dot(trial, p) * p);
        return {e1, cross(p, e1)};
    }
    const Vec3 trial = std::abs(p.y) < std::abs(p.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1};
    Vec3 e1 = trial + mdot(trial, p) * p;
    e1 = e1 / std::sqrt(mdot(e1, e1));
    Vec3 e2 = mcross(p, e1);
    e2 = e2 / std::sqrt(mdot(e2, e2));
    return {e1, e2};
}

std::vector<Vec3> reversed_loop(std::span<const Vec3> p) {
    const std::size_t n = p.size();
    std::vector<Vec3> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = p[(n - j) % n];
    return out;
}

Vec3 project_to_model(Geometry g, const Vec3& x) {
    switch (g) {
    case Geometry::euclidean: return {x.x, x.y, 0.0};
    case Geometry::spherical: return normalized(x);
    case Geometry::hyperbolic: return x / std::sqrt(-mdot(x, x));
    }
    return x;
}

} // namespace

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonConvex: return "NonConvex";
    case ErrorCode::DegenerateSampling: return "DegenerateSampling";
    case ErrorCode::DegenerateProfile: return "DegenerateProfile";
    case ErrorCode::NonUniformGrid: return "NonUniformGrid";
    case ErrorCode::AllBelowTolerance: return "AllBelowTolerance";
    case ErrorCode::AtCusp: return "AtCusp";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::BadParametrization: return "BadParametrization";
    case ErrorCode::NotInHemisphere: return "NotInHemisphere";
    case ErrorCode::NotBisecting: return "NotBisecting";
    case ErrorCode::FrenetBreakdown: return "FrenetBreakdown";
    case ErrorCode::NotHorocyclicallyConvex: return "NotHorocyclicallyConvex";
    case ErrorCode::CothDomain: return "CothDomain";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

const char* to_string(Geometry g) {
    switch (g) {
    case Geometry::euclidean: return "euclidean";
    case Geometry::spherical: return "spherical";
    case Geometry::hyperbolic: return "hyperbolic";
    }
    return "?";
}

std::optional<Geometry> geometry_from_string(std::string_view name) {
    if (name == "euclidean") return Geometry::euclidean;
    if (name == "spherical") return Geometry::spherical;
    if (name == "hyperbolic") return Geometry::hyperbolic;
    return std::nullopt;
}

double model_curvature(Geometry g) {
    switch (g) {
    case Geometry::euclidean: return 0.0;
    case Geometry::spherical: return 1.0;
    case Geometry::hyperbolic: return -1.0;
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// SupportOval

SupportOval::SupportOval(Jet jet, std::size_t n_samples) : jet_(std::move(jet)), n_samples_(n_samples) {}

SupportOval SupportOval::fourier(std::vector<Harmonic> coeffs, std::size_t n_samples) {
    auto terms = coeffs;
    SupportOval oval(
        [terms](double a) {
            std::array<double, 3> j{0.0, 0.0, 0.0};
            for (const auto& t : terms) {
                const double n = t.n;
                const double c = std::cos(n * a), s = std::sin(n * a);
                j[0] += t.cos_amp * c + t.sin_amp * s;
                j[1] += n * (-t.cos_amp * s + t.sin_amp * c);
                j[2] += -n * n * (t.cos_amp * c + t.sin_amp * s);
            }
            return j;
        },
        n_samples);
    oval.coeffs_ = std::move(coeffs);
    return oval;
}

SupportOval SupportOval::ellipse(double a, double b, std::size_t n_samples) {
    if (!(a > 0.0) || !(b > 0.0)) throw Error(ErrorCode::InvalidSpec, "ellipse semi-axes must be positive");
    return SupportOval(
        [a, b](double t) {
            const double c = std::cos(t), s = std::sin(t);
            const double diff = b * b - a * a;
            const double g = a * a * c * c + b * b * s * s;
            const double h = std::sqrt(g);
            const double g1 = diff * std::sin(2.0 * t);
            const double g2 = 2.0 * diff * std::cos(2.0 * t);
            return std::array<double, 3>{h, g1 / (2.0 * h), g2 / (2.0 * h) - g1 * g1 / (4.0 * h * h * h)};
        },
        n_samples);
}

// ---------------------------------------------------------------------------
// SampledCurve

double SampledCurve::du() const { return kTwoPi / static_cast<double>(points.size()); }

Vec3 SampledCurve::inward_normal(std::size_t i) const {
    const Vec3 t = tangent(i);
    switch (geometry) {
    case Geometry::euclidean: return {-t.y, t.x, 0.0};
    case Geometry::spherical: return cross(points[i], t);
    case Geometry::hyperbolic: return mcross(points[i], t);
    }
    return {};
}

double metric_dot(Geometry g, const Vec3& a, const Vec3& b) {
    return g == Geometry::hyperbolic ? mdot(a, b) : dot(a, b);
}

double metric_norm(Geometry g, const Vec3& v) {
    return std::sqrt(std::max(0.0, metric_dot(g, v, v)));
}

double frame_curvature(Geometry g, const Vec3& x, const Vec3& d1, const Vec3& d2) {
    const double sp = metric_norm(g, d1);
    const double num = g == Geometry::euclidean ? cross2(d1, d2) : det(x, d1, d2);
    return num / (sp * sp * sp);
}

Vec3 area_centre(Geometry g, std::span<const Vec3> points, std::span<const Vec3> velocity) {
    switch (g) {
    case Geometry::euclidean: return {0.0, 0.0, 0.0};
    case Geometry::spherical: {
        Vec3 v, m;
        for (std::size_t i = 0; i < points.size(); ++i) {
            v += cross(points[i], velocity[i]);
            m += points[i];
        }
        if (norm(v) > 1e-6 * static_cast<double>(points.size())) return normalized(v);
        // Symmetric loops (tennis-ball seams) have no preferred side; take
        // the candidate whose antipode stays farthest from the curve.
        std::vector<Vec3> candidates = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
        if (norm(m) > 1e-12) candidates.insert(candidates.begin(), normalized(m));
        Vec3 best = candidates.front();
        double best_margin = -1.0;
        for (const auto& c : candidates) {
            double margin = 2.0;
            for (const auto& p : points) margin = std::min(margin, 1.0 + dot(p, c));
            if (margin > best_margin + 1e-12) best = c, best_margin = margin;
        }
        return best;
    }
    case Geometry::hyperbolic: {
        Vec3 m;
        for (const auto& p : points) m += p;
        return m / std::sqrt(-mdot(m, m));
    }
    }
    return {};
}

double enclosed_area(Geometry g, std::span<const Vec3> points, std::span<const Vec3> velocity,
                     const Vec3& centre) {
    const double du = kTwoPi / static_cast<double>(points.size());
    double acc = 0.0;
    if (g == Geometry::euclidean) {
        for (std::size_t i = 0; i < points.size(); ++i) acc += cross2(points[i], velocity[i]);
        return 0.5 * acc * du;
    }
    const auto [e1, e2] = centre_frame(g, centre);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Vec3& x = points[i];
        const Vec3& v = velocity[i];
        const double a = metric_dot(g, x, e1), b = metric_dot(g, x, e2);
        const double da = metric_dot(g, v, e1), db = metric_dot(g, v, e2);
        // 1 + cos(theta) on the sphere, 1 + cosh(theta) on the hyperboloid.
        const double denom = g == Geometry::spherical ? 1.0 + dot(x, centre) : 1.0 - mdot(x, centre);
        acc += (a * db - b * da) / denom;
    }
    return acc * du;
}

double integrate_ds(const SampledCurve& c, std::span<const double> f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) acc += f[i] * c.speed[i];
    return acc * c.du();
}

SampledCurve assemble_curve(CurveSamples in) {
    const std::size_t n = in.points.size();
    if (n < 4 || n % 2 != 0) throw Error(ErrorCode::DegenerateSampling, "need an even number of samples");

    SampledCurve c;
    c.geometry = in.geometry;
    c.smooth = in.smooth;
    c.points = std::move(in.points);
    c.velocity = in.velocity.empty() ? spectral_vectors(c.points, 1) : std::move(in.velocity);
    c.speed.resize(n);
    for (std::size_t i = 0; i < n; ++i) c.speed[i] = metric_norm(c.geometry, c.velocity[i]);

    if (in.k.empty()) {
        const auto accel = spectral_vectors(c.points, 2);
        c.k.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            c.k[i] = frame_curvature(c.geometry, c.points[i], c.velocity[i], accel[i]);
    } else {
        c.k = std::move(in.k);
    }

    c.param = uniform_grid(n);
    c.s = TrigSeries(c.speed).antiderivative();
    c.L = 0.0;
    for (double v : c.speed) c.L += v;
    c.L *= c.du();
    c.centre = area_centre(c.geometry, c.points, c.velocity);
    c.A = enclosed_area(c.geometry, c.points, c.velocity, c.centre);
    // The 1-form misses the antipode of the centre; the region on the left
    // has area in (0, 4 pi).
    if (c.geometry == Geometry::spherical && c.A < 0.0) c.A += 2.0 * kTwoPi;

    if (in.curvature_fn) {
        c.curvature_fn = std::make_shared<const std::function<double(double)>>(std::move(in.curvature_fn));
    } else {
        auto series = std::make_shared<const TrigSeries>(c.k);
        c.curvature_fn = std::make_shared<const std::function<double(double)>>(
            [series](double u) { return (*series)(u); });
    }
    return c;
}

SampledCurve curve_from_samples(Geometry g, std::span<const Vec3> points, std::size_t n_samples,
                                bool allow_nonconvex) {
    const std::size_t m = points.size();
    if (m < 16 || m % 2 != 0)
        throw Error(ErrorCode::DegenerateSampling, "sample lists need an even count of at least 16");
    if (n_samples < 16 || !is_power_of_two(n_samples))
        throw Error(ErrorCode::DegenerateSampling, "n_samples must be a power of two >= 16");

    for (const auto& p : points) {
        if (g == Geometry::spherical && std::abs(norm(p) - 1.0) > 1e-8)
            throw Error(ErrorCode::BadParametrization, "sphere sample off the unit sphere");
        if (g == Geometry::hyperbolic && (std::abs(mdot(p, p) + 1.0) > 1e-8 || p.x <= 0.0))
            throw Error(ErrorCode::BadParametrization, "hyperboloid sample off the upper sheet");
    }

    std::vector<Vec3> pts(points.begin(), points.end());
    if (n_samples != m) {
        const TrigSeries sx(coordinate(points, 0)), sy(coordinate(points, 1)), sz(coordinate(points, 2));
        const auto grid = uniform_grid(n_samples);
        pts.resize(n_samples);
        for (std::size_t j = 0; j < n_samples; ++j) pts[j] = {sx(grid[j]), sy(grid[j]), sz(grid[j])};
    }
    for (auto& p : pts) p = project_to_model(g, p);

    auto curve = assemble_curve({g, pts, {}, {}, {}, true});
    bool reverse = curve.A < 0.0;
    if (g == Geometry::spherical) {
        Vec3 mean, vec_area;
        for (std::size_t i = 0; i < curve.size(); ++i) {
            mean += curve.points[i];
            vec_area += cross(curve.points[i], curve.velocity[i]);
        }
        reverse = norm(mean) > 1e-6 * static_cast<double>(curve.size()) && dot(mean, vec_area) < 0.0;
    }
    if (reverse) curve = assemble_curve({g, reversed_loop(curve.points), {}, {}, {}, true});

    const double mean_speed = curve.L / kTwoPi;
    for (double sp : curve.speed)
        if (sp < 1e-9 * mean_speed) throw Error(ErrorCode::BadParametrization, "vanishing speed in samples");

    if (!allow_nonconvex) {
        const auto worst = std::min_element(curve.k.begin(), curve.k.end());
        if (*worst <= 0.0) {
            std::ostringstream os;
            os << "curvature " << *worst << " at sample " << (worst - curve.k.begin());
            throw Error(ErrorCode::NonConvex, os.str());
        }
    }
    return curve;
}

SampledCurve build_oval(const SupportOval& spec) {
    const std::size_t n = spec.n_samples();
    if (n < 16 || !is_power_of_two(n))
        throw Error(ErrorCode::DegenerateSampling, "n_samples must be a power of two >= 16");

    CurveSamples in;
    in.geometry = Geometry::euclidean;
    in.points.resize(n);
    in.velocity.resize(n);
    in.k.resize(n);
    const auto alpha = uniform_grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [h, dh, d2h] = spec.jet(alpha[i]);
        const double r = h + d2h;
        if (!(r > 0.0)) {
            std::ostringstream os;
            os << "R(alpha) = " << r << " at alpha = " << alpha[i];
            throw Error(ErrorCode::NonConvex, os.str());
        }
        const double c = std::cos(alpha[i]), s = std::sin(alpha[i]);
        in.points[i] = {h * c - dh * s, h * s + dh * c, 0.0};
        in.velocity[i] = {-r * s, r * c, 0.0};
        in.k[i] = 1.0 / r;
    }
    in.curvature_fn = [spec](double a) { return 1.0 / spec.radius(a); };
    return assemble_curve(std::move(in));
}

double average_curvature(const SampledCurve& curve) {
    return (kTwoPi - model_curvature(curve.geometry) * curve.A) / curve.L;
}

std::array<double, 2> closure_residual(const SampledCurve& oval) {
    double x = 0.0, y = 0.0;
    for (std::size_t i = 0; i < oval.size(); ++i) {
        const Vec3 n = oval.outward_normal(i) * oval.speed[i];
        x += n.x;
        y += n.y;
    }
    return {x * oval.du(), y * oval.du()};
}

CurvatureProfile curvature_profile(const SampledCurve& curve) {
    CurvatureProfile p;
    p.params = curve.param;
    p.values = curve.k;
    p.mean = average_curvature(curve);
    auto fn = curve.curvature_fn;
    p.at = [fn](double u) { return (*fn)(u); };
    return p;
}

std::vector<BandTransition> band_transitions(std::span<const double> d, double tol) {
    const std::size_t n = d.size();
    std::vector<BandTransition> out;
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(d[i]) > tol) {
            start = i;
            break;
        }
    if (start == n) return out;

    std::size_t last = start;
    for (std::size_t step = 1; step <= n; ++step) {
        const std::size_t j = (start + step) % n;
        if (std::abs(d[j]) <= tol) continue;
        const bool adjacent = (last + 1) % n == j;
        const bool flipped = (d[j] > 0.0) != (d[last] > 0.0);
        if (flipped || !adjacent) out.push_back({last, j, flipped});
        last = j;
    }
    return out;
}

double bisect_root(const std::function<double(double)>& f, double a, double b, double xtol) {
    double fa = f(a);
    for (int it = 0; it < 200 && std::abs(b - a) > xtol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

double default_crossing_tol(const CurvatureProfile& profile) {
    double scale = std::abs(profile.mean);
    if (scale == 0.0)
        for (double v : profile.values) scale = std::max(scale, std::abs(v));
    return 1e-7 * scale;
}

MeanCrossings count_mean_crossings(const CurvatureProfile& profile, double tol) {
    const std::size_t n = profile.values.size();
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = profile.values[i] - profile.mean;
    const auto transitions = band_transitions(d, tol);
    if (transitions.empty())
        throw Error(ErrorCode::DegenerateProfile, "profile within tolerance of its mean everywhere (attained everywhere)");

    const double period = kTwoPi;
    auto unwrap = [&](std::size_t from, std::size_t to) {
        double a = profile.params[from], b = profile.params[to];
        if (b <= a) b += period;
        return std::pair{a, b};
    };
    auto wrap = [&](double u) {
        u = std::fmod(u, period);
        return u < 0.0 ? u + period : u;
    };

    MeanCrossings out;
    for (const auto& tr : transitions) {
        const auto [a, b] = unwrap(tr.from, tr.to);
        if (!tr.sign_change) {
            std::size_t best = (tr.from + 1) % n;
            for (std::size_t j = best; j != tr.to; j = (j + 1) % n)
                if (std::abs(d[j]) < std::abs(d[best])) best = j;
            out.touches.push_back(profile.params[best]);
            continue;
        }
        if (profile.at) {
            const double mean = profile.mean;
            const auto g = [&](double u) { return profile.at(wrap(u)) - mean; };
            out.crossings.push_back(wrap(bisect_root(g, a, b)));
            continue;
        }
        // Linear interpolation across the first raw sign change in the passage.
        const double h = period / static_cast<double>(n);
        double root = 0.5 * (a + b);
        std::size_t step = 0;
        for (std::size_t i = tr.from; i != tr.to; i = (i + 1) % n, ++step) {
            const std::size_t j = (i + 1) % n;
            if ((d[i] > 0.0) != (d[j] > 0.0) || d[j] == 0.0) {
                root = a + h * (static_cast<double>(step) + d[i] / (d[i] - d[j]));
                break;
            }
        }
        out.crossings.push_back(wrap(root));
    }
    std::sort(out.crossings.begin(), out.crossings.end());
    std::sort(out.touches.begin(), out.touches.end());
    return out;
}

} // namespace fourpt
