#pragma once

#include "fourpt/front.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fourpt {

/// Closed curve on the unit sphere. Construction validates the samples;
/// positive orientation puts the enclosed region on the left.
class SphereCurve {
public:
    explicit SphereCurve(SampledCurve curve);

    const SampledCurve& curve() const { return curve_; }
    double L() const { return curve_.L; }
    double A() const { return curve_.A; }
    std::span<const double> k_g() const { return curve_.k; }
    /// Outward unit normal tangent to the sphere at sample i.
    Vec3 nu(std::size_t i) const { return curve_.outward_normal(i); }
    /// |integral of k_g ds - (2 pi - A)|.
    double gauss_bonnet_residual() const;

private:
    SampledCurve curve_;
};

/// Geodesic curvature <x'', x cross x'> / |x'|^3 of a closed loop sampled on
/// a uniform parameter grid. Throws BadParametrization for samples off the
/// sphere or a vanishing speed.
std::vector<double> geodesic_curvature(std::span<const Vec3> points);

/// Same from explicit frame data (position, first and second derivatives).
std::vector<double> geodesic_curvature(std::span<const Vec3> points, std::span<const Vec3> d1,
                                       std::span<const Vec3> d2);

/// Curve at polar distance rho0 + sum(perturbations) from the north pole,
/// parametrised by azimuth.
SphereCurve perturbed_sphere_circle(double rho0, std::span<const Harmonic> perturbations, std::size_t n_samples);

/// Seam (a cos u + b cos 3u, a sin u - b sin 3u, 2 sqrt(ab) sin 2u), a + b = 1.
SphereCurve tennis_ball_curve(double a, std::size_t n_samples);

SphereCurve sphere_from_samples(std::span<const Vec3> points, std::size_t n_samples, bool allow_nonconvex = false);

/// Closed forms for the equidistant family on the sphere.
struct SphereFrontForms {
    double length = 0.0; ///< L cos t + (2 pi - A) sin t
    double area = 0.0;   ///< 2 pi + L sin t - (2 pi - A) cos t
};
SphereFrontForms sphere_front_forms(double L, double A, double t);

/// Requires k_g > 0 everywhere. Throws NonConvex otherwise.
Front propagate_sphere(const SphereCurve& curve, double t);

/// Outcome of a sign-change count that may be degenerate.
struct SignCount {
    bool degenerate = false;
    int count = 0;
    std::vector<double> params;
};

struct EquatorialResult {
    double t = 0.0;               ///< atan((2 pi - A) / L)
    Front front;
    double area_residual = 0.0;   ///< |A_t - 2 pi|
    SignCount inflections;
};

EquatorialResult equatorial_front(const SphereCurve& curve);

struct EmbeddingReport {
    double t = 0.0;
    double cusp_margin = 0.0;      ///< min over s of cot t + k_g(s)
    double diameter = 0.0;         ///< spherical diameter d
    double self_tangency_time = 0.0; ///< t1 = pi - d / 2
    double embed_margin = 0.0;     ///< t1 - pi/2 (>= t1 - t since t < pi/2)
    bool regular = false;
    bool embedded = false;
};

/// Throws NotInHemisphere when no open hemisphere contains the curve.
EmbeddingReport check_regular_embedded(const SphereCurve& curve, double t);

/// Max geodesic distance between two samples, refined locally. For a convex
/// curve this is the length of the longest double normal.
double spherical_diameter(const SphereCurve& curve);

/// Hemisphere centre p with <p, x> > 0 on every sample, if one is found.
std::optional<Vec3> hemisphere_centre(const SphereCurve& curve);

/// Transversal sign changes of k_g for an area-bisecting embedded curve.
/// Throws NotBisecting when |A - 2 pi| exceeds 1e-6.
SignCount tennis_ball_check(const SphereCurve& curve);

struct TorsionReport {
    double total = 0.0; ///< integral of tau ds
    SignCount zeros;
    std::vector<double> tau;
};

/// Frenet torsion of the curve as a space curve. Throws FrenetBreakdown when
/// the space curvature numerically vanishes.
TorsionReport total_torsion(const SphereCurve& curve);

/// Sign changes of a periodic profile with a hysteresis band of
/// 1e-7 * max(1, scale); degenerate when nothing leaves the band.
SignCount count_profile_sign_changes(std::span<const double> params, std::span<const double> values, double scale);

} // namespace fourpt
