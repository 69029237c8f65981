#pragma once

#include "fourpt/error.hpp"
#include "fourpt/periodic.hpp"
#include "fourpt/vec.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace fourpt {

enum class Geometry { euclidean, spherical, hyperbolic };

const char* to_string(Geometry g);
std::optional<Geometry> geometry_from_string(std::string_view name);

/// Gaussian curvature of the model surface: 0, +1 or -1.
double model_curvature(Geometry g);

/// One term a cos(n a) + b sin(n a) of a support function.
struct Harmonic {
    int n = 0;
    double cos_amp = 0.0;
    double sin_amp = 0.0;
};

/// Plane oval given by its support function h(alpha), alpha being the
/// direction of the outward normal. The curvature radius is R = h + h''.
class SupportOval {
public:
    /// (h, h', h'') at alpha.
    using Jet = std::function<std::array<double, 3>(double)>;

    SupportOval(Jet jet, std::size_t n_samples);

    static SupportOval fourier(std::vector<Harmonic> coeffs, std::size_t n_samples);
    /// Ellipse with semi-axes a (along x) and b.
    static SupportOval ellipse(double a, double b, std::size_t n_samples);

    std::array<double, 3> jet(double alpha) const { return jet_(alpha); }
    double radius(double alpha) const {
        const auto j = jet_(alpha);
        return j[0] + j[2];
    }
    std::size_t n_samples() const { return n_samples_; }
    /// Empty unless built by fourier().
    const std::vector<Harmonic>& coeffs() const { return coeffs_; }

private:
    Jet jet_;
    std::size_t n_samples_;
    std::vector<Harmonic> coeffs_;
};

/// Closed curve sampled on the uniform parameter grid u_j = 2*pi*j/N.
///
/// Speeds and arc lengths are measured in the metric of the model space
/// (Minkowski for the hyperboloid). k is the signed geodesic curvature with
/// respect to the inward (left) normal, so positively oriented convex curves
/// have k > 0.
struct SampledCurve {
    Geometry geometry = Geometry::euclidean;
    std::vector<Vec3> points;
    std::vector<Vec3> velocity; ///< d points / du
    std::vector<double> speed;
    std::vector<double> param;
    std::vector<double> s;
    std::vector<double> k;
    double L = 0.0;
    double A = 0.0;
    bool closed = true;
    /// False for integrated constructions whose samples are too noisy for
    /// spectral differentiation; exact velocities and curvatures are stored.
    bool smooth = true;
    /// Reference point for the area integral (hemisphere / disc centre).
    Vec3 centre;
    /// Continuous curvature k(u) used by root refiners.
    std::shared_ptr<const std::function<double(double)>> curvature_fn;

    std::size_t size() const { return points.size(); }
    double du() const;
    Vec3 tangent(std::size_t i) const { return velocity[i] / speed[i]; }
    Vec3 inward_normal(std::size_t i) const;
    Vec3 outward_normal(std::size_t i) const { return -inward_normal(i); }
    double curvature_at(double u) const { return (*curvature_fn)(u); }
};

/// Raw ingredients for assemble_curve(). Velocity and curvature are computed
/// spectrally from the points when left empty.
struct CurveSamples {
    Geometry geometry = Geometry::euclidean;
    std::vector<Vec3> points;
    std::vector<Vec3> velocity;
    std::vector<double> k;
    std::function<double(double)> curvature_fn;
    bool smooth = true;
};

SampledCurve assemble_curve(CurveSamples samples);

/// Signed geodesic curvature from position, first and second derivatives in
/// any regular parametrization.
double frame_curvature(Geometry g, const Vec3& x, const Vec3& d1, const Vec3& d2);

/// Metric norm of a tangent vector.
double metric_norm(Geometry g, const Vec3& v);
double metric_dot(Geometry g, const Vec3& a, const Vec3& b);

/// Signed enclosed area of a closed sampled loop, from the 1-form whose
/// exterior derivative is the area form. Valid through cusps and
/// self-intersections (algebraic area); `centre` must not be antipodal to
/// any point on the sphere.
double enclosed_area(Geometry g, std::span<const Vec3> points, std::span<const Vec3> velocity,
                     const Vec3& centre);

/// Natural centre for the area integral: origin, normalised vector area on
/// the sphere, normalised barycentre on the hyperboloid.
Vec3 area_centre(Geometry g, std::span<const Vec3> points, std::span<const Vec3> velocity);

/// Sum of f_j * speed_j * du, i.e. the trapezoid rule for the integral of f ds.
double integrate_ds(const SampledCurve& c, std::span<const double> f);

/// Resample-and-validate path for raw point lists. The input is treated as
/// uniform-parameter samples of a smooth closed curve (even count, >= 16),
/// Fourier-resampled to n_samples, projected onto the model surface and
/// reoriented positively. Throws NonConvex on a sign change of curvature
/// unless allow_nonconvex is set.
SampledCurve curve_from_samples(Geometry g, std::span<const Vec3> points, std::size_t n_samples,
                                bool allow_nonconvex = false);

/// Curve reconstructed from a support function on the uniform alpha grid.
SampledCurve build_oval(const SupportOval& spec);

/// Total curvature over length via Gauss-Bonnet: (2 pi - K A) / L.
double average_curvature(const SampledCurve& curve);

/// Quadrature of the integral of R(alpha) (cos alpha, sin alpha) d alpha,
/// i.e. of the outward normal over arc length.
std::array<double, 2> closure_residual(const SampledCurve& oval);

struct CurvatureProfile {
    std::vector<double> params;
    std::vector<double> values;
    double mean = 0.0;
    /// Optional continuous profile used to refine crossings.
    std::function<double(double)> at;
};

CurvatureProfile curvature_profile(const SampledCurve& curve);

/// One cyclic passage of a sequence through the band [-tol, tol].
struct BandTransition {
    std::size_t from = 0; ///< last out-of-band index before the passage
    std::size_t to = 0;   ///< first out-of-band index after it (cyclic)
    bool sign_change = false;
};

/// Cyclic hysteresis scan of d around one period. Returns every passage
/// through the band; passages that leave on the same side are touches.
/// Empty when d never leaves the band.
std::vector<BandTransition> band_transitions(std::span<const double> d, double tol);

struct MeanCrossings {
    std::vector<double> crossings; ///< transversal attainment parameters
    std::vector<double> touches;   ///< tangential attainment parameters
    std::size_t count() const { return crossings.size(); }
};

/// Transversal crossings of values - mean, refined by bisection on
/// profile.at when available. Throws DegenerateProfile when the profile never
/// leaves the tolerance band.
MeanCrossings count_mean_crossings(const CurvatureProfile& profile, double tol);

/// Default crossing tolerance: 1e-7 times the mean.
double default_crossing_tol(const CurvatureProfile& profile);

/// Root of f on [a, b] by bisection; f(a) and f(b) must differ in sign.
double bisect_root(const std::function<double(double)>& f, double a, double b, double xtol = 1e-13);

} // namespace fourpt
