#pragma once

#include "fourpt/front.hpp"
#include "fourpt/geometry_hyperbolic.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fourpt {

/// Parsed curve-spec document.
///
///   geometry        euclidean | spherical | hyperbolic
///   representation  support_fourier | ellipse | samples            (euclidean)
///                   perturbed_circle | tennis_ball | sphere_samples (spherical)
///                   hyperbolic_circle | rounded_semicircle | hyperboloid_samples
///   n_samples       power of two >= 16
struct CurveSpec {
    Geometry geometry = Geometry::euclidean;
    std::string representation;
    std::size_t n_samples = 1024;
    std::vector<Harmonic> coeffs;        ///< support_fourier
    double a = 0.0, b = 0.0;             ///< ellipse semi-axes; tennis_ball uses a
    std::vector<Vec3> points;            ///< *samples
    bool allow_nonconvex = false;        ///< samples only
    double rho = 0.0;                    ///< circle radius
    std::vector<Harmonic> perturbations; ///< radial perturbation of the circle
    RoundedSemicircleSpec semicircle;
};

/// Throws ParseError for malformed JSON and SchemaError for a document that
/// does not describe a curve.
CurveSpec parse_curve_spec(std::string_view text);

/// Reads and parses a file; an unreadable file is a ParseError.
CurveSpec load_curve_spec(const std::string& path);

/// Builds the sampled curve, with n_samples overriding the spec when nonzero.
SampledCurve build_curve(const CurveSpec& spec, std::size_t n_samples = 0);

/// Fixed-precision rendering shared by every text artifact.
std::string format_number(double v);

std::string profile_csv(const SampledCurve& curve);  ///< param,k,mean,deviation
std::string spectrum_csv(const SampledCurve& curve); ///< n,cos_amp,sin_amp,magnitude of R(alpha) (plane ovals)
/// Geometry-specific curve table: s,x,y,k / s,x,y,z,k_g,tau / s,x0,x1,x2,k.
std::string curve_csv(const SampledCurve& curve);
/// s,x,y,regularity in the plane; s,x,y,z,regularity and s,x0,x1,x2,regularity otherwise.
std::string front_csv(const Front& front);

/// Points, curvature and summary values.
std::string curve_json(const SampledCurve& curve);

/// Plane curves as drawn; sphere curves orthographically from the curve's
/// centre direction; hyperbolic curves in the Klein disc.
std::string curve_svg(const SampledCurve& curve);
/// Base curve, front polyline and cusp markers.
std::string front_svg(const Front& front);

} // namespace fourpt
