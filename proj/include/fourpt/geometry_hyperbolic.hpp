#pragma once

#include "fourpt/front.hpp"

#include <span>
#include <vector>

namespace fourpt {

/// Local model of a curve by its osculating constant-curvature curve.
enum class CurvatureClass { circle_like, horocycle_like, equidistant_like };

const char* to_string(CurvatureClass c);

/// Closed curve on the upper sheet of the hyperboloid <x, x> = -1 in
/// Minkowski space of signature (-,+,+).
class HyperbolicCurve {
public:
    explicit HyperbolicCurve(SampledCurve curve);

    const SampledCurve& curve() const { return curve_; }
    double L() const { return curve_.L; }
    double A() const { return curve_.A; }
    std::span<const double> k() const { return curve_.k; }
    bool horocyclic_convex() const { return horocyclic_convex_; }
    const std::vector<CurvatureClass>& curvature_class() const { return classes_; }
    /// |integral of k ds - (2 pi + A)|.
    double gauss_bonnet_residual() const;

private:
    SampledCurve curve_;
    bool horocyclic_convex_ = false;
    std::vector<CurvatureClass> classes_;
};

/// Margin used to tell k > 1 from k = 1.
inline constexpr double kHorocyclicMargin = 1e-9;

/// Geodesic curvature det(x, x', x'') / |x'|^3 of a closed loop sampled on a
/// uniform parameter grid. Throws BadParametrization for samples off the
/// hyperboloid or a non-spacelike velocity.
std::vector<double> geodesic_curvature_h(std::span<const Vec3> points);

/// Same from explicit frame data.
std::vector<double> geodesic_curvature_h(std::span<const Vec3> points, std::span<const Vec3> d1,
                                         std::span<const Vec3> d2);

/// Curve at distance rho0 + sum(perturbations) from (1, 0, 0), parametrised
/// by the polar angle.
HyperbolicCurve hyperbolic_circle(double rho0, std::span<const Harmonic> perturbations, std::size_t n_samples);

HyperbolicCurve hyperbolic_from_samples(std::span<const Vec3> points, std::size_t n_samples, bool allow_nonconvex = false);

struct HorocyclicReport {
    bool horocyclic_convex = false;
    double min_k = 0.0;
    double param = 0.0;
};

HorocyclicReport check_horocyclic_convexity(const HyperbolicCurve& curve, double margin = kHorocyclicMargin);

struct HyperbolicFrontForms {
    double length = 0.0; ///< L cosh t + (2 pi + A) sinh t
    double area = 0.0;   ///< -2 pi + L sinh t + (2 pi + A) cosh t
};
HyperbolicFrontForms hyperbolic_front_forms(double L, double A, double t);

/// Throws NotHorocyclicallyConvex when the input is not horocyclically convex
/// and the front would develop a cusp, unless force is set.
Front propagate_hyperbolic(const HyperbolicCurve& curve, double t, bool force = false);

struct CollapseResult {
    double t = 0.0;          ///< -arccoth((2 pi + A) / L)
    double mean_k = 0.0;     ///< (2 pi + A) / L
    Front front;
    bool degenerate = false; ///< constant curvature: the front is a point
    std::size_t cusp_count = 0;
    bool theorem_applies = true; ///< false for forced non-convex runs
};

/// Throws NotHorocyclicallyConvex (unless force) and CothDomain.
CollapseResult collapse_front(const HyperbolicCurve& curve, bool force = false);

/// Semicircle of radius r with rounded corners and a slightly bent diameter.
struct RoundedSemicircleSpec {
    double r = 2.0;
    double corner_scale = 0.02;
    double flat_deviation = 0.05;
};

/// Curvature profile of the rounded semicircle, starting at
/// the midpoint of the bent diameter: flat arc, ramp up, ramp down to
/// coth r, circular arc, and the mirror image. The ramps are C-infinity
/// smooth steps.
struct SemicircleLayout {
    double flat_half = 0.0;   ///< half length of the bent diameter
    double ramp = 0.0;        ///< length of each curvature ramp
    double peak = 0.0;        ///< corner curvature
    double ramp_start = 0.0;  ///< curvature of the bent diameter
    double arc_curvature = 0.0; ///< coth r
    double arc_half = 0.0;    ///< half length of the circular arc
    double length = 0.0;
    double closure_error = 0.0;
    double curvature(double s) const;
};

/// Solves the two mirror-symmetry closure conditions for the flat and arc
/// lengths. Throws InvalidSpec for bad parameters or when closure fails.
SemicircleLayout rounded_semicircle_layout(const RoundedSemicircleSpec& spec);

HyperbolicCurve build_rounded_semicircle(const RoundedSemicircleSpec& spec, std::size_t n_samples);

/// pi (1 + cosh r) / (2 r + pi sinh r): average curvature of the exact semicircle.
double semicircle_mean_curvature(double r);

/// Root of coth r = semicircle_mean_curvature(r) on (0, 5], by bisection.
double counterexample_threshold(double xtol = 1e-12);

struct CounterexampleReport {
    RoundedSemicircleSpec spec;
    double threshold_r = 0.0;
    double coth_r = 0.0;
    double mean_k_exact = 0.0;    ///< semicircle formula
    double mean_k_measured = 0.0; ///< (2 pi + A) / L of the built curve
    double length = 0.0;
    double area = 0.0;
    double min_k = 0.0;
    bool convex = false;
    bool horocyclic_convex = false;
    bool mean_below_coth = false;
    std::vector<double> attainment_params;
    std::size_t attainment_count = 0;
    /// Below threshold nothing is expected; above it the count must be 2.
    bool counterexample = false;
};

CounterexampleReport counterexample_verdict(const RoundedSemicircleSpec& spec, std::size_t n_samples = 4096);

} // namespace fourpt
