#pragma once

#include "fourpt/curve_model.hpp"

#include <memory>
#include <span>
#include <vector>

namespace fourpt {

/// Equidistant evolution in a space of constant curvature K:
///   front point  y = C(t) x + S(t) nu            (nu the outward unit normal)
///   regularity   C(t) + k S(t)
///   curvature    (k C(t) + C'(t)) / (C(t) + k S(t))
/// with (C, S) = (1, t), (cos t, sin t), (cosh t, sinh t) for K = 0, 1, -1.
struct PropagationCoeffs {
    double C = 1.0;
    double S = 0.0;
    double dC = 0.0;
};

PropagationCoeffs propagation_coeffs(Geometry g, double t);

/// Wavefront gamma_t of a cooriented closed curve, positive t outward.
struct Front {
    std::shared_ptr<const SampledCurve> base;
    double t = 0.0;
    std::vector<Vec3> points;
    std::vector<Vec3> velocity;
    std::vector<double> factor;   ///< C + k S per sample
    std::vector<int> regularity;  ///< sign of factor
    std::vector<double> cusps;    ///< parameters where the factor vanishes
    double signed_length = 0.0;   ///< integral of factor ds over the base
    double area = 0.0;            ///< algebraic area, about the base centre
    double winding = 0.0;         ///< tangent-line turns (plane only)

    std::size_t size() const { return points.size(); }
};

Front propagate(std::shared_ptr<const SampledCurve> base, double t);
Front propagate(const SampledCurve& base, double t);

/// Front curvature at sample i from the base curvature. Throws AtCusp within
/// the 1e-6 parameter guard band of a cusp.
double front_curvature(const Front& front, std::size_t i);

/// Average curvature of the front, (2 pi - K A_t) / L_t, from measured values.
double front_average_curvature(const Front& front);

/// L^2 - A (4 pi - K A).
double isoperimetric_defect(Geometry g, double length, double area);

/// Signed front curvature measured from the front's own geometry at an
/// arbitrary parameter (trigonometric interpolation of the front points).
/// Orientation follows the base tangent, so the sign matches the formula.
double measured_front_curvature(const Front& front, double u);

/// Measured signed front curvature on the sample grid.
std::vector<double> measured_front_curvature_samples(const Front& front);

/// Regular front (factor > 0 everywhere) re-read as a curve in its own right.
SampledCurve front_as_curve(const Front& front);

struct LemmaReport {
    std::vector<double> attainment_params;
    std::vector<double> t_grid;
    std::vector<double> max_deviation_per_t;
    double max_deviation = 0.0;
};

/// Compares the measured front curvature at each attainment parameter with
/// the measured average curvature of the front, over a grid of times.
LemmaReport propagation_lemma_check(const SampledCurve& curve, std::span<const double> t_grid,
                                    std::span<const double> attainment_params);

struct DefectReport {
    std::vector<double> t_grid;
    std::vector<double> defect;
    double base_defect = 0.0;
    double max_rel_deviation = 0.0;
};

DefectReport defect_invariance(const SampledCurve& curve, std::span<const double> t_grid);

/// |central difference of L_t - (2 pi - K A_t)| at t.
double length_rate_residual(const SampledCurve& curve, double t, double step = 1e-3);

/// Max metric distance between propagate(propagate(c, t1), t2) and
/// propagate(c, t1 + t2). The intermediate front must be regular.
double semigroup_deviation(const SampledCurve& curve, double t1, double t2);

/// n evenly spaced values from start to stop inclusive.
std::vector<double> linspace(double start, double stop, std::size_t n);

} // namespace fourpt
