#pragma once

#include "fourpt/front.hpp"

#include <span>
#include <vector>

namespace fourpt {

struct SteinerRow {
    double t = 0.0;
    double length = 0.0;          ///< measured signed length
    double length_formula = 0.0;  ///< L + 2 pi t
    double area = 0.0;            ///< measured algebraic area
    double area_formula = 0.0;    ///< A + L t + pi t^2
    double length_rel_err = 0.0;
    double area_rel_err = 0.0;
};

struct SteinerReport {
    std::vector<SteinerRow> rows;
    double max_rel_deviation = 0.0;
    /// max |dA_t/dt - L_t| / |L_t| from central differences on the grid
    /// (interior points of an evenly spaced grid).
    double max_area_rate_deviation = 0.0;
};

SteinerReport steiner_check(const SampledCurve& curve, std::span<const double> t_grid);

/// L_t^2 - 4 pi A_t from measured front quantities.
double isoperimetric_defect(const SampledCurve& curve, double t);

struct CriticalFront {
    Front front;
    MeanCrossings attainment;
    std::size_t cusp_count = 0;
    /// Largest distance between a cusp parameter and the nearest attainment
    /// parameter of the base curve.
    double max_param_mismatch = 0.0;
};

/// Front at t* = -L / 2 pi, whose cusps sit where the base curvature equals
/// its average. Throws DegenerateProfile for circles.
CriticalFront critical_front(const SampledCurve& curve, double tol = -1.0);

/// Locates the attainment parameters with count_mean_crossings, then runs the
/// generic front-curvature check.
LemmaReport propagation_lemma_check(const SampledCurve& curve, std::span<const double> t_grid);

struct EnclosureReport {
    double inner_length = 0.0;
    double outer_length = 0.0;
    double margin = 0.0;
    bool pass = false;
};

/// A convex curve strictly inside a closed polygonal loop is shorter than it.
/// Throws NotContained when a sample of the inner curve is not strictly
/// inside the loop.
EnclosureReport enclosure_inequality_check(const SampledCurve& inner, std::span<const Vec3> outer);

/// Euclidean winding number of a closed polygon around a point.
int winding_number(std::span<const Vec3> loop, const Vec3& p);

} // namespace fourpt
