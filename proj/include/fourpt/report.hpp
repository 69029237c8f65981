#pragma once

#include "fourpt/front.hpp"
#include "fourpt/geometry_hyperbolic.hpp"

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace fourpt {

inline constexpr int kSchemaVersion = 1;

using Report = nlohmann::ordered_json;

struct VerifyOptions {
    double tol = 1e-6;          ///< pass threshold for residuals and deviations
    double crossing_tol = -1.0; ///< <= 0 selects 1e-7 times the mean curvature
    std::vector<double> t_grid; ///< empty selects a grid suited to the curve
    bool force = false;         ///< run hyperbolic collapse on non-convex input
};

/// Default evolution times: 11 points on [-L/4pi, L/4pi] in the plane and on
/// [-0.3, 0.3] otherwise.
std::vector<double> default_t_grid(const SampledCurve& curve);

/// Curvature profile summary and attainment points.
Report analyze_report(const SampledCurve& curve, const VerifyOptions& opt);

/// Theorem suite for the curve's geometry. Every check carries a "pass" flag;
/// the top-level "pass" is their conjunction.
Report verify_report(const SampledCurve& curve, const VerifyOptions& opt);

/// Seeded random population: plane ovals, sphere curves or horocyclically
/// convex hyperbolic curves, each run through the population checks.
Report population_report(Geometry g, std::size_t count, std::uint64_t seed, std::size_t n_samples,
                         const VerifyOptions& opt);

/// One row per time of the front family.
Report propagate_report(const SampledCurve& curve, std::span<const double> t_grid);

/// Rounded-semicircle pipeline over a sweep of radii.
Report counterexample_report(std::span<const double> radii, const RoundedSemicircleSpec& shape, std::size_t n_samples);

/// Deterministic text form used for every JSON artifact.
std::string dump(const Report& r);

} // namespace fourpt
