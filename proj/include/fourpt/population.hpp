#pragma once

#include "fourpt/geometry_hyperbolic.hpp"
#include "fourpt/geometry_sphere.hpp"

#include <cstdint>
#include <vector>

namespace fourpt {

/// Support functions 1 + sum of harmonics lo..hi with amplitudes drawn
/// uniformly and rejected until the curvature radius stays above 0.05.
std::vector<SupportOval> random_ovals(std::size_t count, std::uint64_t seed, std::size_t n_samples, int lo = 2,
                                      int hi = 8);

/// Perturbed circles of polar radius in [0.5, 1.1] with k_g >= 0.05 and a
/// containing open hemisphere.
std::vector<SphereCurve> random_sphere_curves(std::size_t count, std::uint64_t seed, std::size_t n_samples);

/// Perturbed hyperbolic circles with min k >= 1.05.
std::vector<HyperbolicCurve> random_horocyclic_curves(std::size_t count, std::uint64_t seed, std::size_t n_samples);

} // namespace fourpt
