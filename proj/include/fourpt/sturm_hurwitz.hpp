#pragma once

#include "fourpt/curve_model.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fourpt {

struct SpectrumTerm {
    int n = 0;
    double cos_amp = 0.0;
    double sin_amp = 0.0;
    double magnitude() const;
};

/// Fourier harmonics 0..n_max of a periodic sample sequence.
struct Spectrum {
    std::vector<SpectrumTerm> harmonics;
    int n_max = 0;
    double source_mean = 0.0;

    /// Largest magnitude among harmonics n >= 1.
    double max_amplitude() const;
};

/// Discrete orthogonal projection of uniformly spaced periodic samples onto
/// cos(n u), sin(n u). n_max defaults to N/4 and may not exceed it.
Spectrum spectrum(std::span<const double> values, int n_max = -1);

/// As above, after checking that params form a uniform grid of period 2 pi.
Spectrum spectrum(std::span<const double> params, std::span<const double> values, int n_max = -1);

/// |sum (a_n^2 + b_n^2)/2 - mean square of the centred samples|, relative to
/// the mean square.
double parseval_residual(const Spectrum& sp, std::span<const double> values);

/// 1e-9 times the largest harmonic amplitude.
double default_amp_tol(const Spectrum& sp);

/// Smallest n >= 1 whose amplitude exceeds amp_tol; nullopt when none does.
std::optional<int> first_nontrivial_harmonic(const Spectrum& sp, double amp_tol);

/// Cyclic sign changes counted with a +-tol hysteresis band. Always even.
/// Throws AllBelowTolerance when no sample leaves the band.
int count_sign_changes(std::span<const double> values, double tol);

struct SturmHurwitzReport {
    std::optional<int> first_harmonic; ///< m
    int sign_changes = 0;              ///< z
    bool degenerate = false;           ///< function indistinguishable from zero
    bool pass = false;                 ///< z >= 2m
    double removed_mean = 0.0;
};

/// Centres the samples, then checks z >= 2m.
SturmHurwitzReport verify_sturm_hurwitz(std::span<const double> values);

/// Curvature radius of a plane oval resampled on a uniform grid of m
/// outward-normal directions starting at the normal of sample 0.
std::vector<double> radius_by_normal_angle(const SampledCurve& oval, std::size_t m);

} // namespace fourpt
