#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fourpt {

/// Trigonometric interpolant of samples taken on the uniform grid
/// u_j = 2*pi*j/N, j = 0..N-1.
///
/// Holds the one-sided discrete Fourier coefficients c_n, n = 0..N/2, scaled so
/// that v(u) = c_0 + sum_{0<n<N/2} 2 Re(c_n e^{inu}) + c_{N/2} cos(N u / 2).
/// Grid derivatives and antiderivatives are spectral; point evaluation is
/// O(N), which is what the root refiners need.
class TrigSeries {
public:
    TrigSeries() = default;
    explicit TrigSeries(std::span<const double> samples);

    std::size_t size() const { return n_; }
    double mean() const { return c_.empty() ? 0.0 : c_[0].real(); }

    /// Real Fourier amplitudes: v = a_0 + sum a_n cos(nu) + b_n sin(nu).
    double cos_amp(std::size_t n) const;
    double sin_amp(std::size_t n) const;
    std::size_t nyquist() const { return n_ / 2; }

    /// Value (order 0) or derivative of the interpolant at an arbitrary u.
    double operator()(double u, int order = 0) const;

    /// Derivative of the given order sampled back on the grid.
    std::vector<double> derivative(int order) const;

    /// F(u_j) with F' = v and F(0) = 0; includes the secular term mean * u.
    std::vector<double> antiderivative() const;

private:
    std::vector<std::complex<double>> c_;
    std::size_t n_ = 0;
};

/// Spectral derivative of a periodic uniform sample sequence.
std::vector<double> spectral_derivative(std::span<const double> samples, int order);

/// Uniform grid u_j = 2*pi*j/n.
std::vector<double> uniform_grid(std::size_t n);

bool is_power_of_two(std::size_t n);

} // namespace fourpt
