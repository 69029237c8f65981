#include "fourpt/periodic.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace fourpt {

namespace {

// The FFTW planner is not reentrant; plan execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

std::vector<std::complex<double>> forward(std::span<const double> x) {
    const int n = static_cast<int>(x.size());
    std::vector<double> in(x.begin(), x.end());
    std::vector<std::complex<double>> out(x.size() / 2 + 1);
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(n, in.data(), reinterpret_cast<fftw_complex*>(out.data()),
                                    FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    const double scale = 1.0 / n;
    for (auto& c : out) c *= scale;
    return out;
}

std::vector<double> backward(std::vector<std::complex<double>> c, std::size_t n) {
    std::vector<double> out(n);
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_c2r_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(c.data()),
                                    out.data(), FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

std::complex<double> ipow(double n, int order) {
    std::complex<double> f(1.0, 0.0);
    for (int k = 0; k < order; ++k) f *= std::complex<double>(0.0, n);
    return f;
}

} // namespace

TrigSeries::TrigSeries(std::span<const double> samples) : n_(samples.size()) {
    if (n_ < 2 || n_ % 2 != 0) throw std::invalid_argument("TrigSeries needs an even sample count");
    c_ = forward(samples);
}

double TrigSeries::cos_amp(std::size_t n) const {
    if (n == 0) return c_[0].real();
    if (n == nyquist()) return c_[n].real();
    return 2.0 * c_[n].real();
}

double TrigSeries::sin_amp(std::size_t n) const {
    if (n == 0 || n == nyquist()) return 0.0;
    return -2.0 * c_[n].imag();
}

double TrigSeries::operator()(double u, int order) const {
    const std::size_t m = nyquist();
    const std::complex<double> w = std::polar(1.0, u);
    std::complex<double> z = w;
    double acc = order == 0 ? c_[0].real() : 0.0;
    for (std::size_t n = 1; n < m; ++n) {
        acc += 2.0 * (c_[n] * ipow(static_cast<double>(n), order) * z).real();
        z *= w;
    }
    // Nyquist term c_m cos(m u), differentiated exactly.
    const double md = static_cast<double>(m);
    acc += c_[m].real() * std::pow(md, order) *
           std::cos(md * u + order * std::numbers::pi / 2.0);
    return acc;
}

std::vector<double> TrigSeries::derivative(int order) const {
    auto d = c_;
    const std::size_t m = nyquist();
    for (std::size_t n = 0; n <= m; ++n) d[n] *= ipow(static_cast<double>(n), order);
    if (order % 2 == 1) d[m] = 0.0;
    return backward(std::move(d), n_);
}

std::vector<double> TrigSeries::antiderivative() const {
    auto d = c_;
    const std::size_t m = nyquist();
    d[0] = 0.0;
    d[m] = 0.0;
    for (std::size_t n = 1; n < m; ++n) d[n] /= std::complex<double>(0.0, static_cast<double>(n));
    auto out = backward(std::move(d), n_);
    const double f0 = out[0];
    const double mean = c_[0].real();
    const double du = 2.0 * std::numbers::pi / static_cast<double>(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] += mean * du * static_cast<double>(j) - f0;
    return out;
}

std::vector<double> spectral_derivative(std::span<const double> samples, int order) {
    return TrigSeries(samples).derivative(order);
}

std::vector<double> uniform_grid(std::size_t n) {
    std::vector<double> u(n);
    for (std::size_t j = 0; j < n; ++j) u[j] = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
    return u;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace fourpt
