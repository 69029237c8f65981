#pragma once

// Reference computations that share no code with the library: dense scans,
// closed forms and plain composite quadrature.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

/// Roots of a 2 pi periodic function located by a dense sign scan and
/// polished by bisection. The scan starts off-grid so that roots at simple
/// multiples of pi fall inside a cell; results are reduced to [0, 2 pi).
inline std::vector<double> periodic_roots(const std::function<double(double)>& f, int n = 200000) {
    std::vector<double> roots;
    const double h = 2 * pi / n, u0 = 0.123456789 * h;
    double a = u0, fa = f(u0);
    for (int i = 1; i <= n; ++i) {
        const double b = u0 + i * h, fb = f(b);
        if ((fa < 0) != (fb < 0)) {
            double lo = a, hi = b, flo = fa;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi), fm = f(mid);
                if ((fm < 0) == (flo < 0)) lo = mid, flo = fm;
                else hi = mid;
            }
            roots.push_back(std::fmod(0.5 * (lo + hi), 2 * pi));
        }
        a = b, fa = fb;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Composite Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f(a + i * h);
    return s * h / 3;
}

/// Perimeter of the ellipse with semi-axes a and b.
inline double ellipse_perimeter(double a, double b) {
    return simpson([&](double t) { return std::hypot(a * std::sin(t), b * std::cos(t)); }, 0, 2 * pi);
}

/// Curvature radius of the ellipse x = a cos, y = b sin as a function of the
/// outward normal angle.
inline double ellipse_radius(double a, double b, double alpha) {
    const double h = std::sqrt(a * a * std::cos(alpha) * std::cos(alpha) + b * b * std::sin(alpha) * std::sin(alpha));
    return a * a * b * b / (h * h * h);
}

inline double coth(double x) { return std::cosh(x) / std::sinh(x); }

} // namespace oracle
