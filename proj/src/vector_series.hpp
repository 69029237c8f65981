#pragma once

#include "fourpt/periodic.hpp"
#include "fourpt/vec.hpp"

#include <span>
#include <vector>

namespace fourpt::detail {

inline std::vector<double> coordinate(std::span<const Vec3> v, int axis) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i][axis];
    return out;
}

/// Trigonometric interpolant of a closed sampled loop in R^3.
class VectorSeries {
public:
    explicit VectorSeries(std::span<const Vec3> points)
        : x_(coordinate(points, 0)), y_(coordinate(points, 1)), z_(coordinate(points, 2)) {}

    Vec3 operator()(double u, int order = 0) const { return {x_(u, order), y_(u, order), z_(u, order)}; }

    std::vector<Vec3> derivative(int order) const {
        const auto dx = x_.derivative(order), dy = y_.derivative(order), dz = z_.derivative(order);
        std::vector<Vec3> out(dx.size());
        for (std::size_t i = 0; i < dx.size(); ++i) out[i] = {dx[i], dy[i], dz[i]};
        return out;
    }

private:
    TrigSeries x_, y_, z_;
};

inline std::vector<Vec3> spectral_vectors(std::span<const Vec3> points, int order) {
    return VectorSeries(points).derivative(order);
}

} // namespace fourpt::detail
