#include "fourpt/io.hpp"

#include "fourpt/geometry_sphere.hpp"
#include "fourpt/sturm_hurwitz.hpp"
#include "fourpt/wavefront_euclidean.hpp"

#include "vector_series.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace fourpt {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorCode::SchemaError, msg); }

double number(const json& doc, const char* key, std::optional<double> fallback = std::nullopt) {
    if (!doc.contains(key)) {
        if (fallback) return *fallback;
        schema(std::string("missing field '") + key + "'");
    }
    const json& v = doc.at(key);
    if (!v.is_number()) schema(std::string("field '") + key + "' must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) schema(std::string("field '") + key + "' must be finite");
    return x;
}

std::vector<Harmonic> harmonics(const json& doc, const char* key, bool required) {
    std::vector<Harmonic> out;
    if (!doc.contains(key)) {
        if (required) schema(std::string("missing field '") + key + "'");
        return out;
    }
    const json& arr = doc.at(key);
    if (!arr.is_array()) schema(std::string("field '") + key + "' must be an array");
    for (const auto& term : arr) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() || !term[1].is_number() ||
            !term[2].is_number())
            schema(std::string("entries of '") + key + "' must be [harmonic, cos_amp, sin_amp]");
        const int n = term[0].get<int>();
        if (n < 0) schema("harmonic index must be non-negative");
        out.push_back({n, term[1].get<double>(), term[2].get<double>()});
    }
    return out;
}

std::vector<Vec3> point_list(const json& doc, Geometry g) {
    if (!doc.contains("points")) schema("missing field 'points'");
    const json& arr = doc.at("points");
    if (!arr.is_array()) schema("field 'points' must be an array");
    const std::size_t dim = g == Geometry::euclidean ? 2 : 3;
    std::vector<Vec3> out;
    out.reserve(arr.size());
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != dim)
            schema("each point must have " + std::to_string(dim) + " coordinates");
        for (const auto& c : p)
            if (!c.is_number()) schema("point coordinates must be numbers");
        out.push_back({p[0].get<double>(), p[1].get<double>(), dim == 3 ? p[2].get<double>() : 0.0});
    }
    return out;
}

bool allowed(Geometry g, const std::string& rep) {
    switch (g) {
    case Geometry::euclidean: return rep == "support_fourier" || rep == "ellipse" || rep == "samples";
    case Geometry::spherical:
        return rep == "perturbed_circle" || rep == "tennis_ball" || rep == "sphere_samples" || rep == "samples";
    case Geometry::hyperbolic:
        return rep == "hyperbolic_circle" || rep == "rounded_semicircle" || rep == "hyperboloid_samples" ||
               rep == "samples";
    }
    return false;
}

bool is_samples(const std::string& rep) {
    return rep == "samples" || rep == "sphere_samples" || rep == "hyperboloid_samples";
}

struct Plot {
    std::vector<std::vector<std::array<double, 2>>> lines;
    std::vector<std::string> strokes;
    std::vector<std::array<double, 2>> markers;
    bool unit_disc = false;
};

std::array<double, 2> project(Geometry g, const Vec3& x, const Vec3& e1, const Vec3& e2) {
    switch (g) {
    case Geometry::euclidean: return {x.x, x.y};
    case Geometry::spherical: return {dot(x, e1), dot(x, e2)};
    case Geometry::hyperbolic: return {x.y / x.x, x.z / x.x};
    }
    return {0.0, 0.0};
}

/// Orthonormal pair spanning the plane perpendicular to the view direction.
std::array<Vec3, 2> view_frame(const Vec3& centre) {
    const Vec3 c = norm(centre) > 0.0 ? normalized(centre) : Vec3{0.0, 0.0, 1.0};
    const Vec3 helper = std::abs(c.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    const Vec3 e1 = normalized(cross(helper, c));
    return {e1, cross(c, e1)};
}

std::string render(const Plot& plot) {
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x, hi_x = -lo_x, hi_y = -lo_x;
    auto grow = [&](const std::array<double, 2>& p) {
        lo_x = std::min(lo_x, p[0]);
        hi_x = std::max(hi_x, p[0]);
        lo_y = std::min(lo_y, p[1]);
        hi_y = std::max(hi_y, p[1]);
    };
    for (const auto& line : plot.lines)
        for (const auto& p : line) grow(p);
    if (plot.unit_disc) {
        grow({-1.0, -1.0});
        grow({1.0, 1.0});
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double pad = 0.05 * span;
    const double size = 600.0, scale = size / (span + 2.0 * pad);
    auto sx = [&](double x) { return (x - lo_x + pad) * scale; };
    auto sy = [&](double y) { return (hi_y - y + pad) * scale; };
    const double w = (hi_x - lo_x + 2.0 * pad) * scale, h = (hi_y - lo_y + 2.0 * pad) * scale;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_number(w) << "\" height=\""
       << format_number(h) << "\" viewBox=\"0 0 " << format_number(w) << ' ' << format_number(h) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (plot.unit_disc)
        os << "<circle cx=\"" << format_number(sx(0.0)) << "\" cy=\"" << format_number(sy(0.0)) << "\" r=\""
           << format_number(scale) << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
    for (std::size_t l = 0; l < plot.lines.size(); ++l) {
        os << "<polyline fill=\"none\" stroke=\"" << plot.strokes[l] << "\" stroke-width=\"1.2\" points=\"";
        const auto& line = plot.lines[l];
        for (std::size_t i = 0; i <= line.size(); ++i) {
            const auto& p = line[i % line.size()];
            os << format_number(sx(p[0])) << ',' << format_number(sy(p[1])) << (i == line.size() ? "" : " ");
        }
        os << "\"/>\n";
    }
    for (const auto& m : plot.markers)
        os << "<circle cx=\"" << format_number(sx(m[0])) << "\" cy=\"" << format_number(sy(m[1]))
           << "\" r=\"3\" fill=\"#d62728\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace

CurveSpec parse_curve_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object()) schema("curve spec must be a JSON object");

    CurveSpec spec;
    if (!doc.contains("geometry") || !doc["geometry"].is_string()) schema("missing string field 'geometry'");
    const auto g = geometry_from_string(doc["geometry"].get<std::string>());
    if (!g) schema("unknown geometry '" + doc["geometry"].get<std::string>() + "'");
    spec.geometry = *g;
    if (!doc.contains("representation") || !doc["representation"].is_string())
        schema("missing string field 'representation'");
    spec.representation = doc["representation"].get<std::string>();
    if (!allowed(spec.geometry, spec.representation))
        schema("representation '" + spec.representation + "' is not available for geometry '" +
               to_string(spec.geometry) + "'");

    if (doc.contains("n_samples")) {
        const json& n = doc["n_samples"];
        if (!n.is_number_integer() || n.get<long long>() < 16 || !is_power_of_two(n.get<std::size_t>()))
            schema("'n_samples' must be a power of two >= 16");
        spec.n_samples = n.get<std::size_t>();
    }

    const std::string& rep = spec.representation;
    if (rep == "support_fourier") {
        spec.coeffs = harmonics(doc, "coeffs", true);
        if (spec.coeffs.empty()) schema("'coeffs' must not be empty");
    } else if (rep == "ellipse") {
        spec.a = number(doc, "a");
        spec.b = number(doc, "b");
        if (!(spec.a > 0.0 && spec.b > 0.0)) schema("ellipse semi-axes must be positive");
    } else if (rep == "tennis_ball") {
        spec.a = number(doc, "a");
    } else if (rep == "perturbed_circle" || rep == "hyperbolic_circle") {
        spec.rho = number(doc, "rho");
        if (!(spec.rho > 0.0)) schema("'rho' must be positive");
        spec.perturbations = harmonics(doc, "perturbations", false);
    } else if (rep == "rounded_semicircle") {
        spec.semicircle.r = number(doc, "r", spec.semicircle.r);
        spec.semicircle.corner_scale = number(doc, "corner_scale", spec.semicircle.corner_scale);
        spec.semicircle.flat_deviation = number(doc, "flat_deviation", spec.semicircle.flat_deviation);
    } else if (is_samples(rep)) {
        spec.points = point_list(doc, spec.geometry);
        if (doc.contains("allow_nonconvex")) {
            if (!doc["allow_nonconvex"].is_boolean()) schema("'allow_nonconvex' must be a boolean");
            spec.allow_nonconvex = doc["allow_nonconvex"].get<bool>();
        }
    }
    return spec;
}

CurveSpec load_curve_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_spec(buf.str());
}

SampledCurve build_curve(const CurveSpec& spec, std::size_t n_samples) {
    const std::size_t n = n_samples ? n_samples : spec.n_samples;
    const std::string& rep = spec.representation;
    if (rep == "support_fourier") return build_oval(SupportOval::fourier(spec.coeffs, n));
    if (rep == "ellipse") return build_oval(SupportOval::ellipse(spec.a, spec.b, n));
    if (rep == "perturbed_circle") return perturbed_sphere_circle(spec.rho, spec.perturbations, n).curve();
    if (rep == "tennis_ball") return tennis_ball_curve(spec.a, n).curve();
    if (rep == "hyperbolic_circle") return hyperbolic_circle(spec.rho, spec.perturbations, n).curve();
    if (rep == "rounded_semicircle") return build_rounded_semicircle(spec.semicircle, n).curve();
    if (is_samples(rep)) return curve_from_samples(spec.geometry, spec.points, n, spec.allow_nonconvex);
    throw Error(ErrorCode::SchemaError, "unknown representation '" + rep + "'");
}

std::string format_number(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string profile_csv(const SampledCurve& curve) {
    const auto p = curvature_profile(curve);
    std::ostringstream os;
    os << "param,k,mean,deviation\n";
    for (std::size_t i = 0; i < p.values.size(); ++i)
        os << format_number(p.params[i]) << ',' << format_number(p.values[i]) << ',' << format_number(p.mean) << ','
           << format_number(p.values[i] - p.mean) << '\n';
    return os.str();
}

std::string spectrum_csv(const SampledCurve& curve) {
    if (curve.geometry != Geometry::euclidean)
        throw Error(ErrorCode::InvalidSpec, "the radius spectrum is defined for plane ovals");
    const auto sp = spectrum(radius_by_normal_angle(curve, curve.size()));
    std::ostringstream os;
    os << "n,cos_amp,sin_amp,magnitude\n";
    for (const auto& t : sp.harmonics)
        os << t.n << ',' << format_number(t.cos_amp) << ',' << format_number(t.sin_amp) << ','
           << format_number(t.magnitude()) << '\n';
    return os.str();
}

std::string curve_csv(const SampledCurve& c) {
    std::ostringstream os;
    switch (c.geometry) {
    case Geometry::euclidean:
        os << "s,x,y,k\n";
        for (std::size_t i = 0; i < c.size(); ++i)
            os << format_number(c.s[i]) << ',' << format_number(c.points[i].x) << ',' << format_number(c.points[i].y)
               << ',' << format_number(c.k[i]) << '\n';
        break;
    case Geometry::spherical: {
        std::vector<double> tau;
        try {
            tau = total_torsion(SphereCurve(c)).tau;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::FrenetBreakdown) throw;
        }
        os << "s,x,y,z,k_g,tau\n";
        for (std::size_t i = 0; i < c.size(); ++i)
            os << format_number(c.s[i]) << ',' << format_number(c.points[i].x) << ',' << format_number(c.points[i].y)
               << ',' << format_number(c.points[i].z) << ',' << format_number(c.k[i]) << ','
               << (tau.empty() ? std::string("nan") : format_number(tau[i])) << '\n';
        break;
    }
    case Geometry::hyperbolic:
        os << "s,x0,x1,x2,k\n";
        for (std::size_t i = 0; i < c.size(); ++i)
            os << format_number(c.s[i]) << ',' << format_number(c.points[i].x) << ',' << format_number(c.points[i].y)
               << ',' << format_number(c.points[i].z) << ',' << format_number(c.k[i]) << '\n';
        break;
    }
    return os.str();
}

std::string front_csv(const Front& f) {
    const SampledCurve& c = *f.base;
    std::ostringstream os;
    switch (c.geometry) {
    case Geometry::euclidean: os << "s,x,y,regularity\n"; break;
    case Geometry::spherical: os << "s,x,y,z,regularity\n"; break;
    case Geometry::hyperbolic: os << "s,x0,x1,x2,regularity\n"; break;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        os << format_number(c.s[i]) << ',' << format_number(f.points[i].x) << ',' << format_number(f.points[i].y);
        if (c.geometry != Geometry::euclidean) os << ',' << format_number(f.points[i].z);
        os << ',' << f.regularity[i] << '\n';
    }
    return os.str();
}

std::string curve_json(const SampledCurve& c) {
    nlohmann::ordered_json doc;
    doc["geometry"] = to_string(c.geometry);
    doc["n_samples"] = c.size();
    doc["length"] = c.L;
    doc["area"] = c.A;
    doc["mean_curvature"] = average_curvature(c);
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : c.points) {
        if (c.geometry == Geometry::euclidean) pts.push_back({p.x, p.y});
        else pts.push_back({p.x, p.y, p.z});
    }
    doc["points"] = std::move(pts);
    doc["s"] = c.s;
    doc["k"] = c.k;
    return doc.dump(2) + "\n";
}

std::string curve_svg(const SampledCurve& c) {
    const auto [e1, e2] = view_frame(c.centre);
    Plot plot;
    plot.unit_disc = c.geometry != Geometry::euclidean;
    auto& line = plot.lines.emplace_back();
    for (const auto& p : c.points) line.push_back(project(c.geometry, p, e1, e2));
    plot.strokes.push_back("#1f77b4");
    return render(plot);
}

std::string front_svg(const Front& f) {
    const SampledCurve& c = *f.base;
    const auto [e1, e2] = view_frame(c.centre);
    Plot plot;
    plot.unit_disc = c.geometry != Geometry::euclidean;
    auto& base = plot.lines.emplace_back();
    for (const auto& p : c.points) base.push_back(project(c.geometry, p, e1, e2));
    plot.strokes.push_back("#aaaaaa");
    auto& front = plot.lines.emplace_back();
    for (const auto& p : f.points) front.push_back(project(c.geometry, p, e1, e2));
    plot.strokes.push_back("#1f77b4");
    const detail::VectorSeries ys(f.points);
    for (double u : f.cusps) plot.markers.push_back(project(c.geometry, ys(u), e1, e2));
    return render(plot);
}

} // namespace fourpt
