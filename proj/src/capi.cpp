#include "fourpt/fourpt.h"

#include "fourpt/io.hpp"
#include "fourpt/report.hpp"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

struct fp_curve {
    fourpt::SampledCurve curve;
};

struct fp_front {
    fourpt::Front front;
};

namespace {

thread_local std::string g_last_error;

fp_status status_of(fourpt::ErrorCode code) {
    using fourpt::ErrorCode;
    switch (code) {
    case ErrorCode::NonConvex: return FP_ERR_NON_CONVEX;
    case ErrorCode::DegenerateSampling: return FP_ERR_DEGENERATE_SAMPLING;
    case ErrorCode::DegenerateProfile: return FP_ERR_DEGENERATE_PROFILE;
    case ErrorCode::NonUniformGrid: return FP_ERR_NON_UNIFORM_GRID;
    case ErrorCode::AllBelowTolerance: return FP_ERR_ALL_BELOW_TOLERANCE;
    case ErrorCode::AtCusp: return FP_ERR_AT_CUSP;
    case ErrorCode::NotContained: return FP_ERR_NOT_CONTAINED;
    case ErrorCode::BadParametrization: return FP_ERR_BAD_PARAMETRIZATION;
    case ErrorCode::NotInHemisphere: return FP_ERR_NOT_IN_HEMISPHERE;
    case ErrorCode::NotBisecting: return FP_ERR_NOT_BISECTING;
    case ErrorCode::FrenetBreakdown: return FP_ERR_FRENET_BREAKDOWN;
    case ErrorCode::NotHorocyclicallyConvex: return FP_ERR_NOT_HOROCYCLICALLY_CONVEX;
    case ErrorCode::CothDomain: return FP_ERR_COTH_DOMAIN;
    case ErrorCode::InvalidSpec: return FP_ERR_INVALID_SPEC;
    case ErrorCode::ParseError: return FP_ERR_PARSE;
    case ErrorCode::SchemaError: return FP_ERR_SCHEMA;
    }
    return FP_ERR_INTERNAL;
}

template <class F>
fp_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return FP_OK;
    } catch (const fourpt::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return FP_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FP_ERR_INTERNAL;
    }
}

fp_status invalid(const char* what) {
    g_last_error = what;
    return FP_ERR_INVALID_ARGUMENT;
}

char* copy_out(const std::string& s) {
    char* p = new char[s.size() + 1];
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

fourpt::VerifyOptions options(const fp_options* opt) {
    fourpt::VerifyOptions o;
    if (!opt) return o;
    if (opt->tol > 0.0) o.tol = opt->tol;
    o.crossing_tol = opt->crossing_tol;
    if (opt->t_grid && opt->n_t) o.t_grid.assign(opt->t_grid, opt->t_grid + opt->n_t);
    o.force = opt->force != 0;
    return o;
}

fourpt::Geometry geometry_of(fp_geometry g) {
    switch (g) {
    case FP_SPHERICAL: return fourpt::Geometry::spherical;
    case FP_HYPERBOLIC: return fourpt::Geometry::hyperbolic;
    default: return fourpt::Geometry::euclidean;
    }
}

} // namespace

extern "C" {

const char* fp_version(void) { return "1.0.0"; }

const char* fp_status_name(fp_status s) {
    switch (s) {
    case FP_OK: return "ok";
    case FP_ERR_NON_CONVEX: return "NonConvex";
    case FP_ERR_DEGENERATE_SAMPLING: return "DegenerateSampling";
    case FP_ERR_DEGENERATE_PROFILE: return "DegenerateProfile";
    case FP_ERR_NON_UNIFORM_GRID: return "NonUniformGrid";
    case FP_ERR_ALL_BELOW_TOLERANCE: return "AllBelowTolerance";
    case FP_ERR_AT_CUSP: return "AtCusp";
    case FP_ERR_NOT_CONTAINED: return "NotContained";
    case FP_ERR_BAD_PARAMETRIZATION: return "BadParametrization";
    case FP_ERR_NOT_IN_HEMISPHERE: return "NotInHemisphere";
    case FP_ERR_NOT_BISECTING: return "NotBisecting";
    case FP_ERR_FRENET_BREAKDOWN: return "FrenetBreakdown";
    case FP_ERR_NOT_HOROCYCLICALLY_CONVEX: return "NotHorocyclicallyConvex";
    case FP_ERR_COTH_DOMAIN: return "CothDomain";
    case FP_ERR_INVALID_SPEC: return "InvalidSpec";
    case FP_ERR_PARSE: return "ParseError";
    case FP_ERR_SCHEMA: return "SchemaError";
    case FP_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case FP_ERR_INTERNAL: return "Internal";
    }
    return "unknown";
}

const char* fp_last_error(void) { return g_last_error.c_str(); }

void fp_string_free(char* s) { delete[] s; }

fp_status fp_curve_from_json(const char* json, size_t n_samples, fp_curve** out) {
    if (!json || !out) return invalid("null argument");
    return guarded([&] {
        const auto spec = fourpt::parse_curve_spec(json);
        *out = new fp_curve{fourpt::build_curve(spec, n_samples)};
    });
}

fp_status fp_curve_from_file(const char* path, size_t n_samples, fp_curve** out) {
    if (!path || !out) return invalid("null argument");
    return guarded([&] {
        const auto spec = fourpt::load_curve_spec(path);
        *out = new fp_curve{fourpt::build_curve(spec, n_samples)};
    });
}

void fp_curve_free(fp_curve* c) { delete c; }

fp_status fp_curve_info_get(const fp_curve* c, fp_curve_info* out) {
    if (!c || !out) return invalid("null argument");
    return guarded([&] {
        const auto& k = c->curve.k;
        out->geometry = static_cast<fp_geometry>(c->curve.geometry);
        out->n_samples = c->curve.size();
        out->length = c->curve.L;
        out->area = c->curve.A;
        out->mean_curvature = fourpt::average_curvature(c->curve);
        out->min_curvature = *std::min_element(k.begin(), k.end());
        out->max_curvature = *std::max_element(k.begin(), k.end());
    });
}

fp_status fp_analyze(const fp_curve* c, const fp_options* opt, char** report_json) {
    if (!c || !report_json) return invalid("null argument");
    return guarded([&] { *report_json = copy_out(fourpt::dump(fourpt::analyze_report(c->curve, options(opt)))); });
}

fp_status fp_verify(const fp_curve* c, const fp_options* opt, char** report_json, int* all_pass) {
    if (!c || !report_json) return invalid("null argument");
    return guarded([&] {
        const auto r = fourpt::verify_report(c->curve, options(opt));
        if (all_pass) *all_pass = r.at("pass").get<bool>() ? 1 : 0;
        *report_json = copy_out(fourpt::dump(r));
    });
}

fp_status fp_verify_population(fp_geometry g, size_t count, uint64_t seed, size_t n_samples, const fp_options* opt,
                               char** report_json, int* all_pass) {
    if (!report_json) return invalid("null argument");
    if (count == 0) return invalid("population must not be empty");
    return guarded([&] {
        const auto r = fourpt::population_report(geometry_of(g), count, seed, n_samples, options(opt));
        if (all_pass) *all_pass = r.at("pass").get<bool>() ? 1 : 0;
        *report_json = copy_out(fourpt::dump(r));
    });
}

fp_status fp_propagate_report(const fp_curve* c, const double* t, size_t n_t, char** report_json) {
    if (!c || !report_json || (!t && n_t)) return invalid("null argument");
    return guarded([&] {
        *report_json = copy_out(fourpt::dump(fourpt::propagate_report(c->curve, std::span<const double>(t, n_t))));
    });
}

fp_status fp_counterexample(const double* r, size_t n_r, double corner_scale, double flat_deviation,
                            size_t n_samples, char** report_json, int* all_pass) {
    if (!r || !n_r || !report_json) return invalid("null argument");
    return guarded([&] {
        fourpt::RoundedSemicircleSpec shape;
        if (corner_scale > 0.0) shape.corner_scale = corner_scale;
        if (flat_deviation > 0.0) shape.flat_deviation = flat_deviation;
        const auto rep =
            fourpt::counterexample_report(std::span<const double>(r, n_r), shape, n_samples ? n_samples : 4096);
        if (all_pass) *all_pass = rep.at("pass").get<bool>() ? 1 : 0;
        *report_json = copy_out(fourpt::dump(rep));
    });
}

fp_status fp_curve_export(const fp_curve* c, const char* format, char** text) {
    if (!c || !format || !text) return invalid("null argument");
    const std::string f = format;
    if (f == "csv") return guarded([&] { *text = copy_out(fourpt::curve_csv(c->curve)); });
    if (f == "json") return guarded([&] { *text = copy_out(fourpt::curve_json(c->curve)); });
    if (f == "svg") return guarded([&] { *text = copy_out(fourpt::curve_svg(c->curve)); });
    if (f == "profile_csv") return guarded([&] { *text = copy_out(fourpt::profile_csv(c->curve)); });
    if (f == "spectrum_csv") return guarded([&] { *text = copy_out(fourpt::spectrum_csv(c->curve)); });
    return invalid("unknown export format");
}

fp_status fp_propagate(const fp_curve* c, double t, fp_front** out) {
    if (!c || !out) return invalid("null argument");
    return guarded([&] { *out = new fp_front{fourpt::propagate(c->curve, t)}; });
}

void fp_front_free(fp_front* f) { delete f; }

fp_status fp_front_info_get(const fp_front* f, fp_front_info* out) {
    if (!f || !out) return invalid("null argument");
    return guarded([&] {
        out->t = f->front.t;
        out->signed_length = f->front.signed_length;
        out->area = f->front.area;
        out->cusp_count = f->front.cusps.size();
        out->regular = std::all_of(f->front.factor.begin(), f->front.factor.end(), [](double v) { return v > 0.0; });
    });
}

fp_status fp_front_export(const fp_front* f, const char* format, char** text) {
    if (!f || !format || !text) return invalid("null argument");
    const std::string fmt = format;
    if (fmt == "csv") return guarded([&] { *text = copy_out(fourpt::front_csv(f->front)); });
    if (fmt == "svg") return guarded([&] { *text = copy_out(fourpt::front_svg(f->front)); });
    return invalid("unknown export format");
}

} // extern "C"
