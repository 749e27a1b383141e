#include "fracdim/fracdim.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "core/csv.hpp"
#include "core/dimension.hpp"
#include "core/frint.hpp"
#include "core/parallel.hpp"
#include "core/surface.hpp"
#include "core/variation.hpp"

struct fracdim_surface {
    fracdim::SampledSurface impl;
};

namespace {

thread_local std::string t_last_error;

fracdim_status to_status(fracdim::errc code) {
    switch (code) {
        case fracdim::errc::invalid_argument: return FRACDIM_ERR_INVALID_ARGUMENT;
        case fracdim::errc::domain_error: return FRACDIM_ERR_DOMAIN;
        case fracdim::errc::format_error: return FRACDIM_ERR_FORMAT;
        case fracdim::errc::guard_error: return FRACDIM_ERR_GUARD;
        case fracdim::errc::io_error: return FRACDIM_ERR_IO;
        case fracdim::errc::numeric_error: return FRACDIM_ERR_NUMERIC;
    }
    return FRACDIM_ERR_INVALID_ARGUMENT;
}

// Runs fn, routing exceptions into status codes + the thread-local message.
template <class Fn>
fracdim_status guarded(Fn&& fn) {
    try {
        fn();
        return FRACDIM_OK;
    } catch (const fracdim::error& e) {
        t_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return FRACDIM_ERR_GUARD;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return FRACDIM_ERR_INVALID_ARGUMENT;
    }
}

fracdim_status require(bool ok, const char* msg) {
    if (ok) return FRACDIM_OK;
    t_last_error = msg;
    return FRACDIM_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* fracdim_last_error(void) { return t_last_error.c_str(); }

const char* fracdim_version(void) { return "0.1.0"; }

void fracdim_set_max_threads(int n) { fracdim::set_max_threads(n); }

fracdim_status fracdim_surface_create(const double* values, int nx, int ny, double a, double b, double c,
                                      double d, fracdim_surface** out) {
    if (auto st = require(values && out, "values and out must be non-NULL")) return st;
    return guarded([&] {
        if (nx < 2 || ny < 2)
            throw fracdim::error(fracdim::errc::invalid_argument, "grid requires nx >= 2 and ny >= 2");
        std::vector<double> v(values, values + static_cast<std::size_t>(nx) * ny);
        *out = new fracdim_surface{
            fracdim::SampledSurface({a, b, c, d}, {nx, ny}, std::move(v))};
    });
}

fracdim_status fracdim_surface_generate(const char* spec, double a, double b, double c, double d, int nx,
                                        int ny, fracdim_surface** out) {
    if (auto st = require(spec && out, "spec and out must be non-NULL")) return st;
    return guarded([&] {
        const fracdim::GeneratorSpec g = fracdim::parse_generator(spec);
        *out = new fracdim_surface{fracdim::sample(g, {a, b, c, d}, {nx, ny})};
    });
}

fracdim_status fracdim_surface_read_csv(const char* path, fracdim_surface** out) {
    if (auto st = require(path && out, "path and out must be non-NULL")) return st;
    return guarded([&] { *out = new fracdim_surface{fracdim::read_surface_csv_file(path)}; });
}

fracdim_status fracdim_surface_write_csv(const fracdim_surface* s, const char* path) {
    if (auto st = require(s && path, "surface and path must be non-NULL")) return st;
    return guarded([&] { fracdim::write_surface_csv_file(path, s->impl); });
}

void fracdim_surface_destroy(fracdim_surface* s) { delete s; }

int fracdim_surface_nx(const fracdim_surface* s) { return s ? s->impl.nx() : 0; }

int fracdim_surface_ny(const fracdim_surface* s) { return s ? s->impl.ny() : 0; }

void fracdim_surface_domain(const fracdim_surface* s, double bounds[4]) {
    if (!s || !bounds) return;
    bounds[0] = s->impl.domain().a;
    bounds[1] = s->impl.domain().b;
    bounds[2] = s->impl.domain().c;
    bounds[3] = s->impl.domain().d;
}

fracdim_status fracdim_surface_value(const fracdim_surface* s, int i, int j, double* out) {
    if (auto st = require(s && out, "surface and out must be non-NULL")) return st;
    if (auto st = require(i >= 0 && i < s->impl.nx() && j >= 0 && j < s->impl.ny(), "node index out of range"))
        return st;
    *out = s->impl.at(i, j);
    return FRACDIM_OK;
}

const double* fracdim_surface_values(const fracdim_surface* s) {
    return s ? s->impl.values().data() : nullptr;
}

fracdim_status fracdim_mixed_integral(const fracdim_surface* f, double gamma1, double gamma2,
                                      fracdim_surface** out) {
    if (auto st = require(f && out, "surface and out must be non-NULL")) return st;
    return guarded([&] {
        fracdim::IntegralResult r = fracdim::mixed_rl_integral(f->impl, {gamma1, gamma2});
        *out = new fracdim_surface{std::move(r.surface)};
    });
}

fracdim_status fracdim_semigroup_defect(const fracdim_surface* f, double gamma1, double gamma2,
                                        double gamma1b, double gamma2b, double* out) {
    if (auto st = require(f && out, "surface and out must be non-NULL")) return st;
    return guarded(
        [&] { *out = fracdim::semigroup_defect(f->impl, {gamma1, gamma2}, {gamma1b, gamma2b}); });
}

fracdim_status fracdim_rl_integral_1d(const double* samples, int n, double a, double b, double gamma,
                                      double* out) {
    if (auto st = require(samples && out, "samples and out must be non-NULL")) return st;
    return guarded([&] {
        const std::vector<double> r =
            fracdim::rl_integral_1d(std::span<const double>(samples, static_cast<std::size_t>(n < 0 ? 0 : n)),
                                    a, b, gamma);
        std::memcpy(out, r.data(), r.size() * sizeof(double));
    });
}

fracdim_status fracdim_box_count(const fracdim_surface* s, int k, long long* out) {
    if (auto st = require(s && out, "surface and out must be non-NULL")) return st;
    return guarded([&] { *out = fracdim::box_count(s->impl, k); });
}

fracdim_status fracdim_box_dimension(const fracdim_surface* s, int k_min, int k_max, double* deltas,
                                     long long* counts, double* slope, double* intercept,
                                     double* r_squared) {
    if (auto st = require(s != nullptr, "surface must be non-NULL")) return st;
    return guarded([&] {
        const fracdim::DimensionEstimate est = fracdim::estimate_box_dimension(s->impl, k_min, k_max);
        for (std::size_t i = 0; i < est.levels.size(); ++i) {
            if (deltas) deltas[i] = est.levels[i].delta;
            if (counts) counts[i] = est.levels[i].count;
        }
        if (slope) *slope = est.slope;
        if (intercept) *intercept = est.intercept;
        if (r_squared) *r_squared = est.r_squared;
    });
}

fracdim_status fracdim_holder_exponent(const fracdim_surface* s, int k_min, int k_max, double* lags,
                                       double* sups, int* defined, double* exponent, double* r_squared) {
    if (auto st = require(s && defined, "surface and defined must be non-NULL")) return st;
    return guarded([&] {
        const fracdim::HolderEstimate est = fracdim::holder_exponent(s->impl, k_min, k_max);
        for (std::size_t i = 0; i < est.lags.size(); ++i) {
            if (lags) lags[i] = est.lags[i].h;
            if (sups) sups[i] = est.lags[i].sup_increment;
        }
        *defined = est.exponent.has_value() ? 1 : 0;
        if (est.exponent) {
            if (exponent) *exponent = *est.exponent;
            if (r_squared) *r_squared = est.r_squared;
        }
    });
}

fracdim_status fracdim_line_variation(const fracdim_surface* s, char axis, int index, int from, int to,
                                      double* out) {
    if (auto st = require(s && out, "surface and out must be non-NULL")) return st;
    if (auto st = require(axis == 'x' || axis == 'y', "axis must be 'x' or 'y'")) return st;
    return guarded([&] {
        *out = fracdim::line_variation(s->impl, axis == 'x' ? fracdim::Axis::x : fracdim::Axis::y, index,
                                       from, to);
    });
}

fracdim_status fracdim_arzela_lower_bound(const fracdim_surface* s, double* out) {
    if (auto st = require(s && out, "surface and out must be non-NULL")) return st;
    return guarded([&] { *out = fracdim::arzela_variation_lb(s->impl); });
}

fracdim_status fracdim_is_bimonotone(const fracdim_surface* s, int* out) {
    if (auto st = require(s && out, "surface and out must be non-NULL")) return st;
    return guarded([&] { *out = fracdim::is_bimonotone(s->impl) ? 1 : 0; });
}

}  // extern "C"
