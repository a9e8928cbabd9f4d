#include "hypmorse/hypmorse.h"

#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "hypmorse/error.hpp"
#include "hypmorse/harness.hpp"

using namespace hypmorse;

struct hm_context {
    std::string last_error;
    std::optional<harness::CalibrationRecord> calibration;
    harness::Tolerances tolerances = harness::default_tolerances();
};

struct hm_report {
    std::string suite;
    harness::CalibrationRecord calibration;
    std::vector<harness::IdentityReport> reports;
};

namespace {

hm_status fail(hm_context* ctx, hm_status s, const std::string& msg) {
    if (ctx) ctx->last_error = msg;
    return s;
}

// Runs f, translating exceptions into status codes and the context message.
template <class F>
hm_status guarded(hm_context* ctx, F&& f) {
    if (!ctx) return HM_INVALID_ARGUMENT;
    ctx->last_error.clear();
    try {
        return f();
    } catch (const Error& e) {
        return fail(ctx, static_cast<hm_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::bad_alloc&) {
        return fail(ctx, HM_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ctx, HM_INTERNAL, e.what());
    }
}

hm_status ensure_calibrated(hm_context* ctx) {
    if (!ctx->calibration) ctx->calibration = harness::calibrate(harness::tolerance(ctx->tolerances, "calibration_accept"));
    if (!ctx->calibration->ok) return fail(ctx, HM_CALIBRATION, "calibration failed: " + ctx->calibration->message);
    return HM_OK;
}

}  // namespace

extern "C" {

const char* hm_status_name(hm_status s) {
    switch (s) {
        case HM_OK: return "ok";
        case HM_INTERNAL: return "internal";
        default:
            if (s >= HM_INVALID_ARGUMENT && s <= HM_IO) return to_string(static_cast<ErrorCode>(s));
            return "unknown";
    }
}

hm_status hm_context_create(hm_context** out) {
    if (!out) return HM_INVALID_ARGUMENT;
    try {
        *out = new hm_context;
        return HM_OK;
    } catch (...) {
        *out = nullptr;
        return HM_INTERNAL;
    }
}

void hm_context_destroy(hm_context* ctx) { delete ctx; }

const char* hm_last_error(const hm_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

hm_status hm_calibrate(hm_context* ctx) {
    return guarded(ctx, [&] {
        ctx->calibration.reset();
        return ensure_calibrated(ctx);
    });
}

int hm_is_calibrated(const hm_context* ctx) { return ctx && ctx->calibration && ctx->calibration->ok; }

hm_status hm_calibration_save(hm_context* ctx, const char* path) {
    return guarded(ctx, [&] {
        if (!path) return fail(ctx, HM_INVALID_ARGUMENT, "null path");
        if (!ctx->calibration) return fail(ctx, HM_CALIBRATION, "no calibration record");
        harness::save_calibration(*ctx->calibration, path);
        return HM_OK;
    });
}

hm_status hm_calibration_load(hm_context* ctx, const char* path) {
    return guarded(ctx, [&] {
        if (!path) return fail(ctx, HM_INVALID_ARGUMENT, "null path");
        ctx->calibration = harness::load_calibration(path);
        return ensure_calibrated(ctx);
    });
}

hm_status hm_set_tolerances_file(hm_context* ctx, const char* path) {
    return guarded(ctx, [&] {
        if (!path) return fail(ctx, HM_INVALID_ARGUMENT, "null path");
        ctx->tolerances = harness::load_tolerance_overrides(harness::default_tolerances(), path);
        return HM_OK;
    });
}

void hm_params_default(hm_params* p) {
    if (!p) return;
    const harness::EvalParams d;
    *p = hm_params{d.k, d.mu.real(), d.mu.imag(), d.lambda, d.x, d.y, d.xp, d.yp, d.X, d.Xp, d.t, d.b};
}

hm_status hm_eval(hm_context* ctx, const char* kernel, const hm_params* p, hm_value* out) {
    return guarded(ctx, [&] {
        if (!kernel || !p || !out) return fail(ctx, HM_INVALID_ARGUMENT, "null argument");
        if (const hm_status s = ensure_calibrated(ctx); s != HM_OK) return s;
        harness::EvalParams e;
        e.k = p->k;
        e.mu = {p->mu_re, p->mu_im};
        e.lambda = p->lambda;
        e.x = p->x;
        e.y = p->y;
        e.xp = p->xp;
        e.yp = p->yp;
        e.X = p->X;
        e.Xp = p->Xp;
        e.t = p->t;
        e.b = p->b;
        const auto r = harness::evaluate_kernel(kernel, e, ctx->calibration->conventions);
        *out = hm_value{r.value.real(), r.value.imag(), r.err_estimate, r.converged ? 1 : 0};
        return HM_OK;
    });
}

hm_status hm_verify(hm_context* ctx, const char* suite, hm_report** out) {
    return guarded(ctx, [&] {
        if (!suite || !out) return fail(ctx, HM_INVALID_ARGUMENT, "null argument");
        *out = nullptr;
        if (const hm_status s = ensure_calibrated(ctx); s != HM_OK) return s;
        auto rep = std::make_unique<hm_report>();
        rep->suite = suite;
        rep->calibration = *ctx->calibration;
        rep->reports = harness::run_suite(suite, ctx->tolerances, *ctx->calibration);
        *out = rep.release();
        return HM_OK;
    });
}

int hm_report_passed(const hm_report* r) {
    if (!r) return 0;
    for (const auto& x : r->reports)
        if (!x.passed) return 0;
    return 1;
}

size_t hm_report_count(const hm_report* r) { return r ? r->reports.size() : 0; }

hm_status hm_report_get(const hm_report* r, size_t i, hm_identity* out) {
    if (!r || !out || i >= r->reports.size()) return HM_INVALID_ARGUMENT;
    const auto& x = r->reports[i];
    *out = hm_identity{x.identity_id.c_str(), x.grid_spec.c_str(), x.worst_point.c_str(), x.note.c_str(),
                       x.max_rel_err,         x.tolerance,         x.literal_rel_err,     x.runtime_ms,
                       x.n_points,            x.n_errors,          x.passed ? 1 : 0};
    return HM_OK;
}

hm_status hm_report_write_json(hm_context* ctx, const hm_report* r, const char* path) {
    return guarded(ctx, [&] {
        if (!r || !path) return fail(ctx, HM_INVALID_ARGUMENT, "null argument");
        std::ofstream out(path);
        if (!out) return fail(ctx, HM_IO, std::string("cannot write ") + path);
        out << harness::reports_to_json(r->suite, r->calibration, r->reports) << "\n";
        return out ? HM_OK : fail(ctx, HM_IO, std::string("write failed for ") + path);
    });
}

void hm_report_destroy(hm_report* r) { delete r; }

hm_status hm_grid(hm_context* ctx, const char* kernel, const char* spec_path, const char* csv_path,
                  size_t* n_failed) {
    return guarded(ctx, [&] {
        if (!kernel || !spec_path || !csv_path) return fail(ctx, HM_INVALID_ARGUMENT, "null argument");
        const auto spec = harness::load_grid_spec(spec_path);
        if (const hm_status s = ensure_calibrated(ctx); s != HM_OK) return s;
        const int failed = harness::grid_eval(kernel, spec, ctx->calibration->conventions, csv_path);
        if (n_failed) *n_failed = static_cast<size_t>(failed);
        return HM_OK;
    });
}

}  // extern "C"
