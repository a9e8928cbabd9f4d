// hypmorse: command-line front end over the C API.
//
//   hypmorse eval --kernel mres --k 0.5 --mu 0,-1.2 --X 0 --Xp 0.3
//   hypmorse verify --suite all --report report.json
//   hypmorse calibrate --out calibration.json
//   hypmorse grid --kernel hheat --spec grid.txt --out grid.csv
//
// Exit codes: 0 success, 1 identity failure, 2 usage, configuration or
// evaluation error, 3 calibration failure.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "hypmorse/hypmorse.h"

namespace {

enum Exit { kOk = 0, kIdentityFailure = 1, kUsage = 2, kCalibration = 3 };

struct Context {
    hm_context* ctx = nullptr;
    Context() {
        if (hm_context_create(&ctx) != HM_OK) {
            std::fprintf(stderr, "hypmorse: cannot create context\n");
            std::exit(kUsage);
        }
    }
    ~Context() { hm_context_destroy(ctx); }
    Context(const Context&) = delete;
    Context& operator=(const Context&) = delete;
};

int report(hm_context* ctx, hm_status s, const char* what) {
    std::fprintf(stderr, "hypmorse: %s: %s (%s)\n", what, hm_last_error(ctx), hm_status_name(s));
    return s == HM_CALIBRATION ? kCalibration : kUsage;
}

// "re,im" or "x,y".
bool parse_pair(const std::string& text, std::pair<double, double>& out) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return false;
    try {
        std::size_t n1 = 0, n2 = 0;
        const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
        out.first = std::stod(a, &n1);
        out.second = std::stod(b, &n2);
        return n1 == a.size() && n2 == b.size();
    } catch (const std::exception&) {
        return false;
    }
}

CLI::Option* add_pair(CLI::App* app, const std::string& name, std::pair<double, double>& target,
                      const std::string& help) {
    return app
        ->add_option_function<std::string>(
            name,
            [&target, name](const std::string& v) {
                if (!parse_pair(v, target)) throw CLI::ValidationError(name, "expected two numbers a,b");
            },
            help)
        ->type_name("A,B");
}

int load_calibration_or_run(hm_context* ctx, const std::string& path) {
    const hm_status s = path.empty() ? hm_calibrate(ctx) : hm_calibration_load(ctx, path.c_str());
    return s == HM_OK ? kOk : report(ctx, s, "calibration");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperbolic magnetic and Morse-potential kernels"};
    app.require_subcommand(1);

    hm_params p;
    hm_params_default(&p);
    std::string kernel, calibration_path, suite, tol_file, report_path, out_path, spec_path;
    std::pair<double, double> mu{p.mu_re, p.mu_im}, z{p.x, p.y}, zp{p.xp, p.yp};

    const std::string kernels_help = "hres, hheat, hwave, mres, mheat or mwave";
    auto* eval = app.add_subcommand("eval", "Evaluate one kernel value");
    eval->add_option("--kernel", kernel, kernels_help)->required()->check(
        CLI::IsMember({"hres", "hheat", "hwave", "mres", "mheat", "mwave"}));
    eval->add_option("--k", p.k, "magnetic charge")->capture_default_str();
    add_pair(eval, "--mu", mu, "spectral parameter re,im");
    eval->add_option("--lambda", p.lambda, "Morse coupling")->capture_default_str();
    add_pair(eval, "--z", z, "first half-plane point x,y");
    add_pair(eval, "--zp", zp, "second half-plane point x,y");
    eval->add_option("--X", p.X, "first Morse coordinate")->capture_default_str();
    eval->add_option("--Xp", p.Xp, "second Morse coordinate")->capture_default_str();
    eval->add_option("--t", p.t, "time")->capture_default_str();
    eval->add_option("--b", p.b, "wave-kernel variable")->capture_default_str();
    eval->add_option("--calibration", calibration_path, "calibration record (calibrates in-process if absent)");

    auto* verify = app.add_subcommand("verify", "Run an identity-verification suite");
    verify->add_option("--suite", suite, "hyperbolic_forms, hyperbolic_resolvent, hyperbolic_heat, morse_wave, "
                                         "morse_resolvent, morse_heat, applications, specfun or all")
        ->required();
    verify->add_option("--tol-file", tol_file, "JSON object of tolerance overrides");
    verify->add_option("--report", report_path, "output JSON report")->required();
    verify->add_option("--calibration", calibration_path, "calibration record (calibrates in-process if absent)");

    auto* calibrate = app.add_subcommand("calibrate", "Choose the formula conventions numerically");
    calibrate->add_option("--out", out_path, "output JSON record")->required();

    auto* grid = app.add_subcommand("grid", "Evaluate a kernel over a parameter grid");
    grid->add_option("--kernel", kernel, kernels_help)->required();
    grid->add_option("--spec", spec_path, "key = value grid file")->required();
    grid->add_option("--out", out_path, "output CSV")->required();
    grid->add_option("--calibration", calibration_path, "calibration record (calibrates in-process if absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    Context c;
    hm_context* ctx = c.ctx;

    if (*eval) {
        if (const int rc = load_calibration_or_run(ctx, calibration_path); rc != kOk) return rc;
        p.mu_re = mu.first;
        p.mu_im = mu.second;
        p.x = z.first;
        p.y = z.second;
        p.xp = zp.first;
        p.yp = zp.second;
        hm_value v;
        if (const hm_status s = hm_eval(ctx, kernel.c_str(), &p, &v); s != HM_OK) return report(ctx, s, "eval");
        std::printf("re %.17g\nim %.17g\nre_hex %a\nim_hex %a\nerr_estimate %.3g\nconverged %d\n", v.re, v.im, v.re,
                    v.im, v.err_estimate, v.converged);
        return kOk;
    }

    if (*verify) {
        if (!tol_file.empty())
            if (const hm_status s = hm_set_tolerances_file(ctx, tol_file.c_str()); s != HM_OK)
                return report(ctx, s, "tolerance file");
        if (const int rc = load_calibration_or_run(ctx, calibration_path); rc != kOk) return rc;
        hm_report* r = nullptr;
        if (const hm_status s = hm_verify(ctx, suite.c_str(), &r); s != HM_OK) return report(ctx, s, "verify");
        for (std::size_t i = 0; i < hm_report_count(r); ++i) {
            hm_identity id;
            hm_report_get(r, i, &id);
            std::printf("%-4s %-28s max_rel_err %-10.3g tol %-8.1g %8.0f ms\n", id.passed ? "PASS" : "FAIL",
                        id.identity_id, id.max_rel_err, id.tolerance, id.runtime_ms);
            if (!id.passed) std::printf("     worst: %s\n", id.worst_point);
        }
        const hm_status ws = hm_report_write_json(ctx, r, report_path.c_str());
        const bool passed = hm_report_passed(r);
        hm_report_destroy(r);
        if (ws != HM_OK) return report(ctx, ws, "report");
        return passed ? kOk : kIdentityFailure;
    }

    if (*calibrate) {
        const hm_status s = hm_calibrate(ctx);
        if (const hm_status w = hm_calibration_save(ctx, out_path.c_str()); w != HM_OK)
            return report(ctx, w, "calibrate");
        if (s != HM_OK) return report(ctx, s, "calibrate");
        return kOk;
    }

    if (*grid) {
        if (const int rc = load_calibration_or_run(ctx, calibration_path); rc != kOk) return rc;
        std::size_t failed = 0;
        if (const hm_status s = hm_grid(ctx, kernel.c_str(), spec_path.c_str(), out_path.c_str(), &failed);
            s != HM_OK)
            return report(ctx, s, "grid");
        if (failed) std::fprintf(stderr, "hypmorse: %zu grid points raised; see the error column\n", failed);
        return kOk;
    }
    return kUsage;
}
