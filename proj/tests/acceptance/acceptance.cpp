// Acceptance driver: one PASS/FAIL line per criterion.
//
//   acceptance                 all criteria
//   acceptance --criterion 4   one criterion
//
// Tolerances and runtime budgets are pinned here on purpose, independent of
// config/tolerances.json. Exit status is 0 only if every selected criterion
// passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypmorse/harness.hpp"

using namespace hypmorse;
using namespace hypmorse::harness;

namespace {

struct Outcome {
    bool passed = false;
    double max_rel_err = 0.0;
    double tolerance = 0.0;
    std::vector<std::string> details;
};

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string describe(const IdentityReport& r) {
    std::string s = r.identity_id + ": max_rel_err " + fmt("%.3g", r.max_rel_err) + " (tol " +
                    fmt("%.0e", r.tolerance) + ", " + std::to_string(r.n_points) + " points";
    if (r.n_errors) s += ", " + std::to_string(r.n_errors) + " raised";
    s += ")";
    if (r.literal_rel_err >= 0) s += "; literal reading " + fmt("%.3g", r.literal_rel_err);
    return s;
}

Outcome from(const IdentityReport& r) {
    Outcome o{r.passed, r.max_rel_err, r.tolerance, {describe(r)}};
    if (!r.passed) o.details.push_back("worst: " + r.worst_point);
    if (!r.note.empty()) o.details.push_back(r.note);
    return o;
}

const CalibrationRecord& calibration() {
    static const CalibrationRecord rec = calibrate(1e-6);
    return rec;
}

Outcome calibrated(const std::function<IdentityReport(const Conventions&)>& check) {
    const auto& cal = calibration();
    if (!cal.ok) return {false, 0.0, 0.0, {"calibration failed: " + cal.message}};
    return from(check(cal.conventions));
}

Outcome criterion5() {
    const auto phi1 = check_mwave_k0(MorseWaveVariant::Thm43, 1e-6);
    const auto thm51 = check_mwave_k0(MorseWaveVariant::Thm51, 1e-6);
    const auto fourier = check_mwave_k0_fourier(1e-4);
    Outcome o;
    o.passed = phi1.passed && thm51.passed && fourier.passed;
    o.max_rel_err = std::max({phi1.max_rel_err, thm51.max_rel_err, fourier.max_rel_err});
    o.tolerance = 1e-6;
    for (const auto* r : {&phi1, &thm51, &fourier}) {
        o.details.push_back(std::string(r->passed ? "ok   " : "FAILS ") + describe(*r));
        if (!r->passed) o.details.push_back("  worst: " + r->worst_point);
    }
    if (!thm51.passed)
        o.details.push_back("the thm51 variant returns -2 (1/2) J0 at k = 0: its constant c1(0) = -1 "
                            "against C_0 = 1/2");
    return o;
}

Outcome criterion9() {
    const auto& cal = calibration();
    if (!cal.ok) return {false, 0.0, 0.0, {"calibration failed: " + cal.message}};
    Outcome o = from(check_alili_imj(cal.conventions, 1e-3));
    // Localise the failure: which wave-kernel variant, if any, J agrees with.
    const auto re43 = check_alili_rej(MorseWaveVariant::Thm43, 1e-3);
    const auto re51 = check_alili_rej(MorseWaveVariant::Thm51, 1e-3);
    o.details.push_back("diagnostic, Re J(t) = 4 pi H(t/2), thm43 kernel: " + describe(re43));
    o.details.push_back("diagnostic, Re J(t) = 4 pi H(t/2), thm51 kernel: " + describe(re51));
    if (re43.passed && !re51.passed)
        o.details.push_back("J is consistent with the thm43 kernel through its real part; the thm51 kernel "
                            "fails that relation (factor -2 at k = 0, no value outside its Phi1 disc at k = 1/2). "
                            "The literal Im-part claim is indicted, not the thm43 kernel.");
    return o;
}

std::vector<Criterion> criteria() {
    return {
        {1, "form equivalence", 10, [] { return from(check_forms_equivalence(1e-9)); }},
        {2, "hyperbolic resolvent closed vs integral", 30,
         [] { return calibrated([](const Conventions& c) { return check_hres_closed_vs_integral(c, 1e-6); }); }},
        {3, "calibration uniqueness", 10, [] { return from(check_calibration_uniqueness(1e-6, 1e-1)); }},
        {4, "heat PDE residual", 60, [] { return from(check_hheat_pde(1e-3)); }},
        {5, "Morse k = 0 Bessel reduction", 60, criterion5},
        {6, "Morse resolvent closed vs integral", 60,
         [] { return calibrated([](const Conventions& c) { return check_mres_closed_vs_integral(c, 1e-4); }); }},
        {7, "Whittaker product", 30,
         [] { return calibrated([](const Conventions& c) { return check_whittaker_product(c, 1e-4); }); }},
        {8, "Lebedev Bessel product", 10, [] { return from(check_lebedev(1e-6)); }},
        {9, "Alili cross-check", 300, criterion9},
        {10, "special-function oracle table", 5, [] { return from(check_specfun_oracle(1e-11, 1e-8)); }},
    };
}

}  // namespace

int main(int argc, char** argv) {
    std::optional<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
            return 2;
        }
    }
    if (only && (*only < 1 || *only > 10)) {
        std::fprintf(stderr, "acceptance: criterion must be 1..10\n");
        return 2;
    }

    bool all = true;
    for (const auto& c : criteria()) {
        if (only && *only != c.id) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, 0.0, 0.0, {std::string("raised: ") + e.what()}};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = secs <= c.budget_s;
        const bool ok = o.passed && in_budget;
        all = all && ok;
        std::printf("%s criterion %d: %s  max_rel_err %.3g  tol %.0e  %.1f s (budget %.0f s)\n", ok ? "PASS" : "FAIL",
                    c.id, c.name, o.max_rel_err, o.tolerance, secs, c.budget_s);
        if (!in_budget) std::printf("    over the runtime budget\n");
        for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
