#pragma once

// Identity verification, convention calibration and kernel dispatch shared by
// the C API, the CLI and the acceptance driver.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "hypmorse/conventions.hpp"
#include "hypmorse/quad.hpp"

namespace hypmorse::harness {

using cplx = std::complex<double>;

// ---- tolerances -----------------------------------------------------------

using Tolerances = std::map<std::string, double>;

/// The per-identity tolerances compiled in from config/tolerances.json.
Tolerances default_tolerances();
/// Overlays the entries of a JSON object file; unknown keys are rejected.
Tolerances load_tolerance_overrides(const Tolerances& base, const std::string& path);
double tolerance(const Tolerances& tol, const std::string& id);

// ---- calibration ----------------------------------------------------------

struct CalibrationRecord {
    Conventions conventions;
    std::map<std::string, double> residuals;  // per candidate, max rel err
    bool ok = false;
    std::string message;
};

/// Chooses the mu <-> s mapping and key prefactor (hyperbolic closed vs
/// integral resolvent at k = 0), the Whittaker conventions (Morse closed vs
/// integral resolvent) and the Morse wave-kernel variant (k = 0 Bessel
/// reduction and the Fourier construction). Every group must have a unique
/// candidate at or below `accept`; ok is false otherwise.
CalibrationRecord calibrate(double accept = 1e-6);

std::string calibration_to_json(const CalibrationRecord& rec);
/// Throws InvalidArgument on malformed input.
CalibrationRecord calibration_from_json(const std::string& text);
void save_calibration(const CalibrationRecord& rec, const std::string& path);
CalibrationRecord load_calibration(const std::string& path);

// ---- identity reports -----------------------------------------------------

struct IdentityReport {
    std::string identity_id;
    std::string grid_spec;
    double max_rel_err = 0.0;
    std::string worst_point;    // a CLI invocation reproducing it where possible
    bool passed = false;
    double tolerance = 0.0;
    double runtime_ms = 0.0;
    int n_points = 0;
    int n_errors = 0;           // points that raised instead of returning
    double literal_rel_err = -1.0;  // residual under the literal reading; < 0 if n/a
    std::string note;
};

/// Each identity check. `tol` is the acceptance threshold; `conv` supplies
/// the calibrated conventions where a check depends on them.
IdentityReport check_forms_equivalence(double tol);
IdentityReport check_hres_closed_vs_integral(const Conventions& conv, double tol);
IdentityReport check_calibration_uniqueness(double accept, double reject);
IdentityReport check_hheat_pde(double tol);
IdentityReport check_hheat_k0_direct(double tol);
IdentityReport check_mwave_k0(MorseWaveVariant variant, double tol);
IdentityReport check_mwave_k0_fourier(double tol);
IdentityReport check_mwave_phi1_vs_fourier(double tol);
IdentityReport check_mres_closed_vs_integral(const Conventions& conv, double tol);
IdentityReport check_mheat_k0_direct(double tol);
IdentityReport check_whittaker_product(const Conventions& conv, double tol);
IdentityReport check_lebedev(double tol);
/// The literal claim Im J(t) = heat integral.
IdentityReport check_alili_imj(const Conventions& conv, double tol);
/// Re J(t) = 4 pi H(t/2) for the chosen wave-kernel variant.
IdentityReport check_alili_rej(MorseWaveVariant variant, double tol);
IdentityReport check_specfun_oracle(double tol, double tol_int_k);

const std::vector<std::string>& suite_names();
/// Runs every identity of the suite. Errors inside a check become per-point
/// failures. Throws InvalidArgument on an unknown suite name.
std::vector<IdentityReport> run_suite(const std::string& suite, const Tolerances& tol,
                                      const CalibrationRecord& cal);

std::string reports_to_json(const std::string& suite, const CalibrationRecord& cal,
                            const std::vector<IdentityReport>& reports);

// ---- kernel dispatch ------------------------------------------------------

struct EvalParams {
    double k = 0.0;
    cplx mu{0.0, -1.2};  // -i would put mres on the unsupported integer-2mu W
    double lambda = 1.0;
    double x = 0.0, y = 1.0;    // z
    double xp = 0.0, yp = 2.0;  // z'
    double X = 0.0, Xp = 0.3;
    double t = 0.5;
    double b = 1.0;
};

struct EvalResult {
    cplx value;
    double err_estimate = 0.0;
    bool converged = true;
};

const std::vector<std::string>& kernel_ids();  // hres hheat hwave mres mheat mwave
EvalResult evaluate_kernel(const std::string& kernel, const EvalParams& p, const Conventions& conv);

// ---- grids ----------------------------------------------------------------

/// Grid file: one "key = value" per line, '#' comments. A value is a number,
/// a list [v1, v2, ...] or range(a, b, n) (n points, both ends included).
/// Keys are the EvalParams fields (mu as mu_re / mu_im) plus rho, which
/// places z = i and z' = i e^rho. The grid is the Cartesian product in file
/// order, last key fastest.
struct GridSpec {
    std::vector<std::pair<std::string, std::vector<double>>> axes;
    std::size_t size() const;
};

GridSpec parse_grid_spec(const std::string& text);
GridSpec load_grid_spec(const std::string& path);

/// Evaluates every point and writes CSV: inputs, re, im, re_hex, im_hex,
/// err_estimate, converged, error. Per-point errors are recorded in-row.
/// Returns the number of points that raised.
int grid_eval(const std::string& kernel, const GridSpec& spec, const Conventions& conv,
              const std::string& csv_path);

}  // namespace hypmorse::harness
