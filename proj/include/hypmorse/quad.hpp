#pragma once

// Adaptive quadrature over finite and semi-infinite ranges, a substitution
// rule for inverse-square-root endpoint singularities, and Richardson
// extrapolated central differences.

#include <complex>
#include <functional>

namespace hypmorse::quad {

using cplx = std::complex<double>;
using ComplexFn = std::function<cplx(double)>;
using RealFn = std::function<double(double)>;

struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 4000;     // per finite interval
    double tail_truncation_factor = 1.0;
    double initial_panel = 1.0;      // semi-infinite: first panel length
    double panel_growth = 1.5;       // semi-infinite: geometric growth of panel length
    int max_panels = 200;

    void validate() const;
};

struct QuadratureResult {
    cplx value{};
    double err_estimate = 0.0;
    long n_evals = 0;
    bool converged = false;
};

/// Globally adaptive 21-point Gauss-Kronrod on [a, b]. Never throws for
/// non-convergence: the best estimate comes back with converged = false.
QuadratureResult integrate_finite(const ComplexFn& f, double a, double b,
                                  const QuadConfig& cfg = {});

/// Panel-by-panel integration of [a, inf). Panels grow geometrically and the
/// sum stops once two consecutive panels fall below the running tolerance.
/// Throws ErrorCode::TailDivergence when the panel density keeps growing.
QuadratureResult integrate_semiinfinite(const ComplexFn& f, double a,
                                        const QuadConfig& cfg = {});

/// Integral over [a, inf) of g(b) / sqrt(gap(b)), where gap(b) = m(b) - m(a)
/// for some smooth increasing m. The caller passes gap directly so it can be
/// formed without cancellation near b = a. The substitution b = a + u^2
/// removes the singularity analytically.
QuadratureResult integrate_sqrt_endpoint(const ComplexFn& g, const RealFn& gap,
                                         double a, const QuadConfig& cfg = {});

/// Same substitution on a finite range [a, b_max].
QuadratureResult integrate_sqrt_endpoint_finite(const ComplexFn& g, const RealFn& gap,
                                                double a, double b_max,
                                                const QuadConfig& cfg = {});

struct DiffConfig {
    double base_step = 1e-3;   // h = base_step * max(1, |x|) for n = 1
    int levels = 3;            // Richardson table depth (h, h/2, h/4)
    double max_step = 1e300;   // caller-imposed cap, e.g. distance to a boundary
};

/// n-th derivative (1 <= n <= 4) by central differences with Richardson
/// extrapolation in h^2. Higher orders scale the step up automatically since
/// the round-off in an n-th difference grows like eps / h^n.
cplx nth_derivative(const ComplexFn& f, double x, int n, const DiffConfig& cfg = {});

/// Step actually used by nth_derivative for order n at x. Throws
/// ErrorCode::Domain (step underflow) if max_step forces a step so small that
/// round-off would swamp the difference quotient.
double derivative_step(double x, int n, const DiffConfig& cfg);

}  // namespace hypmorse::quad
