#pragma once

// Special functions needed by the kernel formulas: complex log-gamma and
// digamma, Pochhammer symbols, Gauss 2F1, Kummer 1F1, the Humbert Phi1 double
// series, Chebyshev T_n, Bessel J/I/K and the Whittaker pair M/W.

#include <complex>

namespace hypmorse::specfun {

using cplx = std::complex<double>;

struct SeriesConfig {
    int max_terms = 5000;
    double term_tol = 1e-16;  // relative to the partial sum

    void validate() const;
};

// Desk-scale limit for the 1F1 power series.
inline constexpr double kKummerMaxAbsArg = 40.0;
// A series whose largest term exceeds the sum by this factor has lost too
// many digits to cancellation and is reported as non-convergent.
inline constexpr double kMaxCancellation = 1e7;

/// True if z is (numerically) a non-positive integer.
bool is_nonpositive_integer(cplx z, double tol = 1e-12);

/// Principal-branch log Gamma for Re z >= 1/2; reflection below. exp() of the
/// result is Gamma(z) everywhere off the poles.
cplx log_gamma(cplx z);
cplx gamma(cplx z);
/// 1/Gamma(z); exactly zero at the poles.
cplx rgamma(cplx z);
cplx digamma(cplx z);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1).
cplx pochhammer(cplx a, int n);

/// Gauss hypergeometric function with automatic choice of route:
/// terminating sum, direct series, Pfaff transform for Re z < 0, and the
/// 1 - z connection formulas (including the logarithmic c = a + b case)
/// near z = 1.
cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z, const SeriesConfig& cfg = {});
/// The defining power series only; requires |z| < 1.
cplx gauss_2f1_series(cplx a, cplx b, cplx c, cplx z, const SeriesConfig& cfg = {});
/// (1-z)^{-a} F(a, c-b; c; z/(z-1)), the right-hand side summed by series.
cplx gauss_2f1_pfaff(cplx a, cplx b, cplx c, cplx z, const SeriesConfig& cfg = {});

/// Kummer 1F1(a; c; x) by its power series, |x| <= 40. Negative real part
/// goes through Kummer's transformation.
cplx kummer_1f1(cplx a, cplx c, cplx x, const SeriesConfig& cfg = {});

/// Humbert Phi1(a, b; c; x, y) = sum (a)_{m+n} (b)_n / ((c)_{m+n} m! n!) x^m y^n.
/// Throws ErrorCode::Domain when |y| >= 1 and the series in y does not
/// terminate; no analytic continuation is attempted.
cplx humbert_phi1(cplx a, cplx b, cplx c, cplx x, cplx y, const SeriesConfig& cfg = {});

double chebyshev_t(int n, double x);

enum class BesselKind { J, I, K };

/// Real-order Bessel functions of real positive argument. Negative orders are
/// reduced by the reflection formulas.
double bessel(BesselKind kind, double nu, double x, const SeriesConfig& cfg = {});

enum class WhittakerKind { M, W };

/// M_{k,mu}(z) = z^{mu+1/2} e^{-z/2} 1F1(mu - k + 1/2; 1 + 2 mu; z).
/// W_{k,mu} from the two-M combination; 2 mu integer is rejected for W.
cplx whittaker(WhittakerKind kind, double k, cplx mu, double z, const SeriesConfig& cfg = {});

}  // namespace hypmorse::specfun
