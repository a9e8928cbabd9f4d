#include "hypmorse/mkernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypmorse/error.hpp"
#include "hypmorse/hkernels.hpp"
#include "hypmorse/specfun.hpp"

namespace hypmorse::mkernels {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

namespace sf = specfun;

double half_sum(const MorseConfig& c) { return c.y() + c.yp(); }

// On the imaginary axis the 1F1 series loses about |x| / ln 10 digits.
constexpr double kImaginarySeriesMax = 16.0;

// 1F1(1/2; 1; x) for purely imaginary x: the series while it keeps its
// digits, then the Bessel identity 1F1(1/2; 1; 2iz) = e^{iz} J0(z).
cplx kummer_half_one(cplx x) {
    if (std::abs(x) <= kImaginarySeriesMax) return sf::kummer_1f1(0.5, 1.0, x);
    const double z = x.imag() / 2.0;
    return std::exp(kI * z) * sf::bessel(sf::BesselKind::J, 0.0, std::abs(z));
}

// sqrt(4 y y' v^2 - (y+y')^2) with v = cosh(b/2), real part >= 0.
cplx z_of_v(const MorseConfig& c, double v) {
    const double yy = c.y() * c.yp();
    const double d = c.y() - c.yp();
    // 4yy'(v^2 - 1) - (y - y')^2, formed from v - 1 to keep digits near the edge.
    const double s2 = 4.0 * yy * (v - 1.0) * (v + 1.0) - d * d;
    return s2 >= 0 ? cplx{std::sqrt(s2), 0.0} : cplx{0.0, std::sqrt(-s2)};
}

double v_edge(const MorseConfig& c) { return std::cosh(c.support_edge() / 2.0); }

cplx prefactor(const MorseConfig& c, MorseWaveVariant variant) {
    const auto aux = WaveAuxiliaries::at(c, c.support_edge());
    const double ak = c.k.abs();
    if (variant == MorseWaveVariant::Thm43) return aux.C_k * std::pow(4.0 * c.y() * c.yp(), -ak);
    return aux.c1 * std::exp(-c.k.k * (c.X + c.Xp));
}

cplx phase_at(const MorseConfig& c, double u) {
    if (c.k.k == 0.0) return 1.0;
    const double S = half_sum(c);
    return std::pow(cplx{-u, S} / cplx{u, S}, c.k.k);
}

// sinh^2(rho(u)/2) for the half-plane pair with x - x' = u.
double sinh2_half_rho(const MorseConfig& c, double u) {
    const double d = c.y() - c.yp();
    return (u * u + d * d) / (4.0 * c.y() * c.yp());
}

}  // namespace

double MorseConfig::y() const { return std::exp(X); }
double MorseConfig::yp() const { return std::exp(Xp); }
double MorseConfig::support_edge() const { return std::abs(X - Xp); }

void MorseConfig::validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw Error(ErrorCode::InvalidArgument, "Morse: lambda must be positive");
    if (!std::isfinite(X) || !std::isfinite(Xp) || !(y() > 0.0) || !(yp() > 0.0) ||
        !std::isfinite(y()) || !std::isfinite(yp()))
        throw Error(ErrorCode::InvalidArgument, "Morse: X, X' out of range");
}

WaveAuxiliaries WaveAuxiliaries::at(const MorseConfig& c, double b) {
    WaveAuxiliaries a;
    const double v = std::cosh(b / 2.0);
    const double sgn = c.k.sign();
    const double ak = c.k.abs();
    a.Z = z_of_v(c, v);
    a.Y = kI * sgn * half_sum(c);
    // cosh^2(b/2) - cosh^2((X-X')/2) = Z^2 / (4 y y').
    const cplx g = a.Z / (2.0 * std::sqrt(c.y() * c.yp()));
    a.Y5 = 2.0 * std::exp((c.X + c.Xp) / 2.0) * g;
    a.Z5 = 2.0 * g / (g + kI * sgn * std::cosh((c.X - c.Xp) / 2.0));
    const double g_ratio = std::exp(std::lgamma(2.0 * ak + 0.5) - std::lgamma(4.0 * ak + 1.0)) / std::sqrt(kPi);
    a.C_k = std::exp(kI * kPi * c.k.k) * g_ratio / 2.0;
    a.c1 = std::exp(kI * kPi * (ak + 1.0)) * g_ratio / std::pow(2.0, ak);
    return a;
}

double phi1_window_top(const MorseConfig& c) {
    // |2Z/(Z+Y)| < 1  <=>  3 Z^2 < (y+y')^2.
    const double S = half_sum(c);
    return std::sqrt((S * S / 3.0 + S * S) / (4.0 * c.y() * c.yp()));
}

cplx wave_phi1_body(const MorseConfig& c, double v, MorseWaveVariant variant) {
    const double ak = c.k.abs();
    const int n2 = c.k.twice_abs();
    const cplx Z = z_of_v(c, v);
    const double a = 2.0 * ak + 0.5, beta = 2.0 * ak, gamma = 4.0 * ak + 1.0;
    if (variant == MorseWaveVariant::Thm43) {
        const cplx Y = kI * c.k.sign() * half_sum(c);
        const cplx x = 2.0 * kI * c.lambda * Z;
        const cplx f = n2 == 0 ? kummer_half_one(x) : sf::humbert_phi1(a, beta, gamma, x, 2.0 * Z / (Z + Y));
        return std::pow(2.0 * Z, 2 * n2) / std::pow(Z + Y, n2) * std::exp(-kI * c.lambda * Z) * f;
    }
    const cplx g = Z / (2.0 * std::sqrt(c.y() * c.yp()));
    const cplx Y5 = 2.0 * std::exp((c.X + c.Xp) / 2.0) * g;
    const cplx Z5 = 2.0 * g / (g + kI * c.k.sign() * std::cosh((c.X - c.Xp) / 2.0));
    const cplx x = -2.0 * kI * c.lambda * Y5;
    const cplx f = n2 == 0 ? kummer_half_one(x) : sf::humbert_phi1(a, beta, gamma, x, Z5);
    // Z5^{-2|k|} is singular at the edge only for k != 0, where the window excludes it.
    return std::pow(Y5, 2 * n2) / std::pow(Z5, n2) * std::exp(kI * c.lambda * Y5) * f;
}

cplx wave_kernel_phi1(const MorseConfig& c, double b, MorseWaveVariant variant, const quad::DiffConfig& diff) {
    c.validate();
    if (c.k.abs() > 2.0) throw Error(ErrorCode::Unsupported, "Phi1 wave kernel: |k| > 2");
    const int n = c.k.twice_abs();
    if (!(b > c.support_edge()))
        throw Error(ErrorCode::OutsideSupport, "Phi1 wave kernel: b <= |X - X'|");
    const double v = std::cosh(b / 2.0);
    const cplx pre = prefactor(c, variant);
    if (n == 0) return pre * wave_phi1_body(c, v, variant);

    const double lo = v_edge(c), hi = phi1_window_top(c);
    if (!(v < hi))
        throw Error(ErrorCode::Domain, "Phi1 second argument outside the unit disc");
    quad::DiffConfig d = diff;
    d.max_step = std::min(d.max_step, 0.9 * std::min(v - lo, hi - v));
    auto f = [&](double vv) { return wave_phi1_body(c, vv, variant); };
    return pre * std::pow(0.5, n) * quad::nth_derivative(f, v, n, d);
}

double wave_kernel_bessel0(const MorseConfig& c, double b) {
    c.validate();
    if (b < c.support_edge()) throw Error(ErrorCode::OutsideSupport, "Bessel wave kernel: b < |X - X'|");
    const double Z = z_of_v(c, std::cosh(b / 2.0)).real();
    return 0.5 * sf::bessel(sf::BesselKind::J, 0.0, c.lambda * Z);
}

quad::QuadratureResult wave_kernel_fourier(const MorseConfig& c, double b, const quad::QuadConfig& qc) {
    c.validate();
    if (b < c.support_edge()) throw Error(ErrorCode::OutsideSupport, "Fourier wave kernel: b < |X - X'|");
    const double Z = z_of_v(c, std::cosh(b / 2.0)).real();
    const double S = half_sum(c);
    const double ak = c.k.abs();
    auto f = [&](double th) -> cplx {
        const double u = Z * std::sin(th);
        // cosh^2(b/2)/cosh^2(rho/2) = (Z^2 + S^2)/(u^2 + S^2); the hyperbolic
        // numerator F(|k|, -|k|; 1/2; 1 - q^2) is cosh(2|k| acosh q).
        const double q = std::sqrt((Z * Z + S * S) / (u * u + S * S));
        const double num = std::cosh(2.0 * ak * std::acosh(q));
        return std::exp(-kI * c.lambda * u) * phase_at(c, u) * num;
    };
    auto r = quad::integrate_finite(f, -kPi / 2.0, kPi / 2.0, qc);
    r.value /= 2.0 * kPi;
    r.err_estimate /= 2.0 * kPi;
    return r;
}

quad::QuadratureResult resolvent_integral(const MorseConfig& c, cplx mu, const quad::QuadConfig& qc) {
    c.validate();
    const double ak = c.k.abs();
    if (!(mu.imag() < -std::max(0.0, ak - 0.5)))
        throw Error(ErrorCode::ConvergenceViolated, "Morse resolvent integral needs Im mu < -max(0, |k| - 1/2)");
    const double y = c.y(), yp = c.yp();

    if (c.k.k == 0.0) {
        // b -> Z with cosh b = (Z^2 + y^2 + y'^2)/(2 y y').
        const double dm = (y - yp) * (y - yp), sp = (y + yp) * (y + yp);
        auto f = [&](double Z) -> cplx {
            const double z2 = Z * Z;
            const double b = std::acosh((z2 + y * y + yp * yp) / (2.0 * y * yp));
            const double jac = 2.0 * Z / std::sqrt((z2 + dm) * (z2 + sp));
            return std::exp(-kI * mu * b) * 0.5 * sf::bessel(sf::BesselKind::J, 0.0, c.lambda * Z) * jac;
        };
        quad::QuadConfig q = qc;
        q.initial_panel = 2.0 * kPi / c.lambda;
        q.max_panels = std::max(q.max_panels, 400);
        return quad::integrate_semiinfinite(f, 0.0, q);
    }

    // Exchange the b and Fourier integrals; the b-integral is the hyperbolic
    // one with prefactor 1/2 at rho(u). The u-integrand is even up to
    // conjugation of the phase, so only u > 0 is integrated.
    const hkernels::WaveForm form = c.k.is_discrete ? hkernels::WaveForm::III : hkernels::WaveForm::Baseline;
    quad::QuadConfig inner = qc;
    inner.abs_tol = std::min(qc.abs_tol, 1e-18);
    auto f = [&](double u) -> cplx {
        const double rho = 2.0 * std::asinh(std::sqrt(sinh2_half_rho(c, u)));
        const cplx R = hkernels::resolvent_integral_radial(mu, ak, rho, 1.0, KeyPrefactor::Half, inner, form).value;
        return 2.0 * std::real(std::exp(-kI * c.lambda * u) * phase_at(c, u)) * R / std::sqrt(y * yp);
    };
    quad::QuadConfig q = qc;
    q.initial_panel = 2.0 * kPi / c.lambda;
    q.max_panels = std::max(q.max_panels, 400);
    return quad::integrate_semiinfinite(f, 0.0, q);
}

namespace {

cplx whittaker_closed(const MorseConfig& c, cplx mu, const Conventions& conv, double x_m, double x_w) {
    c.validate();
    const cplx a = conv.whittaker_index == WhittakerIndex::OrderIMu ? kI * mu : mu;
    const double kappa = conv.whittaker_kappa == WhittakerKappa::SignedK ? c.k.k : c.k.abs();
    const double norm = conv.whittaker_norm == WhittakerNorm::InverseTwoLambda ? 2.0 : 1.0;
    const cplx g = a - kappa + 0.5;
    if (sf::is_nonpositive_integer(g))
        throw Error(ErrorCode::Pole, "Morse resolvent: Gamma(a - kappa + 1/2) at a pole (bound state)");
    if (sf::is_nonpositive_integer(1.0 + 2.0 * a))
        throw Error(ErrorCode::Pole, "Morse resolvent: Gamma(1 + 2a) at a pole");
    const cplx w = sf::whittaker(sf::WhittakerKind::W, kappa, a, 2.0 * c.lambda * std::exp(x_w));
    const cplx m = sf::whittaker(sf::WhittakerKind::M, kappa, a, 2.0 * c.lambda * std::exp(x_m));
    return std::exp(sf::log_gamma(g) - sf::log_gamma(1.0 + 2.0 * a)) / (norm * c.lambda) *
           std::exp(-(c.X + c.Xp) / 2.0) * w * m;
}

}  // namespace

cplx resolvent_closed(const MorseConfig& c, cplx mu, const Conventions& conv) {
    return whittaker_closed(c, mu, conv, std::min(c.X, c.Xp), std::max(c.X, c.Xp));
}

cplx resolvent_closed_literal_order(const MorseConfig& c, cplx mu, const Conventions& conv) {
    return whittaker_closed(c, mu, conv, c.X, c.Xp);
}

quad::QuadratureResult heat_kernel(const MorseConfig& c, double t, MorseWaveVariant variant,
                                   const quad::QuadConfig& qc) {
    c.validate();
    if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "Morse heat kernel needs t > 0");
    const double edge = c.support_edge();
    const double norm = 1.0 / std::pow(4.0 * kPi * t, 1.5);
    quad::QuadConfig inner = qc;
    inner.abs_tol = std::min(qc.abs_tol, 1e-16);

    auto wave = [&](double b) -> cplx {
        if (variant == MorseWaveVariant::Thm51) return wave_kernel_phi1(c, b, variant);
        if (c.k.k == 0.0) return wave_kernel_bessel0(c, b);
        return wave_kernel_fourier(c, b, inner).value;
    };
    // b = edge + s^2 absorbs the square-root behaviour of W at the edge.
    auto f = [&](double s) -> cplx {
        if (s == 0.0) return 0.0;
        const double b = edge + s * s;
        return std::exp(-b * b / (4.0 * t)) * b * wave(b) * (2.0 * s);
    };
    quad::QuadConfig q = qc;
    q.initial_panel = std::sqrt(t);
    auto r = quad::integrate_semiinfinite(f, 0.0, q);
    r.value *= norm;
    r.err_estimate *= norm;
    return r;
}

namespace {

// Upper end of the shifted xi contour: beyond it the integrand is below
// e^{-42} relative to its scale e^{pi^2/2t}.
double eta_max(double t) {
    return (1.0 + std::sqrt(1.0 + 8.0 * (kPi * kPi / (2.0 * t) + 42.0) / t)) * t / 4.0;
}

// int_{i pi/2}^{i pi/2 + inf} sinh xi e^{-r cosh xi} e^{2(pi + i xi)^2 / t} dxi.
quad::QuadratureResult xi_horizontal(double r, double t, const quad::QuadConfig& qc) {
    const double base = kPi * kPi / (2.0 * t);
    auto f = [&](double eta) -> cplx {
        const double mag = std::cosh(eta) * std::exp(base - 2.0 * eta * eta / t);
        return kI * mag * std::exp(kI * (2.0 * kPi * eta / t - r * std::sinh(eta)));
    };
    return quad::integrate_finite(f, 0.0, eta_max(t), qc);
}

// The segment from 0 to i pi/2 of the same integral; real.
quad::QuadratureResult xi_vertical(double r, double t, const quad::QuadConfig& qc) {
    auto f = [&](double phi) -> cplx {
        return -std::sin(phi) * std::exp(-r * std::cos(phi) + 2.0 * (kPi - phi) * (kPi - phi) / t);
    };
    return quad::integrate_finite(f, 0.0, kPi / 2.0, qc);
}

quad::QuadConfig inner_config(const quad::QuadConfig& qc, double t) {
    quad::QuadConfig q = qc;
    q.abs_tol = std::max(qc.abs_tol, 1e-15 * std::exp(kPi * kPi / (2.0 * t)));
    q.max_subdivisions = std::max(q.max_subdivisions, 20000);
    return q;
}

// Left end of the u range: below it exp(-lambda (y+y') coth u) is negligible
// against the largest inner magnitude.
double u_floor(const MorseConfig& c, double t) {
    const double cut = 60.0 + 2.0 * kPi * kPi / t;
    const double ratio = c.lambda * half_sum(c) / cut;
    return ratio < 1.0 ? std::atanh(ratio) : 0.0;
}

}  // namespace

quad::QuadratureResult alili_theta(double r, double t, const quad::QuadConfig& qc) {
    if (!(t > 0.0) || !(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "theta_r(t) needs r, t > 0");
    auto h = xi_horizontal(r, 4.0 * t, inner_config(qc, 4.0 * t));
    const double scale = r / std::sqrt(2.0 * kPi * kPi * kPi * t);
    return {h.value.imag() * scale, h.err_estimate * scale, h.n_evals, h.converged};
}

quad::QuadratureResult alili_heat(const MorseConfig& c, double t, const quad::QuadConfig& qc) {
    c.validate();
    if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "Alili heat kernel needs t > 0");
    const double S = half_sum(c), ry = 2.0 * c.lambda * std::sqrt(c.y() * c.yp());
    const quad::QuadConfig in = inner_config(qc, t);
    auto f = [&](double u) -> cplx {
        const double shu = std::sinh(u);
        const double w = std::exp(2.0 * c.k.k * u - c.lambda * S / std::tanh(u)) / (2.0 * shu);
        if (w == 0.0) return 0.0;
        return w * alili_theta(ry / shu, t / 4.0, in).value;
    };
    quad::QuadConfig q = qc;
    q.initial_panel = 0.5;
    return quad::integrate_semiinfinite(f, u_floor(c, t), q);
}

quad::QuadratureResult alili_j(const MorseConfig& c, double t, const quad::QuadConfig& qc) {
    c.validate();
    if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "J(t) needs t > 0");
    const double S = half_sum(c), ry = 2.0 * c.lambda * std::sqrt(c.y() * c.yp());
    const double pre = c.lambda * std::sqrt(2.0 * c.y() * c.yp()) / std::sqrt(kPi * kPi * kPi * t);
    const quad::QuadConfig in = inner_config(qc, t);
    auto weight = [&](double u) {
        const double shu = std::sinh(u);
        return pre * std::exp(-c.lambda * S / std::tanh(u) + 2.0 * c.k.k * u) / (shu * shu);
    };
    // J = (1/i) int A(u) Q(u) du, Q the xi integral; Re J takes Im Q, Im J takes -Re Q.
    auto re_part = [&](double u) -> cplx {
        const double w = weight(u);
        if (w == 0.0) return 0.0;
        return w * xi_horizontal(ry / std::sinh(u), t, in).value.imag();
    };
    auto im_part = [&](double u) -> cplx {
        const double w = weight(u);
        if (w == 0.0) return 0.0;
        const double r = ry / std::sinh(u);
        return -w * (xi_vertical(r, t, in).value.real() + xi_horizontal(r, t, in).value.real());
    };
    quad::QuadConfig q = qc;
    q.initial_panel = 0.5;
    const double u0 = u_floor(c, t);
    const auto re = quad::integrate_semiinfinite(re_part, u0, q);
    const auto im = quad::integrate_semiinfinite(im_part, u0, q);
    return {cplx{re.value.real(), im.value.real()}, re.err_estimate + im.err_estimate, re.n_evals + im.n_evals,
            re.converged && im.converged};
}

double lebedev_closed(double a, double u, double v) {
    if (!(u > 0.0) || !(v > 0.0)) throw Error(ErrorCode::InvalidArgument, "Lebedev: u, v must be positive");
    return sf::bessel(sf::BesselKind::I, a, u) * sf::bessel(sf::BesselKind::K, a, v);
}

quad::QuadratureResult lebedev_integral(double a, double u, double v, LebedevRange range,
                                        const quad::QuadConfig& qc) {
    if (!(u > 0.0) || !(v > 0.0)) throw Error(ErrorCode::InvalidArgument, "Lebedev: u, v must be positive");
    if (!(a > 0.0)) throw Error(ErrorCode::ConvergenceViolated, "Lebedev: needs a > 0");
    const double edge = std::abs(std::log(v / u));
    auto f = [&](double b) -> cplx {
        // 2uv cosh b - u^2 - v^2 = 2uv (cosh b - cosh edge).
        const double w = 4.0 * u * v * std::sinh((b - edge) / 2.0) * std::sinh((b + edge) / 2.0);
        const double j = w >= 0 ? sf::bessel(sf::BesselKind::J, 0.0, std::sqrt(w))
                                : sf::bessel(sf::BesselKind::I, 0.0, std::sqrt(-w));
        return 0.5 * std::exp(-a * b) * j;
    };
    quad::QuadConfig q = qc;
    q.max_panels = std::max(q.max_panels, 400);
    auto r = quad::integrate_semiinfinite(f, edge, q);
    if (range == LebedevRange::Literal && edge > 0.0) {
        const auto below = quad::integrate_finite(f, 0.0, edge, qc);
        r.value += below.value;
        r.err_estimate += below.err_estimate;
        r.n_evals += below.n_evals;
        r.converged = r.converged && below.converged;
    }
    return r;
}

}  // namespace hypmorse::mkernels
