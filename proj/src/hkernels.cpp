#include "hypmorse/hkernels.hpp"

#include <cmath>
#include <numbers>

#include "hypmorse/error.hpp"
#include "hypmorse/specfun.hpp"

namespace hypmorse::hkernels {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

cplx key_factor(KeyPrefactor p, cplx mu) {
    return p == KeyPrefactor::Half ? cplx{0.5, 0.0} : 1.0 / (2.0 * kI * mu);
}

void require_off_diagonal(double c2) {
    if (c2 <= 1.0) throw Error(ErrorCode::Domain, "kernel is singular on the diagonal z = z'");
}

cplx resolvent_radial(cplx s, const MagneticK& k, double c2, cplx phase) {
    namespace sf = specfun;
    const double ak = k.abs();
    const cplx sm = s - k.k, sp = s + k.k;
    if (sf::is_nonpositive_integer(sm) || sf::is_nonpositive_integer(sp))
        throw Error(ErrorCode::Pole, "resolvent: s -/+ k is a pole of Gamma");
    const cplx lg = sf::log_gamma(sm) + sf::log_gamma(sp) - sf::log_gamma(2.0 * s);
    const cplx f = sf::gauss_2f1(s - ak, s + ak, 2.0 * s, 1.0 / c2);
    return std::exp(lg - s * std::log(c2)) / (4.0 * kPi) * phase * f;
}

}  // namespace

cplx s_from_mu(cplx mu, SpectralMapping mapping) {
    switch (mapping) {
        case SpectralMapping::A: return (1.0 - kI * mu) / 2.0;
        case SpectralMapping::B: return 0.5 - kI * mu;
        case SpectralMapping::C: return 0.5 + kI * mu;
    }
    return {};
}

SpectralParam::SpectralParam(cplx mu, SpectralMapping mapping)
    : mu_(mu), s_(s_from_mu(mu, mapping)), mapping_(mapping) {}

SpectralParam SpectralParam::from_s(cplx s, SpectralMapping mapping) {
    cplx mu;
    switch (mapping) {
        case SpectralMapping::A: mu = (1.0 - 2.0 * s) / kI; break;
        case SpectralMapping::B: mu = (0.5 - s) / kI; break;
        case SpectralMapping::C: mu = (s - 0.5) / kI; break;
    }
    return SpectralParam(mu, mapping);
}

const char* to_string(WaveForm f) {
    switch (f) {
        case WaveForm::Baseline: return "baseline";
        case WaveForm::I: return "i";
        case WaveForm::II: return "ii";
        case WaveForm::III: return "iii";
        case WaveForm::IV: return "iv";
        case WaveForm::ILiteral: return "i_literal";
    }
    return "?";
}

double wave_gap(double b, double rho) { return std::sinh(0.5 * (b - rho)) * std::sinh(0.5 * (b + rho)); }

double wave_numerator(WaveForm form, double abs_k, double b, double rho) {
    namespace sf = specfun;
    const double chb = std::cosh(0.5 * b);
    const double chr = std::cosh(0.5 * rho);
    const double q = chb / chr;
    const double gap = wave_gap(b, rho);
    auto twice = [&] {
        const double t = 2.0 * abs_k;
        if (std::abs(t - std::round(t)) > 1e-12)
            throw Error(ErrorCode::Unsupported, "forms iii and iv need 2|k| integer");
        return static_cast<int>(std::lround(t));
    };
    switch (form) {
        case WaveForm::Baseline:
            // 1 - q^2 = -gap / ch_r^2, formed without cancellation.
            return sf::gauss_2f1(abs_k, -abs_k, 0.5, -gap / (chr * chr)).real();
        case WaveForm::I:
            return sf::gauss_2f1(2 * abs_k, -2 * abs_k, 0.5, 0.5 * (1.0 - q)).real();
        case WaveForm::ILiteral:
            return sf::gauss_2f1(2 * abs_k, -2 * abs_k, 0.5, 1.0 - q).real();
        case WaveForm::II:
            return std::pow(q * q, abs_k) *
                   sf::gauss_2f1(-abs_k, 0.5 - abs_k, 0.5, gap / (chb * chb)).real();
        case WaveForm::III:
            return sf::chebyshev_t(twice(), q);
        case WaveForm::IV: {
            const int n2 = twice();
            const double k = 0.5 * n2;
            const int top = n2 / 2;  // [|k|]
            double sum = 0.0;
            double coef = 1.0;
            for (int n = 0; n <= top; ++n) {
                if (n > 0) coef *= (-k + n - 1) * (0.5 - k + n - 1) / ((0.5 + n - 1) * n);
                sum += coef * std::pow(chb, 2 * k - 2 * n) * std::pow(gap, n);
            }
            return std::pow(chr, -2 * k) * sum;
        }
    }
    return 0.0;
}

cplx wave_kernel(WaveForm form, const MagneticK& k, double b, const HalfPlanePoint& z,
                 const HalfPlanePoint& zp) {
    const double rho = geometry::dist_halfplane(z, zp);
    if (b < rho) return {};
    if (b == rho) throw Error(ErrorCode::OutsideSupport, "wave kernel is singular at b = rho");
    const cplx phase = geometry::magnetic_phase_halfplane(k, z, zp);
    return phase / (2.0 * kPi) * wave_numerator(form, k.abs(), b, rho) / std::sqrt(wave_gap(b, rho));
}

cplx resolvent_closed(const SpectralParam& sp, const MagneticK& k, const HalfPlanePoint& z,
                      const HalfPlanePoint& zp) {
    const double c2 = geometry::cosh2_half_dist_halfplane(z, zp);
    require_off_diagonal(c2);
    return resolvent_radial(sp.s(), k, c2, geometry::magnetic_phase_halfplane(k, z, zp));
}

cplx resolvent_disc_closed(const SpectralParam& sp, const MagneticK& k, const DiscPoint& w,
                           const DiscPoint& wp) {
    const double c2 = geometry::cosh2_half_dist_disc(w, wp);
    require_off_diagonal(c2);
    return resolvent_radial(sp.s(), k, c2, geometry::magnetic_phase_disc(k, w, wp));
}

quad::QuadratureResult resolvent_integral_radial(cplx mu, double abs_k, double rho, cplx phase,
                                                 KeyPrefactor prefactor, const quad::QuadConfig& cfg,
                                                 WaveForm form) {
    const double need = std::max(0.0, abs_k - 0.5);
    if (!(mu.imag() < -need))
        throw Error(ErrorCode::ConvergenceViolated,
                    "resolvent integral needs Im mu < -max(0, |k| - 1/2)");
    auto g = [&](double b) -> cplx {
        return wave_numerator(form, abs_k, b, rho) * std::exp(-kI * mu * b);
    };
    auto gap = [rho](double b) { return wave_gap(b, rho); };
    // The integrand decays like e^{-delta b}. Slow decay outruns the panel
    // marcher before cosh^2(b/2) overflows, so cut the range explicitly.
    const double delta = -mu.imag() - need;
    const double reach = (std::log(1.0 / cfg.rel_tol) + 10.0) / delta;
    auto r = quad::integrate_sqrt_endpoint_finite(g, gap, rho, rho + std::min(reach, 1400.0), cfg);
    r.value *= key_factor(prefactor, mu) * phase / (2.0 * kPi);
    r.err_estimate *= std::abs(key_factor(prefactor, mu)) / (2.0 * kPi);
    return r;
}

quad::QuadratureResult resolvent_integral(const SpectralParam& sp, const MagneticK& k,
                                          const HalfPlanePoint& z, const HalfPlanePoint& zp,
                                          KeyPrefactor prefactor, const quad::QuadConfig& cfg,
                                          WaveForm form) {
    const double c2 = geometry::cosh2_half_dist_halfplane(z, zp);
    require_off_diagonal(c2);
    const double rho = geometry::dist_from_cosh2_half(c2);
    const cplx phase = geometry::magnetic_phase_halfplane(k, z, zp);
    return resolvent_integral_radial(sp.mu(), k.abs(), rho, phase, prefactor, cfg, form);
}

quad::QuadratureResult heat_kernel(double t, const MagneticK& k, const HalfPlanePoint& z,
                                   const HalfPlanePoint& zp, const quad::QuadConfig& cfg, WaveForm form) {
    if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "heat kernel needs t > 0");
    const double c2 = geometry::cosh2_half_dist_halfplane(z, zp);
    require_off_diagonal(c2);
    const double rho = geometry::dist_from_cosh2_half(c2);
    const cplx phase = geometry::magnetic_phase_halfplane(k, z, zp);
    const double norm = 1.0 / std::pow(4.0 * kPi * t, 1.5);
    auto g = [&](double b) -> cplx {
        return wave_numerator(form, k.abs(), b, rho) * std::exp(-b * b / (4.0 * t)) * b;
    };
    auto r = quad::integrate_sqrt_endpoint(g, [rho](double b) { return wave_gap(b, rho); }, rho, cfg);
    r.value *= norm * phase / (2.0 * kPi);
    r.err_estimate *= norm / (2.0 * kPi);
    return r;
}

}  // namespace hypmorse::hkernels
