#pragma once

// Kernels of the magnetic operator D_k = y^2 (d_xx + d_yy) + 2 i k y d_x + 1/4
// on the upper half-plane: the wave (transmutation) kernel in its equivalent
// representations, the resolvent in closed and integral form, the disc-model
// resolvent and the heat kernel.

#include <complex>

#include "hypmorse/conventions.hpp"
#include "hypmorse/geometry.hpp"
#include "hypmorse/quad.hpp"

namespace hypmorse::hkernels {

using cplx = std::complex<double>;
using geometry::DiscPoint;
using geometry::HalfPlanePoint;
using geometry::MagneticK;

class SpectralParam {
public:
    SpectralParam(cplx mu, SpectralMapping mapping);
    /// The mu that the given mapping sends to s.
    static SpectralParam from_s(cplx s, SpectralMapping mapping);

    cplx mu() const { return mu_; }
    cplx s() const { return s_; }
    SpectralMapping mapping() const { return mapping_; }

private:
    cplx mu_;
    cplx s_;
    SpectralMapping mapping_;
};

cplx s_from_mu(cplx mu, SpectralMapping mapping);

enum class WaveForm {
    Baseline,  // F(|k|, -|k|; 1/2; 1 - ch_b^2/ch_r^2)
    I,         // F(2|k|, -2|k|; 1/2; (1 - ch_b/ch_r)/2)
    II,        // Pfaff-transformed
    III,       // Chebyshev T_{2|k|}(ch_b/ch_r), 2k integer
    IV,        // finite sum, 2k integer
    ILiteral,  // form I with the argument 1 - ch_b/ch_r taken literally
};

const char* to_string(WaveForm f);

/// The part of the wave kernel that multiplies phase / (2 pi sqrt(gap)),
/// where gap = cosh^2(b/2) - cosh^2(rho/2). Requires b > rho.
double wave_numerator(WaveForm form, double abs_k, double b, double rho);

/// cosh^2(b/2) - cosh^2(rho/2) without cancellation.
double wave_gap(double b, double rho);

/// W_k(b; z, z'). Zero for b < rho; throws OutsideSupport at b == rho.
cplx wave_kernel(WaveForm form, const MagneticK& k, double b, const HalfPlanePoint& z,
                 const HalfPlanePoint& zp);

/// Closed resolvent: Gamma(s-k)Gamma(s+k)/(4 pi Gamma(2s)) * phase *
/// ch^{-2s} F(s-|k|, s+|k|; 2s; ch^{-2}).
cplx resolvent_closed(const SpectralParam& sp, const MagneticK& k, const HalfPlanePoint& z,
                      const HalfPlanePoint& zp);

/// Same formula on the disc with the disc phase and distance.
cplx resolvent_disc_closed(const SpectralParam& sp, const MagneticK& k, const DiscPoint& w,
                           const DiscPoint& wp);

/// prefactor * int_rho^inf W_k(b) e^{-i mu b} db. Requires
/// Im mu < -max(0, |k| - 1/2); throws ConvergenceViolated otherwise.
quad::QuadratureResult resolvent_integral(const SpectralParam& sp, const MagneticK& k,
                                          const HalfPlanePoint& z, const HalfPlanePoint& zp,
                                          KeyPrefactor prefactor, const quad::QuadConfig& cfg = {},
                                          WaveForm form = WaveForm::Baseline);

/// The same integral for given rho and phase; used by the Morse kernels.
quad::QuadratureResult resolvent_integral_radial(cplx mu, double abs_k, double rho, cplx phase,
                                                 KeyPrefactor prefactor, const quad::QuadConfig& cfg,
                                                 WaveForm form = WaveForm::Baseline);

/// int_rho^inf e^{-b^2/4t} / (4 pi t)^{3/2} W_k(b) b db.
quad::QuadratureResult heat_kernel(double t, const MagneticK& k, const HalfPlanePoint& z,
                                   const HalfPlanePoint& zp, const quad::QuadConfig& cfg = {},
                                   WaveForm form = WaveForm::Baseline);

}  // namespace hypmorse::hkernels
