#pragma once

// Kernels of the Morse operator with coupling lambda and charge k on the line:
// the wave kernel through Humbert's Phi1, its k = 0 Bessel reduction and its
// Fourier construction from the hyperbolic wave kernel; the resolvent as a
// b-integral and through Whittaker functions; the heat kernel; and the
// Alili-type double integrals used as an independent heat-kernel oracle.

#include <complex>

#include "hypmorse/conventions.hpp"
#include "hypmorse/geometry.hpp"
#include "hypmorse/quad.hpp"

namespace hypmorse::mkernels {

using cplx = std::complex<double>;
using geometry::MagneticK;

struct MorseConfig {
    double lambda = 1.0;
    MagneticK k;
    double X = 0.0;
    double Xp = 0.0;

    double y() const;
    double yp() const;
    /// |X - X'|, the left end of the wave kernel's support in b.
    double support_edge() const;
    void validate() const;
};

/// Auxiliary quantities of the two wave-kernel variants at a given b.
struct WaveAuxiliaries {
    cplx Z;      // sqrt(4 y y' cosh^2(b/2) - (y + y')^2), i * sqrt(|.|) below the edge
    cplx Y;      // i sign(k) (y + y')
    cplx Y5;     // 2 e^{(X+X')/2} sqrt(cosh^2(b/2) - cosh^2((X-X')/2))
    cplx Z5;     // 2 g / (g + i sign(k) cosh((X-X')/2)), g the same square root
    cplx C_k;    // (-1)^k Gamma(2|k|+1/2) / (2 Gamma(4|k|+1) sqrt(pi)), (-1)^k = e^{i pi k}
    cplx c1;     // (-1)^{|k|+1} Gamma(2|k|+1/2) / (2^{|k|} Gamma(4|k|+1) sqrt(pi))

    static WaveAuxiliaries at(const MorseConfig& cfg, double b);
};

/// Largest cosh(b/2) for which the Phi1 second argument stays in the unit
/// disc; the window is (cosh(edge/2), this value).
double phi1_window_top(const MorseConfig& cfg);

/// Wave kernel from the Phi1 representation. The operator
/// (d / (sinh(b/2) db))^{2|k|} is applied as 2^{-n} d^n/dv^n in v = cosh(b/2)
/// with a single Richardson-extrapolated difference. Requires 2k integer,
/// |k| <= 2 and b strictly inside the Phi1 window; throws Unsupported or
/// Domain otherwise, OutsideSupport for b <= |X - X'|.
cplx wave_kernel_phi1(const MorseConfig& cfg, double b,
                      MorseWaveVariant variant = MorseWaveVariant::Thm43,
                      const quad::DiffConfig& diff = {});

/// The undifferentiated Phi1 expression at v = cosh(b/2) (complex v allowed
/// in principle; real here).
cplx wave_phi1_body(const MorseConfig& cfg, double v, MorseWaveVariant variant);

/// (1/2) J0(lambda sqrt(2 y y' cosh b - y^2 - y'^2)) for b >= |X - X'|.
double wave_kernel_bessel0(const MorseConfig& cfg, double b);

/// (1/2) (y y')^{-1/2} int e^{-i lambda u} W_k(b; z, z') du over the support
/// |u| < Z, with u = Z sin(theta). Any real k. The factor 1/2 makes the k = 0
/// case equal the Bessel reduction.
quad::QuadratureResult wave_kernel_fourier(const MorseConfig& cfg, double b,
                                           const quad::QuadConfig& qc = {});

/// int_0^inf e^{-i mu b} W(b) db. k = 0 runs in b through the substitution
/// b -> Z; k != 0 exchanges the order with the Fourier variable and integrates
/// the hyperbolic b-integral inside. Requires Im mu < -max(0, |k| - 1/2).
quad::QuadratureResult resolvent_integral(const MorseConfig& cfg, cplx mu,
                                          const quad::QuadConfig& qc = {});

/// Gamma(a - kappa + 1/2) / (N lambda Gamma(1 + 2a)) e^{-(X+X')/2}
///   * W_{kappa,a}(2 lambda e^{X>}) M_{kappa,a}(2 lambda e^{X<}),
/// with a = mu or i mu, kappa = |k| or k and N = 1 or 2 per the conventions.
/// M takes the smaller coordinate.
cplx resolvent_closed(const MorseConfig& cfg, cplx mu, const Conventions& conv);

/// Same formula with the literal assignment: W at X', M at X, whatever
/// their order.
cplx resolvent_closed_literal_order(const MorseConfig& cfg, cplx mu, const Conventions& conv);

/// int_edge^inf e^{-b^2/4t} (4 pi t)^{-3/2} W(b) b db. Thm43 uses the Bessel
/// reduction at k = 0 and the Fourier construction otherwise; Thm51 uses the
/// second Phi1 variant, which is only available inside its disc.
quad::QuadratureResult heat_kernel(const MorseConfig& cfg, double t,
                                   MorseWaveVariant variant = MorseWaveVariant::Thm43,
                                   const quad::QuadConfig& qc = {});

/// theta_r(t) = r (2 pi^3 t)^{-1/2} e^{pi^2/2t} int_0^inf e^{-xi^2/2t} e^{-r cosh xi}
/// sinh xi sin(pi xi / t) dxi, evaluated on the contour shifted by i pi/2.
quad::QuadratureResult alili_theta(double r, double t, const quad::QuadConfig& qc = {});

/// int_0^inf e^{2ku} / (2 sinh u) exp(-lambda (y+y') coth u) theta_r(t/4) du,
/// r = 2 lambda sqrt(y y') / sinh u.
quad::QuadratureResult alili_heat(const MorseConfig& cfg, double t,
                                  const quad::QuadConfig& qc = {});

/// The double integral J(t, y, y') with its xi contour shifted to
/// [0, i pi/2] u [i pi/2, i pi/2 + inf).
quad::QuadratureResult alili_j(const MorseConfig& cfg, double t, const quad::QuadConfig& qc = {});

/// I_a(u) K_a(v).
double lebedev_closed(double a, double u, double v);

enum class LebedevRange {
    Support,  // b from log(v/u) for u < v, where the radicand is nonnegative
    Literal,  // b from 0, J0(i x) = I0(x) below log(v/u)
};

/// (1/2) int e^{-a b} J0(sqrt(2 u v cosh b - u^2 - v^2)) db.
quad::QuadratureResult lebedev_integral(double a, double u, double v, LebedevRange range,
                                        const quad::QuadConfig& qc = {});

}  // namespace hypmorse::mkernels
