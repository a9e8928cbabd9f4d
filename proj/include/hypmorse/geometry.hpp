#pragma once

// Half-plane and disc models of the hyperbolic plane: distances, the Cayley
// map between them and the unit-modulus magnetic phase factors.

#include <complex>

namespace hypmorse::geometry {

using cplx = std::complex<double>;

struct HalfPlanePoint {
    double x = 0.0;
    double y = 1.0;

    cplx z() const { return {x, y}; }
    void validate() const;  // y > 0, finite
};

struct DiscPoint {
    cplx w{};

    void validate() const;  // |w| < 1
};

struct MagneticK {
    double k = 0.0;
    bool is_discrete = true;  // 2k is an integer (within 1e-12)

    MagneticK() = default;
    explicit MagneticK(double value);

    double abs() const { return k < 0 ? -k : k; }
    // sign(0) = +1: every sign-carrying term has a vanishing prefactor at k = 0.
    double sign() const { return k < 0 ? -1.0 : 1.0; }
    // 2|k| as an integer; throws Unsupported unless is_discrete.
    int twice_abs() const;
};

/// cosh^2(rho/2) = ((x-x')^2 + (y+y')^2) / (4 y y'), clamped to [1, inf).
double cosh2_half_dist_halfplane(const HalfPlanePoint& z, const HalfPlanePoint& zp);
double dist_halfplane(const HalfPlanePoint& z, const HalfPlanePoint& zp);

/// cosh^2(d/2) = |1 - w conj(w')|^2 / ((1-|w|^2)(1-|w'|^2)), clamped to [1, inf).
double cosh2_half_dist_disc(const DiscPoint& w, const DiscPoint& wp);
double dist_disc(const DiscPoint& w, const DiscPoint& wp);

/// rho from cosh^2(rho/2).
double dist_from_cosh2_half(double c2);

DiscPoint cayley(const HalfPlanePoint& z);            // w = (z - i)/(z + i)
HalfPlanePoint inverse_cayley(const DiscPoint& w);    // z = -i (w + 1)/(w - 1)

/// ((z' - conj z)/(z - conj z'))^k, principal branch.
cplx magnetic_phase_halfplane(const MagneticK& k, const HalfPlanePoint& z, const HalfPlanePoint& zp);
/// ((1 - w conj w')/(1 - conj(w) w'))^k, principal branch.
cplx magnetic_phase_disc(const MagneticK& k, const DiscPoint& w, const DiscPoint& wp);

/// Gauge factors of the intertwining operators: ((1 - conj w)/(1 - w))^k and
/// ((i - conj z)/(z + i))^k.
cplx u_factor(double k, const DiscPoint& w);
cplx u_inverse_factor(double k, const HalfPlanePoint& z);

}  // namespace hypmorse::geometry
