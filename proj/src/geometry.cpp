#include "hypmorse/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "hypmorse/error.hpp"

namespace hypmorse::geometry {

namespace {
constexpr cplx kI{0.0, 1.0};
}

void HalfPlanePoint::validate() const {
    if (!std::isfinite(x) || !(y > 0.0) || !std::isfinite(y))
        throw Error(ErrorCode::InvalidArgument, "half-plane point needs finite x and y > 0");
}

void DiscPoint::validate() const {
    if (!(std::abs(w) < 1.0)) throw Error(ErrorCode::InvalidArgument, "disc point needs |w| < 1");
}

MagneticK::MagneticK(double value) : k(value) {
    if (!std::isfinite(value)) throw Error(ErrorCode::InvalidArgument, "k must be finite");
    const double twice = 2.0 * value;
    is_discrete = std::abs(twice - std::round(twice)) <= 1e-12;
}

int MagneticK::twice_abs() const {
    if (!is_discrete) throw Error(ErrorCode::Unsupported, "2|k| must be an integer here");
    return static_cast<int>(std::lround(2.0 * abs()));
}

double cosh2_half_dist_halfplane(const HalfPlanePoint& z, const HalfPlanePoint& zp) {
    z.validate();
    zp.validate();
    const double dx = z.x - zp.x;
    const double sy = z.y + zp.y;
    return std::max(1.0, (dx * dx + sy * sy) / (4.0 * z.y * zp.y));
}

double dist_from_cosh2_half(double c2) { return 2.0 * std::acosh(std::sqrt(std::max(1.0, c2))); }

double dist_halfplane(const HalfPlanePoint& z, const HalfPlanePoint& zp) {
    return dist_from_cosh2_half(cosh2_half_dist_halfplane(z, zp));
}

double cosh2_half_dist_disc(const DiscPoint& w, const DiscPoint& wp) {
    w.validate();
    wp.validate();
    const double num = std::norm(1.0 - w.w * std::conj(wp.w));
    return std::max(1.0, num / ((1.0 - std::norm(w.w)) * (1.0 - std::norm(wp.w))));
}

double dist_disc(const DiscPoint& w, const DiscPoint& wp) {
    return dist_from_cosh2_half(cosh2_half_dist_disc(w, wp));
}

DiscPoint cayley(const HalfPlanePoint& z) {
    z.validate();
    return {(z.z() - kI) / (z.z() + kI)};
}

HalfPlanePoint inverse_cayley(const DiscPoint& w) {
    w.validate();
    const cplx z = -kI * (w.w + 1.0) / (w.w - 1.0);
    return {z.real(), z.imag()};
}

cplx magnetic_phase_halfplane(const MagneticK& k, const HalfPlanePoint& z, const HalfPlanePoint& zp) {
    if (k.k == 0.0) return {1.0, 0.0};
    // Both factors have imaginary part y + y' > 0, so the ratio stays off the cut.
    const cplx ratio = (zp.z() - std::conj(z.z())) / (z.z() - std::conj(zp.z()));
    return std::pow(ratio, k.k);
}

cplx magnetic_phase_disc(const MagneticK& k, const DiscPoint& w, const DiscPoint& wp) {
    if (k.k == 0.0) return {1.0, 0.0};
    const cplx ratio = (1.0 - w.w * std::conj(wp.w)) / (1.0 - std::conj(w.w) * wp.w);
    return std::pow(ratio, k.k);
}

cplx u_factor(double k, const DiscPoint& w) {
    return std::pow((1.0 - std::conj(w.w)) / (1.0 - w.w), k);
}

cplx u_inverse_factor(double k, const HalfPlanePoint& z) {
    return std::pow((kI - std::conj(z.z())) / (z.z() + kI), k);
}

}  // namespace hypmorse::geometry
