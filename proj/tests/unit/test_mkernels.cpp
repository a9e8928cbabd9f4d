#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hypmorse/error.hpp"
#include "hypmorse/mkernels.hpp"
#include "hypmorse/specfun.hpp"

using namespace hypmorse;
using namespace hypmorse::mkernels;
using std::numbers::pi;

namespace {

MorseConfig morse(double lambda, double k, double X, double Xp) {
    MorseConfig c;
    c.lambda = lambda;
    c.k = MagneticK(k);
    c.X = X;
    c.Xp = Xp;
    return c;
}

Conventions whittaker_calibrated() {
    Conventions cv;
    cv.whittaker_index = WhittakerIndex::OrderIMu;
    cv.whittaker_norm = WhittakerNorm::InverseTwoLambda;
    cv.whittaker_kappa = WhittakerKappa::SignedK;
    return cv;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

double half_j0(double lambda, double y, double yp, double b) {
    return 0.5 * specfun::bessel(specfun::BesselKind::J, 0.0,
                                 lambda * std::sqrt(2 * y * yp * std::cosh(b) - y * y - yp * yp));
}

}  // namespace

TEST_CASE("support identity and auxiliaries") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const auto c = morse(1.0, 0.5, d(rng), d(rng));
        const double lhs = std::pow(std::cosh(c.support_edge() / 2), 2) * 4 * c.y() * c.yp();
        const double rhs = std::pow(c.y() + c.yp(), 2);
        CHECK(std::abs(lhs - rhs) < 1e-13 * rhs);
        const double b = c.support_edge() + std::abs(d(rng));
        const auto a = WaveAuxiliaries::at(c, b);
        CHECK(a.Z.imag() == 0.0);
        CHECK(a.Z.real() >= 0.0);
        CHECK(std::abs(a.Z - a.Y5) < 1e-12 * std::max(1.0, std::abs(a.Z)));
        if (c.support_edge() > 0.05) CHECK(WaveAuxiliaries::at(c, c.support_edge() - 0.05).Z.real() == 0.0);
    }
}

TEST_CASE("k = 0 Phi1 wave kernel is the Bessel reduction") {
    const auto c = morse(1.0, 0.0, 0.0, std::log(1.5));
    CHECK(rel(wave_kernel_phi1(c, 1.2), half_j0(1.0, 1.0, 1.5, 1.2)) < 1e-13);
    CHECK(std::abs(wave_kernel_phi1(c, c.support_edge() + 1e-12) - 0.5) < 1e-6);
    CHECK_THROWS_AS(wave_kernel_phi1(c, c.support_edge()), Error);
}

TEST_CASE("Bessel wave kernel") {
    const auto c = morse(2.0, 0.0, 0.0, 0.0);
    CHECK(wave_kernel_bessel0(c, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(wave_kernel_bessel0(c, 1.0) == doctest::Approx(half_j0(2.0, 1, 1, 1.0)).epsilon(1e-14));
    const auto small = morse(1e-12, 0.0, 0.3, -0.4);
    CHECK(wave_kernel_bessel0(small, 3.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(wave_kernel_bessel0(morse(1.0, 0.0, 0.0, 1.0), 0.5), Error);
}

TEST_CASE("Fourier wave kernel") {
    const auto c0 = morse(1.0, 0.0, 0.0, std::log(1.5));
    CHECK(rel(wave_kernel_fourier(c0, 1.2).value, half_j0(1.0, 1.0, 1.5, 1.2)) < 1e-10);
    CHECK(std::abs(wave_kernel_fourier(c0, c0.support_edge()).value - 0.5) < 1e-14);
    // lambda -> 0 at k = 0: one half of the total mass of the hyperbolic kernel
    // over the support interval, which is 1/2 again.
    CHECK(std::abs(wave_kernel_fourier(morse(1e-12, 0.0, 0.0, 0.4), 2.0).value - 0.5) < 1e-10);

    for (double k : {0.5, 1.0, -0.5, 2.0}) {
        const auto c = morse(1.0, k, 0.0, 0.2);
        const double b = 0.2 + 0.6 * (2 * std::acosh(phi1_window_top(c)) - 0.2);
        INFO("k = " << k);
        CHECK(rel(wave_kernel_phi1(c, b), wave_kernel_fourier(c, b).value) < 1e-6);
    }
    // Non-discrete k is available only on this path.
    CHECK(std::isfinite(std::abs(wave_kernel_fourier(morse(1.0, 0.3, 0.0, 0.2), 1.5).value)));
}

TEST_CASE("Phi1 wave kernel domain") {
    // The second Phi1 argument leaves the unit disc once 3 Z^2 >= (y + y')^2;
    // at lambda = 1, X = 0, X' = 0.2 that happens near b = 1.12.
    const auto c = morse(1.0, 0.5, 0.0, 0.2);
    CHECK(2 * std::acosh(phi1_window_top(c)) == doctest::Approx(1.1184).epsilon(1e-4));
    try {
        wave_kernel_phi1(c, 1.5);
        FAIL("expected Domain");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Domain);
    }
    CHECK_THROWS_AS(wave_kernel_phi1(morse(1.0, 0.3, 0.0, 0.2), 0.8), Error);
    CHECK_THROWS_AS(wave_kernel_phi1(morse(1.0, 2.5, 0.0, 0.2), 0.8), Error);
}

TEST_CASE("thm51 wave kernel variant at k = 0") {
    // Its constant is -1 where the Bessel reduction needs 1/2.
    const auto c = morse(1.0, 0.0, 0.0, std::log(1.5));
    for (double b : {0.6, 1.2, 3.0})
        CHECK(rel(wave_kernel_phi1(c, b, MorseWaveVariant::Thm51), -2.0 * wave_kernel_phi1(c, b)) < 1e-12);
}

TEST_CASE("Morse resolvent: integral vs Whittaker closed form") {
    const auto cv = whittaker_calibrated();
    {
        const auto c = morse(1.0, 0.0, 0.0, 0.3);
        CHECK(rel(resolvent_integral(c, {0, -0.7}).value, resolvent_closed(c, {0, -0.7}, cv)) < 1e-5);
    }
    {
        const auto c = morse(1.0, 0.5, 0.0, 0.3);
        CHECK(rel(resolvent_integral(c, {0, -1.2}).value, resolvent_closed(c, {0, -1.2}, cv)) < 1e-4);
    }
    // Real mu is outside the integral's convergence region.
    try {
        resolvent_integral(morse(1.0, 0.5, -0.2, 0.5), 0.8);
        FAIL("expected ConvergenceViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConvergenceViolated);
    }
    CHECK_THROWS_AS(resolvent_integral(morse(1.0, 1.5, 0.0, 0.3), {0, -0.8}), Error);
}

TEST_CASE("Whittaker closed form at k = 0") {
    const auto cv = whittaker_calibrated();
    const auto c = morse(1.0, 0.0, 0.0, 0.3);
    for (double a : {0.7, 1.2}) {
        const double ik = specfun::bessel(specfun::BesselKind::I, a, 1.0) *
                          specfun::bessel(specfun::BesselKind::K, a, std::exp(0.3));
        CHECK(rel(resolvent_closed(c, {0, -a}, cv), ik) < 1e-10);
        // Normalisation 1/lambda gives the 2 I K of the k = 0 statement.
        Conventions inv_lambda = cv;
        inv_lambda.whittaker_norm = WhittakerNorm::InverseLambda;
        CHECK(rel(resolvent_closed(c, {0, -a}, inv_lambda), 2 * ik) < 1e-10);
        CHECK(rel(lebedev_closed(a, 1.0, std::exp(0.3)), ik) < 1e-15);
    }
}

TEST_CASE("Whittaker closed form ordering and poles") {
    const auto cv = whittaker_calibrated();
    const auto c = morse(1.0, 0.5, 0.4, -0.3), swapped = morse(1.0, 0.5, -0.3, 0.4);
    CHECK(rel(resolvent_closed(c, {0, -0.9}, cv), resolvent_closed(swapped, {0, -0.9}, cv)) < 1e-14);
    CHECK(rel(resolvent_closed_literal_order(swapped, {0, -0.9}, cv), resolvent_closed(c, {0, -0.9}, cv)) < 1e-14);
    CHECK(rel(resolvent_closed_literal_order(c, {0, -0.9}, cv), resolvent_closed(c, {0, -0.9}, cv)) > 1e-2);
    try {
        resolvent_closed(c, 0.0, cv);
        FAIL("expected Pole");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Pole);
    }
}

TEST_CASE("Morse heat kernel at k = 0") {
    const auto c = morse(1.0, 0.0, 0.0, 0.3);
    const double t = 0.5;
    quad::QuadConfig qc;
    qc.rel_tol = 1e-12;
    const auto h = heat_kernel(c, t, MorseWaveVariant::Thm43, qc);
    auto f = [&](double b) -> cplx {
        return std::exp(-b * b / (4 * t)) / std::pow(4 * pi * t, 1.5) * half_j0(1.0, 1.0, std::exp(0.3), b) * b;
    };
    const auto direct = quad::integrate_finite(f, 0.3, 20.0, qc);
    CHECK(rel(h.value, direct.value) < 1e-9);
    CHECK(rel(heat_kernel(c, t, MorseWaveVariant::Thm51, qc).value, -2.0 * h.value) < 1e-9);
    CHECK_THROWS_AS(heat_kernel(morse(1.0, 0.5, 0.0, 0.3), t, MorseWaveVariant::Thm51), Error);
}

TEST_CASE("theta_r against a fixed grid") {
    const double r = 2.0, t = 1.0;
    const int n = 20000;
    const double top = 12.0, h = top / n;
    auto g = [&](double xi) {
        return std::exp(-xi * xi / (2 * t) - r * std::cosh(xi)) * std::sinh(xi) * std::sin(pi * xi / t);
    };
    double simpson = g(0) + g(top);
    for (int i = 1; i < n; ++i) simpson += (i % 2 ? 4.0 : 2.0) * g(i * h);
    simpson *= h / 3.0;
    const double grid = r / std::sqrt(2 * pi * pi * pi * t) * std::exp(pi * pi / (2 * t)) * simpson;
    CHECK(std::abs(alili_theta(r, t).value.real() - grid) < 1e-11 * std::abs(grid));
}

TEST_CASE("Alili heat kernel against the wave-kernel heat integral") {
    // The two heat kernels differ in time scale and normalisation:
    // q(t) = 4 pi H(t/2).
    for (double k : {0.0, 0.5}) {
        const auto c = morse(1.0, k, 0.0, std::log(1.3));
        const double q = alili_heat(c, 0.8).value.real();
        CHECK(rel(q, 4 * pi * heat_kernel(c, 0.4).value.real()) < 1e-6);
        CHECK(rel(alili_j(c, 0.8).value.real(), q) < 1e-8);
    }
    const auto c = morse(1.0, 0.0, 0.0, 0.3);
    const double q = alili_heat(c, 4.0).value.real(), hk = heat_kernel(c, 2.0).value.real();
    CHECK(q * hk > 0);
    CHECK(hk < heat_kernel(c, 0.4).value.real());
    CHECK(rel(q, 4 * pi * hk) < 1e-6);
}

TEST_CASE("Lebedev Bessel product") {
    for (double a : {0.5, 1.0})
        for (auto [u, v] : {std::pair{1.0, 2.0}, {0.5, 1.5}, {2.0, 1.0}}) {
            const double want = lebedev_closed(a, std::min(u, v), std::max(u, v));
            CHECK(rel(lebedev_integral(a, u, v, LebedevRange::Support).value, want) < 1e-8);
            CHECK(rel(lebedev_integral(a, u, v, LebedevRange::Literal).value, want) > 0.5);
        }
    CHECK_THROWS_AS(lebedev_integral(0.0, 1.0, 2.0, LebedevRange::Support), Error);
}
