#include "hypmorse/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hypmorse/error.hpp"

namespace hypmorse::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

// B_{2m} for m = 1..10.
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,     -1.0 / 30.0,      1.0 / 42.0,     -1.0 / 30.0,   5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0};

constexpr double kAsymptoticRadius = 15.0;
constexpr double kMaxShift = 1e5;

cplx stirling_log_gamma(cplx z) {
    cplx sum = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
    const cplx inv = 1.0 / z;
    const cplx inv2 = inv * inv;
    cplx p = inv;
    for (int m = 1; m <= 10; ++m) {
        sum += kBernoulli[m - 1] / (2.0 * m * (2.0 * m - 1.0)) * p;
        p *= inv2;
    }
    return sum;
}

cplx asymptotic_digamma(cplx z) {
    cplx sum = std::log(z) - 0.5 / z;
    const cplx inv2 = 1.0 / (z * z);
    cplx p = inv2;
    for (int m = 1; m <= 10; ++m) {
        sum -= kBernoulli[m - 1] / (2.0 * m) * p;
        p *= inv2;
    }
    return sum;
}

bool is_nonpositive_int(cplx z, int* value = nullptr) {
    if (!is_nonpositive_integer(z)) return false;
    if (value) *value = static_cast<int>(std::lround(z.real()));
    return true;
}

void require_finite(cplx v, const char* where) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw Error(ErrorCode::NonConvergence, std::string(where) + ": non-finite result");
}

// Sums sum_n t_n with t_{n+1} = t_n * ratio(n) until three consecutive terms
// are negligible.
template <class Ratio>
cplx sum_series(Ratio ratio, const SeriesConfig& cfg, const char* where) {
    cplx term{1.0, 0.0};
    cplx sum = term;
    double largest = 1.0;
    int small = 0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        term *= ratio(n);
        sum += term;
        const double at = std::abs(term);
        largest = std::max(largest, at);
        if (at <= cfg.term_tol * std::abs(sum)) {
            if (++small >= 3) {
                if (largest > kMaxCancellation * std::abs(sum))
                    throw Error(ErrorCode::NonConvergence,
                                std::string(where) + ": cancellation destroys the series sum");
                require_finite(sum, where);
                return sum;
            }
        } else {
            small = 0;
        }
    }
    throw Error(ErrorCode::NonConvergence,
                std::string(where) + ": series did not converge within max_terms");
}

// Generalized hypergeometric polynomial sum_{n < terms} prod (num)_n / prod
// (den)_n z^n / n!, in extended precision: the terms of a terminating series
// can exceed the sum by several orders of magnitude.
cplx terminating_sum(std::initializer_list<cplx> num, std::initializer_list<cplx> den, cplx z,
                     int terms) {
    using lcplx = std::complex<long double>;
    const lcplx lz{z.real(), z.imag()};
    lcplx term{1.0L, 0.0L};
    lcplx sum = term;
    for (int n = 0; n + 1 < terms; ++n) {
        const long double dn = n;
        for (cplx p : num) term *= lcplx{p.real(), p.imag()} + dn;
        for (cplx p : den) term /= lcplx{p.real(), p.imag()} + dn;
        term *= lz / (dn + 1.0L);
        sum += term;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// Number of terms of a 2F1/1F1-type series that terminates because a
// numerator parameter is a non-positive integer; -1 if it does not.
int terminating_length(std::initializer_list<cplx> numerators) {
    int best = -1;
    for (cplx p : numerators) {
        int v = 0;
        if (is_nonpositive_int(p, &v)) {
            const int len = -v + 1;
            if (best < 0 || len < best) best = len;
        }
    }
    return best;
}

void check_denominator(cplx c, int terms, const char* where) {
    int v = 0;
    if (is_nonpositive_int(c, &v) && (terms < 0 || -v < terms - 1))
        throw Error(ErrorCode::Pole, std::string(where) + ": denominator parameter is a pole");
}

}  // namespace

void SeriesConfig::validate() const {
    if (max_terms < 1 || !(term_tol > 0.0))
        throw Error(ErrorCode::InvalidArgument, "SeriesConfig: max_terms >= 1 and term_tol > 0 required");
}

bool is_nonpositive_integer(cplx z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol * std::max(1.0, std::abs(r));
}

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z))
        throw Error(ErrorCode::Pole, "log_gamma: pole at non-positive integer");
    if (z.real() < -kMaxShift) throw Error(ErrorCode::Domain, "log_gamma: real part too negative");
    // Upward recurrence only: summing principal logs of z + j keeps the
    // standard branch (cut along the negative real axis) without the 2 pi i
    // bookkeeping a reflection formula would need.
    cplx shift{};
    while (z.real() < kAsymptoticRadius) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling_log_gamma(z) - shift;
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx rgamma(cplx z) {
    if (is_nonpositive_integer(z)) return cplx{};
    return std::exp(-log_gamma(z));
}

cplx digamma(cplx z) {
    if (is_nonpositive_integer(z)) throw Error(ErrorCode::Pole, "digamma: pole at non-positive integer");
    if (z.real() < -kMaxShift) throw Error(ErrorCode::Domain, "digamma: real part too negative");
    cplx shift{};
    while (z.real() < kAsymptoticRadius) {
        shift += 1.0 / z;
        z += 1.0;
    }
    return asymptotic_digamma(z) - shift;
}

cplx pochhammer(cplx a, int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "pochhammer: n must be non-negative");
    cplx p{1.0, 0.0};
    for (int j = 0; j < n; ++j) p *= a + static_cast<double>(j);
    return p;
}

cplx gauss_2f1_series(cplx a, cplx b, cplx c, cplx z, const SeriesConfig& cfg) {
    cfg.validate();
    const int terms = terminating_length({a, b});
    check_denominator(c, terms, "gauss_2f1");
    if (terms < 0 && !(std::abs(z) < 1.0))
        throw Error(ErrorCode::Domain, "gauss_2f1: direct series needs |z| < 1");
    if (terms >= 0) return terminating_sum({a, b}, {c}, z, terms);
    auto ratio = [&](int n) {
        const double dn = n;
        return (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    };
    return sum_series(ratio, cfg, "gauss_2f1");
}

cplx gauss_2f1_pfaff(cplx a, cplx b, cplx c, cplx z, const SeriesConfig& cfg) {
    const cplx w = z / (z - 1.0);
    return std::pow(1.0 - z, -a) * gauss_2f1_series(a, c - b, c, w, cfg);
}

namespace {

// F(a,b;c;z) via the 1 - z connection formula, c - a - b not an integer.
cplx connection_1mz(cplx a, cplx b, cplx c, cplx z, const SeriesConfig& cfg) {
    const cplx s = c - a - b;
    const cplx w = 1.0 - z;
    const cplx t1 = gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b) *
                    gauss_2f1_series(a, b, 1.0 - s, w, cfg);
    const cplx t2 = std::pow(w, s) * gamma(c) * gamma(-s) * rgamma(a) * rgamma(b) *
                    gauss_2f1_series(c - a, c - b, 1.0 + s, w, cfg);
    return t1 + t2;
}

// F(a,b;a+b;z): logarithmic case of the 1 - z connection formula.
cplx connection_log(cplx a, cplx b, cplx z, const SeriesConfig& cfg) {
    const cplx w = 1.0 - z;
    const cplx log_w = std::log(w);
    cplx psi1 = digamma(cplx{1.0, 0.0});
    cplx psia = digamma(a);
    cplx psib = digamma(b);
    cplx coef{1.0, 0.0};
    cplx sum = coef * (2.0 * psi1 - psia - psib - log_w);
    int small = 0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        const double dn = n;
        coef *= (a + dn) * (b + dn) / ((dn + 1.0) * (dn + 1.0)) * w;
        psi1 += 1.0 / (dn + 1.0);
        psia += 1.0 / (a + dn);
        psib += 1.0 / (b + dn);
        const cplx term = coef * (2.0 * psi1 - psia - psib - log_w);
        sum += term;
        if (std::abs(term) <= cfg.term_tol * std::abs(sum)) {
            if (++small >= 3) return gamma(a + b) * rgamma(a) * rgamma(b) * sum;
        } else {
            small = 0;
        }
    }
    throw Error(ErrorCode::NonConvergence, "gauss_2f1: logarithmic connection series did not converge");
}

}  // namespace

cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z, const SeriesConfig& cfg) {
    cfg.validate();
    if (z == cplx{}) return {1.0, 0.0};
    const int terms = terminating_length({a, b});
    if (terms >= 0) return gauss_2f1_series(a, b, c, z, cfg);
    check_denominator(c, -1, "gauss_2f1");

    const double r_direct = std::abs(z);
    const double r_pfaff = z.real() < 0.5 ? std::abs(z / (z - 1.0)) : 2.0;
    const double r_conn = std::abs(1.0 - z);
    constexpr double kDirectEnough = 0.5;

    if (r_direct <= kDirectEnough) return gauss_2f1_series(a, b, c, z, cfg);

    if (r_pfaff < r_direct && r_pfaff <= r_conn) {
        const cplx w = z / (z - 1.0);
        // Prefer the Pfaff variant whose series terminates.
        if (terminating_length({c - a}) >= 0)
            return std::pow(1.0 - z, -b) * gauss_2f1(b, c - a, c, w, cfg);
        return std::pow(1.0 - z, -a) * gauss_2f1(a, c - b, c, w, cfg);
    }

    if (r_conn < 1.0 && r_conn < r_direct) {
        const cplx s = c - a - b;
        const double s_round = std::round(s.real());
        const bool integer_s = std::abs(s.imag()) < 1e-12 && std::abs(s.real() - s_round) < 1e-12;
        if (integer_s && s_round == 0.0) return connection_log(a, b, z, cfg);
        const bool near_integer = std::abs(s.imag()) < 1e-3 && std::abs(s.real() - s_round) < 1e-3;
        if (!near_integer) return connection_1mz(a, b, c, z, cfg);
    }

    if (r_direct < 1.0) return gauss_2f1_series(a, b, c, z, cfg);
    throw Error(ErrorCode::Domain, "gauss_2f1: argument outside the implemented regions");
}

cplx kummer_1f1(cplx a, cplx c, cplx x, const SeriesConfig& cfg) {
    cfg.validate();
    if (std::abs(x) > kKummerMaxAbsArg)
        throw Error(ErrorCode::Domain, "kummer_1f1: |x| beyond the series range");
    const int terms = terminating_length({a});
    check_denominator(c, terms, "kummer_1f1");
    if (terms < 0 && x.real() < 0.0) return std::exp(x) * kummer_1f1(c - a, c, -x, cfg);
    if (terms >= 0) return terminating_sum({a}, {c}, x, terms);
    auto ratio = [&](int n) {
        const double dn = n;
        return (a + dn) / ((c + dn) * (dn + 1.0)) * x;
    };
    return sum_series(ratio, cfg, "kummer_1f1");
}

cplx humbert_phi1(cplx a, cplx b, cplx c, cplx x, cplx y, const SeriesConfig& cfg) {
    cfg.validate();
    const int terms = terminating_length({a, b});
    check_denominator(c, -1, "humbert_phi1");
    if (terms < 0 && !(std::abs(y) < 1.0))
        throw Error(ErrorCode::Domain, "humbert_phi1: |y| >= 1 is outside the convergence region");

    // Phi1 = sum_n (a)_n (b)_n / ((c)_n n!) y^n 1F1(a+n; c+n; x)
    cplx coef{1.0, 0.0};
    cplx sum{};
    int small = 0;
    const int limit = terms >= 0 ? terms : cfg.max_terms;
    for (int n = 0; n < limit; ++n) {
        const double dn = n;
        if (n > 0) coef *= (a + dn - 1.0) * (b + dn - 1.0) / ((c + dn - 1.0) * dn) * y;
        const cplx term = coef * kummer_1f1(a + dn, c + dn, x, cfg);
        sum += term;
        if (terms >= 0) continue;
        if (std::abs(term) <= cfg.term_tol * std::abs(sum)) {
            if (++small >= 3) return sum;
        } else {
            small = 0;
        }
    }
    if (terms >= 0) return sum;
    throw Error(ErrorCode::NonConvergence, "humbert_phi1: series in y did not converge");
}

double chebyshev_t(int n, double x) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "chebyshev_t: n must be non-negative");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int j = 1; j < n; ++j) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double bessel(BesselKind kind, double nu, double x, const SeriesConfig& cfg) {
    cfg.validate();
    if (!(x >= 0.0) || (kind == BesselKind::K && !(x > 0.0)))
        throw Error(ErrorCode::Domain, "bessel: argument must be positive");
    if (nu >= 0.0) {
        switch (kind) {
            case BesselKind::J: return std::cyl_bessel_j(nu, x);
            case BesselKind::I: return std::cyl_bessel_i(nu, x);
            case BesselKind::K: return std::cyl_bessel_k(nu, x);
        }
    }
    const double a = -nu;
    const bool integer = a == std::round(a);
    switch (kind) {
        case BesselKind::J:
            if (integer) return (static_cast<long>(a) % 2 == 0 ? 1.0 : -1.0) * std::cyl_bessel_j(a, x);
            if (x == 0.0) throw Error(ErrorCode::Domain, "bessel: J_{-nu}(0) is singular");
            return std::cos(a * kPi) * std::cyl_bessel_j(a, x) - std::sin(a * kPi) * std::cyl_neumann(a, x);
        case BesselKind::I:
            if (integer) return std::cyl_bessel_i(a, x);
            if (x == 0.0) throw Error(ErrorCode::Domain, "bessel: I_{-nu}(0) is singular");
            return std::cyl_bessel_i(a, x) + 2.0 / kPi * std::sin(a * kPi) * std::cyl_bessel_k(a, x);
        case BesselKind::K:
            return std::cyl_bessel_k(a, x);
    }
    return 0.0;
}

cplx whittaker(WhittakerKind kind, double k, cplx mu, double z, const SeriesConfig& cfg) {
    if (!(z > 0.0)) throw Error(ErrorCode::Domain, "whittaker: z must be positive");
    auto m_function = [&](cplx m) {
        const cplx c = 1.0 + 2.0 * m;
        if (is_nonpositive_integer(c)) throw Error(ErrorCode::Pole, "whittaker: 1 + 2 mu is a pole");
        return std::exp((m + 0.5) * std::log(z) - 0.5 * z) * kummer_1f1(m - k + 0.5, c, z, cfg);
    };
    if (kind == WhittakerKind::M) return m_function(mu);

    const cplx two_mu = 2.0 * mu;
    if (std::abs(two_mu.imag()) < 1e-12 && std::abs(two_mu.real() - std::round(two_mu.real())) < 1e-12)
        throw Error(ErrorCode::Unsupported, "whittaker: W with integer 2 mu is not supported");
    return gamma(-two_mu) * rgamma(0.5 - mu - k) * m_function(mu) +
           gamma(two_mu) * rgamma(0.5 + mu - k) * m_function(-mu);
}

}  // namespace hypmorse::specfun
