#include "hypmorse/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "hypmorse/error.hpp"

namespace hypmorse::quad {

namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077382365791531, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Segment {
    double a, b;
    cplx value;
    double err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gk21(const ComplexFn& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const cplx fc = f(center);
    cplx resk = fc * kWgk[10];
    cplx resg{0.0, 0.0};
    double resabs = std::abs(fc) * kWgk[10];
    std::array<cplx, 10> f1{}, f2{};
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        const cplx sum = f1[j] + f2[j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    const cplx mean = resk * 0.5;
    double resasc = kWgk[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j)
        resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    const double scale = std::abs(half);
    resasc *= scale;
    resabs *= scale;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
        err = std::max(err, 50.0 * kEps * resabs);
    return {a, b, resk * half, err};
}

double tolerance(const QuadConfig& cfg, cplx value) {
    return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
}

}  // namespace

void QuadConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1 || max_panels < 1 ||
        !(initial_panel > 0.0) || !(panel_growth >= 1.0))
        throw Error(ErrorCode::InvalidArgument, "QuadConfig: invalid tolerances or limits");
}

QuadratureResult integrate_finite(const ComplexFn& f, double a, double b, const QuadConfig& cfg) {
    cfg.validate();
    if (!(a < b)) {
        if (a == b) return {cplx{}, 0.0, 0, true};
        throw Error(ErrorCode::InvalidArgument, "integrate_finite: requires a < b");
    }

    std::priority_queue<Segment> heap;
    Segment first = gk21(f, a, b);
    long evals = 21;
    cplx total = first.value;
    double err = first.err;
    heap.push(first);

    int subdivisions = 1;
    while (err > tolerance(cfg, total) && subdivisions < cfg.max_subdivisions) {
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Interval can no longer be split in floating point.
            heap.push(worst);
            break;
        }
        Segment left = gk21(f, worst.a, mid);
        Segment right = gk21(f, mid, worst.b);
        evals += 42;
        total += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }

    // Re-sum from the heap to shed accumulated update round-off.
    cplx value{};
    double err_sum = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        err_sum += heap.top().err;
        heap.pop();
    }
    return {value, err_sum, evals, err_sum <= tolerance(cfg, value)};
}

QuadratureResult integrate_semiinfinite(const ComplexFn& f, double a, const QuadConfig& cfg) {
    cfg.validate();
    QuadratureResult out;
    out.converged = false;

    double left = a;
    double length = cfg.initial_panel;
    int small_in_a_row = 0;
    int growth_in_a_row = 0;
    double prev_density = std::numeric_limits<double>::infinity();

    for (int panel = 0; panel < cfg.max_panels; ++panel) {
        QuadConfig pcfg = cfg;
        pcfg.abs_tol = std::max(cfg.abs_tol, 0.1 * cfg.rel_tol * std::abs(out.value));
        const QuadratureResult r = integrate_finite(f, left, left + length, pcfg);
        out.value += r.value;
        out.err_estimate += r.err_estimate;
        out.n_evals += r.n_evals;

        const double magnitude = std::abs(r.value);
        const double density = magnitude / length;
        if (std::isfinite(density) && density > prev_density && density > 0.0)
            ++growth_in_a_row;
        else
            growth_in_a_row = 0;
        prev_density = density;
        if (!std::isfinite(magnitude) || growth_in_a_row >= 8)
            throw Error(ErrorCode::TailDivergence,
                        "integrate_semiinfinite: integrand is not decaying beyond b = " +
                            std::to_string(left));

        if (magnitude <= cfg.tail_truncation_factor * tolerance(cfg, out.value) &&
            r.err_estimate <= tolerance(cfg, out.value)) {
            if (++small_in_a_row >= 2) {
                out.err_estimate += magnitude;
                out.converged = out.err_estimate <= 10.0 * tolerance(cfg, out.value);
                return out;
            }
        } else {
            small_in_a_row = 0;
        }
        left += length;
        length *= cfg.panel_growth;
    }
    return out;
}

namespace {

ComplexFn substituted(const ComplexFn& g, const RealFn& gap, double a) {
    return [&g, &gap, a](double u) -> cplx {
        const double b = a + u * u;
        const double d = gap(b);
        if (!(d > 0.0)) return cplx{};
        return g(b) * (2.0 * u / std::sqrt(d));
    };
}

}  // namespace

QuadratureResult integrate_sqrt_endpoint(const ComplexFn& g, const RealFn& gap, double a,
                                         const QuadConfig& cfg) {
    return integrate_semiinfinite(substituted(g, gap, a), 0.0, cfg);
}

QuadratureResult integrate_sqrt_endpoint_finite(const ComplexFn& g, const RealFn& gap, double a,
                                                double b_max, const QuadConfig& cfg) {
    if (!(b_max > a))
        throw Error(ErrorCode::InvalidArgument, "integrate_sqrt_endpoint_finite: b_max <= a");
    return integrate_finite(substituted(g, gap, a), 0.0, std::sqrt(b_max - a), cfg);
}

double derivative_step(double x, int n, const DiffConfig& cfg) {
    if (n < 1 || n > 4)
        throw Error(ErrorCode::InvalidArgument, "nth_derivative: order must be in 1..4");
    static constexpr std::array<double, 4> kScale = {1.0, 10.0, 30.0, 100.0};
    const double scale = std::max(1.0, std::abs(x));
    double h = cfg.base_step * kScale[n - 1] * scale;
    // Widest stencil reaches 2h for n >= 3, h otherwise.
    const double reach = n >= 3 ? 2.0 : 1.0;
    h = std::min(h, cfg.max_step / reach);
    const double floor = 1e-6 * std::pow(10.0, n - 1) * scale;
    if (!(h >= floor))
        throw Error(ErrorCode::Domain, "nth_derivative: step underflow (window too narrow)");
    return h;
}

cplx nth_derivative(const ComplexFn& f, double x, int n, const DiffConfig& cfg) {
    const double h0 = derivative_step(x, n, cfg);
    if (cfg.levels < 1) throw Error(ErrorCode::InvalidArgument, "nth_derivative: levels < 1");

    auto stencil = [&](double h) -> cplx {
        switch (n) {
            case 1:
                return (f(x + h) - f(x - h)) / (2.0 * h);
            case 2:
                return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
            case 3:
                return (f(x + 2 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2 * h)) /
                       (2.0 * h * h * h);
            default:
                return (f(x + 2 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) +
                        f(x - 2 * h)) /
                       (h * h * h * h);
        }
    };

    std::vector<std::vector<cplx>> table(cfg.levels);
    double h = h0;
    for (int i = 0; i < cfg.levels; ++i, h *= 0.5) {
        table[i].resize(i + 1);
        table[i][0] = stencil(h);
        double factor = 4.0;
        for (int j = 1; j <= i; ++j, factor *= 4.0)
            table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
    }
    return table.back().back();
}

}  // namespace hypmorse::quad
