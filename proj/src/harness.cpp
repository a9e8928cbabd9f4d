#include "hypmorse/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "hypmorse/error.hpp"
#include "hypmorse/hkernels.hpp"
#include "hypmorse/mkernels.hpp"
#include "hypmorse/oracle.hpp"
#include "hypmorse/specfun.hpp"
#include "resources.hpp"

namespace hypmorse::harness {

using json = nlohmann::json;
using geometry::HalfPlanePoint;
using geometry::MagneticK;
using hkernels::SpectralParam;
using mkernels::MorseConfig;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double rel(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string fmt_pair(double a, double b) { return fmt(a) + "," + fmt(b); }

MorseConfig morse(double lambda, double k, double X, double Xp) {
    MorseConfig c;
    c.lambda = lambda;
    c.k = MagneticK(k);
    c.X = X;
    c.Xp = Xp;
    return c;
}

std::string morse_args(const MorseConfig& c) {
    return " --k " + fmt(c.k.k) + " --lambda " + fmt(c.lambda) + " --X " + fmt(c.X) + " --Xp " + fmt(c.Xp);
}

// Accumulates per-point residuals for one identity.
class Tracker {
public:
    Tracker(std::string id, std::string grid, double tol)
        : start_(std::chrono::steady_clock::now()) {
        r_.identity_id = std::move(id);
        r_.grid_spec = std::move(grid);
        r_.tolerance = tol;
    }

    void add(double err, const std::string& point) {
        if (std::isnan(err)) err = kInf;
        if (++r_.n_points == 1 || err > r_.max_rel_err) {
            r_.max_rel_err = err;
            r_.worst_point = point;
        }
    }

    void fail(const std::string& point, const std::exception& e) {
        ++r_.n_errors;
        add(kInf, point + "  [" + e.what() + "]");
    }

    // Runs one point; exceptions become a failed point.
    void point(const std::string& label, const std::function<double()>& f) {
        try {
            add(f(), label);
        } catch (const std::exception& e) {
            fail(label, e);
        }
    }

    void literal(double err) {
        if (std::isnan(err)) err = kInf;
        r_.literal_rel_err = std::max(r_.literal_rel_err, err);
    }

    IdentityReport& report() { return r_; }

    IdentityReport finish(std::string note = {}) {
        r_.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        r_.passed = r_.n_errors == 0 && r_.n_points > 0 && r_.max_rel_err <= r_.tolerance;
        if (!note.empty()) r_.note = note;
        return r_;
    }

private:
    IdentityReport r_;
    std::chrono::steady_clock::time_point start_;
};

struct HPair {
    HalfPlanePoint z, zp;
};

const std::vector<HPair>& hyperbolic_pairs() {
    static const std::vector<HPair> pairs = {
        {{0.0, 1.0}, {0.5, 2.0}},  {{0.0, 1.0}, {0.0, 1.5}},  {{-1.0, 0.5}, {0.7, 1.2}},
        {{0.3, 2.0}, {-0.4, 0.8}}, {{2.0, 1.0}, {0.0, 1.0}},
    };
    return pairs;
}

std::string hpair_args(const HPair& p) {
    return " --z " + fmt_pair(p.z.x, p.z.y) + " --zp " + fmt_pair(p.zp.x, p.zp.y);
}

quad::QuadConfig tight(double rel_tol = 1e-11) {
    quad::QuadConfig q;
    q.rel_tol = rel_tol;
    q.abs_tol = 1e-300;
    return q;
}

// Max relative residual of closed vs integral hyperbolic resolvents at k = 0.
double mapping_residual(SpectralMapping m, KeyPrefactor p) {
    double worst = 0.0;
    for (cplx mu : {cplx{0, -0.8}, cplx{0, -1.5}})
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& pr = hyperbolic_pairs()[i];
            const SpectralParam sp(mu, m);
            try {
                const cplx in = hkernels::resolvent_integral(sp, MagneticK(0), pr.z, pr.zp, p, tight()).value;
                const cplx cl = hkernels::resolvent_closed(sp, MagneticK(0), pr.z, pr.zp);
                worst = std::max(worst, std::isfinite(std::abs(cl)) ? rel(in, cl) : kInf);
            } catch (const Error&) {
                worst = kInf;
            }
        }
    return worst;
}

struct MorsePoint {
    double k, alpha, X, Xp;
};

const std::vector<MorsePoint>& whittaker_calibration_points() {
    static const std::vector<MorsePoint> pts = {
        {0.0, 0.7, 0.0, 0.3}, {-0.5, 1.2, 0.2, -0.4}, {0.5, 1.2, -0.3, 0.5}};
    return pts;
}

std::vector<Conventions> whittaker_candidates() {
    std::vector<Conventions> out;
    for (auto idx : {WhittakerIndex::OrderMu, WhittakerIndex::OrderIMu})
        for (auto nrm : {WhittakerNorm::InverseLambda, WhittakerNorm::InverseTwoLambda})
            for (auto kap : {WhittakerKappa::AbsK, WhittakerKappa::SignedK}) {
                Conventions c;
                c.whittaker_index = idx;
                c.whittaker_norm = nrm;
                c.whittaker_kappa = kap;
                out.push_back(c);
            }
    return out;
}

std::string whittaker_key(const Conventions& c) {
    return std::string("whittaker:") + to_string(c.whittaker_index) + "/" + to_string(c.whittaker_norm) + "/" +
           to_string(c.whittaker_kappa);
}

double variant_residual(MorseWaveVariant v) {
    double worst = 0.0;
    try {
        const auto c0 = morse(1.0, 0.0, 0.0, std::log(1.5));
        for (double b : {0.6, 1.2, 2.0})
            worst = std::max(worst, rel(mkernels::wave_kernel_phi1(c0, b, v), mkernels::wave_kernel_bessel0(c0, b)));
        for (double k : {0.5, 1.0}) {
            const auto c = morse(1.0, k, 0.0, 0.2);
            const double b = 0.2 + 0.5 * (2.0 * std::acosh(mkernels::phi1_window_top(c)) - 0.2);
            worst = std::max(worst, rel(mkernels::wave_kernel_phi1(c, b, v),
                                        mkernels::wave_kernel_fourier(c, b, tight(1e-12)).value));
        }
    } catch (const Error&) {
        return kInf;
    }
    return worst;
}

// Index of the unique candidate at or below accept, or -1.
template <class T>
int unique_pass(const std::vector<std::pair<T, double>>& cands, double accept) {
    int idx = -1;
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (cands[i].second <= accept) {
            if (idx >= 0) return -1;
            idx = static_cast<int>(i);
        }
    return idx;
}

}  // namespace

// ---- tolerances -----------------------------------------------------------

Tolerances default_tolerances() {
    Tolerances t;
    const json j = json::parse(resources::tolerances_json());
    for (auto& [k, v] : j.items()) t[k] = v.get<double>();
    return t;
}

Tolerances load_tolerance_overrides(const Tolerances& base, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open tolerance file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("tolerance file: ") + e.what());
    }
    if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "tolerance file must hold a JSON object");
    Tolerances out = base;
    for (auto& [k, v] : j.items()) {
        if (!base.count(k)) throw Error(ErrorCode::InvalidArgument, "unknown tolerance id " + k);
        if (!v.is_number() || !(v.get<double>() > 0.0))
            throw Error(ErrorCode::InvalidArgument, "tolerance " + k + " must be a positive number");
        out[k] = v.get<double>();
    }
    return out;
}

double tolerance(const Tolerances& tol, const std::string& id) {
    const auto it = tol.find(id);
    if (it == tol.end()) throw Error(ErrorCode::InvalidArgument, "no tolerance for " + id);
    return it->second;
}

// ---- calibration ----------------------------------------------------------

CalibrationRecord calibrate(double accept) {
    CalibrationRecord rec;
    std::vector<std::string> problems;

    std::vector<std::pair<std::pair<SpectralMapping, KeyPrefactor>, double>> maps;
    for (auto m : {SpectralMapping::A, SpectralMapping::B, SpectralMapping::C})
        for (auto p : {KeyPrefactor::InverseTwoIMu, KeyPrefactor::Half}) {
            const double r = mapping_residual(m, p);
            maps.push_back({{m, p}, r});
            rec.residuals[std::string("mapping:") + to_string(m) + "/" + to_string(p)] = r;
        }
    if (const int i = unique_pass(maps, accept); i >= 0) {
        rec.conventions.mapping = maps[i].first.first;
        rec.conventions.key_prefactor = maps[i].first.second;
    } else {
        problems.push_back("no unique mu <-> s mapping / prefactor");
    }

    // One integral per point, shared by all Whittaker candidates.
    std::vector<cplx> integrals;
    for (const auto& p : whittaker_calibration_points()) {
        try {
            integrals.push_back(
                mkernels::resolvent_integral(morse(1.0, p.k, p.X, p.Xp), {0.0, -p.alpha}, tight(1e-10)).value);
        } catch (const Error&) {
            integrals.push_back(kInf);
        }
    }
    std::vector<std::pair<Conventions, double>> whit;
    for (const auto& cand : whittaker_candidates()) {
        double worst = 0.0;
        for (std::size_t i = 0; i < integrals.size(); ++i) {
            const auto& p = whittaker_calibration_points()[i];
            try {
                worst = std::max(worst, rel(mkernels::resolvent_closed(morse(1.0, p.k, p.X, p.Xp),
                                                                       {0.0, -p.alpha}, cand),
                                            integrals[i]));
            } catch (const Error&) {
                worst = kInf;
            }
        }
        if (std::isnan(worst)) worst = kInf;
        whit.push_back({cand, worst});
        rec.residuals[whittaker_key(cand)] = worst;
    }
    if (const int i = unique_pass(whit, accept); i >= 0) {
        rec.conventions.whittaker_index = whit[i].first.whittaker_index;
        rec.conventions.whittaker_norm = whit[i].first.whittaker_norm;
        rec.conventions.whittaker_kappa = whit[i].first.whittaker_kappa;
    } else {
        problems.push_back("no unique Whittaker convention");
    }

    std::vector<std::pair<MorseWaveVariant, double>> vars;
    for (auto v : {MorseWaveVariant::Thm43, MorseWaveVariant::Thm51}) {
        vars.push_back({v, variant_residual(v)});
        rec.residuals[std::string("variant:") + to_string(v)] = vars.back().second;
    }
    if (const int i = unique_pass(vars, accept); i >= 0)
        rec.conventions.morse_wave_variant = vars[i].first;
    else
        problems.push_back("no unique Morse wave-kernel variant");

    rec.ok = problems.empty();
    for (const auto& p : problems) rec.message += (rec.message.empty() ? "" : "; ") + p;
    return rec;
}

std::string calibration_to_json(const CalibrationRecord& rec) {
    json j;
    const auto& c = rec.conventions;
    j["mapping_id"] = to_string(c.mapping);
    j["key_prefactor"] = to_string(c.key_prefactor);
    j["whittaker_index_convention"] = to_string(c.whittaker_index);
    j["whittaker_norm"] = to_string(c.whittaker_norm);
    j["whittaker_kappa"] = to_string(c.whittaker_kappa);
    j["morse_wave_variant"] = to_string(c.morse_wave_variant);
    j["residuals"] = json::object();
    for (const auto& [k, v] : rec.residuals) j["residuals"][k] = v;
    j["ok"] = rec.ok;
    j["message"] = rec.message;
    return j.dump(2);
}

CalibrationRecord calibration_from_json(const std::string& text) {
    CalibrationRecord rec;
    try {
        const json j = json::parse(text);
        auto& c = rec.conventions;
        from_string(j.at("mapping_id").get<std::string>(), c.mapping);
        from_string(j.at("key_prefactor").get<std::string>(), c.key_prefactor);
        from_string(j.at("whittaker_index_convention").get<std::string>(), c.whittaker_index);
        from_string(j.at("whittaker_norm").get<std::string>(), c.whittaker_norm);
        from_string(j.at("whittaker_kappa").get<std::string>(), c.whittaker_kappa);
        from_string(j.at("morse_wave_variant").get<std::string>(), c.morse_wave_variant);
        for (auto& [k, v] : j.at("residuals").items())
            rec.residuals[k] = v.is_null() ? kInf : v.get<double>();
        rec.ok = j.at("ok").get<bool>();
        rec.message = j.value("message", "");
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("calibration record: ") + e.what());
    }
    return rec;
}

void save_calibration(const CalibrationRecord& rec, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    out << calibration_to_json(rec) << "\n";
}

CalibrationRecord load_calibration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return calibration_from_json(ss.str());
}

// ---- identity checks ------------------------------------------------------

IdentityReport check_forms_equivalence(double tol) {
    using hkernels::WaveForm;
    Tracker tr("forms_equivalence", "2k in {0..4}; rho in linspace(0.2, 2.5, 10); b = rho + 0.4 j, j = 1..10", tol);
    for (int twice = 0; twice <= 4; ++twice)
        for (int i = 0; i < 10; ++i)
            for (int j = 1; j <= 10; ++j) {
                const double rho = 0.2 + 2.3 * i / 9.0, b = rho + 0.4 * j;
                tr.point("k=" + fmt(0.5 * twice) + " rho=" + fmt(rho) + " b=" + fmt(b), [&] {
                    std::vector<double> v;
                    for (auto f : {WaveForm::Baseline, WaveForm::I, WaveForm::II, WaveForm::III, WaveForm::IV})
                        v.push_back(hkernels::wave_numerator(f, 0.5 * twice, b, rho));
                    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
                    double scale = 0.0;
                    for (double x : v) scale = std::max(scale, std::abs(x));
                    return (*hi - *lo) / scale;
                });
                tr.literal(std::abs(hkernels::wave_numerator(WaveForm::ILiteral, 0.5 * twice, b, rho) -
                                    hkernels::wave_numerator(WaveForm::Baseline, 0.5 * twice, b, rho)) /
                           std::abs(hkernels::wave_numerator(WaveForm::Baseline, 0.5 * twice, b, rho)));
            }
    return tr.finish("literal: form i with argument 1 - q");
}

IdentityReport check_hres_closed_vs_integral(const Conventions& conv, double tol) {
    Tracker tr("hres_closed_vs_integral", "mu in {-0.8i, -1.5i, -2.5i}; k in {0, 1/2, 1}; 5 point pairs", tol);
    for (cplx mu : {cplx{0, -0.8}, cplx{0, -1.5}, cplx{0, -2.5}})
        for (double k : {0.0, 0.5, 1.0})
            for (const auto& pr : hyperbolic_pairs()) {
                const std::string label = "hypmorse eval --kernel hres --k " + fmt(k) + " --mu " +
                                          fmt_pair(mu.real(), mu.imag()) + hpair_args(pr);
                tr.point(label, [&] {
                    const SpectralParam sp(mu, conv.mapping);
                    const cplx in =
                        hkernels::resolvent_integral(sp, MagneticK(k), pr.z, pr.zp, conv.key_prefactor, tight()).value;
                    return rel(in, hkernels::resolvent_closed(sp, MagneticK(k), pr.z, pr.zp));
                });
                try {
                    const SpectralParam lit(mu, SpectralMapping::A);
                    tr.literal(rel(hkernels::resolvent_integral(lit, MagneticK(k), pr.z, pr.zp,
                                                                KeyPrefactor::InverseTwoIMu, tight())
                                       .value,
                                   hkernels::resolvent_closed(lit, MagneticK(k), pr.z, pr.zp)));
                } catch (const Error&) {
                    tr.literal(kInf);
                }
            }
    return tr.finish(std::string("mapping ") + to_string(conv.mapping) + ", prefactor " +
                     to_string(conv.key_prefactor) + "; literal: mapping A with 1/(2 i mu)");
}

IdentityReport check_calibration_uniqueness(double accept, double reject) {
    Tracker tr("calibration_uniqueness", "k = 0; mu in {-0.8i, -1.5i}; 3 point pairs; mappings A, B, C", accept);
    double best = kInf;
    KeyPrefactor best_p = KeyPrefactor::Half;
    std::map<std::pair<int, int>, double> res;
    for (auto p : {KeyPrefactor::InverseTwoIMu, KeyPrefactor::Half})
        for (auto m : {SpectralMapping::A, SpectralMapping::B, SpectralMapping::C}) {
            const double r = mapping_residual(m, p);
            res[{static_cast<int>(p), static_cast<int>(m)}] = r;
            if (r < best) {
                best = r;
                best_p = p;
            }
        }
    int passers = 0;
    bool others_rejected = true;
    std::string note = std::string("prefactor ") + to_string(best_p) + ":";
    for (auto m : {SpectralMapping::A, SpectralMapping::B, SpectralMapping::C}) {
        const double r = res[{static_cast<int>(best_p), static_cast<int>(m)}];
        note += std::string(" ") + to_string(m) + "=" + fmt(r);
        if (r <= accept)
            ++passers;
        else if (!(r > reject))
            others_rejected = false;
    }
    note += "; 1/(2 i mu) prefactor:";
    for (auto m : {SpectralMapping::A, SpectralMapping::B, SpectralMapping::C})
        note += std::string(" ") + to_string(m) + "=" + fmt(res[{static_cast<int>(KeyPrefactor::InverseTwoIMu),
                                                                  static_cast<int>(m)}]);
    tr.add(best, "best mapping residual");
    tr.literal(res[{static_cast<int>(KeyPrefactor::InverseTwoIMu), static_cast<int>(SpectralMapping::A)}]);
    auto r = tr.finish(note);
    r.passed = r.passed && passers == 1 && others_rejected;
    return r;
}

namespace {

struct PdePoint {
    double t, k;
    HalfPlanePoint z, zp;
};

// Residual of d/dt H against D_k applied at the second point (with_second)
// or at the first, using fourth-order five-point stencils.
double heat_pde_residual(const PdePoint& p, bool at_second) {
    const double h = 0.02;
    const MagneticK k(p.k);
    const auto qc = tight(1e-13);
    auto H = [&](double t, double dx, double dy) {
        HalfPlanePoint a = p.z, b = p.zp;
        HalfPlanePoint& m = at_second ? b : a;
        m.x += dx;
        m.y += dy;
        return hkernels::heat_kernel(t, k, a, b, qc).value;
    };
    auto d1 = [&](auto f) { return (-f(2 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2 * h)) / (12 * h); };
    auto d2 = [&](auto f) {
        return (-f(2 * h) + 16.0 * f(h) - 30.0 * f(0.0) + 16.0 * f(-h) - f(-2 * h)) / (12 * h * h);
    };
    const double y = at_second ? p.zp.y : p.z.y;
    const cplx ht = d1([&](double e) { return H(p.t + e, 0, 0); });
    const cplx hxx = d2([&](double e) { return H(p.t, e, 0); });
    const cplx hyy = d2([&](double e) { return H(p.t, 0, e); });
    const cplx hx = d1([&](double e) { return H(p.t, e, 0); });
    const cplx dh = y * y * (hxx + hyy) + 2.0 * cplx{0, 1} * p.k * y * hx + 0.25 * H(p.t, 0, 0);
    return rel(dh, ht);
}

}  // namespace

IdentityReport check_hheat_pde(double tol) {
    Tracker tr("hheat_pde", "6 points, t in [0.3, 1.2], k in {0, 1/2, 1, -1, 3/2, 2}; stencil h = 0.02", tol);
    const std::vector<PdePoint> pts = {
        {0.3, 0.0, {0.0, 1.0}, {0.4, 1.5}},  {0.5, 0.5, {0.0, 1.0}, {0.3, 1.4}},
        {0.7, 1.0, {0.2, 0.8}, {-0.3, 1.6}}, {0.9, -1.0, {0.0, 1.2}, {0.5, 0.9}},
        {1.0, 1.5, {-0.2, 1.0}, {0.6, 1.3}}, {1.2, 2.0, {0.0, 1.0}, {0.4, 1.8}},
    };
    for (const auto& p : pts) {
        const std::string label = "t=" + fmt(p.t) + " k=" + fmt(p.k) + " z=" + fmt_pair(p.z.x, p.z.y) +
                                  " zp=" + fmt_pair(p.zp.x, p.zp.y);
        tr.point(label, [&] { return heat_pde_residual(p, true); });
        try {
            tr.literal(heat_pde_residual(p, false));
        } catch (const Error&) {
            tr.literal(kInf);
        }
    }
    return tr.finish("operator applied at z'; literal: the same operator applied at z");
}

IdentityReport check_hheat_k0_direct(double tol) {
    Tracker tr("hheat_k0_direct", "k = 0; t in {0.3, 0.7, 1.2}; rho in {0.3, 1, 2}", tol);
    for (double t : {0.3, 0.7, 1.2})
        for (double rho : {0.3, 1.0, 2.0}) {
            const HalfPlanePoint z{0, 1}, zp{0, std::exp(rho)};
            tr.point("hypmorse eval --kernel hheat --k 0 --t " + fmt(t) + " --z 0,1 --zp 0," + fmt(std::exp(rho)),
                     [&] {
                         // b = rho + s^2 with the (cosh b - cosh rho)/2 form of the gap.
                         auto f = [&](double s) -> cplx {
                             if (s == 0.0) return std::sqrt(2.0 / std::sinh(rho)) * 2.0 * rho *
                                                  std::exp(-rho * rho / (4 * t));
                             const double b = rho + s * s;
                             return 2.0 * s * b * std::exp(-b * b / (4 * t)) /
                                    std::sqrt((std::cosh(b) - std::cosh(rho)) / 2.0);
                         };
                         const double direct = quad::integrate_finite(f, 0.0, std::sqrt(40.0 * std::sqrt(t) + 40.0),
                                                                      tight(1e-12))
                                                   .value.real() /
                                               std::pow(4 * kPi * t, 1.5) / (2 * kPi);
                         return rel(hkernels::heat_kernel(t, MagneticK(0), z, zp, tight(1e-12)).value, direct);
                     });
        }
    return tr.finish();
}

namespace {

struct GridPt {
    double yp, b;
};

std::vector<GridPt> morse_k0_grid() {
    std::vector<GridPt> g;
    for (double yp : {0.6, 0.8, 1.2, 1.5, 2.0, 2.5})
        for (double d : {0.05, 0.3, 0.7, 1.2, 1.8, 2.4}) g.push_back({yp, std::abs(std::log(yp)) + d});
    return g;
}

double half_j0(const MorseConfig& c, double b) {
    const double y = c.y(), yp = c.yp();
    return 0.5 * specfun::bessel(specfun::BesselKind::J, 0.0,
                                 c.lambda * std::sqrt(2 * y * yp * std::cosh(b) - y * y - yp * yp));
}

const char* kMorseK0Grid = "lambda = 1, y = 1, k = 0; y' in {0.6, 0.8, 1.2, 1.5, 2, 2.5}; b - |X - X'| in {0.05, 0.3, 0.7, 1.2, 1.8, 2.4}";

}  // namespace

IdentityReport check_mwave_k0(MorseWaveVariant variant, double tol) {
    Tracker tr(variant == MorseWaveVariant::Thm43 ? "mwave_k0_phi1" : "mwave_k0_thm51", kMorseK0Grid, tol);
    for (const auto& g : morse_k0_grid()) {
        const auto c = morse(1.0, 0.0, 0.0, std::log(g.yp));
        tr.point("y'=" + fmt(g.yp) + " b=" + fmt(g.b),
                 [&] { return rel(mkernels::wave_kernel_phi1(c, g.b, variant), half_j0(c, g.b)); });
    }
    return tr.finish(variant == MorseWaveVariant::Thm51 ? "thm51 variant at k = 0" : "");
}

IdentityReport check_mwave_k0_fourier(double tol) {
    Tracker tr("mwave_k0_fourier", kMorseK0Grid, tol);
    for (const auto& g : morse_k0_grid()) {
        const auto c = morse(1.0, 0.0, 0.0, std::log(g.yp));
        tr.point("y'=" + fmt(g.yp) + " b=" + fmt(g.b),
                 [&] { return rel(mkernels::wave_kernel_fourier(c, g.b, tight(1e-10)).value, half_j0(c, g.b)); });
    }
    return tr.finish();
}

IdentityReport check_mwave_phi1_vs_fourier(double tol) {
    Tracker tr("mwave_phi1_vs_fourier",
               "lambda = 1; k in {1/2, 1, -1/2, 3/2, 2}; (X, X') in {(0, 0.2), (0.3, -0.1)}; 3 b inside the Phi1 disc",
               tol);
    double worst51 = 0.0;
    for (double k : {0.5, 1.0, -0.5, 1.5, 2.0})
        for (auto [X, Xp] : {std::pair{0.0, 0.2}, {0.3, -0.1}}) {
            const auto c = morse(1.0, k, X, Xp);
            const double lo = c.support_edge(), hi = 2.0 * std::acosh(mkernels::phi1_window_top(c));
            for (double f : {0.3, 0.5, 0.7}) {
                const double b = lo + f * (hi - lo);
                tr.point("k=" + fmt(k) + " X=" + fmt(X) + " X'=" + fmt(Xp) + " b=" + fmt(b), [&] {
                    const cplx ref = mkernels::wave_kernel_fourier(c, b, tight(1e-12)).value;
                    try {
                        worst51 = std::max(worst51, rel(mkernels::wave_kernel_phi1(c, b, MorseWaveVariant::Thm51), ref));
                    } catch (const Error&) {
                        worst51 = kInf;
                    }
                    return rel(mkernels::wave_kernel_phi1(c, b), ref);
                });
            }
        }
    tr.literal(worst51);
    return tr.finish("thm43 variant; literal column: thm51 variant");
}

namespace {

const std::vector<std::pair<double, double>>& morse_pairs() {
    static const std::vector<std::pair<double, double>> p = {{0.0, 0.3}, {-0.5, 0.4}, {0.2, -0.6}, {1.0, 0.5}};
    return p;
}

Conventions literal_whittaker() { return Conventions{}; }

}  // namespace

IdentityReport check_mres_closed_vs_integral(const Conventions& conv, double tol) {
    Tracker tr("mres_closed_vs_integral", "lambda = 1; k in {0, 1/2}; mu = -i alpha, alpha in {0.7, 1.2}; (X, X') in {(0, 0.3), (-0.5, 0.4), (0.2, -0.6), (1, 0.5)}", tol);
    for (double k : {0.0, 0.5})
        for (double a : {0.7, 1.2})
            for (auto [X, Xp] : morse_pairs()) {
                const auto c = morse(1.0, k, X, Xp);
                const cplx mu{0.0, -a};
                cplx in = kInf;
                tr.point("hypmorse eval --kernel mres --mu 0," + fmt(-a) + morse_args(c), [&] {
                    in = mkernels::resolvent_integral(c, mu, tight(1e-9)).value;
                    return rel(mkernels::resolvent_closed(c, mu, conv), in);
                });
                try {
                    tr.literal(rel(mkernels::resolvent_closed_literal_order(c, mu, literal_whittaker()), in));
                } catch (const Error&) {
                    tr.literal(kInf);
                }
            }
    return tr.finish(std::string("index ") + to_string(conv.whittaker_index) + ", norm " +
                     to_string(conv.whittaker_norm) + ", kappa " + to_string(conv.whittaker_kappa) +
                     ", M at min(X, X'); literal: order mu, 1/lambda, |k|, W at X', M at X");
}

IdentityReport check_mheat_k0_direct(double tol) {
    Tracker tr("mheat_k0_direct", "lambda = 1, k = 0; t in {0.5, 1}; (X, X') in {(0, 0.3), (0.2, -0.6)}", tol);
    for (double t : {0.5, 1.0})
        for (auto [X, Xp] : {std::pair{0.0, 0.3}, {0.2, -0.6}}) {
            const auto c = morse(1.0, 0.0, X, Xp);
            tr.point("hypmorse eval --kernel mheat --t " + fmt(t) + morse_args(c), [&] {
                auto f = [&](double b) -> cplx {
                    return std::exp(-b * b / (4 * t)) / std::pow(4 * kPi * t, 1.5) * half_j0(c, b) * b;
                };
                const double edge = c.support_edge();
                const cplx direct = quad::integrate_finite(f, edge, edge + std::sqrt(4 * t * 60.0) + 1.0, tight(1e-12)).value;
                return rel(mkernels::heat_kernel(c, t, MorseWaveVariant::Thm43, tight(1e-12)).value, direct);
            });
        }
    return tr.finish();
}

IdentityReport check_whittaker_product(const Conventions& conv, double tol) {
    Tracker tr("whittaker_product", "(alpha, k, lambda) = (1.2, 1/2, 1); (X, X') in {(0.5, 0), (0.3, -0.4), (1, 0.2)}", tol);
    const double a = 1.2;
    Conventions literal_conv;
    literal_conv.whittaker_index = WhittakerIndex::OrderIMu;  // the product formula indexes by alpha itself
    literal_conv.whittaker_norm = WhittakerNorm::InverseLambda;
    literal_conv.whittaker_kappa = WhittakerKappa::SignedK;
    for (auto [X, Xp] : {std::pair{0.5, 0.0}, {0.3, -0.4}, {1.0, 0.2}}) {
        const auto c = morse(1.0, 0.5, X, Xp);
        cplx in = kInf;
        tr.point("alpha=1.2 k=0.5 X=" + fmt(X) + " X'=" + fmt(Xp), [&] {
            in = mkernels::resolvent_integral(c, {0.0, -a}, tight(1e-9)).value;
            return rel(mkernels::resolvent_closed(c, {0.0, -a}, conv), in);
        });
        try {
            tr.literal(rel(mkernels::resolvent_closed_literal_order(c, {0.0, -a}, literal_conv), in));
        } catch (const Error&) {
            tr.literal(kInf);
        }
    }
    return tr.finish("calibrated normalisation and ordering; literal: 1/lambda with M at the larger X");
}

IdentityReport check_lebedev(double tol) {
    Tracker tr("lebedev", "alpha in {0.5, 1}; (u, v) in {(1, 2), (0.5, 1.5)}", tol);
    for (double a : {0.5, 1.0})
        for (auto [u, v] : {std::pair{1.0, 2.0}, {0.5, 1.5}}) {
            const double want = mkernels::lebedev_closed(a, u, v);
            tr.point("alpha=" + fmt(a) + " u=" + fmt(u) + " v=" + fmt(v), [&] {
                return rel(mkernels::lebedev_integral(a, u, v, mkernels::LebedevRange::Support, tight(1e-12)).value,
                           want);
            });
            try {
                tr.literal(rel(mkernels::lebedev_integral(a, u, v, mkernels::LebedevRange::Literal, tight(1e-12)).value,
                               want));
            } catch (const Error&) {
                tr.literal(kInf);
            }
        }
    return tr.finish("integral from log(v/u); literal: from 0 with J0(ix) = I0(x)");
}

namespace {

struct AliliPoint {
    double t, k, X, Xp;
};

const std::vector<AliliPoint>& alili_points() {
    static const std::vector<AliliPoint> p = {
        {0.5, 0.0, 0.0, std::log(1.3)}, {0.8, 0.5, 0.0, std::log(1.3)}, {1.0, 0.0, 0.0, std::log(2.0)}};
    return p;
}

const char* kAliliGrid = "lambda = 1, y = 1; (t, k, y') in {(0.5, 0, 1.3), (0.8, 1/2, 1.3), (1, 0, 2)}";

}  // namespace

IdentityReport check_alili_imj(const Conventions& conv, double tol) {
    Tracker tr("alili_imj", kAliliGrid, tol);
    for (const auto& p : alili_points()) {
        const auto c = morse(1.0, p.k, p.X, p.Xp);
        tr.point("hypmorse eval --kernel mheat --t " + fmt(p.t) + morse_args(c), [&] {
            const cplx J = mkernels::alili_j(c, p.t, tight(1e-9)).value;
            return rel(J.imag(), mkernels::heat_kernel(c, p.t, conv.morse_wave_variant, tight(1e-10)).value);
        });
    }
    auto r = tr.finish();
    r.literal_rel_err = r.max_rel_err;
    r.note = "Im J(t) against the heat integral with the " + std::string(to_string(conv.morse_wave_variant)) +
             " wave kernel, taken literally";
    return r;
}

IdentityReport check_alili_rej(MorseWaveVariant variant, double tol) {
    Tracker tr(std::string("alili_rej_vs_heat:") + to_string(variant), kAliliGrid, tol);
    for (const auto& p : alili_points()) {
        const auto c = morse(1.0, p.k, p.X, p.Xp);
        tr.point("hypmorse eval --kernel mheat --t " + fmt(p.t) + morse_args(c), [&] {
            const cplx J = mkernels::alili_j(c, p.t, tight(1e-9)).value;
            return rel(4.0 * kPi * mkernels::heat_kernel(c, p.t / 2.0, variant, tight(1e-10)).value, J.real());
        });
    }
    return tr.finish("Re J(t) against 4 pi H(t/2)");
}

IdentityReport check_specfun_oracle(double tol, double tol_int_k) {
    Tracker tr("specfun_oracle", "committed table, 25 significant digits computed at 40", tol);
    double worst_int_k = 0.0;
    for (const auto& row : oracle::builtin()) {
        const std::string label = row.func + " (line " + std::to_string(row.line) + ")";
        try {
            const double e = oracle::rel_err(oracle::evaluate(row), row.value);
            // Scale integer-order K rows onto the common tolerance.
            if (oracle::is_integer_order_k(row)) {
                worst_int_k = std::max(worst_int_k, e);
                tr.add(e * tol / tol_int_k, label + " [scaled by " + fmt(tol / tol_int_k) + "]");
            } else {
                tr.add(e, label);
            }
        } catch (const std::exception& e) {
            tr.fail(label, e);
        }
    }
    return tr.finish("integer-order K rows at " + fmt(tol_int_k) + ", worst " + fmt(worst_int_k));
}

// ---- suites ---------------------------------------------------------------

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n = {"hyperbolic_forms", "hyperbolic_resolvent", "hyperbolic_heat",
                                               "morse_wave",       "morse_resolvent",      "morse_heat",
                                               "applications",     "specfun",              "all"};
    return n;
}

std::vector<IdentityReport> run_suite(const std::string& suite, const Tolerances& tol,
                                      const CalibrationRecord& cal) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw Error(ErrorCode::InvalidArgument, "unknown suite " + suite);
    const auto& conv = cal.conventions;
    auto T = [&](const char* id) { return tolerance(tol, id); };
    auto want = [&](const char* s) { return suite == "all" || suite == s; };
    std::vector<IdentityReport> out;
    if (want("hyperbolic_forms")) out.push_back(check_forms_equivalence(T("forms_equivalence")));
    if (want("hyperbolic_resolvent")) {
        out.push_back(check_hres_closed_vs_integral(conv, T("hres_closed_vs_integral")));
        out.push_back(check_calibration_uniqueness(T("calibration_accept"), T("calibration_reject")));
    }
    if (want("hyperbolic_heat")) {
        out.push_back(check_hheat_pde(T("hheat_pde")));
        out.push_back(check_hheat_k0_direct(T("hheat_k0_direct")));
    }
    if (want("morse_wave")) {
        out.push_back(check_mwave_k0(MorseWaveVariant::Thm43, T("mwave_k0_phi1")));
        out.push_back(check_mwave_k0(MorseWaveVariant::Thm51, T("mwave_k0_thm51")));
        out.push_back(check_mwave_k0_fourier(T("mwave_k0_fourier")));
        out.push_back(check_mwave_phi1_vs_fourier(T("mwave_phi1_vs_fourier")));
    }
    if (want("morse_resolvent")) out.push_back(check_mres_closed_vs_integral(conv, T("mres_closed_vs_integral")));
    if (want("morse_heat")) {
        out.push_back(check_mheat_k0_direct(T("mheat_k0_direct")));
        out.push_back(check_alili_imj(conv, T("alili_imj")));
        out.push_back(check_alili_rej(conv.morse_wave_variant, T("alili_rej_vs_heat")));
    }
    if (want("applications")) {
        out.push_back(check_whittaker_product(conv, T("whittaker_product")));
        out.push_back(check_lebedev(T("lebedev")));
    }
    if (want("specfun"))
        out.push_back(check_specfun_oracle(T("specfun_oracle"), T("specfun_oracle_bessel_k_int")));
    return out;
}

std::string reports_to_json(const std::string& suite, const CalibrationRecord& cal,
                            const std::vector<IdentityReport>& reports) {
    json j;
    j["suite"] = suite;
    j["calibration"] = json::parse(calibration_to_json(cal));
    j["reports"] = json::array();
    bool all = true;
    for (const auto& r : reports) {
        json e;
        e["identity_id"] = r.identity_id;
        e["grid_spec"] = r.grid_spec;
        e["max_rel_err"] = r.max_rel_err;
        e["worst_point"] = r.worst_point;
        e["passed"] = r.passed;
        e["tolerance"] = r.tolerance;
        e["runtime_ms"] = r.runtime_ms;
        e["n_points"] = r.n_points;
        e["n_errors"] = r.n_errors;
        e["literal_rel_err"] = r.literal_rel_err < 0 ? json(nullptr) : json(r.literal_rel_err);
        e["note"] = r.note;
        j["reports"].push_back(e);
        all = all && r.passed;
    }
    j["passed"] = all;
    return j.dump(2);
}

// ---- kernel dispatch ------------------------------------------------------

const std::vector<std::string>& kernel_ids() {
    static const std::vector<std::string> ids = {"hres", "hheat", "hwave", "mres", "mheat", "mwave"};
    return ids;
}

EvalResult evaluate_kernel(const std::string& kernel, const EvalParams& p, const Conventions& conv) {
    const HalfPlanePoint z{p.x, p.y}, zp{p.xp, p.yp};
    const MagneticK k(p.k);
    auto from_quad = [](const quad::QuadratureResult& r) { return EvalResult{r.value, r.err_estimate, r.converged}; };
    if (kernel == "hres" || kernel == "hheat" || kernel == "hwave") {
        z.validate();
        zp.validate();
    }
    if (kernel == "hres") return {hkernels::resolvent_closed(SpectralParam(p.mu, conv.mapping), k, z, zp)};
    if (kernel == "hheat") return from_quad(hkernels::heat_kernel(p.t, k, z, zp));
    if (kernel == "hwave") return {hkernels::wave_kernel(hkernels::WaveForm::Baseline, k, p.b, z, zp)};
    const MorseConfig c = morse(p.lambda, p.k, p.X, p.Xp);
    if (kernel == "mres") return {mkernels::resolvent_closed(c, p.mu, conv)};
    if (kernel == "mheat") return from_quad(mkernels::heat_kernel(c, p.t, conv.morse_wave_variant));
    if (kernel == "mwave") {
        if (conv.morse_wave_variant == MorseWaveVariant::Thm51) return {mkernels::wave_kernel_phi1(c, p.b, MorseWaveVariant::Thm51)};
        if (p.k == 0.0) return {mkernels::wave_kernel_bessel0(c, p.b)};
        return from_quad(mkernels::wave_kernel_fourier(c, p.b));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown kernel " + kernel);
}

// ---- grids ----------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(trim(s), &used);
        if (used != trim(s).size() || !std::isfinite(v)) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, "grid spec line " + std::to_string(line) + ": bad number '" +
                                                    trim(s) + "'");
    }
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

const std::vector<std::string>& grid_keys() {
    static const std::vector<std::string> k = {"k", "mu_re", "mu_im", "lambda", "x", "y", "xp", "yp",
                                               "X", "Xp",    "t",     "b",      "rho"};
    return k;
}

void apply(EvalParams& p, const std::string& key, double v) {
    if (key == "k") p.k = v;
    else if (key == "mu_re") p.mu.real(v);
    else if (key == "mu_im") p.mu.imag(v);
    else if (key == "lambda") p.lambda = v;
    else if (key == "x") p.x = v;
    else if (key == "y") p.y = v;
    else if (key == "xp") p.xp = v;
    else if (key == "yp") p.yp = v;
    else if (key == "X") p.X = v;
    else if (key == "Xp") p.Xp = v;
    else if (key == "t") p.t = v;
    else if (key == "b") p.b = v;
    else if (key == "rho") {
        p.x = 0.0;
        p.y = 1.0;
        p.xp = 0.0;
        p.yp = std::exp(v);
    }
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch == '\n' ? ' ' : ch;
    }
    return out + "\"";
}

std::string dec(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string hex(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

}  // namespace

std::size_t GridSpec::size() const {
    std::size_t n = axes.empty() ? 0 : 1;
    for (const auto& a : axes) n *= a.second.size();
    return n;
}

GridSpec parse_grid_spec(const std::string& text) {
    GridSpec spec;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::InvalidArgument, "grid spec line " + std::to_string(n) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (std::find(grid_keys().begin(), grid_keys().end(), key) == grid_keys().end())
            throw Error(ErrorCode::InvalidArgument, "grid spec line " + std::to_string(n) + ": unknown key " + key);
        for (const auto& a : spec.axes)
            if (a.first == key)
                throw Error(ErrorCode::InvalidArgument, "grid spec line " + std::to_string(n) + ": duplicate key " + key);
        std::vector<double> values;
        if (val.size() >= 2 && val.front() == '[' && val.back() == ']') {
            for (const auto& tok : split_commas(val.substr(1, val.size() - 2))) values.push_back(parse_number(tok, n));
        } else if (val.rfind("range(", 0) == 0 && val.back() == ')') {
            const auto parts = split_commas(val.substr(6, val.size() - 7));
            if (parts.size() != 3)
                throw Error(ErrorCode::InvalidArgument, "grid spec line " + std::to_string(n) + ": range(a, b, n)");
            const double a = parse_number(parts[0], n), b = parse_number(parts[1], n);
            const double cnt = parse_number(parts[2], n);
            if (cnt < 1 || cnt != std::floor(cnt) || cnt > 1e6)
                throw Error(ErrorCode::InvalidArgument, "grid spec line " + std::to_string(n) + ": bad point count");
            const int m = static_cast<int>(cnt);
            for (int i = 0; i < m; ++i) values.push_back(m == 1 ? a : a + (b - a) * i / (m - 1));
        } else {
            values.push_back(parse_number(val, n));
        }
        if (values.empty())
            throw Error(ErrorCode::InvalidArgument, "grid spec line " + std::to_string(n) + ": empty value list");
        spec.axes.push_back({key, std::move(values)});
    }
    if (spec.axes.empty()) throw Error(ErrorCode::InvalidArgument, "grid spec has no axes");
    return spec;
}

GridSpec load_grid_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open grid spec " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_grid_spec(ss.str());
}

int grid_eval(const std::string& kernel, const GridSpec& spec, const Conventions& conv,
              const std::string& csv_path) {
    if (std::find(kernel_ids().begin(), kernel_ids().end(), kernel) == kernel_ids().end())
        throw Error(ErrorCode::InvalidArgument, "unknown kernel " + kernel);
    std::ofstream out(csv_path);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + csv_path);
    for (const auto& a : spec.axes) out << a.first << ",";
    out << "re,im,re_hex,im_hex,err_estimate,converged,error\n";

    int failures = 0;
    const std::size_t total = spec.size();
    std::vector<std::size_t> idx(spec.axes.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
        EvalParams p;
        for (std::size_t a = 0; a < spec.axes.size(); ++a) {
            const double v = spec.axes[a].second[idx[a]];
            apply(p, spec.axes[a].first, v);
            out << dec(v) << ",";
        }
        try {
            const auto r = evaluate_kernel(kernel, p, conv);
            out << dec(r.value.real()) << "," << dec(r.value.imag()) << "," << hex(r.value.real()) << ","
                << hex(r.value.imag()) << "," << dec(r.err_estimate) << "," << (r.converged ? 1 : 0) << ",\n";
        } catch (const std::exception& e) {
            ++failures;
            out << "nan,nan,nan,nan,nan,0," << csv_quote(e.what()) << "\n";
        }
        // Odometer, last axis fastest.
        for (std::size_t a = spec.axes.size(); a-- > 0;) {
            if (++idx[a] < spec.axes[a].second.size()) break;
            idx[a] = 0;
        }
    }
    if (!out) throw Error(ErrorCode::Io, "write failed for " + csv_path);
    return failures;
}

}  // namespace hypmorse::harness
