#include "hypmorse/oracle.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hypmorse/error.hpp"
#include "hypmorse/specfun.hpp"
#include "resources.hpp"

namespace hypmorse::oracle {

namespace {

cplx parse_cplx(const std::string& token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "oracle: bad complex token " + token);
    return {std::stod(token.substr(0, colon)), std::stod(token.substr(colon + 1))};
}

}  // namespace

std::vector<Row> parse(const std::string& csv) {
    std::istringstream in(csv);
    std::vector<Row> rows;
    std::string line;
    int n = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::stringstream ss(line);
        std::string func, args, re, im;
        std::getline(ss, func, ',');
        std::getline(ss, args, ',');
        std::getline(ss, re, ',');
        std::getline(ss, im, ',');
        Row row;
        row.func = func;
        row.line = n;
        std::stringstream as(args);
        std::string tok;
        while (as >> tok) row.args.push_back(parse_cplx(tok));
        row.value = {std::stod(re), std::stod(im)};
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Row> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::vector<Row> builtin() { return parse(resources::specfun_oracle_csv()); }

cplx evaluate(const Row& r) {
    namespace sf = specfun;
    const auto& a = r.args;
    auto re = [&](std::size_t i) { return a.at(i).real(); };
    if (r.func == "log_gamma") return sf::log_gamma(a.at(0));
    if (r.func == "digamma") return sf::digamma(a.at(0));
    if (r.func == "pochhammer") return sf::pochhammer(a.at(0), static_cast<int>(std::lround(re(1))));
    if (r.func == "gauss_2f1") return sf::gauss_2f1(a.at(0), a.at(1), a.at(2), a.at(3));
    if (r.func == "kummer_1f1") return sf::kummer_1f1(a.at(0), a.at(1), a.at(2));
    if (r.func == "humbert_phi1") return sf::humbert_phi1(a.at(0), a.at(1), a.at(2), a.at(3), a.at(4));
    if (r.func == "chebyshev_t") return sf::chebyshev_t(static_cast<int>(std::lround(re(0))), re(1));
    if (r.func == "bessel_j") return sf::bessel(sf::BesselKind::J, re(0), re(1));
    if (r.func == "bessel_i") return sf::bessel(sf::BesselKind::I, re(0), re(1));
    if (r.func == "bessel_k" || r.func == "bessel_k_int") return sf::bessel(sf::BesselKind::K, re(0), re(1));
    if (r.func == "whittaker_m") return sf::whittaker(sf::WhittakerKind::M, re(0), a.at(1), re(2));
    if (r.func == "whittaker_w") return sf::whittaker(sf::WhittakerKind::W, re(0), a.at(1), re(2));
    throw Error(ErrorCode::InvalidArgument, "unknown oracle function " + r.func);
}

double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

bool is_integer_order_k(const Row& r) { return r.func == "bessel_k_int"; }

}  // namespace hypmorse::oracle
