#include "hypmorse/conventions.hpp"

#include <array>
#include <utility>

#include "hypmorse/error.hpp"

namespace hypmorse {

namespace {

template <class E, std::size_t N>
const char* name_of(E v, const std::array<std::pair<E, const char*>, N>& table) {
    for (const auto& [e, n] : table)
        if (e == v) return n;
    return "?";
}

template <class E, std::size_t N>
void parse(const std::string& s, E& out, const std::array<std::pair<E, const char*>, N>& table) {
    for (const auto& [e, n] : table)
        if (s == n) {
            out = e;
            return;
        }
    throw Error(ErrorCode::InvalidArgument, "unknown convention name '" + s + "'");
}

constexpr std::array<std::pair<SpectralMapping, const char*>, 3> kMapping{
    {{SpectralMapping::A, "A"}, {SpectralMapping::B, "B"}, {SpectralMapping::C, "C"}}};
constexpr std::array<std::pair<KeyPrefactor, const char*>, 2> kKey{
    {{KeyPrefactor::InverseTwoIMu, "inverse_2imu"}, {KeyPrefactor::Half, "half"}}};
constexpr std::array<std::pair<WhittakerIndex, const char*>, 2> kIndex{
    {{WhittakerIndex::OrderMu, "order_mu"}, {WhittakerIndex::OrderIMu, "order_imu"}}};
constexpr std::array<std::pair<WhittakerNorm, const char*>, 2> kNorm{
    {{WhittakerNorm::InverseLambda, "inverse_lambda"}, {WhittakerNorm::InverseTwoLambda, "inverse_2lambda"}}};
constexpr std::array<std::pair<WhittakerKappa, const char*>, 2> kKappa{
    {{WhittakerKappa::AbsK, "abs_k"}, {WhittakerKappa::SignedK, "signed_k"}}};
constexpr std::array<std::pair<MorseWaveVariant, const char*>, 2> kVariant{
    {{MorseWaveVariant::Thm43, "thm43"}, {MorseWaveVariant::Thm51, "thm51"}}};

}  // namespace

const char* to_string(SpectralMapping v) { return name_of(v, kMapping); }
const char* to_string(KeyPrefactor v) { return name_of(v, kKey); }
const char* to_string(WhittakerIndex v) { return name_of(v, kIndex); }
const char* to_string(WhittakerNorm v) { return name_of(v, kNorm); }
const char* to_string(WhittakerKappa v) { return name_of(v, kKappa); }
const char* to_string(MorseWaveVariant v) { return name_of(v, kVariant); }

void from_string(const std::string& s, SpectralMapping& out) { parse(s, out, kMapping); }
void from_string(const std::string& s, KeyPrefactor& out) { parse(s, out, kKey); }
void from_string(const std::string& s, WhittakerIndex& out) { parse(s, out, kIndex); }
void from_string(const std::string& s, WhittakerNorm& out) { parse(s, out, kNorm); }
void from_string(const std::string& s, WhittakerKappa& out) { parse(s, out, kKappa); }
void from_string(const std::string& s, MorseWaveVariant& out) { parse(s, out, kVariant); }

}  // namespace hypmorse
