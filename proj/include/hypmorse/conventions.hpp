#pragma once

// Enumerated readings of the formulas that admit more than one
// interpretation. The defaults are the literal readings; the harness
// calibration chooses among them numerically.

#include <string>

namespace hypmorse {

// mu <-> s relation for the hyperbolic resolvent.
enum class SpectralMapping {
    A,  // s = (1 - i mu)/2
    B,  // s = 1/2 - i mu
    C,  // s = 1/2 + i mu
};

// Constant in front of the integral resolvent representation.
enum class KeyPrefactor {
    InverseTwoIMu,  // 1/(2 i mu)
    Half,           // 1/2
};

// Whittaker index in the Morse closed resolvent for spectral value mu.
enum class WhittakerIndex {
    OrderMu,   // W_{., mu}, M_{., mu}
    OrderIMu,  // W_{., i mu}, M_{., i mu}
};

enum class WhittakerNorm {
    InverseLambda,     // Gamma(.)/(lambda Gamma(.))
    InverseTwoLambda,  // Gamma(.)/(2 lambda Gamma(.))
};

enum class WhittakerKappa {
    AbsK,     // first index |k|
    SignedK,  // first index k
};

enum class MorseWaveVariant { Thm43, Thm51 };

struct Conventions {
    SpectralMapping mapping = SpectralMapping::A;
    KeyPrefactor key_prefactor = KeyPrefactor::InverseTwoIMu;
    WhittakerIndex whittaker_index = WhittakerIndex::OrderMu;
    WhittakerNorm whittaker_norm = WhittakerNorm::InverseLambda;
    WhittakerKappa whittaker_kappa = WhittakerKappa::AbsK;
    MorseWaveVariant morse_wave_variant = MorseWaveVariant::Thm43;
};

const char* to_string(SpectralMapping v);
const char* to_string(KeyPrefactor v);
const char* to_string(WhittakerIndex v);
const char* to_string(WhittakerNorm v);
const char* to_string(WhittakerKappa v);
const char* to_string(MorseWaveVariant v);

// Inverse of to_string; throws InvalidArgument on unknown names.
void from_string(const std::string& s, SpectralMapping& out);
void from_string(const std::string& s, KeyPrefactor& out);
void from_string(const std::string& s, WhittakerIndex& out);
void from_string(const std::string& s, WhittakerNorm& out);
void from_string(const std::string& s, WhittakerKappa& out);
void from_string(const std::string& s, MorseWaveVariant& out);

}  // namespace hypmorse
