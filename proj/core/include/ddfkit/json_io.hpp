#pragma once

#include <json.hpp>

#include "ddfkit/ddf.hpp"
#include "ddfkit/fhs.hpp"
#include "ddfkit/field.hpp"
#include "ddfkit/geometry.hpp"
#include "ddfkit/lfsr.hpp"
#include "ddfkit/poly.hpp"

/// Wire formats. All malformed input is reported as Error(ParseError) or the
/// relevant domain error; emitted JSON round-trips through the parsers.
///
///   field:   {"p": 3, "m": 1} or {"p": 2, "m": 2, "modulus": [1, 1, 1]}
///   poly:    [c0, c1, ...] (constant first, element indices)
///   family:  {"v": 26, "classes": [[0, 13], [1, 4, 19], ...]}
///   word:    {"n": 7, "q": 2, "symbols": [0, 0, 0, 1, 0, 1, 1]}
///   scheme:  {"n": 7, "q": 2, "words": [[0, 0, 0, 1, 0, 1, 1]]}
///   spectra: [{"d": 1, "I": 3, "E": 4, ...}, ...] ordered by d
namespace ddfkit::io {

using nlohmann::json;

json field_to_json(const Field& field);
Field field_from_json(const json& j);

json poly_to_json(const Poly& f);
Poly poly_from_json(const Field& field, const json& j);

json family_to_json(const DifferenceFamily& family);
DifferenceFamily family_from_json(const json& j);

json hop_to_json(const HopSequence& word);
json scheme_to_json(const Fhs& scheme);
/// Accepts either the word form ("symbols") or the scheme form ("words").
Fhs scheme_from_json(const json& j);

json spectrum_to_json(const DifferenceFamily& family, const DifferenceSpectrum& spec);
json classification_to_json(const Classification& c);
json predicates_to_json(const ApplicationPredicates& p);

/// Cycle string "(2 5 3)(4 6 7)" or 1-indexed image array [1, 5, 2, 6, 3, 4, 7].
Permutation permutation_from_json(int n, const json& j);
json permutation_to_json(const Permutation& p);

json parse(const std::string& text); ///< ParseError on bad JSON

} // namespace ddfkit::io
