#include "ddfkit/json_io.hpp"

namespace ddfkit::io {

namespace {

int get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        fail(ErrorKind::ParseError, std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

std::vector<int> int_list(const json& j, const std::string& what) {
    if (!j.is_array()) fail(ErrorKind::ParseError, what + " must be an array of integers");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number_integer()) fail(ErrorKind::ParseError, what + " must contain integers only");
        out.push_back(x.get<int>());
    }
    return out;
}

} // namespace

json field_to_json(const Field& field) {
    json j{{"p", field.characteristic()}, {"m", field.degree()}};
    if (field.degree() > 1) j["modulus"] = field.modulus();
    return j;
}

Field field_from_json(const json& j) {
    if (!j.is_object()) fail(ErrorKind::ParseError, "field spec must be an object");
    int p = get_int(j, "p");
    int m = j.contains("m") ? get_int(j, "m") : 1;
    if (j.contains("modulus")) return Field(p, m, int_list(j["modulus"], "modulus"));
    return Field(p, m);
}

json poly_to_json(const Poly& f) { return json(f.coeffs()); }

Poly poly_from_json(const Field& field, const json& j) {
    if (j.is_string()) return Poly::from_string(field, j.get<std::string>());
    return Poly(field, int_list(j, "polynomial"));
}

json family_to_json(const DifferenceFamily& family) {
    return json{{"v", family.modulus()}, {"classes", family.classes()}};
}

DifferenceFamily family_from_json(const json& j) {
    if (!j.is_object()) fail(ErrorKind::ParseError, "family must be an object");
    int v = get_int(j, "v");
    if (!j.contains("classes") || !j["classes"].is_array())
        fail(ErrorKind::ParseError, "family needs a \"classes\" array");
    std::vector<std::vector<int>> classes;
    for (const auto& c : j["classes"]) classes.push_back(int_list(c, "class"));
    return DifferenceFamily(v, std::move(classes));
}

json hop_to_json(const HopSequence& word) {
    return json{{"n", word.length()}, {"q", word.alphabet()}, {"symbols", word.symbols()}};
}

json scheme_to_json(const Fhs& scheme) {
    json words = json::array();
    for (const auto& w : scheme.words()) words.push_back(w.symbols());
    return json{{"n", scheme.length()}, {"q", scheme.alphabet()}, {"words", words}};
}

Fhs scheme_from_json(const json& j) {
    if (!j.is_object()) fail(ErrorKind::ParseError, "scheme must be an object");
    int q = get_int(j, "q");
    std::vector<HopSequence> words;
    if (j.contains("words")) {
        if (!j["words"].is_array()) fail(ErrorKind::ParseError, "\"words\" must be an array");
        for (const auto& w : j["words"]) words.emplace_back(q, int_list(w, "word"));
    } else if (j.contains("symbols")) {
        words.emplace_back(q, int_list(j["symbols"], "symbols"));
    } else {
        fail(ErrorKind::ParseError, "scheme needs \"words\" or \"symbols\"");
    }
    if (words.empty()) fail(ErrorKind::ParseError, "scheme needs at least one word");
    int n = j.contains("n") ? get_int(j, "n") : words.front().length();
    return Fhs(n, q, std::move(words));
}

json spectrum_to_json(const DifferenceFamily& family, const DifferenceSpectrum& spec) {
    json out = json::array();
    for (int d = 1; d < family.modulus(); ++d) {
        json row{{"d", d}, {"I", spec.internal[d]}, {"E", spec.external[d]}};
        json by_i = json::array(), by_e = json::array(), pair = json::array();
        for (int i = 0; i < family.class_count(); ++i) {
            by_i.push_back(spec.internal_by_class[i][d]);
            by_e.push_back(spec.external_by_class[i][d]);
            json prow = json::array();
            for (int jj = 0; jj < family.class_count(); ++jj)
                prow.push_back(spec.external_pairwise[i][jj][d]);
            pair.push_back(prow);
        }
        row["I_by_class"] = by_i;
        row["E_by_class"] = by_e;
        row["E_pairwise"] = pair;
        out.push_back(row);
    }
    return out;
}

json classification_to_json(const Classification& c) {
    return json{{"uniform", c.uniform},
                {"partition_type", c.partition_type},
                {"perfect_internal", c.perfect_internal},
                {"perfect_external", c.perfect_external},
                {"internal_max", c.internal_max},
                {"external_min", c.external_min}};
}

json predicates_to_json(const ApplicationPredicates& p) {
    json j{{"is_edf", p.is_edf},
           {"ooc_lambda_a", p.ooc_lambda_a},
           {"ooc_lambda_c", p.ooc_lambda_c},
           {"dss_index", p.dss_index}};
    if (p.bounded_difference_lambda)
        j["bounded_difference_lambda"] = *p.bounded_difference_lambda;
    else
        j["bounded_difference_lambda"] = nullptr;
    return j;
}

Permutation permutation_from_json(int n, const json& j) {
    if (j.is_string()) return Permutation::from_cycles(n, j.get<std::string>());
    auto images = int_list(j, "permutation");
    if (static_cast<int>(images.size()) != n)
        fail(ErrorKind::ParseError, "image array must have length n");
    for (int& v : images) {
        if (v < 1 || v > n) fail(ErrorKind::ParseError, "image entries are 1-indexed positions");
        --v;
    }
    return Permutation(std::move(images));
}

json permutation_to_json(const Permutation& p) {
    json images = json::array();
    for (int v : p.images()) images.push_back(v + 1);
    return json{{"cycles", p.to_cycles()}, {"images", images}};
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::ParseError, "invalid JSON");
    return j;
}

} // namespace ddfkit::io
