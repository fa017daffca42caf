#include "ddfkit/ddf.hpp"

#include <algorithm>
#include <string>

#include "ddfkit/numbers.hpp"

namespace ddfkit {

namespace {

std::vector<std::vector<int>> sorted_key(const std::vector<std::vector<int>>& classes) {
    auto k = classes;
    for (auto& c : k) std::sort(c.begin(), c.end());
    std::sort(k.begin(), k.end());
    return k;
}

} // namespace

DifferenceFamily::DifferenceFamily(int v, std::vector<std::vector<int>> classes)
    : v_(v), classes_(std::move(classes)) {
    if (v_ < 1) fail(ErrorKind::InvalidArgument, "group order must be >= 1");
    if (classes_.empty()) fail(ErrorKind::EmptyClass, "family must contain at least one class");
    std::vector<char> seen(v_, 0);
    for (auto& c : classes_) {
        if (c.empty()) fail(ErrorKind::EmptyClass, "classes must be nonempty");
        std::sort(c.begin(), c.end());
        for (size_t i = 0; i < c.size(); ++i) {
            int x = c[i];
            if (x < 0 || x >= v_)
                fail(ErrorKind::ElementOutOfRange,
                     "element " + std::to_string(x) + " not in Z_" + std::to_string(v_));
            if (i + 1 < c.size() && c[i + 1] == x)
                fail(ErrorKind::OverlappingClasses, "repeated element " + std::to_string(x));
            if (seen[x]) fail(ErrorKind::OverlappingClasses, "classes share element " + std::to_string(x));
            seen[x] = 1;
        }
    }
}

std::vector<int> DifferenceFamily::class_sizes() const {
    std::vector<int> out;
    out.reserve(classes_.size());
    for (const auto& c : classes_) out.push_back(static_cast<int>(c.size()));
    return out;
}

bool DifferenceFamily::is_partition() const {
    size_t total = 0;
    for (const auto& c : classes_) total += c.size();
    return total == static_cast<size_t>(v_);
}

DifferenceFamily DifferenceFamily::mapped(int a, int b) const {
    a = ((a % v_) + v_) % v_;
    b = ((b % v_) + v_) % v_;
    if (v_ > 1 && gcd_ll(a, v_) != 1)
        fail(ErrorKind::NotCoprime, "multiplier must be a unit mod v");
    std::vector<std::vector<int>> out;
    out.reserve(classes_.size());
    for (const auto& c : classes_) {
        std::vector<int> img;
        img.reserve(c.size());
        for (int x : c) img.push_back(static_cast<int>((static_cast<long long>(a) * x + b) % v_));
        std::sort(img.begin(), img.end());
        out.push_back(std::move(img));
    }
    return DifferenceFamily(v_, std::move(out));
}

bool DifferenceFamily::same_family(const DifferenceFamily& other) const {
    return v_ == other.v_ && sorted_key(classes_) == sorted_key(other.classes_);
}

bool DifferenceFamily::operator==(const DifferenceFamily& other) const {
    return v_ == other.v_ && classes_ == other.classes_;
}

DifferenceSpectrum spectrum(const DifferenceFamily& family) {
    const int v = family.modulus();
    const auto& cls = family.classes();
    const int q = family.class_count();

    DifferenceSpectrum s;
    s.v = v;
    s.internal.assign(v, 0);
    s.external.assign(v, 0);
    s.internal_by_class.assign(q, std::vector<int>(v, 0));
    s.external_by_class.assign(q, std::vector<int>(v, 0));
    s.external_pairwise.assign(q, std::vector<std::vector<int>>(q, std::vector<int>(v, 0)));

    for (int i = 0; i < q; ++i) {
        for (int x : cls[i])
            for (int y : cls[i]) {
                if (x == y) continue;
                int d = ((x - y) % v + v) % v;
                ++s.internal[d];
                ++s.internal_by_class[i][d];
            }
        for (int j = 0; j < q; ++j) {
            if (i == j) continue;
            for (int x : cls[i])
                for (int y : cls[j]) {
                    int d = ((x - y) % v + v) % v;
                    ++s.external[d];
                    ++s.external_by_class[i][d];
                    ++s.external_pairwise[i][j][d];
                }
        }
    }
    return s;
}

Classification classify(const DifferenceFamily& family) {
    Classification c;
    auto sizes = family.class_sizes();
    c.uniform = std::all_of(sizes.begin(), sizes.end(), [&](int k) { return k == sizes[0]; });
    c.partition_type = family.is_partition();

    const int v = family.modulus();
    auto s = spectrum(family);
    c.perfect_internal = true;
    c.perfect_external = true;
    c.internal_max = 0;
    c.external_min = 0;
    if (v > 1) {
        c.internal_max = *std::max_element(s.internal.begin() + 1, s.internal.end());
        c.external_min = *std::min_element(s.external.begin() + 1, s.external.end());
        for (int d = 2; d < v; ++d) {
            if (s.internal[d] != s.internal[1]) c.perfect_internal = false;
            if (s.external[d] != s.external[1]) c.perfect_external = false;
        }
    }
    return c;
}

ApplicationPredicates application_predicates(const DifferenceFamily& family) {
    ApplicationPredicates p;
    auto c = classify(family);
    auto s = spectrum(family);
    p.is_edf = c.uniform && c.perfect_external;
    if (family.class_count() == 1) p.bounded_difference_lambda = c.internal_max;
    p.dss_index = c.external_min;
    for (const auto& row : s.internal_by_class)
        for (int d = 1; d < family.modulus(); ++d) p.ooc_lambda_a = std::max(p.ooc_lambda_a, row[d]);
    for (int i = 0; i < family.class_count(); ++i)
        for (int j = 0; j < family.class_count(); ++j) {
            if (i == j) continue;
            for (int d = 1; d < family.modulus(); ++d)
                p.ooc_lambda_c = std::max(p.ooc_lambda_c, s.external_pairwise[i][j][d]);
        }
    return p;
}

std::optional<UnitAffineMap> ddf_equivalent(const DifferenceFamily& f1, const DifferenceFamily& f2) {
    if (f1.modulus() != f2.modulus()) return std::nullopt;
    const int v = f1.modulus();

    // early reject: internal spectrum value multisets must agree
    auto value_multiset = [](const DifferenceFamily& f) {
        auto s = spectrum(f);
        std::sort(s.internal.begin() + 1, s.internal.end());
        return s.internal;
    };
    auto sizes1 = f1.class_sizes();
    auto sizes2 = f2.class_sizes();
    std::sort(sizes1.begin(), sizes1.end());
    std::sort(sizes2.begin(), sizes2.end());
    if (sizes1 != sizes2) return std::nullopt;
    if (v > 1 && value_multiset(f1) != value_multiset(f2)) return std::nullopt;

    for (int a : units_mod(v)) {
        if (v == 1) a = 1;
        for (int b = 0; b < v; ++b)
            if (f1.mapped(a, b).same_family(f2)) return UnitAffineMap{a, b};
    }
    return std::nullopt;
}

DifferenceFamily canonical_form(const DifferenceFamily& family) {
    const int v = family.modulus();
    std::optional<std::vector<std::vector<int>>> best;
    for (int a : units_mod(v)) {
        if (v == 1) a = 1;
        for (int b = 0; b < v; ++b) {
            auto key = sorted_key(family.mapped(a, b).classes());
            if (!best || key < *best) best = std::move(key);
        }
    }
    return DifferenceFamily(v, std::move(*best));
}

} // namespace ddfkit
