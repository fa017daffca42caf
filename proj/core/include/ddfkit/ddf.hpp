#pragma once

#include <optional>
#include <vector>

#include "ddfkit/errors.hpp"

namespace ddfkit {

/// Disjoint difference family over Z_v: pairwise disjoint nonempty classes
/// Q_0, ..., Q_{q-1} of residues. Class order is preserved (per-class spectra
/// are indexed by it); family-level comparisons treat the classes as an
/// unordered set.
class DifferenceFamily {
public:
    DifferenceFamily(int v, std::vector<std::vector<int>> classes);

    int modulus() const { return v_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    std::vector<int> class_sizes() const;
    /// Union of all classes equals Z_v.
    bool is_partition() const;

    /// x -> a*x + b applied to every class, classes re-sorted internally.
    /// Requires gcd(a, v) = 1 (NotCoprime).
    DifferenceFamily mapped(int a, int b) const;
    DifferenceFamily translated(int b) const { return mapped(1, b); }

    /// Equality as an unordered set of classes (same v).
    bool same_family(const DifferenceFamily& other) const;

    /// Exact equality: same v and same classes in the same order.
    bool operator==(const DifferenceFamily& other) const;
    bool operator!=(const DifferenceFamily& other) const { return !(*this == other); }

private:
    int v_;
    std::vector<std::vector<int>> classes_;
};

/// All five difference counters, indexed by difference d in [1, v).
struct DifferenceSpectrum {
    int v = 0;
    std::vector<int> internal;                          ///< |I(d)|, index d (0 unused)
    std::vector<int> external;                          ///< |E(d)|
    std::vector<std::vector<int>> internal_by_class;    ///< |I_i(d)|, [i][d]
    std::vector<std::vector<int>> external_by_class;    ///< |E_i(d)|, [i][d]
    std::vector<std::vector<std::vector<int>>> external_pairwise; ///< |E_{i,j}(d)|, [i][j][d]
};

DifferenceSpectrum spectrum(const DifferenceFamily& family);

struct Classification {
    bool uniform = false;          ///< all classes the same size
    bool partition_type = false;   ///< classes partition Z_v
    bool perfect_internal = false; ///< |I(d)| constant over d != 0
    bool perfect_external = false; ///< |E(d)| constant over d != 0
    int internal_max = 0;          ///< max_d |I(d)|
    int external_min = 0;          ///< min_d |E(d)|
};

Classification classify(const DifferenceFamily& family);

struct ApplicationPredicates {
    bool is_edf = false;                           ///< uniform and perfect external
    std::optional<int> bounded_difference_lambda;  ///< max_d |I(d)| for single-class families
    int ooc_lambda_a = 0;                          ///< max_{i,d} |I_i(d)|
    int ooc_lambda_c = 0;                          ///< max_{i!=j,d} |E_{i,j}(d)|
    int dss_index = 0;                             ///< min_d |E(d)|
};

ApplicationPredicates application_predicates(const DifferenceFamily& family);

/// Witness x -> a*x + b with gcd(a, v) = 1.
struct UnitAffineMap {
    int a = 1;
    int b = 0;
};

/// Searches all phi(v)*v maps (a ascending over units, then b ascending) for
/// one carrying f1 onto f2 as unordered families; the internal-spectrum value
/// multiset is used as an early reject. Families over different v are never
/// equivalent.
std::optional<UnitAffineMap> ddf_equivalent(const DifferenceFamily& f1, const DifferenceFamily& f2);

/// Lexicographically least image over all unit-affine maps, with classes
/// sorted internally and the class list sorted. Two families are equivalent
/// iff their canonical forms compare equal.
DifferenceFamily canonical_form(const DifferenceFamily& family);

} // namespace ddfkit
