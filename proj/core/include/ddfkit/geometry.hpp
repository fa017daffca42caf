#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ddfkit/ddf.hpp"
#include "ddfkit/matrix.hpp"
#include "ddfkit/poly.hpp"

namespace ddfkit {

/// Point of PG(n, q), stored as homogeneous coordinates normalized so the
/// last nonzero coordinate is 1. Two points are equal iff their coordinate
/// lists are equal.
class ProjPoint {
public:
    ProjPoint(Field field, std::vector<int> coords); ///< not all zero

    const Field& field() const { return field_; }
    int dimension() const { return static_cast<int>(coords_.size()) - 1; } ///< n
    const std::vector<int>& coords() const { return coords_; }

    bool is_affine() const;          ///< last coordinate nonzero (== 1 after normalization)
    bool is_infinity_point() const;  ///< (0, ..., 0, 1)
    bool on_hyperplane_at_infinity() const { return !is_affine(); }

    bool operator==(const ProjPoint& other) const { return coords_ == other.coords_; }
    bool operator!=(const ProjPoint& other) const { return !(*this == other); }
    bool operator<(const ProjPoint& other) const { return coords_ < other.coords_; }

private:
    Field field_;
    std::vector<int> coords_;
};

/// Invertible (n+1) x (n+1) matrix acting on row-vector points by right
/// multiplication followed by normalization.
class Projectivity {
public:
    explicit Projectivity(Matrix m);

    const Matrix& matrix() const { return m_; }
    int dimension() const { return m_.rows() - 1; }
    ProjPoint apply(const ProjPoint& p) const;
    Projectivity pow(long long e) const;
    /// Maps { x_n = 0 } to itself and fixes (0, ..., 0, 1).
    bool fixes_infinity_structure() const;

private:
    Matrix m_;
};

/// Block form diag(C, 1) with C the companion matrix of f; fixes the
/// hyperplane at infinity and the infinity point, order q^n - 1 on the
/// remaining points. NotPrimitive unless f is primitive.
Projectivity projectivity_from_poly(const Poly& f);

/// Coordinate-permutation projectivity: image coordinate j is source
/// coordinate perm[j] (a permutation of 0..n).
Projectivity coordinate_frame(const Field& field, const std::vector<int>& perm);

/// All points with x_n != 0 except the infinity point; count q^n - 1.
/// Requires n >= 2.
std::vector<ProjPoint> pg_affine_points(const Field& field, int n);

/// Bijection between the affine points off the infinity hyperplane (minus the
/// infinity point) and Z_{q^n-1}: index(base) = 0 and index(P^tau) =
/// index(P) + 1. BadBasePoint when the base is not such a point;
/// NotTransitive when tau does not act regularly on them.
class OrbitIndex {
public:
    OrbitIndex(const Projectivity& tau, const ProjPoint& base);

    int order() const { return static_cast<int>(points_.size()); } ///< q^n - 1
    int index_of(const ProjPoint& p) const;                        ///< BadBasePoint if absent
    const ProjPoint& point_at(int i) const { return points_[i]; }

private:
    std::vector<ProjPoint> points_;
    std::map<std::vector<int>, int> index_;
};

/// Partition of the affine points (minus infinity) into the fibers of
/// (x_0, ..., x_{n-1}, 1) -> sum_{i<k} idx(x_i) q^i, each fiber an affine
/// (n-k)-flat through a common flat at infinity. classes[0] is the fiber of 0
/// with the infinity point removed (size q^{n-k} - 1); the others have size
/// q^{n-k}. An optional frame re-coordinates the points before the fiber map,
/// selecting a different parallel class.
struct ParallelClass {
    int k = 1;
    std::vector<std::vector<ProjPoint>> classes; ///< indexed by fiber value
};

ParallelClass parallel_class(const Field& field, int n, int k,
                             const std::optional<Projectivity>& frame = std::nullopt);

/// Difference family of the parallel-class fibers under the orbit indexing of
/// tau from the given base point. Classes are listed in first-occurrence
/// order (ascending minimum element). Perfect partition type with
/// |I(d)| = q^{n-k} - 1 and |E(d)| = q^n - 1 - (q^{n-k} - 1).
DifferenceFamily fmm_construct(const Projectivity& tau, int k, const ProjPoint& base,
                               const std::optional<Projectivity>& frame = std::nullopt);

/// Same, with tau = projectivity_from_poly(f).
DifferenceFamily fmm_construct(const Field& field, int n, int k, const Poly& f,
                               const ProjPoint& base,
                               const std::optional<Projectivity>& frame = std::nullopt);

/// Exhaustive check of the line-orbit intersection behaviour that makes the
/// construction work, for the line case k = n - 1. Differences d split into
/// type (I) (tau^d fixes the line through infinity; exactly q - 2 of them)
/// and type (II). For each d every pairwise class intersection cardinality is
/// validated, as are the per-type totals and |E(d)| = q (q^{n-1} - 1).
struct OrbitIntersectionReport {
    int q = 0;
    int n = 0;
    std::vector<int> type1_differences;       ///< d with the infinity line fixed
    std::vector<int> external_counts;         ///< |E(d)| indexed by d (0 unused)
    std::vector<std::string> violations;      ///< empty iff all checks hold

    int type1_count() const { return static_cast<int>(type1_differences.size()); }
    bool ok() const { return violations.empty(); }
};

OrbitIntersectionReport verify_orbit_intersections(const Field& field, int n, const Poly& f);

/// The unit w with {w * Q_j} equal to the family rebuilt with tau^i in place
/// of tau (same base and frame); the smallest such w is returned.
/// NotCoprime unless gcd(i, q^n - 1) = 1.
int multiplier_of_generator(const Projectivity& tau, int k, long long i, const ProjPoint& base,
                            const std::optional<Projectivity>& frame = std::nullopt);
int multiplier_of_generator(const Field& field, int n, int k, const Poly& f, long long i);

/// The impulse-style base point (0, ..., 0, 1, 1) whose orbit lists the
/// m-sequence state windows.
ProjPoint impulse_base_point(const Field& field, int n);

/// True iff the m-sequence construction and the parallel-class construction
/// agree for (field, n, k, f): equal families from the impulse base, and
/// base points moved along the orbit translate the family as predicted.
bool correspondence_check(const Field& field, int n, int k, const Poly& f);

} // namespace ddfkit
