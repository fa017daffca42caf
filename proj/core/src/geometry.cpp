#include "ddfkit/geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ddfkit/lfsr.hpp"
#include "ddfkit/numbers.hpp"

namespace ddfkit {

namespace {

std::vector<int> normalize_coords(const Field& F, std::vector<int> c) {
    int last = -1;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[i] != 0) { last = i; break; }
    if (last < 0) fail(ErrorKind::InvalidArgument, "projective coordinates cannot all be zero");
    int inv = F.inv(c[last]);
    for (int& x : c) x = F.mul(x, inv);
    return c;
}

} // namespace

ProjPoint::ProjPoint(Field field, std::vector<int> coords) : field_(std::move(field)) {
    if (coords.size() < 2) fail(ErrorKind::InvalidArgument, "a projective point needs n >= 1");
    for (int x : coords)
        if (x < 0 || x >= field_.size())
            fail(ErrorKind::ElementOutOfRange, "coordinate is not an element index");
    coords_ = normalize_coords(field_, std::move(coords));
}

bool ProjPoint::is_affine() const { return coords_.back() != 0; }

bool ProjPoint::is_infinity_point() const {
    if (coords_.back() != 1) return false;
    for (size_t i = 0; i + 1 < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Projectivity::Projectivity(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) fail(ErrorKind::DimensionMismatch, "projectivity matrix must be square");
    if (!m_.is_invertible()) fail(ErrorKind::SingularMatrix, "projectivity matrix must be invertible");
}

ProjPoint Projectivity::apply(const ProjPoint& p) const {
    if (p.dimension() + 1 != m_.rows()) fail(ErrorKind::DimensionMismatch, "point dimension mismatch");
    return ProjPoint(m_.field(), m_.apply_row(p.coords()));
}

Projectivity Projectivity::pow(long long e) const { return Projectivity(m_.pow(e)); }

bool Projectivity::fixes_infinity_structure() const {
    int n = dimension();
    // hyperplane x_n = 0 invariant: last column zero above the diagonal corner
    for (int i = 0; i < n; ++i)
        if (m_.at(i, n) != 0) return false;
    // infinity point fixed: last row a nonzero multiple of e_n
    for (int j = 0; j < n; ++j)
        if (m_.at(n, j) != 0) return false;
    return m_.at(n, n) != 0;
}

Projectivity projectivity_from_poly(const Poly& f) {
    if (!is_primitive(f)) fail(ErrorKind::NotPrimitive, "polynomial is not primitive");
    Matrix c = companion_matrix(f);
    int n = c.rows();
    Matrix a(f.field(), n + 1, n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.set(i, j, c.at(i, j));
    a.set(n, n, 1);
    return Projectivity(std::move(a));
}

Projectivity coordinate_frame(const Field& field, const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) fail(ErrorKind::InvalidArgument, "not a coordinate permutation");
        seen[v] = 1;
    }
    Matrix m(field, n, n);
    for (int j = 0; j < n; ++j) m.set(perm[j], j, 1);
    return Projectivity(std::move(m));
}

std::vector<ProjPoint> pg_affine_points(const Field& field, int n) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "projective dimension must be >= 2");
    long long count = ipow(field.size(), n);
    std::vector<ProjPoint> out;
    out.reserve(count - 1);
    for (long long t = 1; t < count; ++t) { // t = 0 is the infinity point
        std::vector<int> c(n + 1, 1);
        long long v = t;
        for (int i = 0; i < n; ++i) { c[i] = static_cast<int>(v % field.size()); v /= field.size(); }
        out.emplace_back(field, std::move(c));
    }
    return out;
}

OrbitIndex::OrbitIndex(const Projectivity& tau, const ProjPoint& base) {
    if (!base.is_affine() || base.is_infinity_point())
        fail(ErrorKind::BadBasePoint, "base must be an affine point other than infinity");
    if (!tau.fixes_infinity_structure())
        fail(ErrorKind::NotTransitive, "projectivity does not fix the infinity structure");
    const Field& F = base.field();
    long long expected = ipow(F.size(), base.dimension()) - 1;
    points_.reserve(expected);
    ProjPoint p = base;
    for (long long i = 0; i < expected; ++i) {
        if (!index_.emplace(p.coords(), static_cast<int>(i)).second)
            fail(ErrorKind::NotTransitive, "orbit closed early: projectivity order is too small");
        points_.push_back(p);
        p = tau.apply(p);
    }
    if (!(p == base))
        fail(ErrorKind::NotTransitive, "orbit did not return to the base point");
}

int OrbitIndex::index_of(const ProjPoint& p) const {
    auto it = index_.find(p.coords());
    if (it == index_.end()) fail(ErrorKind::BadBasePoint, "point is not in the indexed orbit");
    return it->second;
}

ParallelClass parallel_class(const Field& field, int n, int k,
                             const std::optional<Projectivity>& frame) {
    if (k < 1 || k > n - 1) fail(ErrorKind::BadK, "flat parameter must satisfy 1 <= k <= n-1");
    if (frame) {
        if (frame->dimension() != n)
            fail(ErrorKind::DimensionMismatch, "frame dimension mismatch");
        if (!frame->fixes_infinity_structure())
            fail(ErrorKind::InvalidArgument, "frame must fix the infinity structure");
    }
    ParallelClass out;
    out.k = k;
    out.classes.assign(ipow(field.size(), k), {});
    for (auto& p : pg_affine_points(field, n)) {
        const ProjPoint& g = frame ? frame->apply(p) : p;
        long long z = 0;
        for (int i = k - 1; i >= 0; --i) z = z * field.size() + g.coords()[i];
        out.classes[z].push_back(p);
    }
    for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());
    return out;
}

DifferenceFamily fmm_construct(const Projectivity& tau, int k, const ProjPoint& base,
                               const std::optional<Projectivity>& frame) {
    const Field& F = base.field();
    int n = base.dimension();
    OrbitIndex idx(tau, base);
    ParallelClass pc = parallel_class(F, n, k, frame);
    std::vector<std::vector<int>> classes;
    classes.reserve(pc.classes.size());
    for (const auto& cls : pc.classes) {
        std::vector<int> q;
        q.reserve(cls.size());
        for (const auto& p : cls) q.push_back(idx.index_of(p));
        std::sort(q.begin(), q.end());
        classes.push_back(std::move(q));
    }
    // classes in first-occurrence order along the orbit
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return DifferenceFamily(static_cast<int>(ipow(F.size(), n)) - 1, std::move(classes));
}

DifferenceFamily fmm_construct(const Field& field, int n, int k, const Poly& f,
                               const ProjPoint& base, const std::optional<Projectivity>& frame) {
    if (f.degree() != n || f.field() != field)
        fail(ErrorKind::InvalidArgument, "polynomial does not match field and dimension");
    if (base.dimension() != n) fail(ErrorKind::BadBasePoint, "base point dimension mismatch");
    return fmm_construct(projectivity_from_poly(f), k, base, frame);
}

ProjPoint impulse_base_point(const Field& field, int n) {
    std::vector<int> c(n + 1, 0);
    c[n - 1] = 1;
    c[n] = 1;
    return ProjPoint(field, std::move(c));
}

OrbitIntersectionReport verify_orbit_intersections(const Field& field, int n, const Poly& f) {
    const int q = field.size();
    const int v = static_cast<int>(ipow(q, n)) - 1;

    OrbitIntersectionReport report;
    report.q = q;
    report.n = n;
    report.external_counts.assign(v, 0);

    DifferenceFamily family =
        fmm_construct(projectivity_from_poly(f), n - 1, impulse_base_point(field, n));
    std::vector<std::set<int>> sets;
    for (const auto& c : family.classes()) sets.emplace_back(c.begin(), c.end());

    size_t line0 = 0; // the line through infinity: the unique short class
    for (size_t i = 0; i < sets.size(); ++i)
        if (static_cast<int>(sets[i].size()) == q - 1) line0 = i;

    auto shift_set = [&](const std::set<int>& s, int d) {
        std::set<int> out;
        for (int x : s) out.insert((x + d) % v);
        return out;
    };
    auto translate_of = [&](const std::set<int>& a, const std::set<int>& b) {
        for (int t = 0; t < v; ++t)
            if (shift_set(a, t) == b) return true;
        return false;
    };
    auto complain = [&](int d, const std::string& what) {
        std::ostringstream os;
        os << "d=" << d << ": " << what;
        report.violations.push_back(os.str());
    };

    for (int d = 1; d < v; ++d)
        if (shift_set(sets[line0], d) == sets[line0]) report.type1_differences.push_back(d);
    if (report.type1_count() != q - 2)
        complain(0, "expected q-2 = " + std::to_string(q - 2) + " type-(I) differences, found " +
                        std::to_string(report.type1_count()));

    for (int d = 1; d < v; ++d) {
        std::vector<std::set<int>> shifted;
        shifted.reserve(sets.size());
        for (const auto& s : sets) shifted.push_back(shift_set(s, d));

        int external = 0, internal = 0;
        for (size_t i = 0; i < sets.size(); ++i)
            for (size_t j = 0; j < sets.size(); ++j) {
                int inter = 0;
                for (int x : shifted[i])
                    if (sets[j].count(x)) ++inter;
                if (i == j)
                    internal += inter;
                else
                    external += inter;
            }
        report.external_counts[d] = external;
        if (external != q * (static_cast<int>(ipow(q, n - 1)) - 1))
            complain(d, "external count " + std::to_string(external));
        if (internal != q - 1) complain(d, "internal count " + std::to_string(internal));

        bool type1 = std::binary_search(report.type1_differences.begin(),
                                        report.type1_differences.end(), d);
        if (type1) {
            // line 0 fixed; other lines meet their images only at infinity;
            // full-size intersections pair lines within one orbit
            int full = 0;
            for (size_t i = 0; i < sets.size(); ++i) {
                for (size_t j = 0; j < sets.size(); ++j) {
                    int inter = 0;
                    for (int x : shifted[i])
                        if (sets[j].count(x)) ++inter;
                    if (i == j && i != line0 && inter != 0)
                        complain(d, "type-(I) self-intersection at class " + std::to_string(i));
                    if (i != j && inter != 0) {
                        if (inter != q) {
                            complain(d, "type-(I) partial intersection");
                        } else {
                            ++full;
                            if (i == line0 || j == line0 || !translate_of(sets[i], sets[j]))
                                complain(d, "type-(I) full intersection across orbits");
                        }
                    }
                }
            }
            if (full != static_cast<int>(ipow(q, n - 1)) - 1)
                complain(d, "type-(I) expected q^{n-1}-1 full intersections, found " +
                                std::to_string(full));
        } else {
            // every intersection has size 0 or 1; unit intersections sourced
            // from lines other than line 0 number (q^{n-1}-1) q, q-1 of them
            // self-intersections
            int units_nonzero_src = 0, units_self = 0;
            for (size_t i = 0; i < sets.size(); ++i)
                for (size_t j = 0; j < sets.size(); ++j) {
                    int inter = 0;
                    for (int x : shifted[i])
                        if (sets[j].count(x)) ++inter;
                    if (inter > 1) {
                        complain(d, "type-(II) intersection of size " + std::to_string(inter));
                        continue;
                    }
                    if (inter == 1 && i != line0) {
                        ++units_nonzero_src;
                        if (i == j) ++units_self;
                    }
                    if (inter == 1 && i == line0 && j == line0)
                        complain(d, "type-(II) line 0 meets its own image off infinity");
                }
            if (units_nonzero_src != (static_cast<int>(ipow(q, n - 1)) - 1) * q)
                complain(d, "type-(II) unit intersections " + std::to_string(units_nonzero_src));
            if (units_self != q - 1)
                complain(d, "type-(II) self unit intersections " + std::to_string(units_self));
        }
    }
    return report;
}

int multiplier_of_generator(const Projectivity& tau, int k, long long i, const ProjPoint& base,
                            const std::optional<Projectivity>& frame) {
    const Field& F = base.field();
    long long v = ipow(F.size(), base.dimension()) - 1;
    if (gcd_ll(((i % v) + v) % v, v) != 1)
        fail(ErrorKind::NotCoprime, "exponent must be coprime to q^n - 1");
    DifferenceFamily original = fmm_construct(tau, k, base, frame);
    DifferenceFamily regenerated = fmm_construct(tau.pow(((i % v) + v) % v), k, base, frame);
    for (int w : units_mod(static_cast<int>(v)))
        if (original.mapped(w, 0).same_family(regenerated)) return w;
    fail(ErrorKind::InvalidArgument, "no multiplier found"); // unreachable for valid input
}

int multiplier_of_generator(const Field& field, int n, int k, const Poly& f, long long i) {
    return multiplier_of_generator(projectivity_from_poly(f), k, i, impulse_base_point(field, n));
}

bool correspondence_check(const Field& field, int n, int k, const Poly& f) {
    LgConstruction lg = lg_construct(field, n, k, f);
    Projectivity tau = projectivity_from_poly(f);
    ProjPoint base = impulse_base_point(field, n);
    DifferenceFamily geometric = fmm_construct(tau, k, base);
    if (!lg.family.same_family(geometric)) return false;

    // moving the base along the orbit translates every class by -d
    long long v = ipow(field.size(), n) - 1;
    for (long long d : {1LL, v - 1}) {
        ProjPoint moved = tau.pow(d).apply(base);
        DifferenceFamily shifted = fmm_construct(tau, k, moved);
        if (!geometric.mapped(1, static_cast<int>((v - d % v) % v)).same_family(shifted))
            return false;
    }
    return true;
}

} // namespace ddfkit
