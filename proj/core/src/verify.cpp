#include "ddfkit/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ddfkit/ddf.hpp"
#include "ddfkit/fhs.hpp"
#include "ddfkit/geometry.hpp"
#include "ddfkit/lfsr.hpp"
#include "ddfkit/numbers.hpp"
#include "ddfkit/poly.hpp"

namespace ddfkit {

namespace {

// ---- golden vectors for the GF(3), order-3 worked construction ----

const std::vector<int> kImpulse33 = {0, 0, 1, 1, 1, 0, 2, 1, 1, 2, 1, 0, 1,
                                     0, 0, 2, 2, 2, 0, 1, 2, 2, 1, 2, 0, 2};

const std::vector<int> kSigma2Column = {0, 3, 4, 4, 1, 6, 5, 4, 7, 5, 1, 3, 1,
                                        0, 6, 8, 8, 2, 3, 7, 8, 5, 7, 2, 6, 2};

const std::vector<int> kSigma3Column = {9,  12, 13, 4,  19, 15, 14, 22, 16, 5,  10, 3,  1,
                                        18, 24, 26, 8,  11, 21, 25, 17, 23, 7,  20, 6,  2};

// sigma_2 family keyed by symbol value
const std::vector<std::pair<int, std::vector<int>>> kSigma2Classes = {
    {0, {0, 13}},   {3, {1, 11, 18}}, {6, {5, 14, 24}}, {1, {4, 10, 12}}, {4, {2, 3, 7}},
    {7, {8, 19, 22}}, {2, {17, 23, 25}}, {5, {6, 9, 21}}, {8, {15, 16, 20}}};

const std::vector<std::vector<int>> kSigma1Classes = {
    {0, 1, 5, 11, 13, 14, 18, 24}, {2, 3, 4, 7, 8, 10, 12, 19, 22}, {6, 9, 15, 16, 17, 20, 21, 23, 25}};

// ---- golden vectors for the PG(3,3) worked construction ----

// projectivity used in the worked PG(3,3) example: (x,y,z,1) -> (y, x+z, y+z, 1)
Projectivity worked_projectivity(const Field& f3) {
    Matrix m(f3, 4, 4);
    const int rows[4][4] = {{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.set(i, j, rows[i][j]);
    return Projectivity(std::move(m));
}

const std::vector<std::vector<int>> kPg33Family = {
    {0, 13}, {1, 4, 19}, {2, 22, 23}, {3, 5, 12}, {6, 14, 17},
    {7, 11, 21}, {8, 20, 24}, {9, 10, 15}, {16, 18, 25}};

const std::vector<std::vector<int>> kPg33Tau5Family = {
    {0, 13}, {6, 9, 21}, {15, 16, 20}, {1, 11, 18}, {8, 19, 22},
    {17, 23, 25}, {4, 10, 12}, {2, 3, 7}, {5, 14, 24}};

// Q'_i = 7 * Q_{pair[i]} pairing for tau^5
const int kTau5Pairing[9] = {0, 3, 4, 7, 8, 5, 6, 1, 2};

const std::vector<std::vector<int>> kPg33AltClassFamily = {
    {10, 23}, {1, 16, 24}, {0, 2, 9}, {3, 11, 14}, {4, 8, 18},
    {5, 17, 21}, {6, 7, 12}, {13, 15, 22}, {19, 20, 25}};

struct Runner {
    std::vector<CheckResult> results;

    void check(const std::string& id, const std::function<bool(std::string&)>& body) {
        CheckResult r;
        r.id = id;
        try {
            std::string detail;
            r.ok = body(detail);
            r.detail = detail;
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
};

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

} // namespace

std::vector<CheckResult> run_reference_checks() {
    Runner r;
    Field f3(3);
    Poly f42(f3, {1, 0, 2, 1});   // x^3 - x^2 - 2
    Poly f43(f3, {1, 1, 2, 1});   // x^3 - x^2 - 2x - 2

    r.check("algebra.primitive-cubics", [&](std::string& d) {
        auto prims = enumerate_primitive(f3, 3);
        d = std::to_string(prims.size()) + " primitive cubics over GF(3)";
        bool has42 = std::find(prims.begin(), prims.end(), f42) != prims.end();
        bool has43 = std::find(prims.begin(), prims.end(), f43) != prims.end();
        return prims.size() == euler_phi(26) / 3 && has42 && has43 && poly_order(f42) == 26;
    });

    r.check("algebra.companion-matrices", [&](std::string&) {
        Matrix c42 = companion_matrix(f42);
        Matrix c43 = companion_matrix(f43);
        const int e42[3][3] = {{0, 0, 2}, {1, 0, 0}, {0, 1, 1}};
        const int e43[3][3] = {{0, 0, 2}, {1, 0, 2}, {0, 1, 1}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (c42.at(i, j) != e42[i][j] || c43.at(i, j) != e43[i][j]) return false;
        return matrix_order(c42) == 26;
    });

    r.check("lfsr.impulse-response", [&](std::string& d) {
        auto s = impulse_response(lfsr_from_poly(f42), 26);
        d = join_ints(s);
        return s == kImpulse33;
    });

    r.check("lfsr.sigma1-column", [&](std::string&) {
        return lg_transform(lfsr_from_poly(f42), 1).symbols() == kImpulse33;
    });

    r.check("lfsr.sigma2-column", [&](std::string&) {
        return lg_transform(lfsr_from_poly(f42), 2).symbols() == kSigma2Column;
    });

    r.check("lfsr.sigma3-column", [&](std::string&) {
        // full-state window transform, computed directly from the sequence
        auto s = impulse_response(lfsr_from_poly(f42), 26);
        for (int t = 0; t < 26; ++t) {
            int w[3] = {s[t], s[(t + 1) % 26], s[(t + 2) % 26]};
            if (sigma_k(f3, w) != kSigma3Column[t]) return false;
        }
        return true;
    });

    r.check("lfsr.sigma2-family", [&](std::string&) {
        auto lg = lg_construct(f3, 3, 2, f42);
        for (const auto& [symbol, expected] : kSigma2Classes) {
            auto it = std::find(lg.symbol_map.begin(), lg.symbol_map.end(), symbol);
            if (it == lg.symbol_map.end()) return false;
            if (lg.family.classes()[it - lg.symbol_map.begin()] != expected) return false;
        }
        return lg.family.class_count() == 9 && max_auto(lg.sequence) == 2;
    });

    r.check("lfsr.sigma1-family", [&](std::string&) {
        auto lg = lg_construct(f3, 3, 1, f42);
        return lg.family.classes() == kSigma1Classes && max_auto(lg.sequence) == 8;
    });

    r.check("ddf.single-difference-set", [&](std::string&) {
        DifferenceFamily f(7, {{0, 1, 3}});
        auto s = spectrum(f);
        for (int d = 1; d < 7; ++d)
            if (s.internal[d] != 1) return false;
        return true;
    });

    r.check("ddf.complement-pair", [&](std::string&) {
        DifferenceFamily f(7, {{0, 1, 3}, {2, 4, 5, 6}});
        auto s = spectrum(f);
        for (int d = 1; d < 7; ++d)
            if (s.internal_by_class[0][d] != 1 || s.internal_by_class[1][d] != 2 ||
                s.internal[d] != 3 || s.external_by_class[0][d] != 2 ||
                s.external_by_class[1][d] != 2 || s.external[d] != 4)
                return false;
        auto c = classify(f);
        return c.partition_type && c.perfect_internal && c.perfect_external && !c.uniform &&
               c.internal_max == 3 && c.external_min == 4;
    });

    r.check("ddf.two-class-z25", [&](std::string&) {
        DifferenceFamily f(25, {{1, 2, 3, 4, 6, 15}, {5, 9, 10, 14, 17, 24}});
        auto s = spectrum(f);
        auto expected = [](int d) {
            if (d == 1 || d == 24) return 4;
            if (d == 7 || d == 9 || d == 10 || d == 15 || d == 16 || d == 18) return 2;
            if (d == 6 || d == 8 || d == 17 || d == 19) return 1;
            return 3;
        };
        for (int d = 1; d < 25; ++d)
            if (s.external[d] != 3 || s.internal[d] != expected(d)) return false;
        auto c = classify(f);
        return c.perfect_external && !c.perfect_internal &&
               application_predicates(f).dss_index == 3;
    });

    r.check("geometry.pg33-family", [&](std::string&) {
        Projectivity tau = worked_projectivity(f3);
        ProjPoint base(f3, {1, 0, 0, 1});
        auto family = fmm_construct(tau, 2, base, coordinate_frame(f3, {1, 2, 0, 3}));
        if (family.classes() != kPg33Family) return false;
        // same family through the polynomial-built projectivity
        auto via_poly = fmm_construct(f3, 3, 2, f43, base, coordinate_frame(f3, {1, 2, 0, 3}));
        return via_poly.same_family(family);
    });

    r.check("geometry.pg33-generator-multiplier", [&](std::string& d) {
        Projectivity tau = worked_projectivity(f3);
        ProjPoint base(f3, {1, 0, 0, 1});
        auto frame = coordinate_frame(f3, {1, 2, 0, 3});
        int w = multiplier_of_generator(tau, 2, 5, base, frame);
        d = "w = " + std::to_string(w);
        if (w != 7) return false;
        auto regenerated = fmm_construct(tau.pow(5), 2, base, frame);
        if (!regenerated.same_family(DifferenceFamily(26, kPg33Tau5Family))) return false;
        DifferenceFamily original(26, kPg33Family);
        for (int i = 0; i < 9; ++i) {
            std::vector<int> img;
            for (int x : original.classes()[kTau5Pairing[i]]) img.push_back(7 * x % 26);
            std::sort(img.begin(), img.end());
            if (img != kPg33Tau5Family[i]) return false;
        }
        return true;
    });

    r.check("geometry.pg33-alternate-class", [&](std::string&) {
        Projectivity tau = worked_projectivity(f3);
        ProjPoint base(f3, {1, 0, 0, 1});
        auto family = fmm_construct(tau, 2, base); // default class through (0,0,1,0)
        DifferenceFamily expected(26, kPg33AltClassFamily);
        return family.same_family(expected) &&
               family.same_family(DifferenceFamily(26, kPg33Family).translated(10));
    });

    r.check("geometry.pg33-lfsr-family", [&](std::string& d) {
        // the m-sequence construction from the same polynomial gives exactly
        // the worked family; its translation stabilizer has the predicted
        // q - 1 elements
        auto lg = lg_construct(f3, 3, 2, f43);
        DifferenceFamily q(26, kPg33Family);
        if (!lg.family.same_family(q)) return false;
        std::vector<int> stab;
        for (int t = 0; t < 26; ++t)
            if (q.translated(t).same_family(q)) stab.push_back(t);
        d = "translation stabilizer {" + join_ints(stab) + "}";
        return stab == std::vector<int>{0, 13};
    });

    r.check("geometry.pg33-point-table", [&](std::string&) {
        // orbit of the impulse base lists the state windows
        Projectivity tau = projectivity_from_poly(f42);
        OrbitIndex idx(tau, impulse_base_point(f3, 3));
        auto s = impulse_response(lfsr_from_poly(f42), 26);
        for (int t = 0; t < 26; ++t) {
            ProjPoint p(f3, {s[t], s[(t + 1) % 26], s[(t + 2) % 26], 1});
            if (idx.index_of(p) != t) return false;
        }
        return true;
    });

    r.check("fhs.rotation-example", [&](std::string&) {
        HopSequence w(2, {0, 0, 0, 1, 0, 1, 1});
        if (rotate(w, Permutation::rotation(7)).symbols() != std::vector<int>{1, 0, 0, 0, 1, 0, 1})
            return false;
        if (max_auto(w) != 3) return false;
        HopSequence swapped(2, {1, 0, 0, 1, 0, 1, 0});
        if (max_auto(swapped) != 5) return false;
        auto closure = rotational_closure(w);
        return closure.size() == 7 && min_distance(closure) == 4;
    });

    r.check("fhs.normalizer-example", [&](std::string& d) {
        auto gamma = Permutation::from_cycles(7, "(2 5 3)(4 6 7)");
        if (!is_in_normalizer(gamma)) return false;
        auto e = rotation_conjugate_exponent(gamma);
        d = "gamma rho gamma^-1 = rho^" + std::to_string(e.value_or(-1));
        if (e != 2) return false;
        HopSequence w(2, {0, 0, 0, 1, 0, 1, 1});
        if (rotate(w, gamma) != w) return false;
        auto gamma2 = Permutation::from_cycles(7, "(2 4 3 7 5 6)");
        return is_in_normalizer(gamma2) &&
               rotate(w, gamma2).symbols() == std::vector<int>{0, 1, 1, 0, 1, 0, 0};
    });

    r.check("fhs.induced-map-z5", [&](std::string& d) {
        auto gamma = Permutation::from_cycles(5, "(1 5 3 4)");
        auto phi = phi_gamma(gamma);
        d = "a = " + std::to_string(phi.a) + ", b = " + std::to_string(phi.b);
        if (phi.a != 2 || phi.b != 4) return false;
        HopSequence w(4, {1, 1, 2, 3, 2});
        auto moved = rotate(w, gamma);
        if (moved.symbols() != std::vector<int>{3, 1, 2, 2, 1}) return false;
        auto before = fhs_to_ddf(w);
        auto after = fhs_to_ddf(moved);
        return before.family.mapped(phi.a, phi.b) == after.family &&
               before.symbol_map == after.symbol_map;
    });

    r.check("fhs.word-to-family", [&](std::string&) {
        auto corr = fhs_to_ddf(HopSequence(2, {0, 0, 1, 0, 1, 1, 1}));
        DifferenceFamily expected(7, {{0, 1, 3}, {2, 4, 5, 6}});
        if (corr.family != expected) return false;
        auto z5 = fhs_to_ddf(HopSequence(4, {1, 1, 2, 3, 2}));
        return z5.family == DifferenceFamily(5, {{0, 1}, {2, 4}, {3}}) &&
               z5.symbol_map == std::vector<int>{1, 2, 3};
    });

    r.check("fhs.equivalence-witnesses", [&](std::string&) {
        auto w1 = fhs_equivalent(Fhs::single(HopSequence(2, {0, 0, 0, 1, 0, 1, 1})),
                                 Fhs::single(HopSequence(2, {0, 1, 1, 0, 1, 0, 0})));
        auto w2 = fhs_equivalent(Fhs::single(HopSequence(4, {1, 1, 2, 3, 2})),
                                 Fhs::single(HopSequence(4, {3, 1, 2, 2, 1})));
        return w1.has_value() && w2.has_value();
    });

    r.check("ddf.translation-example", [&](std::string&) {
        DifferenceFamily f1(5, {{1}, {0, 2}, {3, 4}});
        DifferenceFamily f2(5, {{0}, {1, 4}, {2, 3}});
        auto w = ddf_equivalent(f1, f2);
        return w && w->a == 1 && w->b == 4 &&
               canonical_form(f1).classes() == canonical_form(f2).classes();
    });

    r.check("correspondence.full-grid", [&](std::string& d) {
        int cases = 0;
        for (int p : {2, 3, 4, 5}) {
            Field field = (p == 4) ? Field(2, 2) : Field(p);
            for (int n = 2; ipow(field.size(), n) - 1 <= 80; ++n)
                for (const auto& f : enumerate_primitive(field, n))
                    for (int k = 1; k < n; ++k) {
                        if (!correspondence_check(field, n, k, f)) {
                            d = "failed at q=" + std::to_string(field.size()) +
                                " n=" + std::to_string(n) + " k=" + std::to_string(k);
                            return false;
                        }
                        ++cases;
                    }
        }
        d = std::to_string(cases) + " (q, n, k, f) cases";
        return cases > 0;
    });

    return r.results;
}

bool all_ok(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.ok; });
}

} // namespace ddfkit
