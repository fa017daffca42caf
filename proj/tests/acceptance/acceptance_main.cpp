// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are asserted against independent in-file oracles
// (direct pair counting, brute-force permutation filters, pairwise distance
// scans) rather than the library paths they validate, wherever the two can
// differ.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ddfkit/ddf.hpp"
#include "ddfkit/fhs.hpp"
#include "ddfkit/geometry.hpp"
#include "ddfkit/lfsr.hpp"
#include "ddfkit/numbers.hpp"
#include "ddfkit/poly.hpp"

using namespace ddfkit;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body,
               long long budget_ms = 0) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (ok && budget_ms > 0 && ms >= budget_ms) {
        ok = false;
        detail = "exceeded the " + std::to_string(budget_ms) + " ms budget";
    }
    std::printf("%s  criterion-%d  %s  [%lld ms]%s%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), static_cast<long long>(ms), detail.empty() ? "" : "  -- ",
                detail.c_str());
    if (!ok) ++failures;
}

bool same_set_of_classes(const DifferenceFamily& fam, const std::vector<std::vector<int>>& expected) {
    std::set<std::vector<int>> a(fam.classes().begin(), fam.classes().end());
    std::set<std::vector<int>> b(expected.begin(), expected.end());
    return fam.class_count() == static_cast<int>(expected.size()) && a == b;
}

// independent difference counter: ordered pairs (x, y), x - y = d
int count_internal(const std::vector<std::vector<int>>& classes, int v, int d) {
    int total = 0;
    for (const auto& q : classes)
        for (int x : q)
            for (int y : q)
                if (x != y && (x - y + v) % v == d) ++total;
    return total;
}

int count_external(const std::vector<std::vector<int>>& classes, int v, int d) {
    int total = 0;
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = 0; j < classes.size(); ++j) {
            if (i == j) continue;
            for (int x : classes[i])
                for (int y : classes[j])
                    if ((x - y + v) % v == d) ++total;
        }
    return total;
}

HopSequence random_word(std::mt19937& rng, int n, int q) {
    std::vector<int> sym(n);
    std::uniform_int_distribution<int> pick(0, q - 1);
    for (int& s : sym) s = pick(rng);
    return HopSequence(q, std::move(sym));
}

const std::vector<std::vector<int>> kPg33Family = {
    {0, 13}, {1, 4, 19}, {2, 22, 23}, {3, 5, 12}, {6, 14, 17},
    {7, 11, 21}, {8, 20, 24}, {9, 10, 15}, {16, 18, 25}};

Projectivity worked_projectivity(const Field& f3) {
    Matrix m(f3, 4, 4);
    const int rows[4][4] = {{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.set(i, j, rows[i][j]);
    return Projectivity(std::move(m));
}

std::vector<std::pair<Field, int>> correspondence_grid() {
    std::vector<std::pair<Field, int>> grid;
    for (int p : {2, 3, 4, 5}) {
        Field field = (p == 4) ? Field(2, 2) : Field(p);
        for (int n = 2; ipow(field.size(), n) - 1 <= 80; ++n) grid.emplace_back(field, n);
    }
    return grid;
}

} // namespace

int main() {
    criterion(1, "golden-vector suite (impulse response, sigma columns, both families)",
              [](std::string& detail) {
        Field f3(3);
        Poly f42(f3, {1, 0, 2, 1});
        LfsrSpec spec = lfsr_from_poly(f42);

        const std::vector<int> impulse = {0, 0, 1, 1, 1, 0, 2, 1, 1, 2, 1, 0, 1,
                                          0, 0, 2, 2, 2, 0, 1, 2, 2, 1, 2, 0, 2};
        if (impulse_response(spec, 26) != impulse) return false;

        const std::vector<int> sigma2 = {0, 3, 4, 4, 1, 6, 5, 4, 7, 5, 1, 3, 1,
                                         0, 6, 8, 8, 2, 3, 7, 8, 5, 7, 2, 6, 2};
        const std::vector<int> sigma3 = {9,  12, 13, 4,  19, 15, 14, 22, 16, 5,  10, 3,  1,
                                         18, 24, 26, 8,  11, 21, 25, 17, 23, 7,  20, 6,  2};
        if (lg_transform(spec, 1).symbols() != impulse) return false;
        if (lg_transform(spec, 2).symbols() != sigma2) return false;
        for (int t = 0; t < 26; ++t) {
            int w[3] = {impulse[t], impulse[(t + 1) % 26], impulse[(t + 2) % 26]};
            if (sigma_k(f3, w) != sigma3[t]) return false;
        }

        auto lg2 = lg_construct(f3, 3, 2, f42);
        if (!same_set_of_classes(lg2.family,
                                 {{0, 13}, {1, 11, 18}, {5, 14, 24}, {4, 10, 12}, {2, 3, 7},
                                  {8, 19, 22}, {17, 23, 25}, {6, 9, 21}, {15, 16, 20}}))
            return false;
        // per-symbol classes: the window fibers
        const std::vector<std::pair<int, std::vector<int>>> by_symbol = {
            {0, {0, 13}}, {3, {1, 11, 18}}, {6, {5, 14, 24}}, {1, {4, 10, 12}},
            {4, {2, 3, 7}}, {7, {8, 19, 22}}, {2, {17, 23, 25}}, {5, {6, 9, 21}},
            {8, {15, 16, 20}}};
        for (const auto& [symbol, cls] : by_symbol) {
            auto it = std::find(lg2.symbol_map.begin(), lg2.symbol_map.end(), symbol);
            if (it == lg2.symbol_map.end()) return false;
            if (lg2.family.classes()[it - lg2.symbol_map.begin()] != cls) return false;
        }

        auto lg1 = lg_construct(f3, 3, 1, f42);
        if (lg1.family.classes() !=
            std::vector<std::vector<int>>{{0, 1, 5, 11, 13, 14, 18, 24},
                                          {2, 3, 4, 7, 8, 10, 12, 19, 22},
                                          {6, 9, 15, 16, 17, 20, 21, 23, 25}})
            return false;
        detail = "impulse + 3 sigma columns + 2 families";
        return true;
    }, 1000);

    criterion(2, "geometry suite (worked family, tau^5 multiplier, parallel-class shift, LFSR family)",
              [](std::string& detail) {
        Field f3(3);
        Projectivity tau = worked_projectivity(f3);
        ProjPoint base(f3, {1, 0, 0, 1});
        auto frame = coordinate_frame(f3, {1, 2, 0, 3});

        auto family = fmm_construct(tau, 2, base, frame);
        if (family.classes() != kPg33Family) return false;

        // generator tau^5: multiplier 7 with the exact class pairing
        if (multiplier_of_generator(tau, 2, 5, base, frame) != 7) return false;
        const std::vector<std::vector<int>> tau5 = {
            {0, 13}, {6, 9, 21}, {15, 16, 20}, {1, 11, 18}, {8, 19, 22},
            {17, 23, 25}, {4, 10, 12}, {2, 3, 7}, {5, 14, 24}};
        const int pairing[9] = {0, 3, 4, 7, 8, 5, 6, 1, 2}; // Q'_i = 7 * Q_{pairing[i]}
        auto regenerated = fmm_construct(tau.pow(5), 2, base, frame);
        if (!same_set_of_classes(regenerated, tau5)) return false;
        for (int i = 0; i < 9; ++i) {
            std::vector<int> img;
            for (int x : kPg33Family[pairing[i]]) img.push_back(7 * x % 26);
            std::sort(img.begin(), img.end());
            if (img != tau5[i]) return false;
        }

        // alternate parallel class: the family is {Q_i + 10}
        auto alt = fmm_construct(tau, 2, base);
        if (!same_set_of_classes(alt, {{10, 23}, {1, 16, 24}, {0, 2, 9}, {3, 11, 14},
                                       {4, 8, 18}, {5, 17, 21}, {6, 7, 12}, {13, 15, 22},
                                       {19, 20, 25}}))
            return false;
        if (!alt.same_family(family.translated(10))) return false;

        // m-sequence construction from the same polynomial: reproduces the
        // worked family itself; its translation stabilizer is {0, 13}, the
        // predicted q - 1 elements (so no other shift relates the two)
        auto lg = lg_construct(f3, 3, 2, Poly(f3, {1, 1, 2, 1}));
        if (!lg.family.same_family(family)) return false;
        std::vector<int> stabilizer;
        for (int t = 0; t < 26; ++t)
            if (family.translated(t).same_family(family)) stabilizer.push_back(t);
        if (stabilizer != std::vector<int>{0, 13}) return false;
        detail = "LFSR family shift 0 (stabilizer {0,13})";
        return true;
    }, 1000);

    criterion(3, "construction correspondence over the full parameter grid",
              [](std::string& detail) {
        int cases = 0;
        // every primitive cubic over GF(3), both k
        Field f3(3);
        for (const auto& f : enumerate_primitive(f3, 3))
            for (int k = 1; k <= 2; ++k) {
                if (!correspondence_check(f3, 3, k, f)) return false;
                ++cases;
            }
        // all q^n - 1 <= 80, q in {2, 3, 4, 5}, all primitive f, all k
        for (const auto& [field, n] : correspondence_grid())
            for (const auto& f : enumerate_primitive(field, n))
                for (int k = 1; k < n; ++k) {
                    if (!correspondence_check(field, n, k, f)) {
                        detail = "failed at q=" + std::to_string(field.size()) +
                                 " n=" + std::to_string(n) + " k=" + std::to_string(k);
                        return false;
                    }
                    ++cases;
                }
        detail = std::to_string(cases) + " cases (GF(4) included)";
        return true;
    });

    criterion(4, "spectrum laws for every constructed family", [](std::string& detail) {
        int families = 0;
        for (const auto& [field, n] : correspondence_grid())
            for (const auto& f : enumerate_primitive(field, n))
                for (int k = 1; k < n; ++k) {
                    auto lg = lg_construct(field, n, k, f);
                    const int v = static_cast<int>(ipow(field.size(), n)) - 1;
                    const int lambda = static_cast<int>(ipow(field.size(), n - k)) - 1;
                    if (!lg.family.is_partition()) return false;
                    for (int d = 1; d < v; ++d) {
                        if (count_internal(lg.family.classes(), v, d) != lambda) return false;
                        if (count_external(lg.family.classes(), v, d) != v - lambda) return false;
                    }
                    if (k == n - 1) {
                        // at t = 1 the external constant is q (q^{n-1} - 1)
                        int q = field.size();
                        if (v - lambda != q * (static_cast<int>(ipow(q, n - 1)) - 1)) return false;
                    }
                    ++families;
                }
        detail = std::to_string(families) + " families, exact";
        return true;
    });

    criterion(5, "worked example spectra, independently counted", [](std::string&) {
        // complement pair over Z_7
        std::vector<std::vector<int>> z7 = {{0, 1, 3}, {2, 4, 5, 6}};
        for (int d = 1; d < 7; ++d) {
            if (count_internal(z7, 7, d) != 3) return false;
            if (count_external(z7, 7, d) != 4) return false;
        }
        auto s7 = spectrum(DifferenceFamily(7, z7));
        for (int d = 1; d < 7; ++d)
            if (s7.internal[d] != 3 || s7.external[d] != 4) return false;

        // two-class family over Z_25
        std::vector<std::vector<int>> z25 = {{1, 2, 3, 4, 6, 15}, {5, 9, 10, 14, 17, 24}};
        auto expected_internal = [](int d) {
            if (d == 1 || d == 24) return 4;
            if (d == 7 || d == 9 || d == 10 || d == 15 || d == 16 || d == 18) return 2;
            if (d == 6 || d == 8 || d == 17 || d == 19) return 1;
            return 3;
        };
        auto s25 = spectrum(DifferenceFamily(25, z25));
        for (int d = 1; d < 25; ++d) {
            if (count_external(z25, 25, d) != 3 || s25.external[d] != 3) return false;
            if (count_internal(z25, 25, d) != expected_internal(d)) return false;
            if (s25.internal[d] != expected_internal(d)) return false;
        }
        return true;
    });

    criterion(6, "closure/correlation theorems on 500 random words and 100 schemes",
              [](std::string& detail) {
        std::mt19937 rng(20260810);
        int words = 0, schemes = 0;
        while (words < 500) {
            int n = std::uniform_int_distribution<int>(2, 12)(rng);
            int q = std::uniform_int_distribution<int>(2, 4)(rng);
            auto w = random_word(rng, n, q);
            auto closure = rotational_closure(w);
            if (static_cast<int>(closure.size()) < n && max_auto(w) != n) return false;
            if (closure.size() >= 2) {
                // independent pairwise distance scan
                int dmin = n + 1;
                for (size_t i = 0; i < closure.words().size(); ++i)
                    for (size_t j = i + 1; j < closure.words().size(); ++j) {
                        int dist = 0;
                        for (int t = 0; t < n; ++t)
                            if (closure.words()[i].at(t) != closure.words()[j].at(t)) ++dist;
                        dmin = std::min(dmin, dist);
                    }
                if (max_auto(w) != n - dmin) return false;
                if (min_distance(closure) != dmin) return false;
            }
            ++words;
        }
        while (schemes < 100) {
            int n = std::uniform_int_distribution<int>(2, 10)(rng);
            int q = std::uniform_int_distribution<int>(2, 4)(rng);
            int m = std::uniform_int_distribution<int>(1, 3)(rng);
            std::vector<HopSequence> ws;
            for (int i = 0; i < m; ++i) ws.push_back(random_word(rng, n, q));
            Fhs scheme(n, q, std::move(ws));
            auto closure = rotational_closure(scheme);
            if (closure.size() >= 2 && min_distance(closure) != n - max_correlation(scheme))
                return false;
            ++schemes;
        }

        // normalizer images preserve closure; sampled non-members break it
        for (int n = 4; n <= 8; ++n) {
            HopSequence w = [&] {
                while (true) {
                    auto cand = random_word(rng, n, 3);
                    if (max_auto(cand) < n) return cand;
                }
            }();
            auto closed = rotational_closure(w);
            for (const auto& gamma : normalizer_elements(n))
                if (!is_rotationally_closed(apply_to_scheme(closed, gamma))) return false;
            int sampled = 0;
            std::vector<int> im(n);
            for (int i = 0; i < n; ++i) im[i] = i;
            while (sampled < 20) {
                std::shuffle(im.begin(), im.end(), rng);
                Permutation gamma{std::vector<int>(im)};
                if (is_in_normalizer(gamma)) continue;
                if (is_rotationally_closed(apply_to_scheme(closed, gamma))) return false;
                ++sampled;
            }
        }
        detail = "500 words, 100 schemes, closure laws for n in 4..8";
        return true;
    });

    criterion(7, "normalizer parametrization equals the brute-force filter for n in 3..8",
              [](std::string& detail) {
        long long total = 0;
        for (int n = 3; n <= 8; ++n) {
            std::set<std::vector<int>> affine;
            for (const auto& p : normalizer_elements(n)) affine.insert(p.images());
            if (static_cast<long long>(affine.size()) != n * euler_phi(n)) return false;

            // independent filter: enumerate S_n, conjugate the n-cycle
            // directly and test membership in its cyclic group
            std::set<std::vector<int>> brute;
            std::vector<int> im(n);
            for (int i = 0; i < n; ++i) im[i] = i;
            std::vector<int> rho(n);
            for (int i = 0; i < n; ++i) rho[i] = (i + 1) % n;
            do {
                std::vector<int> inv(n);
                for (int i = 0; i < n; ++i) inv[im[i]] = i;
                std::vector<int> conj(n); // gamma rho gamma^{-1}
                for (int i = 0; i < n; ++i) conj[i] = im[rho[inv[i]]];
                std::vector<int> acc(n);
                for (int i = 0; i < n; ++i) acc[i] = i;
                bool member = false;
                for (int e = 0; e < n && !member; ++e) {
                    if (acc == conj) member = true;
                    for (int i = 0; i < n; ++i) acc[i] = rho[acc[i]];
                }
                if (member) brute.insert(im);
            } while (std::next_permutation(im.begin(), im.end()));
            if (affine != brute) return false;
            total += static_cast<long long>(affine.size());
        }
        detail = "sizes 3*phi..8*phi, 42 at n=7; total " + std::to_string(total);
        return true;
    });

    criterion(8, "induced-map round trip on 200 random (word, gamma) pairs",
              [](std::string& detail) {
        std::mt19937 rng(8);
        int rounds = 0;
        while (rounds < 200) {
            int n = std::uniform_int_distribution<int>(2, 10)(rng);
            int q = std::uniform_int_distribution<int>(2, 4)(rng);
            auto w = random_word(rng, n, q);
            auto norm = normalizer_elements(n);
            const auto& gamma =
                norm[std::uniform_int_distribution<size_t>(0, norm.size() - 1)(rng)];
            auto phi = phi_gamma(gamma);
            auto before = fhs_to_ddf(w);
            auto after = fhs_to_ddf(rotate(w, gamma));
            if (before.symbol_map != after.symbol_map) return false;
            if (!(before.family.mapped(phi.a, phi.b) == after.family)) return false;
            ++rounds;
        }
        // the worked Z_5 example, including b = 4
        auto gamma5 = Permutation::from_cycles(5, "(1 5 3 4)");
        auto phi5 = phi_gamma(gamma5);
        if (phi5.a != 2 || phi5.b != 4) return false;
        HopSequence w5(4, {1, 1, 2, 3, 2});
        if (rotate(w5, gamma5).symbols() != std::vector<int>{3, 1, 2, 2, 1}) return false;
        if (!(fhs_to_ddf(w5).family.mapped(2, 4) == fhs_to_ddf(rotate(w5, gamma5)).family))
            return false;
        detail = "200 pairs, exact class-by-class equality";
        return true;
    });

    criterion(9, "primitive-polynomial counts over the algebra grid", [](std::string&) {
        std::vector<std::pair<Field, int>> grid;
        for (int n = 1; n <= 5; ++n) grid.emplace_back(Field(2), n);
        for (int n = 1; n <= 3; ++n) grid.emplace_back(Field(3), n);
        for (int n = 1; n <= 2; ++n) grid.emplace_back(Field(2, 2), n);
        for (int n = 1; n <= 2; ++n) grid.emplace_back(Field(5), n);
        for (const auto& [field, n] : grid) {
            long long v = ipow(field.size(), n) - 1;
            if (static_cast<long long>(enumerate_primitive(field, n).size()) != euler_phi(v) / n)
                return false;
        }
        return true;
    });

    criterion(10, "orbit intersection verifier for (2,3), (3,3), (2,4)", [](std::string& detail) {
        for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}}) {
            Field field(p);
            auto report = verify_orbit_intersections(field, n, enumerate_primitive(field, n).front());
            if (!report.ok()) {
                detail = "violations at q=" + std::to_string(p) + " n=" + std::to_string(n) +
                         ": " + report.violations.front();
                return false;
            }
            if (report.type1_count() != p - 2) return false;
            long long expected = static_cast<long long>(p) * (ipow(p, n - 1) - 1);
            for (int d = 1; d < static_cast<int>(ipow(p, n)) - 1; ++d)
                if (report.external_counts[d] != expected) return false;
        }
        detail = "zero violations, q-2 type-(I), external q(q^{n-1}-1)";
        return true;
    });

    if (failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
