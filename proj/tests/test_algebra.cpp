#include <doctest.h>

#include <algorithm>

#include "ddfkit/field.hpp"
#include "ddfkit/matrix.hpp"
#include "ddfkit/numbers.hpp"
#include "ddfkit/poly.hpp"

using namespace ddfkit;

namespace {

bool throws_kind(ErrorKind kind, const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}

} // namespace

TEST_CASE("field construction") {
    Field f3(3);
    CHECK(f3.characteristic() == 3);
    CHECK(f3.degree() == 1);
    CHECK(f3.size() == 3);
    CHECK(f3.modulus().empty());

    Field f4(2, 2, {1, 1, 1});
    CHECK(f4.size() == 4);
    // x^2 + x + 1 has no roots in GF(2)
    Poly mod(Field(2), {1, 1, 1});
    CHECK(mod.eval(0) != 0);
    CHECK(mod.eval(1) != 0);

    CHECK(throws_kind(ErrorKind::NonPrimeCharacteristic, [] { Field f(4); }));
    CHECK(throws_kind(ErrorKind::ReducibleModulus, [] { Field f(2, 2, {1, 0, 1}); }));
}

TEST_CASE("default modulus is the lexicographically smallest irreducible") {
    CHECK(Field(2, 2).modulus() == std::vector<int>{1, 1, 1});
    CHECK(Field(2, 3).modulus() == std::vector<int>{1, 0, 1, 1});
    CHECK(Field(3, 2).modulus() == std::vector<int>{1, 0, 1});
    CHECK(Field(2, 2) == Field(2, 2, {1, 1, 1}));
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
    std::vector<Field> fields;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61})
        fields.emplace_back(p);
    for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}})
        fields.emplace_back(p, m);

    for (const Field& f : fields) {
        const int q = f.size();
        CHECK(f.add(0, 0) == 0);
        CHECK(f.mul(1, 1) == 1);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.from_coeffs(f.coeffs(a)) == a);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
            }
        }
        // associativity and distributivity, full triple scan
        bool ok = true;
        for (int a = 0; a < q && ok; ++a)
            for (int b = 0; b < q && ok; ++b)
                for (int c = 0; c < q && ok; ++c) {
                    if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) ok = false;
                    if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) ok = false;
                    if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) ok = false;
                }
        CHECK(ok);
    }
}

TEST_CASE("element indexing is the polynomial-basis radix") {
    Field f9(3, 2);
    CHECK(f9.coeffs(0) == std::vector<int>{0, 0});
    CHECK(f9.coeffs(1) == std::vector<int>{1, 0});
    CHECK(f9.coeffs(5) == std::vector<int>{2, 1});
    std::vector<int> digits{2, 1};
    CHECK(f9.from_coeffs(digits) == 5);
}

TEST_CASE("large prime field avoids the lookup tables") {
    Field f(257);
    CHECK(f.mul(16, 16) == 256);
    CHECK(f.mul(f.inv(123), 123) == 1);
    CHECK(f.pow(3, 256) == 1);
}

TEST_CASE("poly_order") {
    Field f3(3), f2(2);
    CHECK(poly_order(Poly(f3, {1, 0, 2, 1})) == 26); // x^3 - x^2 - 2
    CHECK(poly_order(Poly(f3, {2, 1})) == 1);        // x - 1
    CHECK(poly_order(Poly(f2, {1, 1, 1})) == 3);     // x^2 + x + 1
    CHECK(poly_order(Poly(f2, {1, 0, 0, 1})) == 3);  // x^3 + 1, reducible
    CHECK(throws_kind(ErrorKind::ZeroConstantTerm, [&] { poly_order(Poly(f2, {0, 1, 1})); }));
}

TEST_CASE("is_primitive") {
    Field f3(3);
    CHECK(is_primitive(Poly(f3, {1, 0, 2, 1})));  // x^3 - x^2 - 2
    CHECK(is_primitive(Poly(f3, {1, 1, 2, 1})));  // x^3 - x^2 - 2x - 2
    CHECK_FALSE(is_primitive(Poly(f3, {2, 0, 1}))); // x^2 - 1, reducible
}

TEST_CASE("enumerate_primitive") {
    Field f3(3), f2(2);
    auto cubics = enumerate_primitive(f3, 3);
    REQUIRE(cubics.size() == 4);
    CHECK(cubics[0].coeffs() == std::vector<int>{1, 0, 2, 1});
    CHECK(cubics[1].coeffs() == std::vector<int>{1, 1, 2, 1});
    CHECK(cubics[2].coeffs() == std::vector<int>{1, 2, 0, 1});
    CHECK(cubics[3].coeffs() == std::vector<int>{1, 2, 1, 1});

    auto lin = enumerate_primitive(f2, 1);
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].coeffs() == std::vector<int>{1, 1}); // x + 1
    CHECK(enumerate_primitive(f2, 3).size() == 2);
}

TEST_CASE("primitive counts match phi(q^n - 1) / n") {
    auto grid = std::vector<std::pair<Field, int>>{};
    for (int n = 1; n <= 5; ++n) grid.emplace_back(Field(2), n);
    for (int n = 1; n <= 3; ++n) grid.emplace_back(Field(3), n);
    for (int n = 1; n <= 2; ++n) grid.emplace_back(Field(2, 2), n);
    for (int n = 1; n <= 2; ++n) grid.emplace_back(Field(5), n);
    for (const auto& [field, n] : grid) {
        long long v = ipow(field.size(), n) - 1;
        CHECK(static_cast<long long>(enumerate_primitive(field, n).size()) == euler_phi(v) / n);
    }
}

TEST_CASE("order of irreducible polynomials divides q^n - 1") {
    for (const Field& f : {Field(2), Field(3), Field(2, 2), Field(5)}) {
        for (int n = 1; n <= 4; ++n) {
            if (ipow(f.size(), n) > 700) continue;
            long long count = ipow(f.size(), n);
            for (long long t = 0; t < count; ++t) {
                std::vector<int> c(n + 1, 0);
                long long v = t;
                for (int i = 0; i < n; ++i) { c[i] = static_cast<int>(v % f.size()); v /= f.size(); }
                c[n] = 1;
                if (c[0] == 0) continue;
                Poly poly(f, c);
                if (!is_irreducible(poly)) continue;
                CHECK((ipow(f.size(), n) - 1) % poly_order(poly) == 0);
            }
        }
    }
}

TEST_CASE("companion matrix layout") {
    Field f3(3);
    Matrix c42 = companion_matrix(Poly(f3, {1, 0, 2, 1}));
    const int e42[3][3] = {{0, 0, 2}, {1, 0, 0}, {0, 1, 1}};
    Matrix c43 = companion_matrix(Poly(f3, {1, 1, 2, 1}));
    const int e43[3][3] = {{0, 0, 2}, {1, 0, 2}, {0, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(c42.at(i, j) == e42[i][j]);
            CHECK(c43.at(i, j) == e43[i][j]);
        }

    Matrix one = companion_matrix(Poly(f3, {2, 1})); // x - 1
    CHECK(one.rows() == 1);
    CHECK(one.at(0, 0) == 1);
}

TEST_CASE("matrix products and powers") {
    Field f3(3);
    Matrix c = companion_matrix(Poly(f3, {1, 0, 2, 1}));
    CHECK(c.pow(0).is_identity());
    CHECK(Matrix::identity(f3, 3).mul(c) == c);
    CHECK(matrix_order(c) == 26);

    Matrix wide(f3, 2, 3);
    CHECK_THROWS_AS((void)wide.mul(wide), Error);
    CHECK(throws_kind(ErrorKind::DimensionMismatch, [&] { (void)wide.mul(wide); }));

    Matrix zero(f3, 2, 2);
    CHECK(throws_kind(ErrorKind::SingularMatrix, [&] { matrix_order(zero); }));
}

TEST_CASE("matrix order equals polynomial order for companion matrices") {
    for (const Field& f : {Field(2), Field(3), Field(2, 2)}) {
        for (int n = 1; n <= 3; ++n) {
            long long count = ipow(f.size(), n);
            for (long long t = 0; t < count; ++t) {
                std::vector<int> c(n + 1, 0);
                long long v = t;
                for (int i = 0; i < n; ++i) { c[i] = static_cast<int>(v % f.size()); v /= f.size(); }
                c[n] = 1;
                if (c[0] == 0) continue;
                Poly poly(f, c);
                CHECK(matrix_order(companion_matrix(poly)) == poly_order(poly));
            }
        }
    }
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(26) == 12);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(7) == 6);
}

TEST_CASE("polynomial parsing and printing") {
    Field f3(3);
    CHECK(Poly::from_string(f3, "x^3-x^2-2").coeffs() == std::vector<int>{1, 0, 2, 1});
    CHECK(Poly::from_string(f3, "x^3-x^2-2x-2").coeffs() == std::vector<int>{1, 1, 2, 1});
    CHECK(Poly::from_string(f3, "x - 1").coeffs() == std::vector<int>{2, 1});
    CHECK(Poly::from_string(f3, "0").is_zero());
    CHECK(throws_kind(ErrorKind::ParseError, [&] { Poly::from_string(f3, "x^"); }));

    Poly f(f3, {1, 1, 2, 1});
    CHECK(Poly::from_string(f3, f.to_string()) == f);
}
