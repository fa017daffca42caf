#include "ddfkit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ddfkit/numbers.hpp"

namespace ddfkit {

namespace {

std::vector<int> trim(std::vector<int> c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty()) c.push_back(0);
    return c;
}

std::vector<int> poly_rem(const Field& F, std::vector<int> a, const std::vector<int>& b) {
    a = trim(std::move(a));
    int inv_lead = F.inv(b.back());
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        int c = F.mul(a.back(), inv_lead);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
        a = trim(std::move(a));
    }
    return a;
}

std::vector<int> poly_mulmod(const Field& F, const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
    return poly_rem(F, std::move(prod), mod);
}

std::vector<int> poly_xpow_mod(const Field& F, long long e, const std::vector<int>& mod) {
    std::vector<int> result{1};
    std::vector<int> base{0, 1};
    base = poly_rem(F, base, mod);
    while (e > 0) {
        if (e & 1) result = poly_mulmod(F, result, base, mod);
        base = poly_mulmod(F, base, base, mod);
        e >>= 1;
    }
    return result;
}

void require_order_preconditions(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1)
        fail(ErrorKind::InvalidArgument, "polynomial must be monic of degree >= 1");
    if (f.coeff(0) == 0)
        fail(ErrorKind::ZeroConstantTerm, "polynomial has zero constant term");
}

} // namespace

Poly::Poly(Field field, std::vector<int> coeffs) : field_(std::move(field)), coeffs_(trim(std::move(coeffs))) {
    for (int c : coeffs_)
        if (c < 0 || c >= field_.size())
            fail(ErrorKind::ElementOutOfRange, "coefficient is not an element index");
}

int Poly::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
}

int Poly::eval(int x) const {
    int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = field_.add(field_.mul(acc, x), *it);
    return acc;
}

bool Poly::operator==(const Poly& other) const {
    return field_ == other.field_ && coeffs_ == other.coeffs_;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        int c = coeffs_[i];
        if (c == 0) continue;
        if (!first) out << "+";
        if (i == 0 || c != 1) out << c;
        if (i >= 1) out << "x";
        if (i >= 2) out << "^" << i;
        first = false;
    }
    return out.str();
}

Poly Poly::from_string(const Field& field, const std::string& text) {
    // terms: [+-] [coeff] [x [^ exp]]
    std::vector<int> coeffs;
    auto put = [&](long long c, int e) {
        if (e >= static_cast<int>(coeffs.size())) coeffs.resize(e + 1, 0);
        long long q = field.size();
        int idx = static_cast<int>(((c % q) + q) % q);
        coeffs[e] = field.add(coeffs[e], idx);
    };
    size_t i = 0;
    const std::string& s = text;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i == s.size()) fail(ErrorKind::ParseError, "empty polynomial");
    bool any = false;
    while (i < s.size()) {
        skip_ws();
        long long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            fail(ErrorKind::ParseError, "expected '+' or '-' in polynomial at \"" + s.substr(i) + "\"");
        }
        long long coeff = 1;
        bool saw_digits = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff = coeff * 10 + (s[i] - '0');
                ++i;
            }
            saw_digits = true;
        }
        skip_ws();
        int exp = 0;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            exp = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    fail(ErrorKind::ParseError, "missing exponent");
                exp = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    exp = exp * 10 + (s[i] - '0');
                    ++i;
                }
            }
        } else if (!saw_digits) {
            fail(ErrorKind::ParseError, "expected term in polynomial at \"" + s.substr(i) + "\"");
        }
        put(sign * coeff, exp);
        any = true;
        skip_ws();
    }
    return Poly(field, std::move(coeffs));
}

long long poly_order(const Poly& f) {
    require_order_preconditions(f);
    const Field& F = f.field();
    int n = f.degree();
    long long qn1 = ipow(F.size(), n) - 1;

    if (is_irreducible(f)) {
        // order divides q^n - 1: scan divisors ascending, x^e by repeated squaring
        for (long long e : divisors(qn1))
            if (poly_xpow_mod(F, e, f.coeffs()) == std::vector<int>{1}) return e;
        fail(ErrorKind::InvalidArgument, "no order found for irreducible polynomial");
    }
    // reducible: the order need not divide q^n - 1; iterate directly
    std::vector<int> acc = poly_rem(F, {0, 1}, f.coeffs());
    long long e = 1;
    long long cap = qn1 + 1;
    while (acc != std::vector<int>{1}) {
        acc = poly_mulmod(F, acc, {0, 1}, f.coeffs());
        if (++e > cap) fail(ErrorKind::InvalidArgument, "order iteration exceeded bound");
    }
    return e;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1 || f.is_zero()) return false;
    const Field& F = f.field();
    int n = f.degree();
    // trial division by all monic polynomials of degree <= n/2
    for (int d = 1; d <= n / 2; ++d) {
        long long count = ipow(F.size(), d);
        for (long long t = 0; t < count; ++t) {
            std::vector<int> g(d + 1, 0);
            long long v = t;
            for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(v % F.size()); v /= F.size(); }
            g[d] = 1;
            if (poly_rem(F, f.coeffs(), g) == std::vector<int>{0}) return false;
        }
    }
    return true;
}

bool is_primitive(const Poly& f) {
    require_order_preconditions(f);
    return poly_order(f) == ipow(f.field().size(), f.degree()) - 1;
}

std::vector<Poly> enumerate_primitive(const Field& field, int n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "degree must be >= 1");
    std::vector<Poly> out;
    long long count = ipow(field.size(), n);
    for (long long t = 0; t < count; ++t) {
        std::vector<int> c(n + 1, 0);
        long long v = t;
        // constant-first lexicographic: c_0 most significant digit
        for (int i = n - 1; i >= 0; --i) { c[i] = static_cast<int>(v % field.size()); v /= field.size(); }
        c[n] = 1;
        if (c[0] == 0) continue;
        Poly f(field, c);
        if (is_primitive(f)) out.push_back(std::move(f));
    }
    return out;
}

} // namespace ddfkit
