#include "ddfkit/field.hpp"

#include <algorithm>

#include "ddfkit/numbers.hpp"

namespace ddfkit {

namespace {

// GF(p)[x] helpers on constant-first coefficient vectors.
std::vector<int> gfp_poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    auto trim = [](std::vector<int>& v) {
        while (v.size() > 1 && v.back() == 0) v.pop_back();
    };
    trim(a);
    int inv_lead = 1;
    for (int x = 1; x < p; ++x)
        if (x * b.back() % p == 1) { inv_lead = x; break; }
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        int c = static_cast<int>(static_cast<long long>(a.back()) * inv_lead % p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        trim(a);
        if (a.size() == 1 && a[0] == 0) break;
    }
    return a;
}

bool gfp_irreducible(const std::vector<int>& f, int p) {
    // monic, degree m >= 1; brute trial division by all monic polys of
    // degree up to m/2
    int m = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= m / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long t = 0; t < count; ++t) {
            std::vector<int> g(d + 1, 0);
            long long v = t;
            for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(v % p); v /= p; }
            g[d] = 1;
            auto rem = gfp_poly_mod(f, g, p);
            if (rem.size() == 1 && rem[0] == 0) return false;
        }
    }
    return true;
}

constexpr int kTableLimit = 256; // full mul table only for small fields

} // namespace

struct Field::Data {
    int p = 0;
    int m = 0;
    int q = 0;
    std::vector<int> modulus;      // constant-first, size m+1; empty for m == 1
    std::vector<int> mul_table;    // q*q, only when q <= kTableLimit
    std::vector<int> inv_table;    // q, only when q <= kTableLimit

    std::vector<int> digits(int a) const {
        std::vector<int> d(m);
        for (int i = 0; i < m; ++i) { d[i] = a % p; a /= p; }
        return d;
    }

    int undigits(const std::vector<int>& d) const {
        int v = 0;
        for (int i = m - 1; i >= 0; --i) v = v * p + d[i];
        return v;
    }

    int raw_mul(int a, int b) const {
        if (m == 1) return static_cast<int>(static_cast<long long>(a) * b % p);
        auto da = digits(a), db = digits(b);
        std::vector<int> prod(2 * m - 1, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        auto rem = gfp_poly_mod(std::move(prod), modulus, p);
        rem.resize(m, 0);
        return undigits(rem);
    }
};

Field::Field(int p, int m) : Field(p, m, {}) {}

Field::Field(int p, int m, const std::vector<int>& modulus) {
    if (!is_prime(p))
        fail(ErrorKind::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) fail(ErrorKind::InvalidArgument, "extension degree must be >= 1");
    long long q = ipow(p, m);
    if (q > (1 << 20)) fail(ErrorKind::InvalidArgument, "field too large for desk-scale use");

    auto d = std::make_shared<Data>();
    d->p = p;
    d->m = m;
    d->q = static_cast<int>(q);

    if (m > 1) {
        if (!modulus.empty()) {
            if (static_cast<int>(modulus.size()) != m + 1 || modulus.back() % p != 1)
                fail(ErrorKind::InvalidArgument, "modulus must be monic of degree m");
            std::vector<int> reduced(modulus.size());
            for (size_t i = 0; i < modulus.size(); ++i)
                reduced[i] = ((modulus[i] % p) + p) % p;
            if (!gfp_irreducible(reduced, p))
                fail(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
            d->modulus = std::move(reduced);
        } else {
            // lexicographically smallest monic irreducible, constant-first
            // order: c_0 is the most significant digit of the counter
            std::vector<int> cand(m + 1, 0);
            cand[m] = 1;
            long long total = ipow(p, m);
            bool found = false;
            for (long long t = 0; t < total && !found; ++t) {
                long long v = t;
                for (int i = m - 1; i >= 0; --i) { cand[i] = static_cast<int>(v % p); v /= p; }
                if (gfp_irreducible(cand, p)) found = true;
            }
            if (!found) fail(ErrorKind::InvalidArgument, "no irreducible modulus found");
            d->modulus = cand;
        }
    } else if (!modulus.empty()) {
        fail(ErrorKind::InvalidArgument, "prime fields take no modulus");
    }

    if (d->q <= kTableLimit) {
        d->mul_table.resize(static_cast<size_t>(d->q) * d->q);
        for (int a = 0; a < d->q; ++a)
            for (int b = a; b < d->q; ++b) {
                int v = d->raw_mul(a, b);
                d->mul_table[static_cast<size_t>(a) * d->q + b] = v;
                d->mul_table[static_cast<size_t>(b) * d->q + a] = v;
            }
        d->inv_table.assign(d->q, 0);
        for (int a = 1; a < d->q; ++a)
            for (int b = 1; b < d->q; ++b)
                if (d->mul_table[static_cast<size_t>(a) * d->q + b] == 1) { d->inv_table[a] = b; break; }
    }

    d_ = std::move(d);
}

int Field::characteristic() const { return d_->p; }
int Field::degree() const { return d_->m; }
int Field::size() const { return d_->q; }
const std::vector<int>& Field::modulus() const { return d_->modulus; }

int Field::add(int a, int b) const {
    if (d_->m == 1) return (a + b) % d_->p;
    auto da = d_->digits(a), db = d_->digits(b);
    for (int i = 0; i < d_->m; ++i) da[i] = (da[i] + db[i]) % d_->p;
    return d_->undigits(da);
}

int Field::neg(int a) const {
    if (d_->m == 1) return (d_->p - a) % d_->p;
    auto da = d_->digits(a);
    for (int& x : da) x = (d_->p - x) % d_->p;
    return d_->undigits(da);
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
    if (!d_->mul_table.empty()) return d_->mul_table[static_cast<size_t>(a) * d_->q + b];
    return d_->raw_mul(a, b);
}

int Field::inv(int a) const {
    if (a == 0) fail(ErrorKind::InvalidArgument, "zero has no inverse");
    if (!d_->inv_table.empty()) return d_->inv_table[a];
    return pow(a, d_->q - 2);
}

int Field::pow(int a, long long e) const {
    if (e < 0) {
        if (a == 0) fail(ErrorKind::InvalidArgument, "zero has no inverse");
        return pow(inv(a), -e);
    }
    int result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::vector<int> Field::coeffs(int a) const {
    if (a < 0 || a >= d_->q) fail(ErrorKind::ElementOutOfRange, "element index out of range");
    return d_->digits(a);
}

int Field::from_coeffs(std::span<const int> digits) const {
    if (static_cast<int>(digits.size()) != d_->m)
        fail(ErrorKind::InvalidArgument, "coefficient vector must have length m");
    std::vector<int> d(digits.begin(), digits.end());
    for (int& x : d) x = ((x % d_->p) + d_->p) % d_->p;
    return d_->undigits(d);
}

bool Field::operator==(const Field& other) const {
    return d_->p == other.d_->p && d_->m == other.d_->m && d_->modulus == other.d_->modulus;
}

} // namespace ddfkit
