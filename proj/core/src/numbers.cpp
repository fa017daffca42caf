#include "ddfkit/numbers.hpp"

#include <numeric>

#include "ddfkit/errors.hpp"

namespace ddfkit {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long long euler_phi(long long n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "euler_phi requires n >= 1");
    long long result = n;
    for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out{1};
    for (auto [p, e] : factorize(n)) {
        size_t base = out.size();
        long long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> units_mod(int n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "units_mod requires n >= 1");
    if (n == 1) return {0};
    std::vector<int> out;
    for (int a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) out.push_back(a);
    return out;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

int inverse_mod(int a, int n) {
    a = ((a % n) + n) % n;
    if (n == 1) return 0;
    if (std::gcd(a, n) != 1) fail(ErrorKind::NotCoprime, "no inverse mod " + std::to_string(n));
    for (int b = 1; b < n; ++b)
        if (static_cast<long long>(a) * b % n == 1) return b;
    fail(ErrorKind::NotCoprime, "no inverse found");
}

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1LL << 40) / (base > 0 ? base : 1))
            fail(ErrorKind::InvalidArgument, "parameter out of desk-scale range");
        r *= base;
    }
    return r;
}

} // namespace ddfkit
