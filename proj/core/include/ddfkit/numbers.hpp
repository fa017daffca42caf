#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ddfkit {

bool is_prime(long long n);

/// Euler totient, computed by trial-division factorization.
long long euler_phi(long long n);

/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

/// All divisors of n, ascending.
std::vector<long long> divisors(long long n);

/// Units of Z_n, ascending. units_mod(1) = {0} by convention (the zero residue
/// is the identity of the trivial group).
std::vector<int> units_mod(int n);

long long gcd_ll(long long a, long long b);

/// Multiplicative inverse of a mod n; requires gcd(a, n) == 1.
int inverse_mod(int a, int n);

/// Checked q = p^m as long long (desk-scale parameters only).
long long ipow(long long base, int exp);

} // namespace ddfkit
