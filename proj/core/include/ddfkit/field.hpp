#pragma once

#include <memory>
#include <span>
#include <vector>

#include "ddfkit/errors.hpp"

namespace ddfkit {

/// GF(p^m) with a fixed canonical element enumeration.
///
/// Elements are handled as integer indices in [0, p^m). The index of an
/// element with polynomial-basis coordinates (c_0, ..., c_{m-1}) is
/// sum c_i * p^i, so 0 and 1 are the additive and multiplicative identities
/// and prime-field elements are ordinary residues. The modulus polynomial is
/// stored constant-term first; when omitted, the lexicographically smallest
/// monic irreducible of degree m over GF(p) is selected, so a (p, m) pair
/// always names the same field.
///
/// Values are immutable and cheap to copy (shared internal tables).
class Field {
public:
    explicit Field(int p, int m = 1);
    Field(int p, int m, const std::vector<int>& modulus);

    int characteristic() const;          ///< p
    int degree() const;                  ///< m
    int size() const;                    ///< q = p^m
    const std::vector<int>& modulus() const; ///< empty for m == 1

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;                ///< a != 0
    int pow(int a, long long e) const;   ///< e >= 0, or e < 0 with a != 0

    /// Polynomial-basis digits of an element, little-endian, length m.
    std::vector<int> coeffs(int a) const;
    /// Inverse of coeffs(); entries are reduced mod p.
    int from_coeffs(std::span<const int> digits) const;

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

} // namespace ddfkit
