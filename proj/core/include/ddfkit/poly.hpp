#pragma once

#include <string>
#include <vector>

#include "ddfkit/field.hpp"

namespace ddfkit {

/// Polynomial over a Field. Coefficients are element indices, constant term
/// first; trailing zeros are trimmed so coeffs().size() == degree() + 1.
/// The zero polynomial is stored as {0} with degree 0.
class Poly {
public:
    Poly(Field field, std::vector<int> coeffs);

    /// Parses forms like "x^3-x^2-2", "2x+1", "x". Integer literals are
    /// reduced into the field (mod p for prime fields, mod q as element
    /// indices otherwise).
    static Poly from_string(const Field& field, const std::string& text);

    const Field& field() const { return field_; }
    const std::vector<int>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    int coeff(int i) const; ///< 0 beyond degree
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    bool is_monic() const { return coeffs_.back() == 1 && !is_zero(); }

    int eval(int x) const;

    std::string to_string() const;

    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

private:
    Field field_;
    std::vector<int> coeffs_;
};

/// Order of x in F[x]/(f): least e >= 1 with x^e = 1 (mod f).
/// Requires f monic, deg >= 1, f(0) != 0 (ZeroConstantTerm otherwise).
/// Irreducible f is resolved through the divisors of q^n - 1 by repeated
/// squaring; reducible f falls back to direct iteration (its order need not
/// divide q^n - 1).
long long poly_order(const Poly& f);

bool is_irreducible(const Poly& f);

/// f primitive iff poly_order(f) == q^deg(f) - 1.
bool is_primitive(const Poly& f);

/// All monic primitive polynomials of degree n over the field, in
/// lexicographic order of the constant-first coefficient list.
/// |result| = euler_phi(q^n - 1) / n.
std::vector<Poly> enumerate_primitive(const Field& field, int n);

} // namespace ddfkit
