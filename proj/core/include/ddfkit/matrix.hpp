#pragma once

#include <span>
#include <vector>

#include "ddfkit/field.hpp"
#include "ddfkit/poly.hpp"

namespace ddfkit {

/// Dense matrix over a Field, row-major element indices.
class Matrix {
public:
    Matrix(Field field, int rows, int cols); ///< zero matrix
    static Matrix identity(const Field& field, int n);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int v);

    Matrix mul(const Matrix& other) const; ///< DimensionMismatch
    Matrix pow(long long e) const;         ///< square only; e >= 0
    bool is_identity() const;
    /// Nonzero scalar multiple of the identity (projective identity).
    bool is_scalar_identity() const;
    bool is_invertible() const;

    /// Row vector * matrix.
    std::vector<int> apply_row(std::span<const int> v) const;

    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

private:
    Field field_;
    int rows_, cols_;
    std::vector<int> e_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_pow(const Matrix& a, long long e);

/// State-update matrix of the recurrence with characteristic polynomial f
/// (monic, degree n): ones on the subdiagonal, last column (c_0, ..., c_{n-1})
/// where c_i is the negated coefficient of x^i in f. Row-vector states step by
/// right multiplication.
Matrix companion_matrix(const Poly& f);

/// Least e >= 1 with A^e the identity (or, projectively, a nonzero scalar
/// multiple of it). SingularMatrix when A is not invertible.
long long matrix_order(const Matrix& a, bool projective = false);

} // namespace ddfkit
