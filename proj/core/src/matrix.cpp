#include "ddfkit/matrix.hpp"

#include <utility>

#include "ddfkit/numbers.hpp"

namespace ddfkit {

Matrix::Matrix(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 1 || cols < 1) fail(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
}

Matrix Matrix::identity(const Field& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Matrix::set(int r, int c, int v) {
    if (v < 0 || v >= field_.size()) fail(ErrorKind::ElementOutOfRange, "entry is not an element index");
    e_[static_cast<size_t>(r) * cols_ + c] = v;
}

Matrix Matrix::mul(const Matrix& other) const {
    if (cols_ != other.rows_ || field_ != other.field_)
        fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(field_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j)
                out.e_[static_cast<size_t>(i) * other.cols_ + j] =
                    field_.add(out.at(i, j), field_.mul(aik, other.at(k, j)));
        }
    return out;
}

Matrix Matrix::pow(long long e) const {
    if (rows_ != cols_) fail(ErrorKind::DimensionMismatch, "matrix power requires a square matrix");
    if (e < 0) fail(ErrorKind::InvalidArgument, "negative matrix power");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) result = result.mul(base);
        base = base.mul(base);
        e >>= 1;
    }
    return result;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Matrix::is_scalar_identity() const {
    if (rows_ != cols_) return false;
    int s = at(0, 0);
    if (s == 0) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? s : 0)) return false;
    return true;
}

bool Matrix::is_invertible() const {
    if (rows_ != cols_) return false;
    Matrix work = *this;
    int n = rows_;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (work.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) return false;
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                int t = work.at(col, j);
                work.e_[static_cast<size_t>(col) * n + j] = work.at(pivot, j);
                work.e_[static_cast<size_t>(pivot) * n + j] = t;
            }
        int inv = field_.inv(work.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            int factor = field_.mul(work.at(r, col), inv);
            if (factor == 0) continue;
            for (int j = col; j < n; ++j)
                work.e_[static_cast<size_t>(r) * n + j] =
                    field_.sub(work.at(r, j), field_.mul(factor, work.at(col, j)));
        }
    }
    return true;
}

std::vector<int> Matrix::apply_row(std::span<const int> v) const {
    if (static_cast<int>(v.size()) != rows_)
        fail(ErrorKind::DimensionMismatch, "row vector length mismatch");
    std::vector<int> out(cols_, 0);
    for (int i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < cols_; ++j)
            out[j] = field_.add(out[j], field_.mul(v[i], at(i, j)));
    }
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a.mul(b); }
Matrix mat_pow(const Matrix& a, long long e) { return a.pow(e); }

Matrix companion_matrix(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1)
        fail(ErrorKind::InvalidArgument, "companion matrix requires a monic polynomial of degree >= 1");
    const Field& F = f.field();
    int n = f.degree();
    Matrix c(F, n, n);
    for (int i = 1; i < n; ++i) c.set(i, i - 1, 1);
    for (int i = 0; i < n; ++i) c.set(i, n - 1, F.neg(f.coeff(i)));
    return c;
}

long long matrix_order(const Matrix& a, bool projective) {
    if (a.rows() != a.cols()) fail(ErrorKind::DimensionMismatch, "order requires a square matrix");
    if (!a.is_invertible()) fail(ErrorKind::SingularMatrix, "singular matrix has no order");
    // order divides |GL(n, q)|, a safe iteration cap at desk scale
    long long cap = 1;
    long long qn = ipow(a.field().size(), a.rows());
    long long qi = 1;
    for (int i = 0; i < a.rows(); ++i) {
        cap *= qn - qi;
        qi *= a.field().size();
        if (cap > (1LL << 60) / qn) break; // plenty; never reached at desk scale
    }
    Matrix acc = a;
    for (long long e = 1; e <= cap; ++e) {
        if (projective ? acc.is_scalar_identity() : acc.is_identity()) return e;
        acc = acc.mul(a);
    }
    fail(ErrorKind::InvalidArgument, "order exceeded group-order bound");
}

} // namespace ddfkit
