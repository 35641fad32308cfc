#pragma once

#include <optional>
#include <vector>

#include "exacthh/field.hpp"

namespace exacthh {

/* Dense exact matrix over FieldSpec, row-major.  A matrix with r rows and c
 * columns is the linear map k^c -> k^r; vectors are column coordinate vectors.
 * Basis matrices (spans, kernels, ...) keep one vector per ROW. */
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldSpec field, int rows, int cols);

    static Matrix identity(FieldSpec field, int n);
    static Matrix zero(FieldSpec field, int rows, int cols) { return Matrix(field, rows, cols); }
    static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows);
    static Matrix row_vector(FieldSpec field, const std::vector<Scalar>& v);
    /* Kronecker product: (a ox b)(x ox y) = (a x) ox (b y) with row-major
     * (leftmost factor most significant) index flattening. */
    static Matrix kron(const Matrix& a, const Matrix& b);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Scalar> row(int r) const;
    std::vector<Scalar> col(int c) const;
    void set_row(int r, const std::vector<Scalar>& v);

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Scalar& s) const;
    Matrix negated() const;
    Matrix transpose() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    /* stacks rows of b under rows of *this (same cols) */
    Matrix vstack(const Matrix& b) const;

    bool is_zero() const;
    bool operator==(const Matrix& rhs) const;

private:
    int rows_ = 0, cols_ = 0;
    FieldSpec field_;
    std::vector<Scalar> a_;
};

/* Reduced row echelon form with deterministic pivoting (first nonzero column,
 * topmost remaining row).  The RREF of a matrix's row space is canonical: every
 * generating set of the same subspace yields byte-identical output. */
struct Echelon {
    Matrix rref;             // rank many nonzero rows, fully reduced, pivot entries 1
    std::vector<int> pivots; // pivot column of each rref row, strictly increasing
    int rank = 0;
};

Echelon row_reduce(const Matrix& m);

int rank(const Matrix& m);

/* rows span {x : m x = 0}; canonical basis read off the RREF free columns */
Matrix kernel_basis(const Matrix& m);

/* rows span the column space of m; the pivot columns of m itself, in order */
Matrix image_basis(const Matrix& m);

/* one solution of m x = b if any */
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

} // namespace exacthh
