#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nonassoc/scalar.hpp"

namespace nonassoc {

/// Dense row-major matrix over an exact field. All entries share the field.
class Matrix {
public:
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols),
          entries_(rows * cols, Scalar::zero(field)) {}

    static Matrix identity(FieldSpec field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<Scalar> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Scalar>& v);

    /// Appends the rows of another matrix (same field and column count).
    void append_rows(const Matrix& other);

    bool is_zero() const;

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
               entries_ == o.entries_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form via exact Gauss-Jordan elimination with
/// deterministic pivoting (first nonzero in column order).
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Canonical basis of {v : m v = 0}, returned as the rows of a matrix in
/// reduced echelon form (0 rows when the kernel is trivial). Reduced form
/// is unique per subspace, so subspace equality is matrix equality.
Matrix nullspace(const Matrix& m);

/// One particular solution of m x = b (free variables set to 0), or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

Matrix mat_mul(const Matrix& a, const Matrix& b);
std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v);

/// Reduces v against rows in reduced echelon form; returns the residual.
/// v lies in the row span iff the residual is zero.
std::vector<Scalar> reduce_against_rref(const Matrix& basis_rows, std::vector<Scalar> v);

} // namespace nonassoc
