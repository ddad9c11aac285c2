#include "nonassoc/linalg.hpp"

#include <utility>

namespace nonassoc {

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    return std::vector<Scalar>(entries_.begin() + r * cols_,
                               entries_.begin() + (r + 1) * cols_);
}

void Matrix::set_row(std::size_t r, const std::vector<Scalar>& v) {
    for (std::size_t c = 0; c < cols_; ++c) entries_[r * cols_ + c] = v[c];
}

void Matrix::append_rows(const Matrix& other) {
    if (other.field_ != field_ || other.cols_ != cols_)
        throw FieldMismatch("append_rows: incompatible matrices");
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    rows_ += other.rows_;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot_row = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!a.at(i, c).is_zero()) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row == rows) continue;
        if (pivot_row != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a.at(r, j), a.at(pivot_row, j));
        Scalar scale = a.at(r, c).inv();
        for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= scale;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Scalar factor = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j)
                a.at(i, j) -= factor * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

    Matrix kernel(m.field(), n - r.rank, n);
    std::size_t out = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        kernel.at(out, f) = Scalar::one(m.field());
        for (std::size_t t = 0; t < r.rank; ++t)
            kernel.at(out, r.pivot_cols[t]) = -r.reduced.at(t, f);
        ++out;
    }
    // canonicalize so that equal subspaces compare equal
    return rref(kernel).reduced;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows())
        throw FieldMismatch("solve: right-hand side length mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    for (std::size_t c : r.pivot_cols)
        if (c == m.cols()) return std::nullopt; // pivot in the augmented column
    std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
    for (std::size_t t = 0; t < r.rank; ++t)
        x[r.pivot_cols[t]] = r.reduced.at(t, m.cols());
    return x;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field() || a.cols() != b.rows())
        throw FieldMismatch("mat_mul: incompatible matrices");
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& v) {
    if (v.size() != m.cols())
        throw FieldMismatch("mat_vec: vector length mismatch");
    std::vector<Scalar> out(m.rows(), Scalar::zero(m.field()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero())
                out[i] += m.at(i, j) * v[j];
    return out;
}

std::vector<Scalar> reduce_against_rref(const Matrix& basis_rows, std::vector<Scalar> v) {
    // each basis row has a leading 1; find it and eliminate v against it
    for (std::size_t r = 0; r < basis_rows.rows(); ++r) {
        std::size_t lead = basis_rows.cols();
        for (std::size_t c = 0; c < basis_rows.cols(); ++c) {
            if (!basis_rows.at(r, c).is_zero()) {
                lead = c;
                break;
            }
        }
        if (lead == basis_rows.cols() || v[lead].is_zero()) continue;
        Scalar factor = v[lead];
        for (std::size_t c = lead; c < basis_rows.cols(); ++c)
            v[c] -= factor * basis_rows.at(r, c);
    }
    return v;
}

} // namespace nonassoc
