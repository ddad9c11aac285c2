#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonassoc/linalg.hpp"
#include "nonassoc/scalar.hpp"

namespace nonassoc {

class StructureConstants;
using AlgebraPtr = std::shared_ptr<const StructureConstants>;

/// Finite-dimensional algebra given by a multiplication table
///   e_i * e_j = sum_k c[i][j][k] e_k
/// over an exact field. Immutable after construction; elements hold a
/// shared pointer so the table outlives them.
class StructureConstants {
public:
    /// table is dense row-major with index (i*dim + j)*dim + k.
    /// If unit_index is set, e_u * e_i = e_i * e_u = e_i is verified.
    StructureConstants(std::string name, FieldSpec field, std::size_t dim,
                       std::vector<Scalar> table, std::vector<std::string> basis_names,
                       std::optional<std::size_t> unit_index);

    const std::string& name() const { return name_; }
    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    std::optional<std::size_t> unit_index() const { return unit_index_; }

    const Scalar& entry(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * dim_ + j) * dim_ + k];
    }

    /// Nonzero entries of the product e_i * e_j, as (k, c[i][j][k]) pairs.
    const std::vector<std::pair<std::uint32_t, Scalar>>& product_terms(std::size_t i,
                                                                       std::size_t j) const {
        return sparse_[i * dim_ + j];
    }

private:
    std::string name_;
    FieldSpec field_;
    std::size_t dim_;
    std::vector<Scalar> table_;
    std::vector<std::string> basis_names_;
    std::optional<std::size_t> unit_index_;
    std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> sparse_;
};

/// Element of a structure-constant algebra: a coordinate vector plus a
/// reference to its algebra. Binary operations reject elements of
/// different algebras.
class AlgebraElement {
public:
    AlgebraElement(AlgebraPtr algebra, std::vector<Scalar> coords);

    static AlgebraElement zero(const AlgebraPtr& a);
    static AlgebraElement basis(const AlgebraPtr& a, std::size_t i);
    /// The element e_u when unit_index is set.
    static std::optional<AlgebraElement> unit(const AlgebraPtr& a);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& coord(std::size_t i) const { return coords_[i]; }

    bool is_zero() const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(const AlgebraElement& o) const; // algebra product
    AlgebraElement scaled(const Scalar& s) const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    /// Human-readable form like "1 + 2*e7" in terms of basis names.
    std::string str() const;

private:
    void check_same_algebra(const AlgebraElement& o) const;

    AlgebraPtr algebra_;
    std::vector<Scalar> coords_;
};

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

/// (x, y, z) = (x y) z - x (y z)
AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y,
                          const AlgebraElement& z);

/// (x, y) = x y - y x
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

/// Block-diagonal sum of two algebras over the same field. No basis
/// element of the result is a two-sided unit, so unit_index is unset even
/// when both summands are unital (the unit 1_a + 1_b still exists in the
/// span; see find_unit).
AlgebraPtr direct_sum(const StructureConstants& a, const StructureConstants& b);

/// Solves the linear system u * e_i = e_i = e_i * u; returns the unique
/// two-sided unit element if one exists anywhere in the algebra.
std::optional<AlgebraElement> find_unit(const AlgebraPtr& a);

} // namespace nonassoc
