#pragma once

#include <optional>
#include <vector>

#include "nonassoc/algebra.hpp"

namespace nonassoc {

/// Unital algebra equipped with a linear anti-automorphism x -> conj(x)
/// of order two whose trace x + conj(x) and norm x * conj(x) land in the
/// span of the unit. These properties are verified exactly at
/// construction (on the basis, plus polarized products, which covers all
/// elements in every characteristic).
class InvolutiveAlgebra {
public:
    InvolutiveAlgebra(AlgebraPtr algebra, Matrix conjugation);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Matrix& conjugation() const { return conj_; }
    std::size_t dim() const { return algebra_->dim(); }

    AlgebraElement conjugate(const AlgebraElement& x) const;
    AlgebraElement unit() const;

private:
    void verify() const;

    AlgebraPtr algebra_;
    Matrix conj_;
};

/// Quadratic norm data of an involutive algebra: N(x) 1 = x conj(x).
/// diag[i] = N(e_i); polar(i,j) = N(e_i + e_j) - N(e_i) - N(e_j), so
/// N(sum a_i e_i) = sum a_i^2 diag[i] + sum_{i<j} a_i a_j polar(i,j)
/// holds exactly in every characteristic.
class NormForm {
public:
    explicit NormForm(const InvolutiveAlgebra& a);

    const std::vector<Scalar>& diagonal() const { return diag_; }
    const Scalar& polar(std::size_t i, std::size_t j) const;

    /// True when all off-diagonal polar terms vanish.
    bool is_diagonal() const;

    /// Q only: diagonal with strictly positive entries, which proves
    /// N(x) = 0 implies x = 0.
    bool is_positive_definite_diagonal() const;

    /// Gram matrix with halved off-diagonal entries; unavailable in
    /// characteristic 2.
    std::optional<Matrix> gram() const;

private:
    FieldSpec field_;
    std::size_t dim_;
    std::vector<Scalar> diag_;
    std::vector<Scalar> polar_; // row-major, diagonal unused
};

/// The field itself as a 1-dimensional algebra with identity conjugation.
InvolutiveAlgebra base_field_algebra(const FieldSpec& f);

/// One doubling step with parameter gamma != 0:
///   (a, b)(c, d) = (a c + gamma conj(d) b, d a + b conj(c)),
///   conj((a, b)) = (conj(a), -b).
/// Dimension doubles; the unit is preserved.
InvolutiveAlgebra cayley_dickson(const InvolutiveAlgebra& a, const Scalar& gamma);

/// Chain of doublings starting from the base field; gammas lists the
/// parameter of each step, e.g. (-1, -1, -1) for the classical octonions.
InvolutiveAlgebra cayley_dickson_chain(const FieldSpec& f, const std::vector<Scalar>& gammas);

/// Split octonions as vector matrices [[alpha, v], [w, beta]] with the
/// standard dot/cross product multiplication. Basis: the two diagonal
/// idempotents E11, E22, then u1..u3 (top right), w1..w3 (bottom left).
/// The unit E11 + E22 is not a basis element, so unit_index is unset.
AlgebraPtr zorn_split_octonions(const FieldSpec& f);

/// Associative 2x2 matrix algebra with basis {1, E11, E12, E21}
/// (E22 = 1 - E11), chosen so the identity is a basis element.
AlgebraPtr matrix_algebra_2x2(const FieldSpec& f);

/// The scalar N(x) with x conj(x) = N(x) 1; throws NotScalar if the
/// product leaves the span of the unit (cannot happen for algebras built
/// by this module).
Scalar norm_of(const InvolutiveAlgebra& a, const AlgebraElement& x);

} // namespace nonassoc
