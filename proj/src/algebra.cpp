#include "nonassoc/algebra.hpp"

#include <algorithm>
#include <set>

namespace nonassoc {

StructureConstants::StructureConstants(std::string name, FieldSpec field, std::size_t dim,
                                       std::vector<Scalar> table,
                                       std::vector<std::string> basis_names,
                                       std::optional<std::size_t> unit_index)
    : name_(std::move(name)), field_(field), dim_(dim), table_(std::move(table)),
      basis_names_(std::move(basis_names)), unit_index_(unit_index) {
    if (dim_ < 1) throw ParseError("algebra dimension must be at least 1");
    if (table_.size() != dim_ * dim_ * dim_)
        throw ParseError("structure constant table has wrong shape");
    for (const auto& s : table_)
        if (s.field() != field_)
            throw FieldMismatch("table entry field differs from algebra field");
    if (basis_names_.empty()) {
        basis_names_.reserve(dim_);
        for (std::size_t i = 0; i < dim_; ++i) basis_names_.push_back("e" + std::to_string(i));
    }
    if (basis_names_.size() != dim_)
        throw ParseError("basis name count differs from dimension");

    sparse_.resize(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            auto& terms = sparse_[i * dim_ + j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar& c = entry(i, j, k);
                if (!c.is_zero()) terms.emplace_back(static_cast<std::uint32_t>(k), c);
            }
        }

    if (unit_index_) {
        std::size_t u = *unit_index_;
        if (u >= dim_) throw ParseError("unit index out of range");
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t k = 0; k < dim_; ++k) {
                Scalar expect = (k == i) ? Scalar::one(field_) : Scalar::zero(field_);
                if (entry(u, i, k) != expect || entry(i, u, k) != expect)
                    throw ParseError("declared unit index " + std::to_string(u) +
                                     " is not a two-sided identity");
            }
    }
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, std::vector<Scalar> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (coords_.size() != algebra_->dim())
        throw AlgebraMismatch("coordinate count differs from algebra dimension");
    for (const auto& c : coords_)
        if (c.field() != algebra_->field())
            throw FieldMismatch("coordinate field differs from algebra field");
}

AlgebraElement AlgebraElement::zero(const AlgebraPtr& a) {
    return AlgebraElement(a, std::vector<Scalar>(a->dim(), Scalar::zero(a->field())));
}

AlgebraElement AlgebraElement::basis(const AlgebraPtr& a, std::size_t i) {
    AlgebraElement e = zero(a);
    e.coords_[i] = Scalar::one(a->field());
    return e;
}

std::optional<AlgebraElement> AlgebraElement::unit(const AlgebraPtr& a) {
    if (!a->unit_index()) return std::nullopt;
    return basis(a, *a->unit_index());
}

bool AlgebraElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Scalar& c) { return c.is_zero(); });
}

void AlgebraElement::check_same_algebra(const AlgebraElement& o) const {
    if (algebra_ != o.algebra_)
        throw AlgebraMismatch("elements belong to different algebras ('" + algebra_->name() +
                              "' vs '" + o.algebra_->name() + "')");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_same_algebra(o);
    std::vector<Scalar> c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return AlgebraElement(algebra_, std::move(c));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_same_algebra(o);
    std::vector<Scalar> c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return AlgebraElement(algebra_, std::move(c));
}

AlgebraElement AlgebraElement::operator-() const {
    std::vector<Scalar> c = coords_;
    for (auto& s : c) s = -s;
    return AlgebraElement(algebra_, std::move(c));
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
    std::vector<Scalar> c = coords_;
    for (auto& v : c) v *= s;
    return AlgebraElement(algebra_, std::move(c));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    return multiply(*this, o);
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return algebra_ == o.algebra_ && coords_ == o.coords_;
}

std::string AlgebraElement::str() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        std::string coef = coords_[i].str();
        if (!out.empty()) {
            if (coef[0] == '-') {
                out += " - ";
                coef = coef.substr(1);
            } else {
                out += " + ";
            }
        }
        if (coef == "1")
            out += algebra_->basis_names()[i];
        else
            out += coef + "*" + algebra_->basis_names()[i];
    }
    return out.empty() ? "0" : out;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.algebra() != y.algebra())
        throw AlgebraMismatch("multiply: elements belong to different algebras");
    const auto& a = *x.algebra();
    const std::size_t n = a.dim();
    std::vector<Scalar> out(n, Scalar::zero(a.field()));
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coord(i).is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.coord(j).is_zero()) continue;
            Scalar coef = x.coord(i) * y.coord(j);
            for (const auto& [k, c] : a.product_terms(i, j)) out[k] += coef * c;
        }
    }
    return AlgebraElement(x.algebra(), std::move(out));
}

AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y,
                          const AlgebraElement& z) {
    return multiply(multiply(x, y), z) - multiply(x, multiply(y, z));
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
    return multiply(x, y) - multiply(y, x);
}

AlgebraPtr direct_sum(const StructureConstants& a, const StructureConstants& b) {
    if (a.field() != b.field())
        throw FieldMismatch("direct_sum: summands over different fields");
    const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
    std::vector<Scalar> table(n * n * n, Scalar::zero(a.field()));
    auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
        table[(i * n + j) * n + k] = v;
    };
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (const auto& [k, c] : a.product_terms(i, j)) put(i, j, k, c);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (const auto& [k, c] : b.product_terms(i, j)) put(na + i, na + j, na + k, c);

    std::vector<std::string> names = a.basis_names();
    names.insert(names.end(), b.basis_names().begin(), b.basis_names().end());
    std::set<std::string> left(a.basis_names().begin(), a.basis_names().end());
    bool clash = std::any_of(b.basis_names().begin(), b.basis_names().end(),
                             [&](const std::string& s) { return left.count(s) > 0; });
    if (clash) {
        for (std::size_t i = 0; i < na; ++i) names[i] = "a." + names[i];
        for (std::size_t i = 0; i < nb; ++i) names[na + i] = "b." + names[na + i];
    }

    return std::make_shared<StructureConstants>(a.name() + "+" + b.name(), a.field(), n,
                                                std::move(table), std::move(names),
                                                std::nullopt);
}

std::optional<AlgebraElement> find_unit(const AlgebraPtr& a) {
    const std::size_t n = a->dim();
    // unknown u: for all i,k  sum_m u_m c[m][i][k] = delta_ik  and  sum_m u_m c[i][m][k] = delta_ik
    Matrix sys(a->field(), 2 * n * n, n);
    std::vector<Scalar> rhs;
    rhs.reserve(2 * n * n);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t m = 0; m < n; ++m) {
                sys.at(r, m) = a->entry(m, i, k);
                sys.at(r + 1, m) = a->entry(i, m, k);
            }
            Scalar d = (i == k) ? Scalar::one(a->field()) : Scalar::zero(a->field());
            rhs.push_back(d);
            rhs.push_back(d);
            r += 2;
        }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    return AlgebraElement(a, std::move(*sol));
}

} // namespace nonassoc
