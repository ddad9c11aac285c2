#pragma once

#include <cstdint>
#include <string>

#include "nonassoc/errors.hpp"

namespace nonassoc {

using Int128 = __int128;

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

/// Descriptor of the scalar field: the rationals, or GF(p) for a prime
/// p with 2 <= p < 2^31. Primality is verified at construction.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t p = 0; // modulus, PrimeField only

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
    static FieldSpec gfp(std::uint32_t p);

    bool is_rational() const { return kind == FieldKind::Rationals; }
    bool is_prime_field() const { return kind == FieldKind::PrimeField; }

    /// Characteristic: 0 for the rationals, p for GF(p).
    std::uint32_t characteristic() const { return is_rational() ? 0 : p; }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string str() const;
};

/// Exact field element in canonical form.
///
/// Rationals: num/den with den > 0, gcd(num, den) = 1, both bounded by
/// 128-bit signed integers; any overflow throws OverflowError instead of
/// wrapping. GF(p): residue stored in num, den = 1.
///
/// Canonical form is unique per value, so operator== is plain member
/// comparison and canonical zero is bitwise-reproducible.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), num_(0), den_(1) {}

    static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }

    /// Integer embedded into the field (reduced mod p for GF(p)).
    static Scalar from_int(const FieldSpec& f, std::int64_t v);

    /// Exact rational num/den over Q.
    static Scalar rational(std::int64_t num, std::int64_t den = 1);

    /// GF(p) residue (must already lie in [0, p)).
    static Scalar residue(const FieldSpec& f, std::uint32_t r);

    /// Parses "3", "-7" (any field) or "5/6" (rationals only).
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    /// Q only: strictly positive?
    bool is_positive() const;

    /// GF(p) only: the residue in [0, p).
    std::uint32_t residue_value() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    Scalar inv() const;

    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    bool operator==(const Scalar& o) const {
        return field_ == o.field_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical textual form: "3", "-7", "5/6"; GF(p) residues as decimal.
    std::string str() const;

private:
    Scalar(const FieldSpec& f, Int128 num, Int128 den)
        : field_(f), num_(num), den_(den) {}

    static Scalar make_rational_canonical(Int128 num, Int128 den);
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    Int128 num_;
    Int128 den_;
};

namespace detail {

/// Decimal rendering of a 128-bit integer (no std support on this toolchain).
std::string int128_to_string(Int128 v);

/// Parses a decimal literal with optional sign; throws ParseError on junk
/// and OverflowError when the value exceeds 128 signed bits.
Int128 int128_from_string(const std::string& text);

Int128 int128_gcd(Int128 a, Int128 b);

Int128 checked_add(Int128 a, Int128 b);
Int128 checked_sub(Int128 a, Int128 b);
Int128 checked_mul(Int128 a, Int128 b);

/// Inverse of a mod p via extended Euclid; requires 0 < a < p.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

bool is_prime(std::uint32_t n);

} // namespace detail

} // namespace nonassoc
