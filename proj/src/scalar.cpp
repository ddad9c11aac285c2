#include "nonassoc/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace nonassoc {

namespace detail {

std::string int128_to_string(Int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Peel digits from the absolute value; negate digit-wise to survive INT128_MIN.
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    std::string digits;
    while (u > 0) {
        digits.push_back(char('0' + (int)(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int128 int128_from_string(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (text[0] == '-' || text[0] == '+') {
        neg = (text[0] == '-');
        i = 1;
    }
    if (i == text.size()) throw ParseError("sign without digits: '" + text + "'");
    Int128 v = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("invalid integer literal: '" + text + "'");
        v = checked_mul(v, 10);
        v = neg ? checked_sub(v, text[i] - '0') : checked_add(v, text[i] - '0');
    }
    return v;
}

Int128 int128_gcd(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int128 checked_add(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("rational arithmetic overflow in addition");
    return r;
}

Int128 checked_sub(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("rational arithmetic overflow in subtraction");
    return r;
}

Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("rational arithmetic overflow in multiplication");
    return r;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw DivisionByZero("inverse of 0 in GF(" + std::to_string(p) + ")");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    // r = gcd(a, p) = 1 since p is prime and 0 < a < p
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

FieldSpec FieldSpec::gfp(std::uint32_t p) {
    if (p < 2 || p >= (1u << 31))
        throw ParseError("GF(p) modulus out of range: " + std::to_string(p));
    if (!detail::is_prime(p))
        throw ParseError("GF(p) modulus is not prime: " + std::to_string(p));
    return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::from_int(const FieldSpec& f, std::int64_t v) {
    if (f.is_rational()) return Scalar(f, v, 1);
    std::int64_t r = v % static_cast<std::int64_t>(f.p);
    if (r < 0) r += f.p;
    return Scalar(f, r, 1);
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Scalar s = make_rational_canonical(num, den);
    return s;
}

Scalar Scalar::residue(const FieldSpec& f, std::uint32_t r) {
    if (!f.is_prime_field() || r >= f.p)
        throw FieldMismatch("residue " + std::to_string(r) + " not valid in " + f.str());
    return Scalar(f, r, 1);
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        Int128 v = detail::int128_from_string(text);
        if (f.is_rational()) return Scalar(f, v, 1);
        Int128 r = v % static_cast<Int128>(f.p);
        if (r < 0) r += f.p;
        return Scalar(f, r, 1);
    }
    if (!f.is_rational())
        throw ParseError("fraction literal '" + text + "' not allowed in " + f.str());
    Int128 num = detail::int128_from_string(text.substr(0, slash));
    Int128 den = detail::int128_from_string(text.substr(slash + 1));
    if (den == 0) throw DivisionByZero("rational literal with zero denominator: '" + text + "'");
    return make_rational_canonical(num, den);
}

Scalar Scalar::make_rational_canonical(Int128 num, Int128 den) {
    if (den < 0) {
        num = detail::checked_sub(0, num);
        den = detail::checked_sub(0, den);
    }
    if (num == 0) return Scalar(FieldSpec::rationals(), 0, 1);
    Int128 g = detail::int128_gcd(num, den);
    return Scalar(FieldSpec::rationals(), num / g, den / g);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("scalar fields differ: " + field_.str() + " vs " + o.field_.str());
}

bool Scalar::is_positive() const {
    if (!field_.is_rational())
        throw FieldMismatch("positivity is only defined over Q");
    return num_ > 0;
}

std::uint32_t Scalar::residue_value() const {
    if (!field_.is_prime_field())
        throw FieldMismatch("residue_value is only defined over GF(p)");
    return static_cast<std::uint32_t>(num_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_prime_field()) {
        Int128 r = num_ + o.num_;
        if (r >= field_.p) r -= field_.p;
        return Scalar(field_, r, 1);
    }
    // a/b + c/d with g = gcd(b, d) to keep intermediates small
    Int128 g = detail::int128_gcd(den_, o.den_);
    Int128 b = den_ / g, d = o.den_ / g;
    Int128 num = detail::checked_add(detail::checked_mul(num_, d),
                                     detail::checked_mul(o.num_, b));
    Int128 den = detail::checked_mul(detail::checked_mul(b, d), g);
    return make_rational_canonical(num, den);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    if (field_.is_prime_field()) {
        Int128 r = num_ == 0 ? 0 : field_.p - num_;
        return Scalar(field_, r, 1);
    }
    return Scalar(field_, detail::checked_sub(0, num_), den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_prime_field()) {
        Int128 r = (num_ * o.num_) % field_.p; // residues < 2^31, product fits easily
        return Scalar(field_, r, 1);
    }
    // cross-reduce before multiplying
    Int128 g1 = detail::int128_gcd(num_, o.den_);
    Int128 g2 = detail::int128_gcd(o.num_, den_);
    Int128 num = detail::checked_mul(num_ / g1, o.num_ / g2);
    Int128 den = detail::checked_mul(den_ / g2, o.den_ / g1);
    return make_rational_canonical(num, den);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of 0 in " + field_.str());
    if (field_.is_prime_field())
        return Scalar(field_, detail::mod_inverse(static_cast<std::uint32_t>(num_), field_.p), 1);
    if (num_ < 0) return Scalar(field_, detail::checked_sub(0, den_), detail::checked_sub(0, num_));
    return Scalar(field_, den_, num_);
}

std::string Scalar::str() const {
    if (den_ == 1) return detail::int128_to_string(num_);
    return detail::int128_to_string(num_) + "/" + detail::int128_to_string(den_);
}

} // namespace nonassoc
