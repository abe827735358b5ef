#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fixpoint {

using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(static_cast<long>(value)) {}
    explicit Rational(const Integer& value) : value_(value) {}
    Rational(const Integer& numerator, const Integer& denominator);

    /// Accepts "n", "-n" or "p/q" (q nonzero); whitespace around tokens is ignored.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Integer floor() const;
    Integer ceil() const;

    /// Bits of numerator plus bits of denominator.
    std::size_t bit_size() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    /// Decimal rendering rounded to `significant` digits (half away from zero).
    std::string to_decimal(int significant) const;

    double to_double() const { return value_.get_d(); }

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t hash() const;

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// 10^exponent as an exact rational (exponent may be negative).
Rational pow10(int exponent);

/// 2^exponent as an exact rational (exponent may be negative).
Rational pow2(int exponent);

Rational midpoint(const Rational& a, const Rational& b);

} // namespace fixpoint

template <>
struct std::hash<fixpoint::Rational> {
    std::size_t operator()(const fixpoint::Rational& r) const { return r.hash(); }
};
