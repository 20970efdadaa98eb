#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "polysum/errors.hpp"

namespace polysum {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact rational number, always in canonical form: positive denominator,
/// coprime numerator and denominator, zero stored as 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    /// Throws ArithmeticError when den is zero.
    Rational(const Integer& num, const Integer& den);

    /// Parses "p", "-p", "p/q" or "-p/q" in base 10. Throws DomainError on
    /// malformed text and ArithmeticError on a zero denominator.
    static Rational parse(std::string_view text);

    const Integer& num() const { return value_.get_num(); }
    const Integer& den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "num/den", or just "num" for integers.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational add(const Rational& a, const Rational& b);
Rational sub(const Rational& a, const Rational& b);
Rational mul(const Rational& a, const Rational& b);
Rational div(const Rational& a, const Rational& b);
Rational neg(const Rational& a);

/// base^exponent for exponent >= 0; 0^0 = 1.
Rational pow(const Rational& base, const Integer& exponent);
Integer pow(const Integer& base, unsigned long exponent);

std::strong_ordering compare(const Rational& a, const Rational& b);
inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// k! for k >= 0.
Integer factorial(const Integer& k);

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial(const Integer& n, const Integer& k);

/// (-1)^k as +1 / -1.
inline int alternating_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace polysum
