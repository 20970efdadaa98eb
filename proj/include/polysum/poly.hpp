#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "polysum/exactnum.hpp"

namespace polysum {

/// Polynomial degree. The zero polynomial has degree minus infinity, which
/// orders below every finite degree and absorbs addition.
class Degree {
public:
    static constexpr Degree minus_infinity() { return Degree(); }
    constexpr explicit Degree(std::size_t value) : value_(static_cast<std::int64_t>(value)) {}

    constexpr bool is_finite() const { return value_ >= 0; }

    /// Throws DomainError for minus infinity.
    std::size_t value() const;

    friend constexpr bool operator==(Degree, Degree) = default;
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b)
    {
        return a.value_ <=> b.value_;
    }
    friend constexpr Degree operator+(Degree a, Degree b)
    {
        if (!a.is_finite() || !b.is_finite()) {
            return minus_infinity();
        }
        Degree d;
        d.value_ = a.value_ + b.value_;
        return d;
    }

    std::string str() const;

private:
    constexpr Degree() = default;
    std::int64_t value_ = -1;
};

/// Dense univariate polynomial over Rational. coefficients()[j] multiplies
/// x^j. Trailing zeros are trimmed on construction, so the zero polynomial is
/// the empty list and == is mathematical equality.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    /// c * x^power
    static Polynomial monomial(const Rational& c, std::size_t power);
    /// The polynomial x.
    static Polynomial identity();

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^power; zero beyond the degree.
    Rational coefficient(std::size_t power) const;
    Rational leading_coefficient() const;

    Degree degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    Rational operator()(const Rational& t) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(Polynomial p, const Polynomial& q) { return p *= q; }
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& c);

/// Horner evaluation.
Rational eval(const Polynomial& p, const Rational& t);

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;

    bool exact() const { return remainder.is_zero(); }
};

/// Long division p = quotient * q + remainder with deg(remainder) < deg(q).
/// Throws DomainError when q is the zero polynomial.
DivisionResult divide_exact(const Polynomial& p, const Polynomial& q);

/// (x + shift)(x + shift + 1)...(x + shift + length - 1), expanded.
/// length >= 1, shift >= 0.
Polynomial rising_factorial(std::int64_t length, std::int64_t shift = 0);

/// Descending powers, exact coefficients, unit coefficients elided:
/// "1/3*m^3 + 1/2*m^2 + 1/6*m". The zero polynomial renders as "0".
std::string render(const Polynomial& p, std::string_view var = "x");

}  // namespace polysum
