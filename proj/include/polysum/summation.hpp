#pragma once

#include <cstdint>

#include "polysum/poly.hpp"

namespace polysum {

/// g(m) = sum_{x=1}^{m} f(x) as a polynomial in m.
///
/// poly always has a zero constant term, and degree(poly) = source_degree + 1
/// for nonzero f.
struct ClosedFormSum {
    Polynomial poly;
    Degree source_degree = Degree::minus_infinity();
};

/// How to treat m < 0 when evaluating a closed form.
enum class Extension {
    /// Only m >= 0 is a summation; negative m throws DomainError.
    natural,
    /// Evaluate the polynomial anywhere.
    polynomial,
};

/// sum_{x=1}^{m} x(x+1)...(x+i-1) = m(m+1)...(m+i) / (i+1), for i >= 1.
Polynomial sum_rising_factorial(std::int64_t i);

/// Closed form via the rising-factorial expansion of f:
///   g(m) = m f(0) + sum_i d_i/(i+1) * m(m+1)...(m+i)
ClosedFormSum sum_polynomial(const Polynomial& f);

/// g(m). m = 0 gives the empty sum 0.
Rational evaluate(const ClosedFormSum& g, const Integer& m, Extension ext = Extension::natural);

/// sum_{x=lo}^{hi} f(x) as g(hi) - g(lo-1). Ranges with lo <= 0 use the
/// polynomial extension of g. Throws DomainError when lo > hi.
Rational sum_range(const Polynomial& f, const Integer& lo, const Integer& hi);

/// Literal f(1) + ... + f(m), m >= 1.
Rational brute_force_sum(const Polynomial& f, const Integer& m);

}  // namespace polysum
