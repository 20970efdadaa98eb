#pragma once

#include <cstddef>
#include <vector>

#include "polysum/poly.hpp"

namespace polysum {

/// f(x) = constant + sum_{i=1}^{n} d_i * x(x+1)...(x+i-1).
///
/// d holds d_1..d_n at indices 0..n-1. n is the degree of the source
/// polynomial, so a constant (or zero) polynomial has an empty d.
struct RisingFactorialPoly {
    Rational constant;
    std::vector<Rational> d;

    std::size_t degree_bound() const { return d.size(); }
    /// d_i for 1 <= i <= degree_bound().
    const Rational& coefficient(std::size_t i) const { return d.at(i - 1); }

    friend bool operator==(const RisingFactorialPoly&, const RisingFactorialPoly&) = default;
};

/// Closed-form coefficients from the values f(0), f(-1), ..., f(-n):
///   d_i = sum_{k=0}^{i} (-1)^k f(-k) / (k! (i-k)!)
RisingFactorialPoly to_rising_basis(const Polynomial& f);

/// Expands the rising-factorial representation back into monomials.
Polynomial from_rising_basis(const RisingFactorialPoly& r);

/// Solves f(-j) = l_0 + sum_{i=1}^{j} l_i (-j)(-j+1)...(-j+i-1), j = 0..n,
/// by forward substitution. Lower triangular because the length-i basis
/// product vanishes at -j for i > j. Independent of the closed form above
/// and kept as a reference for it.
RisingFactorialPoly solve_interpolation_system(const Polynomial& f);

}  // namespace polysum
