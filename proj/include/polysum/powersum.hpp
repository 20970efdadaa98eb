#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polysum/poly.hpp"

namespace polysum {

/// a_1..a_n in S_n(m) = (-1)^n sum_{i=1}^{n} a_i m(m+1)...(m+i), where
///   a_i = 1/(i+1) sum_{k=1}^{i} (-1)^k k^n / (k! (i-k)!)
struct PowerSumCoefficients {
    int n = 0;
    std::vector<Rational> a;  // a[0] is a_1

    /// a_i, 1-based.
    const Rational& operator[](std::size_t i) const { return a.at(i - 1); }
};

enum class CoefficientCheck {
    /// a_n = (-1)^n / (n+1) directly.
    shortcut,
    /// Also compute a_n from the defining sum and throw ConsistencyError on mismatch.
    strict,
};

/// Requires n >= 1.
PowerSumCoefficients coefficients(int n, CoefficientCheck check = CoefficientCheck::shortcut);

/// a_i from the defining sum, any 1 <= i <= n.
Rational coefficient_by_definition(int n, int i);

/// S_n(m) = 1^n + ... + m^n expanded in powers of m. n = 0 gives m.
Polynomial power_sum_closed_form(int n);

/// S_n(m) = sign * m(m+1) * (a_1 + sum_{i=2}^{n} a_i (m+2)...(m+i)), n >= 3,
/// with a_1 = -1/2 and sign = (-1)^n.
struct FactoredPowerSum {
    int n = 0;
    int sign = 1;
    std::vector<Rational> a;  // a[0] is a_1

    /// The bracketed factor as a polynomial in m.
    Polynomial inner() const;
    Polynomial expand() const;
    /// e.g. "-m*(m + 1)*(-1/2 + (m + 2) - 1/4*(m + 2)*(m + 3))". Reparses.
    std::string render(std::string_view var = "m") const;
};

FactoredPowerSum power_sum_factored_form(int n);

/// Exact S_n(m) for m >= 0; S_n(0) = 0.
Integer power_sum_value(int n, const Integer& m);

/// sum_{i=1}^{n} sum_{k=1}^{i} (-1)^{k+n} k^n C(i,k) m(m+1)...(m+i) / (i+1)!
/// evaluated term by term.
Polynomial power_sum_double_sum(int n);

/// b[j] = B_j with B_1 = -1/2, from sum_{j=0}^{k} C(k+1, j) B_j = 0.
struct BernoulliTable {
    std::vector<Rational> b;
};

/// B_0..B_{count-1}.
BernoulliTable bernoulli_table(std::size_t count);

/// Classical Faulhaber formula:
///   S_n(m) = 1/(n+1) sum_{j=0}^{n} (-1)^j C(n+1, j) B_j m^{n+1-j}
Polynomial power_sum_bernoulli(int n);

/// sum_{k=1}^{n} (-1)^k C(n,k) k^n, which equals (-1)^n n!.
Integer alternating_identity_lhs(int n);

}  // namespace polysum
