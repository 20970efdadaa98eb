#include "polysum/basis.hpp"

#include <cstdint>

namespace polysum {

namespace {

std::size_t degree_or_zero(const Polynomial& f)
{
    const Degree deg = f.degree();
    return deg.is_finite() ? deg.value() : 0;
}

// f(0), f(-1), ..., f(-n)
std::vector<Rational> values_at_nonpositive(const Polynomial& f, std::size_t n)
{
    std::vector<Rational> values;
    values.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        values.push_back(eval(f, Rational(-static_cast<long>(k))));
    }
    return values;
}

}  // namespace

RisingFactorialPoly to_rising_basis(const Polynomial& f)
{
    const std::size_t n = degree_or_zero(f);
    const auto values = values_at_nonpositive(f, n);

    std::vector<Integer> fact(n + 1);
    fact[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        fact[k] = fact[k - 1] * static_cast<unsigned long>(k);
    }

    RisingFactorialPoly r;
    r.constant = values[0];
    r.d.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        Rational d_i;
        for (std::size_t k = 0; k <= i; ++k) {
            Rational term = values[k] / Rational(Integer(fact[k] * fact[i - k]));
            if (k % 2 == 1) {
                d_i -= term;
            } else {
                d_i += term;
            }
        }
        r.d.push_back(d_i);
    }
    return r;
}

Polynomial from_rising_basis(const RisingFactorialPoly& r)
{
    Polynomial f = Polynomial::constant(r.constant);
    for (std::size_t i = 1; i <= r.d.size(); ++i) {
        const Rational& d_i = r.d[i - 1];
        if (!d_i.is_zero()) {
            f += rising_factorial(static_cast<std::int64_t>(i)) * d_i;
        }
    }
    return f;
}

RisingFactorialPoly solve_interpolation_system(const Polynomial& f)
{
    const std::size_t n = degree_or_zero(f);
    const auto values = values_at_nonpositive(f, n);

    // l[i] for i = 0..n
    std::vector<Rational> l(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const Rational x(-static_cast<long>(j));
        Rational rhs = values[j];
        Rational basis_at_x = 1;  // length-0 product
        for (std::size_t i = 0; i < j; ++i) {
            rhs -= l[i] * basis_at_x;
            basis_at_x *= x + Rational(static_cast<long>(i));
        }
        // basis_at_x is now (-j)(-j+1)...(-1) = (-1)^j j!, the diagonal entry.
        l[j] = rhs / basis_at_x;
    }

    RisingFactorialPoly r;
    r.constant = l[0];
    r.d.assign(l.begin() + 1, l.end());
    return r;
}

}  // namespace polysum
