#include "polysum/summation.hpp"

#include "polysum/basis.hpp"

namespace polysum {

Polynomial sum_rising_factorial(std::int64_t i)
{
    if (i < 1) {
        throw DomainError("rising factorial length must be >= 1, got " + std::to_string(i));
    }
    return rising_factorial(i + 1) * Rational(1, i + 1);
}

ClosedFormSum sum_polynomial(const Polynomial& f)
{
    const auto r = to_rising_basis(f);
    Polynomial g = Polynomial::monomial(r.constant, 1);
    for (std::size_t i = 1; i <= r.degree_bound(); ++i) {
        const Rational& d_i = r.coefficient(i);
        if (!d_i.is_zero()) {
            g += sum_rising_factorial(static_cast<std::int64_t>(i)) * d_i;
        }
    }
    return {std::move(g), f.degree()};
}

Rational evaluate(const ClosedFormSum& g, const Integer& m, Extension ext)
{
    if (sgn(m) < 0 && ext == Extension::natural) {
        throw DomainError("closed form evaluated at negative m = " + m.get_str()
                          + " without polynomial extension");
    }
    return eval(g.poly, Rational(m));
}

Rational sum_range(const Polynomial& f, const Integer& lo, const Integer& hi)
{
    if (lo > hi) {
        throw DomainError("empty range: lo = " + lo.get_str() + " > hi = " + hi.get_str());
    }
    const auto g = sum_polynomial(f);
    return evaluate(g, hi, Extension::polynomial)
           - evaluate(g, Integer(lo - 1), Extension::polynomial);
}

Rational brute_force_sum(const Polynomial& f, const Integer& m)
{
    if (m < 1) {
        throw DomainError("brute-force sum needs m >= 1, got " + m.get_str());
    }
    Rational total;
    for (Integer x = 1; x <= m; ++x) {
        total += eval(f, Rational(x));
    }
    return total;
}

}  // namespace polysum
