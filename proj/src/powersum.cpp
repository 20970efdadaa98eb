#include "polysum/powersum.hpp"

#include <cstdint>

#include "polysum/summation.hpp"

namespace polysum {

namespace {

void require_positive(int n, const char* what)
{
    if (n < 1) {
        throw DomainError(std::string(what) + " requires n >= 1, got " + std::to_string(n));
    }
}

std::vector<Integer> factorials_upto(int n)
{
    std::vector<Integer> fact(static_cast<std::size_t>(n) + 1);
    fact[0] = 1;
    for (int k = 1; k <= n; ++k) {
        fact[k] = fact[k - 1] * static_cast<unsigned long>(k);
    }
    return fact;
}

// k^n for k = 0..n
std::vector<Integer> powers_upto(int n)
{
    std::vector<Integer> pw(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        pw[k] = pow(Integer(k), static_cast<unsigned long>(n));
    }
    return pw;
}

Rational defining_sum(int i, const std::vector<Integer>& pw, const std::vector<Integer>& fact)
{
    Rational sum;
    for (int k = 1; k <= i; ++k) {
        const Rational term(pw[k], Integer(fact[k] * fact[i - k]));
        if (k % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum / Rational(i + 1);
}

Rational shortcut_last(int n) { return Rational(alternating_sign(n), n + 1); }

}  // namespace

PowerSumCoefficients coefficients(int n, CoefficientCheck check)
{
    require_positive(n, "power-sum coefficients");
    const auto fact = factorials_upto(n);
    const auto pw = powers_upto(n);

    PowerSumCoefficients out;
    out.n = n;
    out.a.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) {
        out.a.push_back(defining_sum(i, pw, fact));
    }
    out.a.push_back(shortcut_last(n));

    if (check == CoefficientCheck::strict) {
        const Rational by_definition = defining_sum(n, pw, fact);
        if (by_definition != out.a.back()) {
            throw ConsistencyError("a_" + std::to_string(n) + ": shortcut " + out.a.back().str()
                                   + " != defining sum " + by_definition.str());
        }
    }
    return out;
}

Rational coefficient_by_definition(int n, int i)
{
    require_positive(n, "power-sum coefficient");
    if (i < 1 || i > n) {
        throw DomainError("coefficient index " + std::to_string(i) + " outside 1.."
                          + std::to_string(n));
    }
    return defining_sum(i, powers_upto(n), factorials_upto(n));
}

Polynomial power_sum_closed_form(int n)
{
    if (n == 0) {
        return sum_polynomial(Polynomial::constant(1)).poly;
    }
    require_positive(n, "power-sum closed form");
    const auto coeffs = coefficients(n);
    Polynomial s;
    for (int i = 1; i <= n; ++i) {
        s += rising_factorial(i + 1) * coeffs[static_cast<std::size_t>(i)];
    }
    return s * Rational(alternating_sign(n));
}

Polynomial FactoredPowerSum::inner() const
{
    Polynomial p = Polynomial::constant(a.front());
    for (std::size_t i = 2; i <= a.size(); ++i) {
        p += rising_factorial(static_cast<std::int64_t>(i) - 1, 2) * a[i - 1];
    }
    return p;
}

Polynomial FactoredPowerSum::expand() const
{
    return rising_factorial(2) * inner() * Rational(sign);
}

std::string FactoredPowerSum::render(std::string_view var) const
{
    const std::string v(var);
    std::string out = sign < 0 ? "-" : "";
    out += v + "*(" + v + " + 1)*(";

    bool first = true;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        const Rational& c = a[i - 1];
        if (c.is_zero()) {
            continue;
        }
        if (c.sign() < 0) {
            out += first ? "-" : " - ";
        } else if (!first) {
            out += " + ";
        }
        first = false;
        const Rational magnitude = c.sign() < 0 ? -c : c;
        if (i == 1) {
            out += magnitude.str();
            continue;
        }
        std::string product;
        for (std::size_t t = 2; t <= i; ++t) {
            if (!product.empty()) {
                product += '*';
            }
            product += "(" + v + " + " + std::to_string(t) + ")";
        }
        if (magnitude != Rational(1)) {
            out += magnitude.str() + "*";
        }
        out += product;
    }
    if (first) {
        out += "0";
    }
    out += ")";
    return out;
}

FactoredPowerSum power_sum_factored_form(int n)
{
    if (n < 3) {
        throw DomainError("factored power-sum form requires n >= 3, got " + std::to_string(n));
    }
    auto coeffs = coefficients(n);
    return {n, alternating_sign(n), std::move(coeffs.a)};
}

Integer power_sum_value(int n, const Integer& m)
{
    if (sgn(m) < 0) {
        throw DomainError("power sum needs m >= 0, got " + m.get_str());
    }
    if (n < 0) {
        throw DomainError("power sum needs n >= 0, got " + std::to_string(n));
    }
    const Rational value = eval(power_sum_closed_form(n), Rational(m));
    if (!value.is_integer()) {
        throw ConsistencyError("S_" + std::to_string(n) + "(" + m.get_str()
                               + ") evaluated to non-integer " + value.str());
    }
    return value.num();
}

Polynomial power_sum_double_sum(int n)
{
    require_positive(n, "double-sum power-sum form");
    Polynomial s;
    Integer fact_i_plus_1 = 1;  // (i+1)!
    for (int i = 1; i <= n; ++i) {
        fact_i_plus_1 *= i + 1;
        const Polynomial product = rising_factorial(i + 1);
        for (int k = 1; k <= i; ++k) {
            Integer numerator = pow(Integer(k), static_cast<unsigned long>(n)) * binomial(i, k);
            if ((k + n) % 2 == 1) {
                numerator = -numerator;
            }
            s += product * Rational(numerator, fact_i_plus_1);
        }
    }
    return s;
}

BernoulliTable bernoulli_table(std::size_t count)
{
    BernoulliTable table;
    table.b.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        if (k == 0) {
            table.b.emplace_back(1);
            continue;
        }
        // sum_{j=0}^{k} C(k+1, j) B_j = 0, solved for B_k.
        Rational acc;
        for (std::size_t j = 0; j < k; ++j) {
            acc += Rational(binomial(k + 1, j)) * table.b[j];
        }
        table.b.push_back(-acc / Rational(static_cast<long>(k) + 1));
    }
    return table;
}

Polynomial power_sum_bernoulli(int n)
{
    require_positive(n, "Bernoulli power-sum formula");
    const auto table = bernoulli_table(static_cast<std::size_t>(n) + 1);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 2);
    for (int j = 0; j <= n; ++j) {
        Rational c = Rational(binomial(n + 1, j)) * table.b[j] / Rational(n + 1);
        if (j % 2 == 1) {
            c = -c;
        }
        coeffs[n + 1 - j] = c;
    }
    return Polynomial(std::move(coeffs));
}

Integer alternating_identity_lhs(int n)
{
    require_positive(n, "alternating identity");
    Integer sum = 0;
    for (int k = 1; k <= n; ++k) {
        const Integer term = binomial(n, k) * pow(Integer(k), static_cast<unsigned long>(n));
        if (k % 2 == 1) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

}  // namespace polysum
