#include "polysum/exactnum.hpp"

#include <limits>
#include <ostream>

namespace polysum {

namespace {

unsigned long to_ulong(const Integer& value, const char* what)
{
    if (sgn(value) < 0) {
        throw DomainError(std::string(what) + " must be nonnegative, got " + value.get_str());
    }
    if (!value.fits_ulong_p()) {
        throw DomainError(std::string(what) + " is too large: " + value.get_str());
    }
    return value.get_ui();
}

bool is_decimal_integer(std::string_view text)
{
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view text)
{
    if (!is_decimal_integer(text)) {
        throw DomainError("malformed integer '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return Integer(std::string(text), 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den)
{
    if (sgn(den) == 0) {
        throw ArithmeticError("zero denominator");
    }
    value_.get_num() = num;
    value_.get_den() = den;
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+') {
        throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(den_text));
}

std::string Rational::str() const
{
    if (is_integer()) {
        return num().get_str();
    }
    return num().get_str() + "/" + den().get_str();
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw ArithmeticError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational add(const Rational& a, const Rational& b) { return a + b; }
Rational sub(const Rational& a, const Rational& b) { return a - b; }
Rational mul(const Rational& a, const Rational& b) { return a * b; }
Rational div(const Rational& a, const Rational& b) { return a / b; }
Rational neg(const Rational& a) { return -a; }

Integer pow(const Integer& base, unsigned long exponent)
{
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

Rational pow(const Rational& base, const Integer& exponent)
{
    const auto e = to_ulong(exponent, "exponent");
    return Rational(pow(base.num(), e), pow(base.den(), e));
}

std::strong_ordering compare(const Rational& a, const Rational& b) { return a <=> b; }

Integer factorial(const Integer& k)
{
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), to_ulong(k, "factorial argument"));
    return result;
}

Integer binomial(const Integer& n, const Integer& k)
{
    const auto top = to_ulong(n, "binomial n");
    if (sgn(k) < 0 || k > n) {
        return 0;
    }
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), top, k.get_ui());
    return result;
}

}  // namespace polysum
