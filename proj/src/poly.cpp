#include "polysum/poly.hpp"

#include <utility>

namespace polysum {

std::size_t Degree::value() const
{
    if (!is_finite()) {
        throw DomainError("degree of the zero polynomial is minus infinity");
    }
    return static_cast<std::size_t>(value_);
}

std::string Degree::str() const { return is_finite() ? std::to_string(value_) : "-inf"; }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power)
{
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::identity() { return monomial(1, 1); }

Rational Polynomial::coefficient(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational Polynomial::leading_coefficient() const
{
    return coeffs_.empty() ? Rational() : coeffs_.back();
}

Degree Polynomial::degree() const
{
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
}

Rational Polynomial::operator()(const Rational& t) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        coeffs_[j] += rhs.coeffs_[j];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        coeffs_[j] -= rhs.coeffs_[j];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial scale(const Polynomial& p, const Rational& c) { return p * c; }
Rational eval(const Polynomial& p, const Rational& t) { return p(t); }

DivisionResult divide_exact(const Polynomial& p, const Polynomial& q)
{
    if (q.is_zero()) {
        throw DomainError("polynomial division by the zero polynomial");
    }
    const std::size_t dq = q.degree().value();
    std::vector<Rational> rem = p.coefficients();
    if (rem.size() <= dq) {
        return {Polynomial(), p};
    }
    std::vector<Rational> quot(rem.size() - dq);
    const Rational lead = q.leading_coefficient();
    const auto& qc = q.coefficients();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational factor = rem[k + dq] / lead;
        quot[k] = factor;
        if (factor.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j <= dq; ++j) {
            rem[k + j] -= factor * qc[j];
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial rising_factorial(std::int64_t length, std::int64_t shift)
{
    if (length < 1) {
        throw DomainError("rising factorial length must be >= 1, got " + std::to_string(length));
    }
    if (shift < 0) {
        throw DomainError("rising factorial shift must be >= 0, got " + std::to_string(shift));
    }
    // Multiply by (x + c) in place: new[j] = old[j-1] + c*old[j].
    std::vector<Rational> coeffs{Rational(1)};
    for (std::int64_t t = 0; t < length; ++t) {
        const Rational c(shift + t);
        coeffs.emplace_back();
        for (std::size_t j = coeffs.size() - 1; j > 0; --j) {
            coeffs[j] = coeffs[j - 1] + c * coeffs[j];
        }
        coeffs[0] *= c;
    }
    return Polynomial(std::move(coeffs));
}

std::string render(const Polynomial& p, std::string_view var)
{
    if (p.is_zero()) {
        return "0";
    }
    const auto& coeffs = p.coefficients();
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Rational& c = coeffs[k];
        if (c.is_zero()) {
            continue;
        }
        const bool first = out.empty();
        if (c.sign() < 0) {
            out += first ? "-" : " - ";
        } else if (!first) {
            out += " + ";
        }
        const Rational magnitude = c.sign() < 0 ? -c : c;
        const bool unit = magnitude == Rational(1);
        if (k == 0) {
            out += magnitude.str();
            continue;
        }
        if (!unit) {
            out += magnitude.str();
            out += '*';
        }
        out += var;
        if (k > 1) {
            out += '^';
            out += std::to_string(k);
        }
    }
    return out;
}

}  // namespace polysum
