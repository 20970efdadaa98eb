#include "polysum/verify.hpp"

#include <functional>

#include "polysum/powersum.hpp"
#include "polysum/summation.hpp"

namespace polysum {

namespace {

class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<Counterexample()>& describe)
    {
        if (ok) {
            ++result_.passed;
            return;
        }
        ++result_.failed;
        if (!result_.first_failure) {
            result_.first_failure = describe();
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

void check_polys(Recorder& rec, int n, const Polynomial& expected, const Polynomial& got)
{
    rec.check(expected == got, [&] {
        return Counterexample{std::to_string(n), "", render(expected, "m"), render(got, "m")};
    });
}

void identities(std::vector<CheckResult>& out, int max_n)
{
    Recorder alternating("alternating_identity");
    Recorder first("a1_is_minus_half");
    Recorder last("an_shortcut");
    for (int n = 1; n <= max_n; ++n) {
        Integer expected = factorial(n);
        if (n % 2 == 1) {
            expected = -expected;
        }
        const Integer got = alternating_identity_lhs(n);
        alternating.check(got == expected, [&] {
            return Counterexample{std::to_string(n), "", expected.get_str(), got.get_str()};
        });

        const Rational a1 = coefficient_by_definition(n, 1);
        first.check(a1 == Rational(-1, 2), [&] {
            return Counterexample{std::to_string(n), "", "-1/2", a1.str()};
        });

        const Rational shortcut(n % 2 == 0 ? 1 : -1, n + 1);
        const Rational an = coefficient_by_definition(n, n);
        last.check(an == shortcut, [&] {
            return Counterexample{std::to_string(n), "", shortcut.str(), an.str()};
        });
    }
    out.push_back(alternating.take());
    out.push_back(first.take());
    out.push_back(last.take());
}

void oracle(std::vector<CheckResult>& out, int max_n, int max_m)
{
    Recorder values("power_sum_value");
    Recorder general("general_path");
    Recorder factored("factored_form");
    Recorder double_sum("double_sum_form");
    Recorder bernoulli("bernoulli_form");
    for (int n = 1; n <= max_n; ++n) {
        const Polynomial closed = power_sum_closed_form(n);

        Integer running = 0;
        for (int m = 0; m <= max_m; ++m) {
            if (m > 0) {
                running += pow(Integer(m), static_cast<unsigned long>(n));
            }
            std::string got;
            try {
                got = power_sum_value(n, m).get_str();
            } catch (const ConsistencyError& e) {
                got = std::string("error: ") + e.what();
            }
            values.check(got == running.get_str(), [&] {
                return Counterexample{std::to_string(n), std::to_string(m), running.get_str(),
                                      got};
            });
        }

        check_polys(general, n, closed, sum_polynomial(Polynomial::monomial(1, n)).poly);
        if (n >= 3) {
            check_polys(factored, n, closed, power_sum_factored_form(n).expand());
        }
        check_polys(double_sum, n, closed, power_sum_double_sum(n));
        check_polys(bernoulli, n, closed, power_sum_bernoulli(n));
    }
    out.push_back(values.take());
    out.push_back(general.take());
    out.push_back(factored.take());
    out.push_back(double_sum.take());
    out.push_back(bernoulli.take());
}

// (2x - 3)^n / (n + 1) + 1: dense, nonzero constant term.
Polynomial divisibility_summand(int n)
{
    Polynomial p = Polynomial::constant(1);
    const Polynomial linear({Rational(-3), Rational(2)});
    for (int j = 0; j < n; ++j) {
        p *= linear;
    }
    return p * Rational(1, n + 1) + Polynomial::constant(1);
}

void divisibility(std::vector<CheckResult>& out, int max_n)
{
    Recorder by_m_m1("power_sum_divisible_by_m(m+1)");
    Recorder principal("principal_term");
    Recorder by_m("general_sum_divisible_by_m");
    const Polynomial m_m1 = rising_factorial(2);
    const Polynomial m = Polynomial::identity();
    for (int n = 1; n <= max_n; ++n) {
        const Polynomial s = power_sum_closed_form(n);

        const auto division = divide_exact(s, m_m1);
        by_m_m1.check(division.exact(), [&] {
            return Counterexample{std::to_string(n), "", "0", render(division.remainder, "m")};
        });

        const bool principal_ok = s.degree() == Degree(static_cast<std::size_t>(n) + 1)
                                  && s.leading_coefficient() == Rational(1, n + 1);
        principal.check(principal_ok, [&] {
            return Counterexample{std::to_string(n), "",
                                  "1/" + std::to_string(n + 1) + "*m^" + std::to_string(n + 1),
                                  s.leading_coefficient().str() + "*m^" + s.degree().str()};
        });

        const auto g = sum_polynomial(divisibility_summand(n)).poly;
        const auto rem = divide_exact(g, m).remainder;
        by_m.check(rem.is_zero(), [&] {
            return Counterexample{std::to_string(n), "", "0", render(rem, "m")};
        });
    }
    out.push_back(by_m_m1.take());
    out.push_back(principal.take());
    out.push_back(by_m.take());
}

}  // namespace

Suite parse_suite(std::string_view name)
{
    if (name == "identities") {
        return Suite::identities;
    }
    if (name == "oracle") {
        return Suite::oracle;
    }
    if (name == "divisibility") {
        return Suite::divisibility;
    }
    if (name == "all") {
        return Suite::all;
    }
    throw DomainError("unknown suite '" + std::string(name)
                      + "' (expected identities, oracle, divisibility or all)");
}

std::string_view suite_name(Suite suite)
{
    switch (suite) {
    case Suite::identities: return "identities";
    case Suite::oracle: return "oracle";
    case Suite::divisibility: return "divisibility";
    case Suite::all: break;
    }
    return "all";
}

std::size_t VerifyReport::passed() const
{
    std::size_t total = 0;
    for (const auto& c : checks) {
        total += c.passed;
    }
    return total;
}

std::size_t VerifyReport::failed() const
{
    std::size_t total = 0;
    for (const auto& c : checks) {
        total += c.failed;
    }
    return total;
}

VerifyReport run_verify(Suite suite, int max_n, int max_m)
{
    if (max_n < 1) {
        throw DomainError("max_n must be >= 1, got " + std::to_string(max_n));
    }
    if (max_m < 0) {
        throw DomainError("max_m must be >= 0, got " + std::to_string(max_m));
    }
    VerifyReport report;
    if (suite == Suite::identities || suite == Suite::all) {
        identities(report.checks, max_n);
    }
    if (suite == Suite::oracle || suite == Suite::all) {
        oracle(report.checks, max_n, max_m);
    }
    if (suite == Suite::divisibility || suite == Suite::all) {
        divisibility(report.checks, max_n);
    }
    return report;
}

}  // namespace polysum
