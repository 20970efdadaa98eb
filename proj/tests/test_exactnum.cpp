#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "polysum/exactnum.hpp"

using namespace polysum;

namespace {

// Reference model: plain int64 fractions, reduced with std::gcd.
struct SmallFraction {
    std::int64_t num;
    std::int64_t den;

    SmallFraction(std::int64_t n, std::int64_t d)
    {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const auto g = std::gcd(n < 0 ? -n : n, d);
        num = n / g;
        den = d / g;
    }
};

SmallFraction operator+(SmallFraction a, SmallFraction b)
{
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}
SmallFraction operator-(SmallFraction a, SmallFraction b)
{
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}
SmallFraction operator*(SmallFraction a, SmallFraction b) { return {a.num * b.num, a.den * b.den}; }
SmallFraction operator/(SmallFraction a, SmallFraction b) { return {a.num * b.den, a.den * b.num}; }

bool same(const Rational& r, SmallFraction f)
{
    return r.num() == Integer(static_cast<long>(f.num)) && r.den() == Integer(static_cast<long>(f.den));
}

}  // namespace

TEST_CASE("rational arithmetic examples")
{
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-1, 2) * Rational(-1, 3) == Rational(1, 6));
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(0, -7).str() == "0");
    CHECK(Rational(0, -7).den() == 1);
    CHECK(Rational(6, 3).str() == "2");
    CHECK(neg(Rational(3, 4)) == Rational(-3, 4));
    CHECK(sub(Rational(1), Rational(1, 3)) == Rational(2, 3));
    CHECK(div(Rational(1, 2), Rational(3, 4)) == Rational(2, 3));
    CHECK(pow(Rational(-2, 3), Integer(3)) == Rational(-8, 27));
    CHECK(pow(Rational(0), Integer(0)) == Rational(1));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(compare(Rational(-1, 2), Rational(-1, 3)) == std::strong_ordering::less);
    CHECK(is_zero(Rational(0, 5)));
    CHECK_FALSE(is_zero(Rational(1, 5)));
}

TEST_CASE("rational errors")
{
    CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
    CHECK_THROWS_AS(pow(Rational(2), Integer(-1)), DomainError);
}

TEST_CASE("rational parse and serialization")
{
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse("4/6").str() == "2/3");
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(Rational::parse("-0") .str() == "0");
    CHECK_THROWS_AS(Rational::parse("1/0"), ArithmeticError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), DomainError);
    CHECK_THROWS_AS(Rational::parse("x"), DomainError);
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/"), DomainError);
}

TEST_CASE("factorial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    Integer product = 1;
    for (long k = 1; k <= 20; ++k) {
        product *= k;
    }
    CHECK(product == Integer("2432902008176640000"));
    CHECK(factorial(20) == product);
    for (long k = 1; k <= 30; ++k) {
        CHECK(factorial(k) == k * factorial(k - 1));
    }
    CHECK_THROWS_AS(factorial(-1), DomainError);
}

TEST_CASE("binomial")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(4, 5) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), DomainError);

    // Pascal's triangle oracle
    std::vector<Integer> row{1};
    for (int n = 1; n <= 40; ++n) {
        std::vector<Integer> next(row.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t k = 1; k < row.size(); ++k) {
            next[k] = row[k - 1] + row[k];
        }
        row = std::move(next);
        for (int k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == row[k]);
        }
        if (n == 30) {
            CHECK(row[15] == 155117520);
        }
    }
    for (int n = 2; n <= 40; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("arithmetic matches the small-int model")
{
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::int64_t> num(-50, 50);
    std::uniform_int_distribution<std::int64_t> den(1, 50);
    for (int trial = 0; trial < 5000; ++trial) {
        const SmallFraction fa(num(rng), den(rng));
        const SmallFraction fb(num(rng), den(rng));
        const Rational a(Integer(static_cast<long>(fa.num)), Integer(static_cast<long>(fa.den)));
        const Rational b(Integer(static_cast<long>(fb.num)), Integer(static_cast<long>(fb.den)));
        CHECK(same(a + b, fa + fb));
        CHECK(same(a - b, fa - fb));
        CHECK(same(a * b, fa * fb));
        if (fb.num != 0) {
            CHECK(same(a / b, fa / fb));
        }
        CHECK(((a < b) == (fa.num * fb.den < fb.num * fa.den)));
        for (const Rational& r : {a + b, a * b, a - b}) {
            CHECK(r.den() > 0);
            Integer g;
            mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("concurrent use matches sequential results")
{
    std::vector<Integer> expected;
    for (int k = 0; k < 200; ++k) {
        expected.push_back(factorial(k) / binomial(k + 3, 2));
    }
    std::vector<std::vector<Integer>> got(4);
    std::vector<std::thread> workers;
    for (auto& slot : got) {
        workers.emplace_back([&slot] {
            for (int k = 0; k < 200; ++k) {
                slot.push_back(factorial(k) / binomial(k + 3, 2));
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    for (const auto& slot : got) {
        CHECK(slot == expected);
    }
}
