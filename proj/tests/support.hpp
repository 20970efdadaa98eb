#pragma once

// Test-only generators and reference oracles. Nothing here calls into the
// summation/basis/powersum code paths it is used to check.

#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "polysum/poly.hpp"

namespace polysum::testing {

/// p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rational random_rational(std::mt19937_64& rng, long max_num, long max_den)
{
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

/// Degree drawn uniformly from 0..max_degree, then dense random coefficients.
inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, long max_num,
                                    long max_den)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng);
    std::vector<Rational> coeffs;
    for (int j = 0; j <= d; ++j) {
        coeffs.push_back(random_rational(rng, max_num, max_den));
    }
    return Polynomial(std::move(coeffs));
}

/// Term-by-term evaluation with explicit powers (no Horner).
inline Rational eval_by_terms(const Polynomial& p, const Rational& t)
{
    Rational total;
    Rational power = 1;
    for (const auto& c : p.coefficients()) {
        total += c * power;
        power *= t;
    }
    return total;
}

/// 1^n + ... + m^n by repeated integer multiplication.
inline Integer brute_power_sum(int n, long m)
{
    Integer total = 0;
    for (long x = 1; x <= m; ++x) {
        Integer term = 1;
        for (int k = 0; k < n; ++k) {
            term *= x;
        }
        total += term;
    }
    return total;
}

/// "n<TAB>rendering" lines from a golden file.
inline std::map<int, std::string> read_golden(const std::string& path)
{
    std::ifstream in(path);
    std::map<int, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            continue;
        }
        out[std::stoi(line.substr(0, tab))] = line.substr(tab + 1);
    }
    return out;
}

}  // namespace polysum::testing
