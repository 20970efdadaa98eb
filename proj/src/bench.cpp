#include "polysum/bench.hpp"

#include <chrono>
#include <limits>
#include <ostream>

#include "polysum/powersum.hpp"
#include "polysum/summation.hpp"

namespace polysum {

namespace {

template <class F>
std::int64_t fastest(int repetitions, const F& body)
{
    using clock = std::chrono::steady_clock;
    auto best = std::numeric_limits<std::int64_t>::max();
    for (int r = 0; r < repetitions; ++r) {
        const auto start = clock::now();
        body();
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count();
        best = std::min<std::int64_t>(best, elapsed);
    }
    return best;
}

}  // namespace

std::vector<BenchRow> run_bench(int n, std::span<const Integer> ms, int repetitions)
{
    if (n < 1) {
        throw DomainError("bench requires n >= 1, got " + std::to_string(n));
    }
    if (repetitions < 1) {
        throw DomainError("bench requires repetitions >= 1, got " + std::to_string(repetitions));
    }
    const Polynomial summand = Polynomial::monomial(1, static_cast<std::size_t>(n));

    std::vector<BenchRow> rows;
    for (const Integer& m : ms) {
        if (m < 1) {
            throw DomainError("bench requires m >= 1, got " + m.get_str());
        }
        Integer closed;
        const auto closed_nanos = fastest(repetitions, [&] { closed = power_sum_value(n, m); });

        Rational brute;
        const auto brute_nanos = fastest(repetitions, [&] { brute = brute_force_sum(summand, m); });

        if (brute != Rational(closed)) {
            throw ConsistencyError("closed form and brute force disagree at n = "
                                   + std::to_string(n) + ", m = " + m.get_str()
                                   + ": closed form " + closed.get_str() + ", brute force "
                                   + brute.str());
        }
        rows.push_back({n, m, "closed_form", closed_nanos, closed});
        rows.push_back({n, m, "brute_force", brute_nanos, brute.num()});
    }
    return rows;
}

void write_bench_csv(std::ostream& os, std::span<const BenchRow> rows)
{
    os << "n,m,method,nanos,value\n";
    for (const auto& row : rows) {
        os << row.n << ',' << row.m.get_str() << ',' << row.method << ',' << row.nanos << ','
           << row.value.get_str() << '\n';
    }
}

}  // namespace polysum
