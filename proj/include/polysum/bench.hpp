#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polysum/exactnum.hpp"

namespace polysum {

struct BenchRow {
    int n = 0;
    Integer m;
    std::string method;  // "closed_form" or "brute_force"
    std::int64_t nanos = 0;  // fastest of the repetitions
    Integer value;
};

/// Times power_sum_value against brute_force_sum of x^n at each m. Throws
/// ConsistencyError with the counterexample as soon as the two disagree.
std::vector<BenchRow> run_bench(int n, std::span<const Integer> ms, int repetitions);

/// "n,m,method,nanos,value" header plus one line per row.
void write_bench_csv(std::ostream& os, std::span<const BenchRow> rows);

}  // namespace polysum
