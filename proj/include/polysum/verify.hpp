#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polysum {

enum class Suite { identities, oracle, divisibility, all };

/// Throws DomainError for an unknown name.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct Counterexample {
    std::string n;
    std::string m;  // empty when the check has no m
    std::string expected;
    std::string got;
};

struct CheckResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    /// Smallest failing case in iteration order (n, then m).
    std::optional<Counterexample> first_failure;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    std::size_t passed() const;
    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
};

/// Runs every check of the suite for n = 1..max_n and, where a check
/// ranges over m, m = 0..max_m. Checks appear in a fixed order.
VerifyReport run_verify(Suite suite, int max_n, int max_m);

}  // namespace polysum
