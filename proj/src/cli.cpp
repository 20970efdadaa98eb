#include "polysum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polysum/bench.hpp"
#include "polysum/expr_parser.hpp"
#include "polysum/powersum.hpp"
#include "polysum/summation.hpp"
#include "polysum/verify.hpp"

namespace polysum::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad invocation detected after CLI11 accepted the arguments.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json coefficient_array(const Polynomial& p)
{
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) {
        arr.push_back(c.str());
    }
    return arr;
}

Integer parse_integer_arg(const std::string& text, const char* what)
{
    try {
        const Rational r = Rational::parse(text);
        if (r.is_integer()) {
            return r.num();
        }
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
}

struct Options {
    bool json = false;

    int closed_n = 0;
    bool factored = false;

    std::string expr;
    std::optional<std::string> lo;
    std::optional<std::string> hi;

    std::string suite;
    int max_n = 0;
    int max_m = 100;

    int bench_n = 0;
    std::vector<std::string> bench_ms;
    int reps = 3;
    std::string csv_path;
};

int closed_form(const Options& o, std::ostream& out)
{
    if (o.closed_n == 0) {
        throw UsageError("n must be >= 1; for the sum of x^0 use: polysum sum --expr \"1\"");
    }
    if (o.closed_n < 0) {
        throw UsageError("n must be >= 1, got " + std::to_string(o.closed_n));
    }
    if (o.factored && o.closed_n < 3) {
        throw UsageError("the factored form m(m+1)(-1/2 + ...) requires n >= 3, got n = "
                         + std::to_string(o.closed_n));
    }
    const Polynomial expanded = power_sum_closed_form(o.closed_n);
    std::optional<FactoredPowerSum> factored;
    if (o.factored) {
        factored = power_sum_factored_form(o.closed_n);
    }

    if (o.json) {
        Json j;
        j["mode"] = "closed_form";
        j["n"] = std::to_string(o.closed_n);
        j["format"] = o.factored ? "factored" : "expanded";
        j["variable"] = "m";
        j["closed_form"] = factored ? factored->render("m") : render(expanded, "m");
        j["expanded"] = render(expanded, "m");
        j["coefficients"] = coefficient_array(expanded);
        if (factored) {
            j["sign"] = std::to_string(factored->sign);
            Json a = Json::array();
            for (const auto& c : factored->a) {
                a.push_back(c.str());
            }
            j["a"] = a;
        }
        out << j.dump(2) << '\n';
    } else {
        out << (factored ? factored->render("m") : render(expanded, "m")) << '\n';
    }
    return kExitSuccess;
}

int sum(const Options& o, std::ostream& out)
{
    if (o.lo.has_value() != o.hi.has_value()) {
        throw UsageError("--lo and --hi must be given together");
    }
    const Polynomial f = expr::parse_polynomial(o.expr);

    if (o.lo) {
        const Integer lo = parse_integer_arg(*o.lo, "--lo");
        const Integer hi = parse_integer_arg(*o.hi, "--hi");
        if (lo > hi) {
            throw UsageError("--lo " + lo.get_str() + " exceeds --hi " + hi.get_str());
        }
        const Rational value = sum_range(f, lo, hi);
        if (o.json) {
            Json j;
            j["mode"] = "value";
            j["expr"] = o.expr;
            j["lo"] = lo.get_str();
            j["hi"] = hi.get_str();
            j["value"] = value.str();
            out << j.dump(2) << '\n';
        } else {
            out << value.str() << '\n';
        }
        return kExitSuccess;
    }

    const auto g = sum_polynomial(f);
    if (o.json) {
        Json j;
        j["mode"] = "closed_form";
        j["expr"] = o.expr;
        j["variable"] = "m";
        j["closed_form"] = render(g.poly, "m");
        j["coefficients"] = coefficient_array(g.poly);
        out << j.dump(2) << '\n';
    } else {
        out << render(g.poly, "m") << '\n';
    }
    return kExitSuccess;
}

int verify(const Options& o, std::ostream& out)
{
    Suite suite{};
    try {
        suite = parse_suite(o.suite);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    if (o.max_n < 1) {
        throw UsageError("--max-n must be >= 1");
    }
    if (o.max_m < 0) {
        throw UsageError("--max-m must be >= 0");
    }
    const auto report = run_verify(suite, o.max_n, o.max_m);

    if (o.json) {
        Json j;
        j["mode"] = "verify";
        j["suite"] = std::string(suite_name(suite));
        j["max_n"] = std::to_string(o.max_n);
        j["max_m"] = std::to_string(o.max_m);
        Json checks = Json::array();
        for (const auto& c : report.checks) {
            Json row;
            row["name"] = c.name;
            row["passed"] = std::to_string(c.passed);
            row["failed"] = std::to_string(c.failed);
            if (c.first_failure) {
                const auto& f = *c.first_failure;
                row["counterexample"] = {
                    {"n", f.n}, {"m", f.m}, {"expected", f.expected}, {"got", f.got}};
            }
            checks.push_back(row);
        }
        j["checks"] = checks;
        j["passed"] = std::to_string(report.passed());
        j["failed"] = std::to_string(report.failed());
        j["ok"] = report.ok();
        out << j.dump(2) << '\n';
    } else {
        for (const auto& c : report.checks) {
            out << c.name << ": " << c.passed << '/' << (c.passed + c.failed)
                << (c.failed == 0 ? " pass" : " FAIL") << '\n';
            if (c.first_failure) {
                const auto& f = *c.first_failure;
                out << "  counterexample: n=" << f.n;
                if (!f.m.empty()) {
                    out << " m=" << f.m;
                }
                out << " expected=" << f.expected << " got=" << f.got << '\n';
            }
        }
        out << "total: " << report.passed() << '/' << (report.passed() + report.failed())
            << (report.ok() ? " pass" : " FAIL") << '\n';
    }
    return report.ok() ? kExitSuccess : kExitVerificationFailure;
}

int bench(const Options& o, std::ostream& out)
{
    if (o.bench_n < 1) {
        throw UsageError("--n must be >= 1");
    }
    if (o.reps < 1) {
        throw UsageError("--reps must be >= 1");
    }
    std::vector<Integer> ms;
    for (const auto& text : o.bench_ms) {
        Integer m = parse_integer_arg(text, "--m");
        if (m < 1) {
            throw UsageError("--m values must be >= 1, got " + m.get_str());
        }
        ms.push_back(std::move(m));
    }
    if (ms.empty()) {
        throw UsageError("--m needs at least one value");
    }

    std::vector<BenchRow> rows;
    try {
        rows = run_bench(o.bench_n, ms, o.reps);
    } catch (const ConsistencyError& e) {
        out << "MISMATCH " << e.what() << '\n';
        return kExitVerificationFailure;
    }

    if (!o.csv_path.empty()) {
        std::ofstream csv(o.csv_path);
        if (!csv) {
            throw UsageError("cannot write " + o.csv_path);
        }
        write_bench_csv(csv, rows);
    }

    if (o.json) {
        Json j;
        j["mode"] = "bench";
        j["n"] = std::to_string(o.bench_n);
        j["repetitions"] = std::to_string(o.reps);
        Json arr = Json::array();
        for (const auto& row : rows) {
            arr.push_back({{"n", std::to_string(row.n)},
                           {"m", row.m.get_str()},
                           {"method", row.method},
                           {"nanos", std::to_string(row.nanos)},
                           {"value", row.value.get_str()},
                           {"match", true}});
        }
        j["rows"] = arr;
        out << j.dump(2) << '\n';
        return kExitSuccess;
    }

    std::size_t m_width = 1;
    for (const auto& row : rows) {
        m_width = std::max(m_width, row.m.get_str().size());
    }
    out << std::left << std::setw(4) << "n" << "  " << std::setw(static_cast<int>(m_width)) << "m"
        << "  " << std::setw(11) << "method" << "  " << std::right << std::setw(14) << "nanos"
        << "  " << "match" << "  " << "value" << '\n';
    for (const auto& row : rows) {
        out << std::left << std::setw(4) << row.n << "  " << std::setw(static_cast<int>(m_width))
            << row.m.get_str() << "  " << std::setw(11) << row.method << "  " << std::right
            << std::setw(14) << row.nanos << "  " << "yes  " << "  " << row.value.get_str()
            << '\n';
    }
    return kExitSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact closed-form sums of polynomial values over integer ranges", "polysum"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Structured JSON output");

    auto* closed_cmd = app.add_subcommand("closed-form", "Print S_n(m) = 1^n + ... + m^n");
    closed_cmd->add_option("--n", o.closed_n, "Exponent n >= 1")->required();
    closed_cmd->add_flag("--factored", o.factored, "m(m+1)(...) form, n >= 3");

    auto* sum_cmd = app.add_subcommand("sum", "Sum a polynomial over x = lo..hi, or symbolically");
    sum_cmd->add_option("--expr", o.expr, "Polynomial in one variable, e.g. \"x^3 - x\"")
        ->required();
    sum_cmd->add_option("--lo", o.lo, "Lower bound (inclusive)");
    sum_cmd->add_option("--hi", o.hi, "Upper bound (inclusive)");

    auto* verify_cmd = app.add_subcommand("verify", "Run an identity / oracle suite");
    verify_cmd->add_option("--suite", o.suite, "identities | oracle | divisibility | all")
        ->required();
    verify_cmd->add_option("--max-n", o.max_n, "Largest exponent checked")->required();
    verify_cmd->add_option("--max-m", o.max_m, "Largest m for oracle checks")
        ->capture_default_str();

    auto* bench_cmd = app.add_subcommand("bench", "Closed form vs brute-force timing");
    bench_cmd->add_option("--n", o.bench_n, "Exponent n >= 1")->required();
    bench_cmd->add_option("--m", o.bench_ms, "Comma-separated upper bounds")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--reps", o.reps, "Repetitions per timing")->capture_default_str();
    bench_cmd->add_option("--csv", o.csv_path, "Also write n,m,method,nanos,value CSV here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (closed_cmd->parsed()) {
            return closed_form(o, out);
        }
        if (sum_cmd->parsed()) {
            return sum(o, out);
        }
        if (verify_cmd->parsed()) {
            return verify(o, out);
        }
        return bench(o, out);
    } catch (const ParseError& e) {
        err << "parse error " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConsistencyError& e) {
        err << "internal consistency check failed: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
}

}  // namespace polysum::cli
