#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polysum/bench.hpp"
#include "polysum/cli.hpp"
#include "polysum/verify.hpp"

using namespace polysum;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("closed-form")
{
    CHECK(run({"closed-form", "--n", "2"}).out == "1/3*m^3 + 1/2*m^2 + 1/6*m\n");
    CHECK(run({"closed-form", "--n", "1"}).out == "1/2*m^2 + 1/2*m\n");

    const auto factored = run({"closed-form", "--n", "3", "--factored"});
    CHECK(factored.code == 0);
    CHECK(factored.out == "-m*(m + 1)*(-1/2 + (m + 2) - 1/4*(m + 2)*(m + 3))\n");

    const auto too_small = run({"closed-form", "--n", "2", "--factored"});
    CHECK(too_small.code == cli::kExitUsage);
    CHECK(too_small.err.find("n >= 3") != std::string::npos);

    const auto zero = run({"closed-form", "--n", "0"});
    CHECK(zero.code == cli::kExitUsage);
    CHECK(zero.err.find("sum --expr \"1\"") != std::string::npos);

    CHECK(run({"closed-form"}).code == cli::kExitUsage);
    CHECK(run({"closed-form", "--n", "abc"}).code == cli::kExitUsage);
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("sum")
{
    CHECK(run({"sum", "--expr", "x^2", "--lo", "1", "--hi", "3"}).out == "14\n");
    CHECK(run({"sum", "--expr", "2", "--lo", "1", "--hi", "10"}).out == "20\n");
    CHECK(run({"sum", "--expr", "1/2*x", "--lo", "1", "--hi", "2"}).out == "3/2\n");
    CHECK(run({"sum", "--expr", "x^3", "--lo=-2", "--hi", "2"}).out == "0\n");

    const auto symbolic = run({"sum", "--expr", "x^3 - x"});
    CHECK(symbolic.code == 0);
    CHECK(symbolic.out == "1/4*m^4 + 1/2*m^3 - 1/4*m^2 - 1/2*m\n");

    const auto bad = run({"sum", "--expr", "x +"});
    CHECK(bad.code == cli::kExitUsage);
    CHECK(bad.err.find("offset 3") != std::string::npos);

    CHECK(run({"sum", "--expr", "x", "--lo", "3", "--hi", "1"}).code == cli::kExitUsage);
    CHECK(run({"sum", "--expr", "x", "--lo", "3"}).code == cli::kExitUsage);
    CHECK(run({"sum", "--expr", "x", "--lo", "1/2", "--hi", "3"}).code == cli::kExitUsage);
}

TEST_CASE("verify")
{
    const auto ids = run({"verify", "--suite", "identities", "--max-n", "30"});
    CHECK(ids.code == 0);
    CHECK(ids.out.find("alternating_identity: 30/30 pass") != std::string::npos);

    CHECK(run({"verify", "--suite", "oracle", "--max-n", "12", "--max-m", "100"}).code == 0);
    CHECK(run({"verify", "--suite", "divisibility", "--max-n", "20"}).code == 0);
    CHECK(run({"verify", "--suite", "bogus", "--max-n", "3"}).code == cli::kExitUsage);
    CHECK(run({"verify", "--suite", "all", "--max-n", "0"}).code == cli::kExitUsage);

    const auto report = run_verify(Suite::all, 6, 20);
    CHECK(report.ok());
    CHECK(report.failed() == 0);
    CHECK(report.checks.size() == 11);
    for (const auto& c : report.checks) {
        CHECK(c.passed > 0);
        CHECK_FALSE(c.first_failure.has_value());
    }
}

TEST_CASE("json output")
{
    const auto r = run({"--json", "closed-form", "--n", "4"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["mode"] == "closed_form");
    CHECK(j["n"] == "4");
    CHECK(j["closed_form"] == "1/5*m^5 + 1/2*m^4 + 1/3*m^3 - 1/30*m");
    CHECK(j["coefficients"] == nlohmann::json::array({"0", "-1/30", "0", "1/3", "1/2", "1/5"}));

    const auto big = run({"--json", "sum", "--expr", "x^10", "--lo", "1", "--hi", "100"});
    const auto jb = nlohmann::json::parse(big.out);
    CHECK(jb["mode"] == "value");
    CHECK(jb["value"] == "959924142434241924250");

    const auto v = nlohmann::json::parse(
        run({"--json", "verify", "--suite", "identities", "--max-n", "5"}).out);
    CHECK(v["ok"] == true);
    CHECK(v["checks"][0]["passed"] == "5");

    // every leaf number is a string
    std::function<void(const nlohmann::json&)> no_numbers = [&](const nlohmann::json& node) {
        CHECK_FALSE(node.is_number());
        if (node.is_structured()) {
            for (const auto& child : node) {
                no_numbers(child);
            }
        }
    };
    no_numbers(j);
    no_numbers(jb);
    no_numbers(v);
    no_numbers(nlohmann::json::parse(
        run({"--json", "bench", "--n", "3", "--m", "5,7", "--reps", "1"}).out));
}

TEST_CASE("non-bench output is deterministic")
{
    const std::vector<std::vector<std::string>> invocations = {
        {"closed-form", "--n", "9"},
        {"--json", "closed-form", "--n", "6", "--factored"},
        {"sum", "--expr", "(x+1)^5"},
        {"--json", "verify", "--suite", "all", "--max-n", "5", "--max-m", "10"},
    };
    for (const auto& args : invocations) {
        CHECK(run(args).out == run(args).out);
    }
}

TEST_CASE("bench")
{
    const auto text = run({"bench", "--n", "5", "--m", "1,10000", "--reps", "1"});
    CHECK(text.code == 0);
    CHECK(text.out.find("closed_form") != std::string::npos);

    const std::vector<Integer> ms{1, 1000};
    const auto rows = run_bench(10, ms, 1);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].value == 1);
    CHECK(rows[1].value == 1);
    CHECK(rows[2].value == rows[3].value);

    const auto path = std::filesystem::temp_directory_path() / "polysum_bench_test.csv";
    CHECK(run({"bench", "--n", "1", "--m", "1,4", "--reps", "2", "--csv", path.string()}).code
          == 0);
    std::ifstream csv(path);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "n,m,method,nanos,value");
    std::string line;
    std::getline(csv, line);
    CHECK(line.starts_with("1,1,closed_form,"));
    CHECK(line.ends_with(",1"));
    std::filesystem::remove(path);

    CHECK(run({"bench", "--n", "0", "--m", "5"}).code == cli::kExitUsage);
    CHECK(run({"bench", "--n", "2", "--m", "0"}).code == cli::kExitUsage);
    CHECK_THROWS_AS(run_bench(2, ms, 0), DomainError);
}
