#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "partikit/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = partikit::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("count: text and all three methods") {
    for (const std::string method : {"dp", "box", "quasi"}) {
        const CliResult r = cli({"count", "--weights", "2,3", "--n", "12", "--method", method});
        CHECK(r.code == 0);
        CHECK(r.out == "3\n");
        CHECK(r.err.empty());
    }
    CHECK(cli({"count", "--weights", "2,3", "--n", "1"}).out == "0\n");
    CHECK(cli({"count", "--weights", "3,5", "--n", "8", "--method", "quasi"}).out == "1\n");
    CHECK(cli({"count", "--weights", "2,3", "--n", "-5"}).out == "0\n");
}

TEST_CASE("count: json form round-trips byte-identically") {
    const CliResult r =
        cli({"count", "--weights", "2,3", "--n", "12", "--method", "box", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"count\":\"3\",\"method\":\"box\",\"n\":12,\"weights\":[2,3]}\n");

    const std::string body = r.out.substr(0, r.out.size() - 1);
    CHECK(nlohmann::json::parse(body).dump() == body);
}

TEST_CASE("count: large values print in full decimal") {
    const CliResult r = cli({"count", "--weights", "1,1,1,1,1", "--n", "1000000",
                             "--method", "box"});
    CHECK(r.code == 0);
    // C(1000004, 4): 24 digits, no scientific notation
    CHECK(r.out.size() >= 24);
    CHECK(r.out.find('e') == std::string::npos);
    CHECK(r.out.find('.') == std::string::npos);
}

TEST_CASE("poly: golden outputs") {
    CHECK(cli({"poly", "--weights", "2,3"}).out == "5/12 + 1/6·n\n");
    CHECK(cli({"poly", "--weights", "1"}).out == "1\n");
    CHECK(cli({"poly", "--weights", "3,5"}).out == "4/15 + 1/15·n\n");

    const CliResult json = cli({"poly", "--weights", "2,3", "--format", "json"});
    CHECK(json.out == "[\"5/12\",\"1/6\"]\n");
    const std::string body = json.out.substr(0, json.out.size() - 1);
    CHECK(nlohmann::json::parse(body).dump() == body);
}

TEST_CASE("constituents: residue-labelled lines") {
    const CliResult r = cli({"constituents", "--weights", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.out == "k=0: 1 + 1/6·n\n"
                   "k=1: -1/6 + 1/6·n\n"
                   "k=2: 2/3 + 1/6·n\n"
                   "k=3: 1/2 + 1/6·n\n"
                   "k=4: 1/3 + 1/6·n\n"
                   "k=5: 1/6 + 1/6·n\n");

    CHECK(cli({"constituents", "--weights", "1"}).out == "k=0: 1\n");
    CHECK(contains(cli({"constituents", "--weights", "2,2"}).out, "k=1: 0\n"));

    const CliResult json = cli({"constituents", "--weights", "2,2", "--format", "json"});
    CHECK(json.out == "{\"D\":2,\"constituents\":[[\"1\",\"1/2\"],[]]}\n");
    const std::string body = json.out.substr(0, json.out.size() - 1);
    CHECK(nlohmann::json::parse(body).dump() == body);
}

TEST_CASE("fdsum: text, json, empty arguments") {
    CHECK(cli({"fdsum", "--args", "3", "--b", "2", "--n", "0"}).out == "1/4\n");
    CHECK(cli({"fdsum", "--args", "2", "--b", "3", "--n", "0"}).out == "1/3\n");
    CHECK(cli({"fdsum", "--args", "5", "--b", "1", "--n", "0"}).out == "0\n");
    CHECK(cli({"fdsum", "--b", "5", "--n", "-1"}).out == "-1/5\n");

    const CliResult json =
        cli({"fdsum", "--args", "3", "--b", "2", "--n", "0", "--format", "json"});
    CHECK(json.out == "{\"args\":[3],\"b\":2,\"n\":0,\"value\":\"1/4\"}\n");
    const std::string body = json.out.substr(0, json.out.size() - 1);
    CHECK(nlohmann::json::parse(body).dump() == body);
}

TEST_CASE("verify: golden instance passes every check") {
    const CliResult r = cli({"verify", "--weights", "2,3", "--nmax", "500"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "[PASS] evaluator agreement (dp, box, quasi) for 0 <= n <= 500"));
    CHECK(contains(r.out, "[PASS] numerator polynomial identity"));
    CHECK(contains(r.out, "[PASS] polynomial part equals constituent average"));
    CHECK(contains(r.out, "[PASS] leading coefficient"));
    CHECK(contains(r.out, "[PASS] constituent decomposition via Fourier-Dedekind sums"));
    CHECK(contains(r.out, "all checks passed"));
    CHECK(!contains(r.out, "[FAIL]"));
}

TEST_CASE("verify: non-coprime weights skip the decomposition with a notice") {
    const CliResult r = cli({"verify", "--weights", "2,2", "--nmax", "200"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "decomposition skipped: weights not pairwise coprime"));
    CHECK(!contains(r.out, "[FAIL]"));
}

TEST_CASE("verify: coprime triple passes including the decomposition") {
    const CliResult r = cli({"verify", "--weights", "3,5,7", "--nmax", "300"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "[PASS] constituent decomposition via Fourier-Dedekind sums"));
    CHECK(contains(r.out, "all checks passed"));
}

TEST_CASE("bench: csv header and shape") {
    const CliResult r =
        cli({"bench", "--weights", "6,10,15", "--nmax", "64", "--format", "csv"});
    CHECK(r.code == 0);
    REQUIRE(contains(r.out, "n,dp_ns,box_ns,quasi_ns\n"));
    CHECK(r.out.rfind("n,dp_ns,box_ns,quasi_ns\n", 0) == 0); // header first
    // grid 1,2,4,...,64 → 7 data rows, 4 comma-separated fields each
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
        CHECK(std::count(line.begin(), line.end(), ',') == 3);
        ++rows;
    }
    CHECK(rows == 7);
}

TEST_CASE("bench: degenerate run completes with the text table") {
    const CliResult r = cli({"bench", "--weights", "1", "--nmax", "10"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "bench: weights (1), nmax 10"));
    CHECK(contains(r.out, "dp_ns"));
    CHECK(contains(r.out, "quasi_ns"));
}

TEST_CASE("usage errors exit 1") {
    CHECK(cli({"count", "--weights", "2,3"}).code == 1);            // missing --n
    CHECK(cli({"count", "--n", "3"}).code == 1);                    // missing --weights
    CHECK(cli({"count", "--weights", "2,3", "--n", "x"}).code == 1);
    CHECK(cli({"count", "--weights", "2,3", "--n", "3", "--method", "magic"}).code == 1);
    CHECK(cli({"poly", "--weights", "2,3", "--format", "xml"}).code == 1);
    CHECK(cli({"frobnicate"}).code == 1);
    CHECK(cli({}).code == 1);
}

TEST_CASE("precondition violations exit 2") {
    const CliResult bad_weight = cli({"count", "--weights", "0,3", "--n", "5"});
    CHECK(bad_weight.code == 2);
    CHECK(contains(bad_weight.err, "error: invalid weights"));

    const CliResult bad_gcd = cli({"fdsum", "--args", "6", "--b", "3", "--n", "0"});
    CHECK(bad_gcd.code == 2);
    CHECK(contains(bad_gcd.err, "gcd(6, 3) != 1"));

    CHECK(cli({"count", "--weights", "2,3", "--n", "-4", "--method", "quasi"}).code == 2);
    CHECK(cli({"poly", "--weights", "2,-3"}).code == 2);
}

TEST_CASE("help exits 0 and prints usage") {
    const CliResult r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "count"));
    CHECK(contains(r.out, "verify"));
    CHECK(contains(r.out, "bench"));
}

TEST_CASE("box guard: flag lowers the threshold, warning goes to stderr") {
    const CliResult noisy = cli(
        {"count", "--weights", "2,3", "--n", "5", "--method", "box", "--box-guard", "5"});
    CHECK(noisy.code == 0);
    CHECK(noisy.out == "1\n"); // guard never changes the answer
    CHECK(contains(noisy.err, "warning: box size 6 exceeds guard threshold 5"));

    const CliResult quiet = cli(
        {"count", "--weights", "2,3", "--n", "5", "--method", "box", "--box-guard", "6"});
    CHECK(quiet.err.empty());

    // methods that never build the box never warn
    const CliResult dp = cli({"count", "--weights", "2,3", "--n", "5", "--box-guard", "5"});
    CHECK(dp.err.empty());
}

TEST_CASE("box guard: environment variable sets the default") {
    setenv("PARTIKIT_BOX_GUARD", "5", 1);
    const CliResult noisy = cli({"poly", "--weights", "2,3"});
    CHECK(noisy.code == 0);
    CHECK(contains(noisy.err, "exceeds guard threshold 5"));

    // explicit flag wins over the environment
    const CliResult flagged = cli({"poly", "--weights", "2,3", "--box-guard", "100"});
    CHECK(flagged.err.empty());

    setenv("PARTIKIT_BOX_GUARD", "not-a-number", 1);
    const CliResult bad = cli({"poly", "--weights", "2,3"});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "PARTIKIT_BOX_GUARD"));

    unsetenv("PARTIKIT_BOX_GUARD");
    CHECK(cli({"poly", "--weights", "2,3"}).err.empty());
}

TEST_CASE("count with default method equals dp") {
    CHECK(cli({"count", "--weights", "7,9", "--n", "100"}).out ==
          cli({"count", "--weights", "7,9", "--n", "100", "--method", "dp"}).out);
}
