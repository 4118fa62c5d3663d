#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "permv/cli.hpp"
#include "permv/shapes.hpp"

using namespace permv;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Subprocess runs for behavior that depends on the process environment.
int run_bin(const std::string& shell_tail) {
    const char* bin = std::getenv("PERMV_BIN");
    REQUIRE(bin != nullptr);
    int status = std::system((shell_tail + " >/dev/null 2>&1").insert(0, std::string(bin) + " ")
                                 .c_str());
    return WEXITSTATUS(status);
}

int run_env(const std::string& env, const std::string& tail) {
    const char* bin = std::getenv("PERMV_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = env + " " + std::string(bin) + " " + tail + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

} // namespace

TEST_CASE("gb prints the quoted hankel 2x3 basis") {
    RunResult r = run({"gb", "--shape", "hankel:2x3", "--format", "text"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("x_1*x_3+x_2^2") != std::string::npos);
    CHECK(r.out.find("x_2^4") != std::string::npos);
    CHECK(r.out.find("x_3^4") != std::string::npos);
}

TEST_CASE("ideal output round-trips through the parser") {
    RunResult r = run({"ideal", "--shape", "generic:2x3", "--format", "text"});
    CHECK(r.code == cli::kExitOk);
    ShapeSpec shape = ShapeSpec::parse("generic:2x3");
    Ideal I = permanental_ideal(shape);
    MonomialOrder order = shape_order(shape);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        Polynomial p = parse_polynomial(line, I.ring(), order);
        CHECK(std::find(I.generators().begin(), I.generators().end(), p) !=
              I.generators().end());
        ++count;
    }
    CHECK(count == I.generators().size());
}

TEST_CASE("nf reports membership") {
    RunResult member = run({"nf", "--shape", "hankel:3x6", "--poly", "x_5^2"});
    CHECK(member.code == cli::kExitOk);
    CHECK(member.out.find("\"member\": true") != std::string::npos);

    RunResult non = run({"nf", "--shape", "hankel:3x6", "--poly", "x_5", "--format", "text"});
    CHECK(non.code == cli::kExitOk);
    CHECK(non.out.find("x_5") != std::string::npos);
}

TEST_CASE("colon subcommand") {
    RunResult r =
        run({"colon", "--shape", "hankel:3x6", "--by", "x_5", "--format", "text"});
    CHECK(r.code == cli::kExitOk);
    // the colon is (x_1, ..., x_7); x_8 stays out
    for (int k = 1; k <= 7; ++k)
        CHECK(r.out.find("x_" + std::to_string(k)) != std::string::npos);
    CHECK(r.out.find("x_8") == std::string::npos);

    CHECK(run({"colon", "--shape", "hankel:3x6"}).code == cli::kExitUsage);
    CHECK(run({"colon", "--shape", "hankel:3x6", "--by", "x_5", "--by-ideal", "x_1"}).code ==
          cli::kExitUsage);
}

TEST_CASE("alpha subcommand") {
    RunResult r =
        run({"alpha", "--shape", "generic:2x3", "--by-ideal", "x_1_1", "--max-degree", "4"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("\"alpha\": 2") != std::string::npos);
    CHECK(r.out.find("\"element\"") != std::string::npos);
}

TEST_CASE("vnumber subcommand exit codes and payload") {
    RunResult r = run({"vnumber", "--shape", "hankel:2x3"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("\"status\": \"exact\"") != std::string::npos);
    CHECK(r.out.find("\"v\": 3") != std::string::npos);
    CHECK(r.out.find("\"verified\": true") != std::string::npos);
    CHECK(r.out.find("elapsed_ms") == std::string::npos); // timings only on request

    RunResult timed = run({"vnumber", "--shape", "hankel:2x3", "--timings"});
    CHECK(timed.out.find("elapsed_ms") != std::string::npos);
}

TEST_CASE("table is byte-identical at a fixed seed") {
    std::vector<std::string> args = {"table", "--shapes", "generic:2x3", "--shapes",
                                     "hankel:2x4", "--seed", "7"};
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"pass\": true") != std::string::npos);

    RunResult csv = run({"table", "--shapes", "generic:2x3", "--format", "csv"});
    CHECK(csv.code == cli::kExitOk);
    CHECK(csv.out.find("generic:2x3") != std::string::npos);
}

TEST_CASE("verify single-check selection") {
    RunResult r = run({"verify", "--check", "colon:hankel:3x6:x5"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
    CHECK(run({"verify", "--check", "no:such:check"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"gb"}).code == cli::kExitUsage);                          // missing --shape
    CHECK(run({"gb", "--shape", "generic:1x3"}).code == cli::kExitUsage);
    CHECK(run({"gb", "--shape", "bogus:2x2"}).code == cli::kExitUsage);
    CHECK(run({"gb", "--shape", "generic:2x2", "--order", "grevlex"}).code == cli::kExitUsage);
    CHECK(run({"gb", "--shape", "generic:2x2", "--char", "6"}).code == cli::kExitUsage);
    CHECK(run({"vnumber", "--shape", "hankel:3x6:t=3"}).code == cli::kExitUsage);
    CHECK(run({"nf", "--shape", "generic:2x2", "--poly", "x_1_1 +"}).code == cli::kExitUsage);
    CHECK(run({"gb", "--shape", "generic:2x2", "--format", "yaml"}).code == cli::kExitUsage);
}

TEST_CASE("resource caps exit with code 3") {
    std::ostringstream out, err;
    int code = cli::run({"gb", "--shape", "generic:9x9"}, out, err);
    CHECK(code == cli::kExitCap);
    CHECK(err.str().find("resource cap") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    RunResult r = run({"--help"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("vnumber") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
    std::string path = "/tmp/permv_test_out.json";
    std::remove(path.c_str());
    RunResult r = run({"vnumber", "--shape", "generic:2x3", "--out", path});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str().find("\"v\": 2") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("custom lex order permutation is accepted") {
    RunResult r = run({"gb", "--shape", "hankel:2x3", "--order", "lex:3,2,1,0", "--format",
                       "text"});
    CHECK(r.code == cli::kExitOk);
    CHECK(!r.out.empty());
}

TEST_CASE("environment variables configure the binary") {
    CHECK(run_env("PERMV_CHAR=5", "vnumber --shape hankel:2x3") == cli::kExitOk);
    CHECK(run_env("PERMV_CHAR=4", "gb --shape generic:2x2") == cli::kExitUsage);
    CHECK(run_env("PERMV_CHAR=2", "vnumber --shape generic:3x3") == cli::kExitOk);
    CHECK(run_bin("verify --check nonmember:hankel:3x6:x5") == cli::kExitOk);
}
