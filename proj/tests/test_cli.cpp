#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "kostantq/qpolynomial.hpp"
#include "kostantq/recurrences.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + " " + std::string(KOSTANTQ_CLI_PATH) + " " + args + " 2>&1";
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("compute renders the canonical polynomial") {
    const auto r = run_cli("compute --family B --rank 4 --method oracle --format plain");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.output) == "q^7 + 3q^6 + 8q^5 + 11q^4 + 11q^3 + 5q^2 + q");
    CHECK(r.output.find("# family=B rank=4 method=oracle degree=7 q1=40") != std::string::npos);

    const auto a1 = run_cli("compute --family A --rank 1 --method recurrence");
    CHECK(a1.exit_code == 0);
    CHECK(first_line(a1.output) == "q");
}

TEST_CASE("compute agrees across methods") {
    const auto by_recurrence = run_cli("compute --family D --rank 7 --method recurrence");
    for (const char* method : {"genfun", "closed"}) {
        const auto other =
            run_cli(std::string("compute --family D --rank 7 --method ") + method);
        CHECK(first_line(other.output) == first_line(by_recurrence.output));
    }
}

TEST_CASE("compute rejects out-of-range ranks with exit 2") {
    const auto r = run_cli("compute --family D --rank 3");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("type D requires rank >= 4") != std::string::npos);
}

TEST_CASE("compute json round-trips the coefficients") {
    const auto r = run_cli("compute --family B --rank 4 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["family"] == "B");
    CHECK(j["rank"] == 4);
    CHECK(j["method"] == "recurrence");
    CHECK(j["q1"] == "40");
    const std::vector<std::string> expected{"0", "1", "5", "11", "11", "8", "3", "1"};
    CHECK(j["coefficients"].get<std::vector<std::string>>() == expected);

    std::vector<kostantq::BigInt> coeffs;
    for (const auto& c : j["coefficients"]) coeffs.emplace_back(c.get<std::string>());
    CHECK(kostantq::QPolynomial(std::move(coeffs)) ==
          kostantq::recurrences::count({kostantq::Family::B, 4}));
}

TEST_CASE("compute csv uses ascending coefficient columns") {
    const auto r = run_cli("compute --family B --rank 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "family,rank,method,degree,q1,c0,c1,c2,c3\n"
          "B,2,recurrence,3,3,0,1,1,1\n");
}

TEST_CASE("enumerate reproduces the rank 4 type B table layout") {
    const auto r = run_cli("enumerate --family B --rank 4 --limit 100");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("# B4: 40 partitions of e1+2e2+2e3+2e4") != std::string::npos);
    for (const char* group : {"[7 parts] 1", "[6 parts] 3", "[5 parts] 8", "[4 parts] 11",
                              "[3 parts] 11", "[2 parts] 5", "[1 part] 1"}) {
        CHECK(r.output.find(group) != std::string::npos);
    }
    CHECK(r.output.find("{e1+2e2+2e3+2e4}") != std::string::npos);
    CHECK(r.output.find("{e1, e2, e2, e3, e3, e4, e4}") != std::string::npos);
}

TEST_CASE("enumerate small cases and the limit guard") {
    const auto c2 = run_cli("enumerate --family C --rank 2 --limit 10 --format csv");
    CHECK(c2.exit_code == 0);
    CHECK(c2.output ==
          "family,rank,size,parts\n"
          "C,2,3,e1 e2 e2\n"
          "C,2,2,e2 e1+e2\n"
          "C,2,1,e1+2e2\n");

    const auto blocked = run_cli("enumerate --family B --rank 8 --limit 10");
    CHECK(blocked.exit_code == 3);
    CHECK(blocked.output.find("6875") != std::string::npos);
}

TEST_CASE("series expansions") {
    const auto c = run_cli("series --family C --terms 3");
    CHECK(c.exit_code == 0);
    CHECK(c.output == "q\nq^3 + q^2 + q\nq^5 + 2q^4 + 4q^3 + 2q^2 + q\n");

    const auto b = run_cli("series --family B --terms 5 --q1");
    CHECK(b.exit_code == 0);
    CHECK(b.output == "1 3 11 40 145\n");

    const auto d = run_cli("series --family D --terms 4");
    CHECK(d.exit_code == 0);
    CHECK(d.output == "0\n0\n0\nq^5 + 3q^4 + 6q^3 + 4q^2 + q\n");

    const auto bad = run_cli("series --family A --terms 3");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify subcommand") {
    const auto ok = run_cli("verify --family C --max-rank 8 --methods oracle,closed");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("PASS") != std::string::npos);

    const auto json_run = run_cli("verify --family B --max-rank 6 --format json");
    CHECK(json_run.exit_code == 0);
    const auto j = nlohmann::json::parse(json_run.output);
    CHECK(j["status"] == "pass");
    CHECK(j["reports"][0]["family"] == "B");

    // byte-identical across runs
    CHECK(run_cli("verify --family B --max-rank 6 --format json").output == json_run.output);
}

TEST_CASE("verify honors the oracle budget environment variable") {
    const auto r = run_cli("verify --family B --max-rank 4 --methods oracle,recurrence --format json",
                           "KOSTANTQ_ORACLE_BUDGET=2");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    const auto& skips = j["reports"][0]["skips"];
    REQUIRE(skips.size() == 1);
    CHECK(skips[0]["method"] == "oracle");
    CHECK(skips[0]["ranks"][0] == 3);
    CHECK(skips[0]["ranks"][1] == 4);
}

TEST_CASE("verify config file with flag override") {
    const std::string path = "/tmp/kostantq_verify_config.txt";
    {
        std::ofstream out(path);
        out << "# verify defaults\n";
        out << "family = B\n";
        out << "max_rank = 40\n";
        out << "methods = recurrence,genfun\n";
    }
    // the flag overrides max_rank from the file
    const auto r = run_cli("verify --config " + path + " --max-rank 6 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "family,rank_lo,rank_hi,methods,status,discrepancy_rank\n"
          "B,1,6,recurrence;genfun,pass,\n");
    std::remove(path.c_str());
}

TEST_CASE("verify default configuration passes") {
    const auto r = run_cli("verify");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    for (const char* family : {"family A", "family B", "family C", "family D", "family q1"})
        CHECK(r.output.find(family) != std::string::npos);
}

TEST_CASE("series split variants") {
    const auto hooked = run_cli("series --family B --terms 3 --variant hooked");
    CHECK(hooked.exit_code == 0);
    CHECK(hooked.output == "0\nq\nq^3 + 2q^2 + q\n");
    CHECK(run_cli("series --family C --terms 3 --variant hooked").exit_code == 2);
}

TEST_CASE("unknown arguments exit 2") {
    CHECK(run_cli("compute --family B").exit_code == 2);       // missing --rank
    CHECK(run_cli("compute --family X --rank 2").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

}  // TEST_SUITE
