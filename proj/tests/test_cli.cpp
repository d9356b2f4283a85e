#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef PARTSAMP_CLI_BIN
#error "PARTSAMP_CLI_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PARTSAMP_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("count prints exact decimal digits") {
    CHECK(run_cli("count --n 4").out == "5\n");
    CHECK(run_cli("count --n 0").out == "1\n");
    CHECK(run_cli("count --n 100").out == "190569292\n");
    const auto table = run_cli("count --n 5 --upto");
    CHECK(contains(table.out, "# cmd: "));
    CHECK(contains(table.out, "n,p_n"));
    CHECK(contains(table.out, "5,7"));
}

TEST_CASE("exact-cdf emits the exact rational column") {
    // t chosen so floor(t sqrt(18)/pi) = 2
    const auto res = run_cli("exact-cdf --n 3 --proc 2 --grid 1.6");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "t,s,exact,exact_rational,limit,abs_error"));
    CHECK(contains(res.out, ",2/3,"));

    const auto p1 = run_cli("exact-cdf --n 3 --proc 1 --grid 0.8,9.0");
    CHECK(contains(p1.out, ",1/2,"));  // s = 1 row
    CHECK(contains(p1.out, ",1,"));    // s >= n row reaches 1
}

TEST_CASE("exact-cdf beyond the limit names the Monte Carlo alternative") {
    const auto res = run_cli("exact-cdf --n 400 --proc 1 --grid 1.0");
    CHECK(res.exit_code == 3);
    const auto res3 = run_cli("exact-cdf --n 100 --proc 3 --grid 1.0");
    CHECK(res3.exit_code == 3);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("verify --theorem 2 --n 100 --samples 0 --seed 1").exit_code == 2);
    CHECK(run_cli("count").exit_code == 2);
    CHECK(run_cli("frobnicate --n 3").exit_code == 2);
    CHECK(run_cli("diag --n 1000").exit_code == 2);
}

TEST_CASE("verify emits a deterministic JSON verdict") {
    const std::string args = "verify --theorem mult1 --n 800 --samples 20000 --seed 12 --workers 3";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "\"pass\": true"));
    CHECK(contains(a.out, "\"theorem\": \"mult1\""));

    // worker count must not affect the statistics (only the echoed command)
    const auto c = run_cli("verify --theorem mult1 --n 800 --samples 20000 --seed 12 --workers 1");
    auto ja = nlohmann::json::parse(a.out), jc = nlohmann::json::parse(c.out);
    ja.erase("command");
    jc.erase("command");
    CHECK(ja.dump() == jc.dump());
}

TEST_CASE("sample reports rejection stats and honors --method") {
    const auto res = run_cli("sample --n 300 --proc 2 --samples 500 --seed 4 --method rejection");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "\"method\": \"fristedt-rejection\""));
    const auto unr = run_cli("sample --n 300 --proc 2 --samples 500 --seed 4 --method unranking");
    CHECK(contains(unr.out, "\"method\": \"exact-unranking\""));
    CHECK(contains(unr.out, "\"trials\": 500"));
}

TEST_CASE("asym row carries solver residual and HR ratio") {
    const auto res = run_cli("asym --n 100");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "n,d_n,residual,b_val,log_g,hayman_log,hr_log,exact_log_p"));
    CHECK(contains(res.out, "1.04571"));  // HR ratio at n = 100
    const auto small = run_cli("asym --n 10");
    CHECK(small.exit_code == 0);
}

TEST_CASE("diag locality starts at ratio 1") {
    const auto res = run_cli("diag --locality --n 10000");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "theta,measured_ratio,gaussian_prediction,inside"));
    CHECK(contains(res.out, "0,1,1,1"));
}

TEST_CASE("diag concentration") {
    const auto res = run_cli("diag --concentration --n 4 --samples 10 --eps 10 --seed 1");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "4,10,10,0"));
}
