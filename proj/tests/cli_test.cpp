#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrns/record.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef HRNS_CLI_PATH
#error "HRNS_CLI_PATH must point at the hrns binary"
#endif

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HRNS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hrns_cli_test_" + name);
}

} // namespace

TEST_CASE("ab prints the abelianization") {
    CmdResult res = run_cli("ab --r 3 --n 5 --s 2");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("order 16") != std::string::npos);
    CHECK(res.out.find("betti 0") != std::string::npos);

    res = run_cli("ab --r 1 --n 2 --s 1 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"order\":\"infinite\"") != std::string::npos);

    res = run_cli("ab --r 2 --n 3 --s 1 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find(hrns::csv_header()) != std::string::npos);
    CHECK(res.out.find("2,3,1,0,2;2,4,,,") != std::string::npos);
}

TEST_CASE("ab json output round-trips") {
    CmdResult res = run_cli("ab --r 3 --n 6 --s 2 --format json");
    REQUIRE(res.exit_code == 0);
    std::string line = res.out.substr(0, res.out.find('\n'));
    const hrns::OutputRecord rec = hrns::record_from_json_string(line);
    CHECK(rec.order == 13);
    CHECK(hrns::to_json_string(rec) == line);
}

TEST_CASE("classify spot checks through the CLI") {
    CmdResult res = run_cli("classify --r 2 --n 5 --s 2 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("ConfirmedLOG_TorusKnot") != std::string::npos);
    CHECK(res.out.find("a^5=b^2") != std::string::npos);

    res = run_cli("classify --r 4 --n 2 --s 2");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("ConfirmedLOG_InfiniteCyclic") != std::string::npos);

    res = run_cli("classify --r 6 --n 8 --s 4 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("HALF_PARAMS_NOT_PERFECT,5") != std::string::npos);
}

TEST_CASE("usage errors exit 1 with no partial output") {
    for (const char* bad : {"ab --r 0 --n 5 --s 2", "ab --r 3 --n 1 --s 2",
                            "ab --r 3 --n 5 --s -1", "ab --r x --n 5 --s 2",
                            "ab --n 5 --s 2", "verify --suite nosuch", "nosuchcmd",
                            "ab --r 3 --n 5 --s 2 --format yaml"}) {
        CmdResult res = run_cli(bad);
        CHECK(res.exit_code == 1);
        CHECK(res.out.empty());
    }
}

TEST_CASE("search writes a report file and a summary") {
    const auto path = temp_file("report.json");
    std::filesystem::remove(path);
    CmdResult res = run_cli("search --r-max 4 --n-max 12 --s-max 4 --out " + path.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("0 conjecture-relevant perfect triples") != std::string::npos);
    REQUIRE(std::filesystem::exists(path));
    const std::string body = slurp(path);
    CHECK(body.find("\"triples_examined\": 176") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("search --jobs does not change the report bytes") {
    const auto p1 = temp_file("jobs1.json");
    const auto p4 = temp_file("jobs4.json");
    CHECK(run_cli("search --r-max 5 --n-max 10 --s-max 5 --jobs 1 --out " + p1.string()).exit_code == 0);
    CHECK(run_cli("search --r-max 5 --n-max 10 --s-max 5 --jobs 4 --out " + p4.string()).exit_code == 0);
    const std::string b1 = slurp(p1);
    CHECK_FALSE(b1.empty());
    CHECK(b1 == slurp(p4));
    std::filesystem::remove(p1);
    std::filesystem::remove(p4);
}

TEST_CASE("search csv format uses the record schema") {
    const auto path = temp_file("report.csv");
    CmdResult res = run_cli("search --r-max 3 --n-max 6 --s-max 3 --format csv --out " + path.string());
    CHECK(res.exit_code == 0);
    const std::string body = slurp(path);
    CHECK(body.rfind(hrns::csv_header() + "\n", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("unwritable report path exits 2") {
    CmdResult res = run_cli("search --r-max 2 --n-max 4 --s-max 2 --out /nonexistent-dir/x.json");
    CHECK(res.exit_code == 2);
}

TEST_CASE("verify suites pass and exit 0") {
    for (const char* suite : {"verify --suite thmB --r-max 5 --n-max 8 --s-max 5",
                              "verify --suite lemma41 --r-max 5 --n-max 8 --s-max 5",
                              "verify --suite shift --r-max 4 --n-max 8 --s-max 4",
                              "verify --suite freeprod --r-max 6 --n-max 8 --s-max 6",
                              "verify --suite detxcheck --n-max 8 --samples 60"}) {
        CmdResult res = run_cli(suite);
        CHECK(res.exit_code == 0);
        CHECK(res.out.find("-> PASS") != std::string::npos);
    }
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("ab --help").exit_code == 0);
}
