// End-to-end checks of the installed command line tool.  The binary path
// arrives through the CAMBRIAN_BIN environment variable set by CTest.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("CAMBRIAN_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(is), {});
}

}  // namespace

TEST_CASE("compute with agreeing engines exits zero") {
    RunResult r = run("compute --system A2 --elements all --engines ideals");
    CHECK(r.status == 0);
    CHECK(r.out.find("4") != std::string::npos);

    r = run("compute --system E8 --elements bipartite --engines cutpaths,formula");
    CHECK(r.status == 0);
    CHECK(r.out.find("1840\t1840") != std::string::npos);

    r = run("compute --system A4 --elements all --engines ideals,cutpaths,network");
    CHECK(r.status == 0);
    size_t rows = 0;
    for (size_t p = r.out.find("yes"); p != std::string::npos; p = r.out.find("yes", p + 1))
        ++rows;
    CHECK(rows == 8);
}

TEST_CASE("engine and type mismatches are reported") {
    CHECK(run("compute --system H3 --elements all --engines network").status == 2);
    CHECK(run("compute --system Q7 --engines ideals").status == 2);
    CHECK(run("compute --system A4 --elements 01 --engines ideals").status == 2);
    CHECK(run("compute --system A4 --elements all --engines formula").status == 2);
}

TEST_CASE("selectors") {
    RunResult r = run("compute --system E7 --elements min:a --engines formula --format csv");
    CHECK(r.status == 0);
    CHECK(r.out.find("472") != std::string::npos);
    r = run("compute --system H4 --elements min --engines formula,cutpaths --format csv");
    CHECK(r.status == 0);
    CHECK(r.out.find("116") != std::string::npos);
}

TEST_CASE("sweep agrees across engines and jobs") {
    RunResult seq = run("sweep --system D4 --engines ideals,cutpaths --jobs 1");
    RunResult par = run("sweep --system D4 --engines ideals,cutpaths --jobs 2");
    CHECK(seq.status == 0);
    CHECK(seq.out == par.out);
    CHECK(seq.out.find("min 22  max 25") != std::string::npos);
}

TEST_CASE("verify-tables flags the one reference mismatch") {
    RunResult r = run("verify-tables");
    CHECK(r.status == 1);
    size_t mismatches = 0;
    for (size_t p = r.out.find("MISMATCH"); p != std::string::npos;
         p = r.out.find("MISMATCH", p + 1))
        ++mismatches;
    CHECK(mismatches == 1);
    CHECK(r.out.find("E8 min:c: engine 1712, reference 1904") != std::string::npos);
    CHECK(r.out.find("ok        H3 max: engine 21, reference 21") != std::string::npos);
}

TEST_CASE("export is deterministic") {
    std::string f1 = "/tmp/cambrian_test_export_1.json";
    std::string f2 = "/tmp/cambrian_test_export_2.json";
    RunResult r1 = run("export --system A4 --what two-cover --format json --out " + f1);
    RunResult r2 = run("export --system A4 --what two-cover --format json --out " + f2);
    CHECK(r1.status == 0);
    CHECK(r2.status == 0);
    std::string a = slurp(f1), b = slurp(f2);
    CHECK(!a.empty());
    CHECK(a == b);
    CHECK(a.find("\"vertices\"") != std::string::npos);
    std::remove(f1.c_str());
    std::remove(f2.c_str());
}

TEST_CASE("heap export of the running word") {
    RunResult r = run(
        "export --system A4 --what heap --format json "
        "--word 3,2,1,2,3,4,2,3,2,1,2,3,4,3,2,1,3,2,3,4");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"covers\"") != std::string::npos);
    size_t covers = 0;
    for (size_t p = r.out.find("    ["); p != std::string::npos; p = r.out.find("    [", p + 1))
        ++covers;
    CHECK(covers >= 21);
}

TEST_CASE("debug cycle check stays green") {
    const char* bin = std::getenv("CAMBRIAN_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string("CAMBRIAN_DEBUG_FULL_CYCLE_CHECK=1 ") + bin +
                      " compute --system D4 --elements all --engines cutpaths > /dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
}
