#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PHASEBOX_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("boxgf prints the polynomial") {
    RunResult r = run_cli("boxgf --n 1 --l 1 --m 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 + q\n");
}

TEST_CASE("boxgf check mode") {
    RunResult r = run_cli("boxgf --n 2 --l 2 --m 2 --check");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("equal") != std::string::npos);
}

TEST_CASE("scalar route all asserts agreement") {
    RunResult r = run_cli("scalar --n1 1 --n2 1 --m1 1 --m2 1 --route all");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 + x1*z1 + y1*v1 + x1*y1*z1*v1\n");
}

TEST_CASE("scalar single routes agree with route all") {
    std::string expected;
    for (const char* route : {"op", "pp", "schur"}) {
        RunResult r = run_cli(std::string("scalar --n1 1 --n2 2 --m1 2 --m2 1 --route ") + route);
        CHECK(r.exit_code == 0);
        if (expected.empty())
            expected = r.out;
        else
            CHECK(r.out == expected);
    }
}

TEST_CASE("schur subcommand") {
    RunResult r = run_cli("schur --mu 2,1 --vars 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x1^2*x2 + x1*x2^2\n");
    RunResult skew = run_cli("schur --mu 2,1 --vars 2 --skew 1");
    CHECK(skew.exit_code == 0);
    CHECK(skew.out == "x1^2 + 2*x1*x2 + x2^2\n");
}

TEST_CASE("json output parses against the schemas") {
    RunResult r = run_cli("--format json boxgf --n 1 --l 1 --m 1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 2);
    CHECK(j[0]["num"] == "1");
    CHECK(j[1]["exps"]["q"] == 2);

    RunResult v = run_cli("--format json verify --suite macmahon");
    CHECK(v.exit_code == 0);
    auto jv = nlohmann::json::parse(v.out);
    REQUIRE(jv.is_array());
    for (const auto& rep : jv) {
        CHECK(rep.contains("name"));
        CHECK(rep.contains("equal"));
        CHECK(rep.contains("discrepancy"));
        CHECK(rep["equal"] == true);
        CHECK(rep["discrepancy"].is_null());
    }
}

TEST_CASE("text and json agree on the underlying value") {
    RunResult t = run_cli("boxgf --n 2 --l 1 --m 2");
    RunResult j = run_cli("--format json boxgf --n 2 --l 1 --m 2");
    REQUIRE(t.exit_code == 0);
    REQUIRE(j.exit_code == 0);
    // 1 + q + 2q^2 + q^3 + q^4; reconstruct the text from the json terms
    auto arr = nlohmann::json::parse(j.out);
    std::string rebuilt;
    for (const auto& term : arr) {
        std::string coeff = term["num"].get<std::string>();
        long exp2 = term["exps"].contains("q") ? term["exps"]["q"].get<long>() : 0;
        std::string mono = exp2 == 0  ? ""
                           : exp2 == 2 ? "q"
                                       : "q^" + std::to_string(exp2 / 2);
        std::string piece = mono.empty() ? coeff : (coeff == "1" ? mono : coeff + "*" + mono);
        rebuilt += rebuilt.empty() ? piece : " + " + piece;
    }
    CHECK(t.out == rebuilt + "\n");
}

TEST_CASE("corrupted formula trips the exit-code contract") {
    RunResult r = run_cli("verify --suite macmahon --selftest-corrupt");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("UNEQUAL") != std::string::npos);
    CHECK(r.out.find("lhs=") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("boxgf --n 1 --l 1").exit_code == 2);        // missing required flag
    CHECK(run_cli("boxgf --n 1 --l 1 --m 1 --bogus").exit_code == 2);
    CHECK(run_cli("verify --suite nonsense").exit_code == 2);
    CHECK(run_cli("scalar --n1 0 --n2 1 --m1 1 --m2 1").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("verification suites run clean") {
    for (const char* suite : {"bb-commute", "lemma34", "rtt-diagnostic"}) {
        RunResult r = run_cli(std::string("verify --suite ") + suite);
        CHECK(r.exit_code == 0);
    }
    RunResult rtt = run_cli("verify --suite rtt-diagnostic");
    CHECK(rtt.out.find("rtt diagnostic: completed=yes") != std::string::npos);
}

TEST_CASE("output is deterministic across runs") {
    RunResult a = run_cli("scalar --n1 2 --n2 1 --m1 2 --m2 2 --route schur");
    RunResult b = run_cli("scalar --n1 2 --n2 1 --m1 2 --m2 2 --route schur");
    CHECK(a.out == b.out);
    RunResult ja = run_cli("--format json ucgf --max-deg 4");
    RunResult jb = run_cli("--format json ucgf --max-deg 4");
    CHECK(ja.out == jb.out);
}
