#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ODOSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fixture(const std::string& name) {
    std::ifstream is(std::string(ODOSPEC_FIXTURES_DIR) + "/" + name, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("golden outputs") {
    SUBCASE("curve of the example pair") {
        RunResult r = run_cli("curve 'D^2' 'D^3 + D'");
        CHECK(r.exit_code == 0);
        CHECK(r.out == fixture("curve_example_b1_1.json"));
    }
    SUBCASE("curve of the cusp pair") {
        RunResult r = run_cli("curve 'D^2 - 2/(t+1)^2' 'D^3 - 3/(t+1)^2*D + 3/(t+1)^3'");
        CHECK(r.exit_code == 0);
        CHECK(r.out == fixture("curve_cusp_z1.json"));
    }
    SUBCASE("verify on the free pair") {
        RunResult r = run_cli("verify 'D^2' '2*D^3'");
        CHECK(r.exit_code == 0);
        CHECK(r.out == fixture("verify_free_23_b2.json"));
    }
    SUBCASE("divisor of the example pair") {
        RunResult r = run_cli("divisor 'D^2' 'D^3 + 7*D'");
        CHECK(r.exit_code == 0);
        CHECK(r.out == fixture("divisor_example_b1_7.json"));
    }
    SUBCASE("semigroup <2,3>") {
        RunResult r = run_cli("semigroup 2 3");
        CHECK(r.exit_code == 0);
        CHECK(r.out == fixture("semigroup_2_3.json"));
    }
    SUBCASE("inverse-g0 cusp") {
        RunResult r = run_cli("inverse-g0 --kind cusp --b1 0 --z0-inv 1");
        CHECK(r.exit_code == 0);
        CHECK(r.out == fixture("inverse_g0_cusp_z1.json"));
    }
    SUBCASE("normalize 4D^2") {
        RunResult r = run_cli("normalize '4*D^2' --root 2 --order 12");
        CHECK(r.exit_code == 0);
        CHECK(r.out == fixture("normalize_4d2.json"));
    }
}

TEST_CASE("identical inputs produce byte-identical outputs") {
    RunResult a = run_cli("curve 'D^2' 'D^3 + D'");
    RunResult b = run_cli("curve 'D^2' 'D^3 + D'");
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("exit codes are a total function of the failure class") {
    CHECK(run_cli("curve 'D^^' 'D^3'").exit_code == 2);        // parse
    CHECK(run_cli("curve 'D^2' 't*D'").exit_code == 3);        // non-commuting
    CHECK(run_cli("curve 'D^2' 'D^4'").exit_code == 4);        // non-coprime
    CHECK(run_cli("curve 'D^2' 'D^3' --order 10").exit_code == 2); // config below 4mn
    CHECK(run_cli("inverse-g0 --kind node --b1 1 --z0-inv 2").exit_code == 2); // missing c
    CHECK(run_cli("nonsense").exit_code != 0);
}

TEST_CASE("format and output options") {
    RunResult text = run_cli("semigroup 2 3 --format text");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("conductor = 2") != std::string::npos);

    const std::string path = "/tmp/odospec_cli_out_test.json";
    std::remove(path.c_str());
    RunResult r = run_cli("semigroup 2 3 --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream is(path);
    CHECK(is.good());
}
