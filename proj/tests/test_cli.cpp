#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef HYPERJAC_CLI_PATH
#error "HYPERJAC_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HYPERJAC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/hyperjac_test_") + name;
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
    return path;
}

const std::string kCurveG1 = "p = 7\ng = 1\nf = [1,0,0,1]\n";

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("add prints both routes and the verdict") {
    const std::string curve = write_temp("g1.curve", kCurveG1);
    const RunResult r = run_cli("add --curve " + curve +
                                " --d1 'u=[5,1]; v=[3]' --d2 'u=[6,1]; v=[3]' --method both");
    CAPTURE(r.output);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "explicit: u=[3,1]; v=[4]"));
    CHECK(contains(r.output, "cantor: u=[3,1]; v=[4]"));
    CHECK(contains(r.output, "verdict: AGREE"));
}

TEST_CASE("add with the default explicit method prints one divisor") {
    const std::string curve = write_temp("g1.curve", kCurveG1);
    const RunResult r =
        run_cli("add --curve " + curve + " --d1 'u=[5,1]; v=[3]' --d2 'u=[6,1]; v=[3]'");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "u=[3,1]; v=[4]"));
}

TEST_CASE("doubling with the explicit method reports the dependent system") {
    const std::string curve = write_temp("g1.curve", kCurveG1);
    const RunResult r = run_cli("add --curve " + curve +
                                " --d1 'u=[5,1]; v=[3]' --d2 'u=[5,1]; v=[3]' --method explicit");
    CAPTURE(r.output);
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "degenerate: SingularM"));
}

TEST_CASE("malformed inputs exit with the usage code") {
    const std::string bad = write_temp("bad.curve", "p = 7\nf = [1,0,0,1]\n");
    CHECK(run_cli("add --curve " + bad + " --d1 'u=[5,1]; v=[3]' --d2 'u=[6,1]; v=[3]'")
              .exit_code == 2);

    const std::string curve = write_temp("g1.curve", kCurveG1);
    CHECK(run_cli("add --curve " + curve + " --d1 'u=[5,1]' --d2 'u=[6,1]; v=[3]'").exit_code == 2);
    CHECK(run_cli("add --curve " + curve +
                  " --d1 'u=[5,1]; v=[0]' --d2 'u=[6,1]; v=[3]'")  // not on the chart
              .exit_code == 2);
    CHECK(run_cli("add --curve /does/not/exist --d1 'u=[5,1]; v=[3]' --d2 'u=[6,1]; v=[3]'")
              .exit_code == 2);
    CHECK(run_cli("add --curve " + curve +
                  " --d1 'u=[5,1]; v=[3]' --d2 'u=[6,1]; v=[3]' --method sideways")
              .exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("selftest --genus-max 40").exit_code == 2);
}

TEST_CASE("translation retry repairs the x = 0 locus from the command line") {
    const std::string curve = write_temp("g1.curve", kCurveG1);
    // d1 supports the point (0, 1), so the plain explicit route refuses
    const std::string args = "--curve " + curve + " --d1 'u=[0,1]; v=[1]' --d2 'u=[5,1]; v=[3]'";

    const RunResult plain = run_cli("add " + args);
    CHECK(plain.exit_code == 1);
    CHECK(contains(plain.output, "degenerate: ZeroOmega"));

    const RunResult retried = run_cli("add " + args + " --retry-translation --seed 2");
    CAPTURE(retried.output);
    CHECK(retried.exit_code == 0);
    CHECK(contains(retried.output, "u=[1,1]; v=[0]"));  // the branch point (6, 0)

    const RunResult oracle = run_cli("add " + args + " --method cantor");
    CHECK(contains(oracle.output, "u=[1,1]; v=[0]"));
}

TEST_CASE("sweep option validation") {
    CHECK(run_cli("selftest --modulus 10006 --genus-max 1 --trials 1").exit_code == 2);
    CHECK(run_cli("selftest --trials 0").exit_code == 2);
    CHECK(run_cli("bench --genus-max 0").exit_code == 2);
}

TEST_CASE("random can be told to keep x = 0 in play") {
    const std::string curve = write_temp("g1.curve", kCurveG1);
    const RunResult r = run_cli("random --curve " + curve + " --seed 3 --allow-zero-x");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "u="));
}

TEST_CASE("check reports membership and the cofactor") {
    const std::string curve = write_temp("g1.curve", kCurveG1);
    const RunResult good = run_cli("check --curve " + curve + " --d 'u=[5,1]; v=[3]'");
    CHECK(good.exit_code == 0);
    CHECK(contains(good.output, "on-Z: true"));
    CHECK(contains(good.output, "w=[4,2,1]"));

    const RunResult bad = run_cli("check --curve " + curve + " --d 'u=[5,1]; v=[0]'");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "on-Z: false"));
}

TEST_CASE("negation round-trips through the CLI") {
    const std::string curve = write_temp("g1.curve", kCurveG1);
    const RunResult once = run_cli("neg --curve " + curve + " --d 'u=[5,1]; v=[3]'");
    CHECK(once.exit_code == 0);
    CHECK(contains(once.output, "u=[5,1]; v=[4]"));
    const RunResult twice = run_cli("neg --curve " + curve + " --d 'u=[5,1]; v=[4]'");
    CHECK(contains(twice.output, "u=[5,1]; v=[3]"));
}

TEST_CASE("random is deterministic per seed") {
    const std::string curve = write_temp("g1.curve", kCurveG1);
    const RunResult a = run_cli("random --curve " + curve + " --seed 11");
    const RunResult b = run_cli("random --curve " + curve + " --seed 11");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "u="));
}

TEST_CASE("double agrees with the oracle route") {
    const std::string curve = write_temp("g1.curve", kCurveG1);
    const RunResult doubled = run_cli("double --curve " + curve + " --d 'u=[5,1]; v=[3]' --seed 3");
    CHECK(doubled.exit_code == 0);
    CHECK(contains(doubled.output, "u=[0,1]; v=[1]"));  // tangent at (2,3) lands on (0,1)

    const RunResult oracle = run_cli("add --curve " + curve +
                                     " --d1 'u=[5,1]; v=[3]' --d2 'u=[5,1]; v=[3]' --method cantor");
    CHECK(oracle.exit_code == 0);
    CHECK(contains(oracle.output, "u=[0,1]; v=[1]"));
}

TEST_CASE("selftest emits a schema-1 JSON report") {
    const std::string json_path = "/tmp/hyperjac_test_selftest.json";
    const RunResult r =
        run_cli("selftest --genus-max 2 --trials 5 --seed 4 --json " + json_path);
    CAPTURE(r.output);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "selftest PASSED"));

    std::ifstream in(json_path);
    REQUIRE(in.good());
    const nlohmann::json doc = nlohmann::json::parse(in);
    CHECK(doc.at("schema").get<int>() == 1);
    CHECK(doc.at("command").get<std::string>() == "selftest");
    CHECK(doc.at("total_mismatches").get<int>() == 0);
    CHECK(doc.at("rows").size() == 2);
    CHECK(doc.at("rows")[0].at("genus").get<int>() == 1);
    CHECK(doc.at("rows")[0].at("degenerate").contains("SingularM"));
}

TEST_CASE("bench emits a schema-1 JSON report") {
    const std::string json_path = "/tmp/hyperjac_test_bench.json";
    const RunResult r = run_cli("bench --genus-max 2 --trials 3 --seed 4 --json " + json_path);
    CAPTURE(r.output);
    CHECK(r.exit_code == 0);

    std::ifstream in(json_path);
    REQUIRE(in.good());
    const nlohmann::json doc = nlohmann::json::parse(in);
    CHECK(doc.at("schema").get<int>() == 1);
    CHECK(doc.at("command").get<std::string>() == "bench");
    REQUIRE(doc.at("rows").size() == 2);
    for (const auto& row : doc.at("rows")) {
        CHECK(row.at("explicit_ns").contains("median"));
        CHECK(row.at("explicit_ns").contains("p90"));
        CHECK(row.at("cantor_ns").contains("median"));
    }
}

TEST_CASE("selftest is reproducible for a fixed seed") {
    const RunResult a = run_cli("selftest --genus-max 1 --trials 3 --seed 9");
    const RunResult b = run_cli("selftest --genus-max 1 --trials 3 --seed 9");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("the full differential sweep holds at scale") {
    const RunResult r =
        run_cli("selftest --genus-max 8 --trials 200 --modulus 10007 --seed 1");
    CAPTURE(r.output);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "selftest PASSED: 0 oracle mismatches"));
}
