#include <catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "genwt/fixtures.hpp"
#include "genwt/json_io.hpp"

using namespace genwt;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs the installed binary with stdout+stderr captured; `env` is a shell
// prefix like "GENWT_MAX_VISITS=50 ".
RunResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    std::string capture = "cli_capture_" + std::to_string(::getpid()) + "_" +
                          std::to_string(counter++) + ".txt";
    std::string cmd = env + std::string(GENWT_CLI_PATH) + " " + args + " >" + capture + " 2>&1";
    int raw = std::system(cmd.c_str());
    int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(capture);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(capture.c_str());
    return {code, buf.str()};
}

bool has(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("weights on the sum-rank toy fixture") {
    RunResult r = run_cli("weights --fixture srk-toy --family srk-msoa:2");
    INFO(r.out);
    CHECK(r.exit_code == 0);
    CHECK(has(r.out, "values: [2,2,6]"));
    CHECK(has(r.out, "gsr values:"));
}

TEST_CASE("weights mds cover of a dual fixture") {
    RunResult r = run_cli("weights --fixture c2-8-4-7-dual --family mds");
    INFO(r.out);
    CHECK(r.exit_code == 0);
    CHECK(has(r.out, "values: [1,2,4,5]"));
}

TEST_CASE("weights rejects the zero code") {
    RunResult r = run_cli("weights --fixture zero --family soa");
    INFO(r.out);
    CHECK(r.exit_code == 2);
}

TEST_CASE("weights oracle agreement") {
    RunResult r = run_cli("weights --fixture srk-toy --family srk-msoa:2 --oracle");
    INFO(r.out);
    CHECK(r.exit_code == 0);
    CHECK(has(r.out, "oracle: match"));
}

TEST_CASE("weights json output round-trips") {
    RunResult r = run_cli("weights --fixture parity3 --family soa --witnesses --json");
    INFO(r.out);
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    WeightHierarchy back = hierarchy_from_json(j["hierarchy"]);
    CHECK(back.values == std::vector<int>{2, 3});
    CHECK(back.family == "soa");
    CHECK(j["hierarchy"]["witnesses"].size() == 2);
    OwnedCode oc = code_from_json(j["code"]);
    CHECK(oc.code == load_fixture("parity3").code);
}

TEST_CASE("weights input validation") {
    CHECK(run_cli("weights --fixture no-such-id --family soa").exit_code == 2);
    CHECK(run_cli("weights --fixture parity3 --family bogus").exit_code == 2);
    CHECK(run_cli("weights --fixture parity3").exit_code == 2);  // --family required
    CHECK(run_cli("weights --fixture parity3 --family soa --code x.json").exit_code == 2);
    CHECK(run_cli("weights --code /nonexistent.json --family soa").exit_code == 2);
    // family/space kind mismatch
    CHECK(run_cli("weights --fixture parity3 --family rank-oa").exit_code == 2);
}

TEST_CASE("budget exhaustion exits 3") {
    RunResult r = run_cli("weights --fixture c1-8-4-7 --family mds", "GENWT_MAX_VISITS=50 ");
    INFO(r.out);
    CHECK(r.exit_code == 3);
    CHECK(has(r.out, "incomplete: budget exceeded at rank"));

    RunResult d = run_cli("duality --fixture srk-toy --family srk-msoa:2", "GENWT_MAX_VISITS=50 ");
    INFO(d.out);
    CHECK(d.exit_code == 3);
}

TEST_CASE("duality on the sum-rank toy fixture") {
    RunResult r = run_cli("duality --fixture srk-toy --family srk-msoa:2");
    INFO(r.out);
    CHECK(r.exit_code == 0);
    CHECK(has(r.out, "primal values: [2,2,6]"));
    CHECK(has(r.out, "dual values: [2,2,4,6,6]"));
    CHECK(has(r.out, "{2,6}"));
    CHECK(has(r.out, "{2,4,6}"));
    CHECK(has(r.out, "duality: PASS"));
}

TEST_CASE("family-check finds the arc counterexample") {
    RunResult r = run_cli("family-check --family mds --space hamming:6 --field 7:1");
    INFO(r.out);
    CHECK(r.exit_code == 1);
    CHECK(has(r.out, "axiom 3: FAIL"));
    CHECK(has(r.out, "arc-6-3-7"));
}

TEST_CASE("family-check passes on the binary soa family") {
    RunResult r = run_cli("family-check --family soa --space hamming:4 --field 2:1 --metric");
    INFO(r.out);
    CHECK(r.exit_code == 0);
    CHECK(has(r.out, "axiom 2: PASS"));
    CHECK(has(r.out, "metric closure: yes"));
    CHECK(has(r.out, "result: PASS"));
}

TEST_CASE("classify-oa on parity3") {
    RunResult r = run_cli("classify-oa --fixture parity3");
    INFO(r.out);
    CHECK(r.exit_code == 0);
    CHECK(has(r.out, "blocks: [3]"));
    CHECK(has(r.out, "free: 0"));
    CHECK(has(r.out, "soa: no"));
}

TEST_CASE("mds-chain through a file-supplied code") {
    GF F(7);
    Space S = Space::hamming(4);
    LinearCode C = make_code(S, F, Mat(F, {{1, 1, 1, 1}, {0, 1, 2, 3}}));
    std::string path = "rs_4_2_7_" + std::to_string(::getpid()) + ".json";
    {
        std::ofstream out(path);
        out << code_to_json(C, "rs-4-2-7").dump();
    }
    RunResult r = run_cli("mds-chain --code " + path + " --witnesses");
    std::remove(path.c_str());
    INFO(r.out);
    CHECK(r.exit_code == 0);
    CHECK(has(r.out, "chain: found (5 links, step 1)"));
}

TEST_CASE("mds-chain reports the stuck dimension") {
    RunResult r = run_cli("mds-chain --fixture arc-6-3-7");
    INFO(r.out);
    CHECK(r.exit_code == 1);
    CHECK(has(r.out, "chain: none"));
    CHECK(has(r.out, "stuck: 2"));
}

TEST_CASE("reproduce single example") {
    RunResult r = run_cli("reproduce srk-toy-duality");
    INFO(r.out);
    CHECK(r.exit_code == 0);
    CHECK(has(r.out, "reproduce srk-toy-duality: PASS"));
    CHECK(has(r.out, "{2,4,6}"));
}

TEST_CASE("reproduce rejects unknown ids") {
    CHECK(run_cli("reproduce no-such-example").exit_code == 2);
    CHECK(run_cli("reproduce").exit_code == 2);
}

TEST_CASE("reproduce --all is green") {
    RunResult r = run_cli("reproduce --all");
    INFO(r.out);
    CHECK(r.exit_code == 0);
    for (const char* id : {"srk-toy-duality", "srk-triple", "complete-arc", "counterexample-gmds",
                           "parity3-oa", "gabidulin-mrd"}) {
        CHECK(has(r.out, std::string("reproduce ") + id + ": PASS"));
    }
    CHECK(has(r.out, "assumption:"));
}

TEST_CASE("fixtures listing") {
    RunResult r = run_cli("fixtures");
    INFO(r.out);
    CHECK(r.exit_code == 0);
    CHECK(has(r.out, "srk-toy"));
    CHECK(has(r.out, "arc-6-3-7"));
    CHECK(has(r.out, "k=3"));
}
