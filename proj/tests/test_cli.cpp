#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "forts/certify.hpp"
#include "forts/cli.hpp"
#include "fixtures.hpp"

using namespace forts;

namespace {

const char* kPetersenG6 = "IheA@GUAo";  // encode_graph6(petersen()), pinned in a test below

struct CliResult {
    int exit_code;
    Json cert;
    std::string stdout_text;
    std::string stderr_text;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    CliResult res{code, Json(), out.str(), err.str()};
    if (!res.stdout_text.empty() && res.stdout_text[0] == '{')
        res.cert = Json::parse(res.stdout_text);
    return res;
}

std::string ladder_edges_json() {
    return graph_json(fixtures::ladder8(), 0).dump();
}

std::string ladder_edges_json_one_based() {
    return graph_json(fixtures::ladder8(), 1).dump();
}

// Round-trips a certificate through the verify subcommand.
int verify_text(const std::string& cert_text) {
    std::string path = "cli_cert_tmp.json";
    {
        std::ofstream f(path);
        f << cert_text;
    }
    CliResult res = run({"verify", path});
    std::remove(path.c_str());
    return res.exit_code;
}

}  // namespace

TEST_CASE("graph6 token fixture matches the generator") {
    CHECK(encode_graph6(petersen()) == kPetersenG6);
}

TEST_CASE("zero-forcing on petersen via graph6") {
    CliResult res = run({"zero-forcing", "--graph6", kPetersenG6});
    CHECK(res.exit_code == 0);
    CHECK(res.cert["claim"]["Z"] == 5);
    CHECK(verify_text(res.stdout_text) == 0);
}

TEST_CASE("output is byte-stable") {
    CliResult a = run({"zero-forcing", "--graph6", kPetersenG6});
    CliResult b = run({"zero-forcing", "--graph6", kPetersenG6});
    CHECK(a.stdout_text == b.stdout_text);
}

TEST_CASE("minimal-forts emits twenty sets for petersen") {
    CliResult res = run({"minimal-forts", "--graph6", kPetersenG6});
    CHECK(res.exit_code == 0);
    CHECK(res.cert["claim"]["count"] == 20);
    CHECK(res.cert["claim"]["minimal"] == true);
    CHECK(verify_text(res.stdout_text) == 0);
}

TEST_CASE("tau defaults to the minimal forts of the graph") {
    CliResult res = run({"tau", "--graph6", kPetersenG6});
    CHECK(res.exit_code == 0);
    CHECK(res.cert["claim"]["tau"] == 5);
    CHECK(verify_text(res.stdout_text) == 0);
}

TEST_CASE("tau over an explicit family") {
    CliResult res = run({"tau", "--family", "[[0,1],[2,3],[4]]", "--ground-n", "5"});
    CHECK(res.exit_code == 0);
    CHECK(res.cert["claim"]["tau"] == 3);
}

TEST_CASE("compatible: violation gives exit 2 and a checkable certificate") {
    CliResult res = run({"compatible", "--graph6", kPetersenG6});
    CHECK(res.exit_code == 2);
    CHECK(res.cert["claim"]["compatible"] == false);
    CHECK(!res.cert["witness"]["violation"].is_null());
    CHECK(verify_text(res.stdout_text) == 0);
}

TEST_CASE("compatible: explicit family on the ladder") {
    CliResult res = run({"compatible", "--edges", ladder_edges_json(), "--family",
                         "[[0,3],[4,7],[1,2,5,6]]"});
    CHECK(res.exit_code == 0);
    CHECK(res.cert["claim"]["compatible"] == true);
    CHECK(verify_text(res.stdout_text) == 0);
}

TEST_CASE("y-number and bounds on the corona") {
    Json corona = graph_json(corona_k1(cycle(5)), 0);
    CliResult y = run({"y-number", "--edges", corona.dump()});
    CHECK(y.exit_code == 0);
    CHECK(y.cert["claim"]["Y"] == 2);
    CHECK(y.cert["claim"]["proven"] == true);
    CHECK(verify_text(y.stdout_text) == 0);

    CliResult b = run({"bounds", "--edges", corona.dump()});
    CHECK(b.exit_code == 0);
    CHECK(b.cert["claim"]["chain"]["ft"] == 1);
    CHECK(b.cert["claim"]["chain"]["Y"] == 2);
    CHECK(b.cert["claim"]["chain"]["Z"] == 3);
    CHECK(verify_text(b.stdout_text) == 0);
}

TEST_CASE("construct-msym: obstruction on the ladder pair, one-based labels") {
    CliResult res = run({"construct-msym", "--one-based", "--edges",
                         ladder_edges_json_one_based(), "--forts", "[[1,4,6,7],[2,3,5,8]]"});
    CHECK(res.exit_code == 2);
    CHECK(res.cert["claim"]["ok"] == false);
    CHECK(res.cert["witness"]["obstruction"]["bridge"] == Json::array({3, 6}));
    CHECK(verify_text(res.stdout_text) == 0);
}

TEST_CASE("construct-msym succeeds on the separated triple") {
    CliResult res = run({"construct-msym", "--edges", ladder_edges_json(), "--forts",
                         "[[0,3],[4,7],[1,2,5,6]]"});
    CHECK(res.exit_code == 0);
    CHECK(res.cert["claim"]["ok"] == true);
    CHECK(verify_text(res.stdout_text) == 0);
}

TEST_CASE("construct-csym on the ladder pair") {
    CliResult res = run({"construct-csym", "--edges", ladder_edges_json(), "--forts",
                         "[[0,3,5,6],[1,2,4,7]]"});
    CHECK(res.exit_code == 0);
    CHECK(verify_text(res.stdout_text) == 0);
}

TEST_CASE("forced-zeros names the bridge entry") {
    CliResult res = run({"forced-zeros", "--edges", ladder_edges_json(), "--forts",
                         "[[0,3,5,6],[1,2,4,7]]"});
    CHECK(res.exit_code == 0);
    CHECK(res.cert["claim"]["forced"] == Json::array({Json::array({2, 5})}));
    CHECK(res.cert["claim"]["realizable"] == false);
    CHECK(verify_text(res.stdout_text) == 0);
}

TEST_CASE("zsf: flow and bridge cases") {
    CliResult flow = run({"zsf", "--edges", graph_json(cycle(4), 0).dump()});
    CHECK(flow.exit_code == 0);
    CHECK(flow.cert["claim"]["exists"] == true);
    CHECK(verify_text(flow.stdout_text) == 0);

    CliResult bridge = run({"zsf", "--edges", ladder_edges_json()});
    CHECK(bridge.exit_code == 2);
    CHECK(bridge.cert["witness"]["bridge"] == Json::array({2, 5}));
    CHECK(verify_text(bridge.stdout_text) == 0);

    CliResult odd = run({"zsf", "--edges", graph_json(cycle(5), 0).dump()});
    CHECK(odd.exit_code == 1);
}

TEST_CASE("nullspace and special-basis of the ladder matrix") {
    std::string mj = matrix_json(fixtures::matrix_c()).dump();
    CliResult ns = run({"nullspace", "--matrix", mj});
    CHECK(ns.exit_code == 0);
    CHECK(ns.cert["claim"]["dimension"] == 2);
    CHECK(verify_text(ns.stdout_text) == 0);

    CliResult sb = run({"special-basis", "--matrix", mj});
    CHECK(sb.exit_code == 0);
    CHECK(sb.cert["claim"]["nullity"] == 2);
    CHECK(verify_text(sb.stdout_text) == 0);
}

TEST_CASE("embed-matroid") {
    CliResult res = run({"embed-matroid", "--ground-n", "4", "--circuits",
                         "[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]"});
    CHECK(res.exit_code == 0);
    CHECK(res.cert["claim"]["circuits_are_forts"] == true);
    CHECK(res.cert["claim"]["rank"] == 2);
    CHECK(verify_text(res.stdout_text) == 0);

    CliResult bad = run({"embed-matroid", "--ground-n", "3", "--circuits", "[[0,1],[0,1,2]]"});
    CHECK(bad.exit_code == 1);  // axiom 2 fails
}

TEST_CASE("sap-check through the CLI") {
    RationalMatrix k2(2);
    k2.at(0, 1) = 1;
    k2.at(1, 0) = 1;
    CliResult res = run({"sap-check", "--matrix", matrix_json(k2).dump()});
    CHECK(res.exit_code == 0);
    CHECK(res.cert["claim"]["has_sap"] == true);
    CHECK(verify_text(res.stdout_text) == 0);
}

TEST_CASE("petersen-audit certificate verifies") {
    CliResult res = run({"petersen-audit"});
    CHECK(res.exit_code == 0);
    CHECK(res.cert["claim"]["confirmed"] == true);
    CHECK(verify_text(res.stdout_text) == 0);
}

TEST_CASE("verify rejects tampered witnesses") {
    CliResult res = run({"tau", "--family", "[[0,1],[2,3]]", "--ground-n", "4"});
    REQUIRE(res.exit_code == 0);
    Json cert = res.cert;
    cert["witness"]["witness"] = Json::array({0});  // misses {2,3}
    CHECK(verify_text(cert.dump()) == 2);

    CliResult zf = run({"zero-forcing", "--graph6", kPetersenG6});
    Json zcert = zf.cert;
    zcert["witness"]["witness"] = Json::array({0, 1, 2, 3});
    CHECK(verify_text(zcert.dump()) == 2);
}

TEST_CASE("input errors exit 1, caps exit 3") {
    CHECK(run({"zero-forcing", "--graph6", ""}).exit_code == 1);
    CHECK(run({"zero-forcing"}).exit_code == 1);
    CHECK(run({"nonsense"}).exit_code == 1);
    CHECK(run({"forts", "--edges", graph_json(empty_graph(20), 0).dump(), "--max-forts", "10"})
              .exit_code == 3);
}

TEST_CASE("one-based output echoes paper labels") {
    CliResult res = run({"minimal-forts", "--one-based", "--edges", ladder_edges_json_one_based()});
    CHECK(res.exit_code == 0);
    bool found_f3 = false;
    for (const Json& f : res.cert["witness"]["forts"])
        if (f == Json::array({1, 4})) found_f3 = true;
    CHECK(found_f3);
    CHECK(verify_text(res.stdout_text) == 0);
}
