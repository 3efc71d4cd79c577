#include "cli.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

std::string fixture(const std::string& name) { return std::string(IDLAT_FIXTURES) + "/" + name; }

Result run(std::vector<std::string> args) {
    for (auto& a : args) {
        if (a.ends_with(".json") && a.find('/') == std::string::npos) {
            a = fixture(a);
        }
    }
    std::ostringstream out, err;
    const int code = idlat::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("ideal join on the two-point fixture prints Z everywhere") {
    for (const char* carrier : {"two_double_loops.json", "two_units.json"}) {
        const auto r = run({"ideal", "join", carrier, "pi1_two_points.json", "pi2_two_points.json"});
        CHECK(r.code == 0);
        CHECK(r.out == "{x}: Z\n{y}: Z\n{x, y}: Z\n");
    }
}

TEST_CASE("meet, leq and member") {
    CHECK(run({"ideal", "meet", "two_units.json", "pi1_two_points.json", "pi2_two_points.json"}).out ==
          "{x}: 6Z\n{y}: 15Z\n{x, y}: 30Z\n");
    CHECK(run({"ideal", "leq", "two_units.json", "pi1_two_points.json", "pi2_two_points.json"}).out == "false\n");
    CHECK(run({"ideal", "leq", "two_units.json", "pi1_two_points.json", "pi1_two_points.json"}).out == "true\n");
    CHECK(run({"ideal", "member", "two_double_loops.json", "pi1_two_points.json", "monomial_x.json"}).out == "true\n");
    CHECK(run({"ideal", "member", "two_double_loops.json", "pi1_two_points.json", "monomial_y.json"}).out == "false\n");
    CHECK(run({"rho", "eval", "two_double_loops.json", "pi1_two_points.json", "lasso_y.json"}).out == "3Z\n");
}

TEST_CASE("emitted pi documents re-parse to the same value") {
    const auto meet = run({"ideal", "meet", "two_units.json", "pi1_two_points.json", "pi2_two_points.json", "--format", "json"});
    REQUIRE(meet.code == 0);
    const std::string path = std::string(IDLAT_BINARY_DIR) + "/meet_roundtrip.json";
    {
        std::ofstream f(path);
        f << meet.out;
    }
    const auto again = run({"ideal", "meet", "two_units.json", path, path, "--format", "json"});
    CHECK(again.out == meet.out);
}

TEST_CASE("condition (K) reports") {
    const auto loop = run({"graph", "check-k", "single_loop.json"});
    CHECK(loop.code == 0);
    CHECK(loop.out.find("Condition (K): false") != std::string::npos);
    CHECK(run({"graph", "check-k", "loop_chain3.json"}).out.find("Condition (K): true") != std::string::npos);
}

TEST_CASE("lattice output is deterministic") {
    const auto a = run({"graph", "lattice", "loop_chain3.json", "--dot"});
    const auto b = run({"graph", "lattice", "loop_chain3.json", "--dot"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"{v2}\" -> \"{v1, v2}\"") != std::string::npos);
    CHECK(run({"graph", "lattice", "loop_chain3.json"}).out.starts_with("4 saturated hereditary sets\n"));
}

TEST_CASE("oracle compare and gpd verify") {
    const auto r = run({"oracle", "compare", "two_units.json", "--ring", "ring_z4.json"});
    CHECK(r.code == 0);
    CHECK(r.out == "9 ideals, bijection verified\n");
    const auto inline_ring = run({"oracle", "compare", "two_units.json", "--ring", R"({"kind":"Zmod","n":8})"});
    CHECK(inline_ring.out == "16 ideals, bijection verified\n");
    const auto v = run({"gpd", "verify", "two_units.json", "--ring", "ring_z4.json", "--seed", "5"});
    CHECK(v.code == 0);
    CHECK(v.out.starts_with("seed: 5\n"));
    CHECK(v.out.find("FAIL") == std::string::npos);
    const auto z2 = run({"gpd", "verify", "z2_group.json", "--ring", R"({"kind":"Zmod","n":2})"});
    CHECK(z2.code == 0);
    CHECK(z2.out.find("PASS unit-space representation kernel") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"validate", "two_units.json"}).code == 0);
    CHECK(run({"validate", "bad_groupoid.json"}).code == 1);
    const auto malformed = run({"validate", "malformed.json"});
    CHECK(malformed.code == 2);
    CHECK(malformed.err.find("malformed.json:3:") != std::string::npos);
    CHECK(run({"validate", "pointwise_sum_two_points.json", "--carrier", "two_units.json"}).code == 1);
    CHECK(run({"validate", "two_units.json", "--bogus"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const auto hyp = run({"oracle", "compare", "z2_group.json", "--ring", "ring_z4.json"});
    CHECK(hyp.code == 2);
    CHECK(hyp.err.find("not strongly effective") != std::string::npos);
    const auto k = run({"ideal", "join", "single_loop.json", "pi1_two_points.json", "pi2_two_points.json"});
    CHECK(k.code == 2);
}
