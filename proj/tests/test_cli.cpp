#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GTOP_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) { return std::string(GTOP_FIXTURE_DIR) + "/" + name; }

nlohmann::json strip_timing(nlohmann::json j) {
    if (j.is_object()) {
        j.erase("wall_ms");
        for (auto& [k, v] : j.items()) v = strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = strip_timing(v);
    }
    return j;
}

}  // namespace

TEST_CASE("topo command reports the demo fixture") {
    auto r = run_cli("topo " + fixture("example1.json") + " --tree e1,e2,e4,e6");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["betti"] == nlohmann::json({1, 2}));
    CHECK(j["connection_matrix"][0] == nlohmann::json({-1, 1, 0, 0, 0}));
    CHECK(j["spanning_tree"] == nlohmann::json({"e1", "e2", "e4", "e6"}));
    CHECK(j["dual_betti"] == nlohmann::json({1, 4}));
}

TEST_CASE("topo on a tree has no cycles") {
    auto r = run_cli("topo " + fixture("tree.json"));
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["betti"] == nlohmann::json({1, 0}));
    CHECK(j["fundamental_cycles"].empty());
}

TEST_CASE("self-loops are rejected with the named invariant") {
    std::string path = "/tmp/gtop_selfloop.json";
    std::ofstream out(path);
    out << R"({"vertices":["a"],"edges":[{"id":"e","tail":"a","head":"a"}]})";
    out.close();
    auto r = run_cli("topo " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("no self-loops") != std::string::npos);
}

TEST_CASE("cap violations use their own exit code") {
    auto r = run_cli("spaces " + fixture("example1.json") + " --alphabet Z2 --cap 4");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("cap") != std::string::npos);
}

TEST_CASE("spaces reports sizes over Z2 and Z3") {
    auto r2 = run_cli("spaces " + fixture("example1.json") + " --alphabet Z2");
    REQUIRE(r2.exit_code == 0);
    auto j2 = nlohmann::json::parse(r2.output);
    CHECK(j2["Z0"]["size"] == 2);
    CHECK(j2["B1"]["size"] == 16);
    CHECK(j2["Z1"]["size"] == 4);
    CHECK(j2["B0"]["size"] == 16);
    CHECK(j2["realizations"].contains("Z1"));

    auto r3 = run_cli("spaces " + fixture("example1.json") + " --alphabet Z3");
    REQUIRE(r3.exit_code == 0);
    auto j3 = nlohmann::json::parse(r3.output);
    CHECK(j3["Z0"]["size"] == 3);
    CHECK(j3["B1"]["size"] == 81);
    CHECK(j3["Z1"]["size"] == 9);
    CHECK(j3["B0"]["size"] == 81);
}

TEST_CASE("partition methods normalize to the same value") {
    auto exact = run_cli("partition " + fixture("example1_ising.json") + " --method exact");
    auto dual = run_cli("partition " + fixture("example1_ising.json") + " --method dual");
    REQUIRE(exact.exit_code == 0);
    REQUIRE(dual.exit_code == 0);
    auto je = nlohmann::json::parse(exact.output);
    auto jd = nlohmann::json::parse(dual.output);
    double ze = je["result"]["normalized"][0].get<double>();
    double zd = jd["result"]["normalized"][0].get<double>();
    CHECK(std::abs(ze - zd) <= 1e-9 * std::abs(ze));
    CHECK(jd["result"]["declared_scale"] == "2");
}

TEST_CASE("reports are byte-identical apart from timing fields") {
    std::string args = "partition " + fixture("example1_ising.json") + " --method dual";
    auto a = run_cli(args);
    auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    auto ja = strip_timing(nlohmann::json::parse(a.output));
    auto jb = strip_timing(nlohmann::json::parse(b.output));
    CHECK(ja.dump() == jb.dump());

    std::string mc = "mc " + fixture("example1_ising.json") + " --samples 2000 --seed 31";
    auto ma = strip_timing(nlohmann::json::parse(run_cli(mc).output));
    auto mb = strip_timing(nlohmann::json::parse(run_cli(mc).output));
    CHECK(ma.dump() == mb.dump());
}

TEST_CASE("csv output flattens the report") {
    auto r = run_cli("partition " + fixture("example1_ising.json") + " --method exact --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("key,value") == 0);
    CHECK(r.output.find("result.method,\"exact\"") != std::string::npos);
}

TEST_CASE("verify exits zero on a fresh build") {
    auto r = run_cli("verify --suite scale");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["pass"] == true);
}

TEST_CASE("potts and table model files parse and evaluate") {
    std::string gpath = fixture("example1.json");
    {
        std::ofstream out("/tmp/gtop_potts.json");
        out << R"({"alphabet":"Z3","graph_file":")" << gpath << R"(",
                   "weights":{"kind":"potts","beta":0.3,
                              "J":{"e1":1.0,"e2":0.5,"e3":1.0,"e4":1.0,"e5":0.5,"e6":1.0}}})";
    }
    auto exact = run_cli("partition /tmp/gtop_potts.json --method exact");
    auto dual = run_cli("partition /tmp/gtop_potts.json --method dual");
    REQUIRE(exact.exit_code == 0);
    REQUIRE(dual.exit_code == 0);
    double ze = nlohmann::json::parse(exact.output)["result"]["normalized"][0].get<double>();
    double zd = nlohmann::json::parse(dual.output)["result"]["normalized"][0].get<double>();
    CHECK(std::abs(ze - zd) <= 1e-9 * std::abs(ze));
    CHECK(nlohmann::json::parse(dual.output)["result"]["declared_scale"] == "3");

    {
        std::ofstream out("/tmp/gtop_table.json");
        out << R"({"alphabet":"Z2","graph":{"vertices":["a","b"],
                   "edges":[{"id":"e","tail":"a","head":"b"}]},
                   "weights":{"kind":"table","values":{"e":[2.0,[0.5,0.0]]}}})";
    }
    auto r = run_cli("partition /tmp/gtop_table.json --method exact");
    REQUIRE(r.exit_code == 0);
    // Z = 2*(2 + 0.5) = 5 over the four spin configurations.
    CHECK(nlohmann::json::parse(r.output)["result"]["value"][0].get<double>() == 5.0);
}

TEST_CASE("missing files and bad methods fail validation") {
    CHECK(run_cli("topo /tmp/does_not_exist_gtop.json").exit_code == 1);
    CHECK(run_cli("partition " + fixture("example1_ising.json") + " --method warp").exit_code == 1);
    // Field methods on a field-free model are incompatible.
    CHECK(run_cli("partition " + fixture("example1_ising.json") + " --method field-dual").exit_code ==
          1);
}
