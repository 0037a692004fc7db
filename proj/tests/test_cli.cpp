#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace qaff;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("qaff_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("drinfeld polynomials from the command line") {
    Run r = cli({"drinfeld", "--n", "2", "--segments", "1@0:1,1@4:1"});
    CHECK(r.code == 0);
    CHECK(r.out == "P_1(u) = (u - 1)(u - q^-2)\nP_2(u) = 1\n");
    Run j = cli({"drinfeld", "--n", "2", "--segments", "1@0:1,1@4:1", "--json"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["degrees"] == nlohmann::json::array({2, 0}));
    CHECK(doc["polys"][1] == nlohmann::json::array({"1"}));
}

TEST_CASE("usage errors exit with 2") {
    Run r = cli({"build", "--segments", "1@0:0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("column 5") != std::string::npos);
    CHECK(cli({"drinfeld", "--n", "2", "--segments", "1@0:3"}).code == 2);
    CHECK(cli({"check", "prop-9.9"}).code == 2);
    CHECK(cli({"check", "eq-12", "--backend", "float"}).code == 2);
    CHECK(cli({"relations", "--module-file", "/nonexistent/file.json"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"isomorphic", "--module-file", "a.json"}).code == 2);
    CHECK(cli({"drinfeld", "--help"}).code == 0);
}

TEST_CASE("check reports") {
    Run r = cli({"check", "thm-7.6", "--n", "3", "--segments", "1@0:2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("P_2(u) = u - 1") != std::string::npos);
    Run j = cli({"check", "eq-12", "--n", "2", "--ell", "1,2,3", "--json"});
    CHECK(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["checks"][0]["id"] == "eq-12");
}

TEST_CASE("exit codes agree across backends") {
    for (const char* id : {"prop-3.4c", "lemma-6.4", "eq-12", "prop-4.7"}) {
        int a = cli({"check", id, "--n", "2", "--ell", "2"}).code;
        int b = cli({"check", id, "--n", "2", "--ell", "2", "--backend", "rational:5/3"}).code;
        CHECK(a == 0);
        CHECK(a == b);
    }
}

TEST_CASE("build output round-trips through relations") {
    for (const char* spec : {"1@0:2", "1@0:1,1@4:1", "2@1:1,1@0:1"}) {
        Run b = cli({"build", "--n", "2", "--segments", spec});
        REQUIRE(b.code == 0);
        std::string path = write_temp("build.json", b.out);
        for (bool as_json : {false, true}) {
            std::vector<std::string> direct{"relations", "--n", "2", "--segments", spec};
            std::vector<std::string> from_file{"relations", "--module-file", path};
            if (as_json) {
                direct.push_back("--json");
                from_file.push_back("--json");
            }
            Run x = cli(direct), y = cli(from_file);
            CHECK(x.code == 0);
            CHECK(y.code == 0);
            CHECK(x.out == y.out);
        }
    }
}

TEST_CASE("relations on a damaged descriptor fail with 1") {
    Run b = cli({"build", "--n", "2", "--segments", "1@0:1,3@0:1"});
    auto doc = nlohmann::json::parse(b.out);
    auto& q = doc["quantum"];
    // scale every entry of x+0 by 2
    for (auto& e : q["generators"]["x+0"]) e[2] = "2*(" + e[2].get<std::string>() + ")";
    std::string path = write_temp("broken.json", q.dump());
    Run r = cli({"relations", "--module-file", path});
    CHECK(r.code == 1);
    CHECK(r.out.find("[FAIL] [x+0, x-0]") != std::string::npos);
}

TEST_CASE("character and isomorphic") {
    Run c = cli({"character", "--n", "2", "--segments", "1@0:2", "--json"});
    CHECK(c.code == 0);
    auto doc = nlohmann::json::parse(c.out);
    CHECK(doc["dim"] == 3);
    CHECK(doc["highest_weights"].size() == 1);
    CHECK(doc["highest_weights"][0]["weight"] == nlohmann::json::array({0, 1}));

    Run a = cli({"build", "--n", "2", "--segments", "1@0:1,5@0:1"});
    Run b = cli({"build", "--n", "2", "--segments", "5@0:1,1@0:1"});
    Run d = cli({"build", "--n", "2", "--segments", "1@0:1,7@0:1"});
    std::string pa = write_temp("a.json", a.out), pb = write_temp("b.json", b.out), pd = write_temp("d.json", d.out);
    CHECK(cli({"isomorphic", "--module-file", pa, "--module-file", pb}).code == 0);
    CHECK(cli({"isomorphic", "--module-file", pa, "--module-file", pd}).code == 1);
}
