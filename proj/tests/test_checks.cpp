#include "doctest.h"
#include "qaff/checks.hpp"
#include "qaff/errors.hpp"

using namespace qaff;

TEST_CASE("registry") {
    const auto& ids = check_ids();
    CHECK(ids.size() == 14);
    CHECK(ids.front() == "prop-3.3");
    CHECK_THROWS_AS(run_check("nope", CheckParams{}), UsageError);
    CheckParams bad;
    bad.ns = {0};
    CHECK_THROWS_AS(run_check("eq-12", bad), UsageError);
}

TEST_CASE("random parameters are reproducible and nonzero") {
    auto a = random_parameters(7, 4), b = random_parameters(7, 4);
    CHECK(a == b);
    for (const auto& x : a) CHECK_FALSE(x.is_zero());
    CHECK(random_parameters(8, 4) != a);
}

TEST_CASE("cheap checks pass and report data") {
    CheckParams p;
    p.ns = {2};
    p.ells = {1, 2, 3};
    for (const char* id : {"prop-3.3", "prop-4.1", "eq-12", "lemma-7.3", "lemma-6.4"}) {
        CheckReport r = run_check(id, p);
        CHECK_MESSAGE(r.pass(), r.text());
        CHECK_FALSE(r.items.empty());
    }
    CHECK(run_check("lemma-6.4", p).data["degrees"].size() == 6);
}

TEST_CASE("segments override the built-in lists") {
    CheckParams p;
    p.ns = {3};
    p.segments = parse_segments("1@0:2,1@6:1");
    CheckReport r = run_check("prop-7.5", p);
    CHECK(r.pass());
    CHECK(r.items.size() == 3);
    CheckReport t = run_check("thm-7.6", p);
    CHECK_MESSAGE(t.pass(), t.text());
    CHECK(t.data["cases"][0]["degrees"] == nlohmann::json::array({1, 1, 0}));
}

TEST_CASE("the l <= n guard can be lifted") {
    CheckParams p;
    p.ns = {1};
    CHECK(run_check("cor-4.8b", p).items.empty());
    p.allow_large_ell = true;
    CHECK_FALSE(run_check("cor-4.8b", p).items.empty());
}
