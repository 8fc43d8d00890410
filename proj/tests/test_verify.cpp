#include <catch_amalgamated.hpp>

#include "lambdacm/verify.hpp"

using namespace lambdacm;

namespace {

const DirectionResult& direction(const VerificationReport& r, const std::string& name) {
    for (const DirectionResult& d : r.directions) {
        if (d.name == name) {
            return d;
        }
    }
    FAIL("missing direction " << name);
    return r.directions.front();
}

}  // namespace

TEST_CASE("small instances pass every direction exhaustively") {
    for (const Instance& inst : {Instance({3}, {2}, 2), Instance({2, 2}, {1, 1}, 2), Instance({3, 2}, {2, 1}, 2)}) {
        const VerificationReport r = verify_instance(inst);
        CHECK(r.passed());
        CHECK(r.status() == "pass");
        for (const char* name : {"3->4", "4->2", "2->1", "1<->3"}) {
            CHECK(direction(r, name).status == "pass");
            CHECK(direction(r, name).mode == "exhaustive");
        }
        const auto j = r.to_json();
        CHECK(j["status"] == "pass");
        CHECK(j["witness"].is_null());
    }
}

TEST_CASE("extensional sets on the triangle") {
    const Instance inst({3}, {2}, 2);
    const ExtensionalSets e = extensional_sets(build_lambda(inst), MonomialPoset(inst));
    CHECK(e.subcomplexes == 7);
    const std::set<std::vector<std::int64_t>> expected{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
    CHECK(e.cm_h == expected);
    CHECK(e.multicomplex_F == expected);
}

TEST_CASE("larger instances are sampled") {
    VerifyOptions opt;
    opt.enumeration_budget = 100;
    opt.samples = 20;
    const VerificationReport r = verify_instance(Instance({4, 3, 3}, {2, 2, 1}, 4), opt);
    CHECK(r.passed());
    CHECK(direction(r, "3->4").mode == "sampled");
    CHECK(direction(r, "1<->3").status == "skipped");
}

TEST_CASE("facet budget refuses large instances") {
    VerifyOptions opt;
    opt.facet_budget = 10;
    const VerificationReport r = verify_instance(Instance({4, 3, 3}, {2, 2, 1}, 4), opt);
    CHECK(r.passed());
    CHECK_FALSE(r.complete);
    CHECK(r.status() == "incomplete");
}

TEST_CASE("reports are deterministic in the seed") {
    VerifyOptions opt;
    opt.enumeration_budget = 50;
    opt.samples = 10;
    const Instance inst({4, 2}, {2, 1}, 3);
    auto a = verify_instance(inst, opt).to_json();
    auto b = verify_instance(inst, opt).to_json();
    for (auto* j : {&a, &b}) {
        for (auto& [k, v] : (*j)["directions"].items()) {
            v.erase("millis");
        }
    }
    CHECK(a == b);
}

TEST_CASE("checked compression reports a monotone run") {
    const MonomialPoset s(Instance({3, 2}, {2, 1}, 2));
    s.enumerate_multicomplexes(1000, [&](const PosetMask& m) {
        const CompressionCheck c = checked_compress(s, m);
        REQUIRE_FALSE(c.failure);
        REQUIRE(s.is_0_compressed(c.result));
        REQUIRE(s.F_vector(c.result) == s.F_vector(m));
    });
}

TEST_CASE("default grid") {
    const auto grid = default_grid();
    CHECK(grid.size() == 3486);
    CHECK(grid.front() == Instance({1}, {1}, 1));
}
