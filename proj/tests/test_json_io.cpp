#include <catch_amalgamated.hpp>

#include "lambdacm/json_io.hpp"

using namespace lambdacm;
using json_io::json;

TEST_CASE("instance round trip") {
    const Instance inst({4, 3, 3}, {2, 2, 1}, 4);
    const json j = json_io::to_json(inst);
    CHECK(j == json::parse(R"({"n":[4,3,3],"a":[2,2,1],"d":4})"));
    CHECK(json_io::instance_from_json(j) == inst);
    CHECK(json_io::find_instance(json{{"instance", j}, {"facets", json::array()}}) == inst);
    CHECK_THROWS_AS(json_io::instance_from_json(json::parse(R"({"n":[2],"a":[3],"d":1})")), InputError);
    CHECK_THROWS_AS(json_io::instance_from_json(json::parse(R"({"n":[2],"a":[1]})")), InputError);
    CHECK_THROWS_AS(json_io::instance_from_json(json::parse(R"({"n":"x","a":[1],"d":1})")), InputError);
}

TEST_CASE("malformed text") {
    CHECK_THROWS_AS(json_io::parse("{\"n\": [1,"), InputError);
    CHECK_THROWS_AS(json_io::read_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("monomial round trip") {
    const Instance inst({4, 3, 3}, {2, 2, 1}, 4);
    const Monomial mu(std::vector<int>{1, 0, 1, 0, 1, 0});
    const json j = json_io::to_json(inst, mu);
    CHECK(j == json::parse(R"({"exp":[[1],[0,1],[0],[1,0]]})"));
    CHECK(json_io::monomial_from_json(inst, j) == mu);
    CHECK_THROWS_AS(json_io::monomial_from_json(inst, json::parse(R"({"exp":[[1],[0],[0],[1,0]]})")), InputError);
    CHECK_THROWS_AS(json_io::monomial_from_json(inst, json::parse(R"({"exp":[[1],[0,1],[0]]})")), InputError);

    const MonomialSet m{inst.one(), mu};
    CHECK(json_io::monomial_set_from_json(inst, json_io::to_json(inst, m)) == m);
}

TEST_CASE("facet round trip") {
    const Instance inst({3}, {2}, 2);
    const std::vector<VertexSet> facets = build_lambda(inst).facets();
    const json j = json_io::facets_to_json(inst, facets);
    CHECK(j["facets"][0] == json::parse("[[1,1],[1,2]]"));
    CHECK(json_io::facets_from_json(inst, j) == facets);
    CHECK_THROWS_AS(json_io::facets_from_json(inst, json::parse(R"({"facets":[[[1,4]]]})")), InputError);
    CHECK_THROWS_AS(json_io::facets_from_json(inst, json::parse(R"({"facets":[[[1]]]})")), InputError);
}

TEST_CASE("instance inference") {
    const json j = json::parse(R"({"facets":[[[1,1],[1,2]],[[1,3],[1,4]]]})");
    CHECK(json_io::infer_instance(j) == Instance({4}, {2}, 2));
    const json k = json::parse(R"({"facets":[[[1,1],[2,3]],[[1,2],[2,1]]]})");
    CHECK(json_io::infer_instance(k) == Instance({2, 3}, {1, 1}, 2));
    CHECK_THROWS_AS(json_io::infer_instance(json::parse(R"({"facets":[[[0,1]]]})")), InputError);
}
