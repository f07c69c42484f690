#include "nakayama/io.hpp"

#include "support.hpp"

using namespace nakayama;
using testing::cyc;
using testing::lin;

TEST_CASE("shorthand parsing")
{
    CHECK(io::parse_algebra("5,5,6,6,6") == cyc({5, 5, 6, 6, 6}));
    CHECK(io::parse_algebra("kupisch:5,5,6,6,6") == cyc({5, 5, 6, 6, 6}));
    CHECK(io::parse_algebra(" (2, 3, 3) ") == cyc({2, 3, 3}));
    CHECK(io::parse_algebra("2,1") == lin({2, 1}));
    CHECK(io::parse_algebra("rel:8:3x2,5x2,8x3") == cyc({4, 3, 2, 3, 2, 5, 4, 3}));
    CHECK(io::parse_algebra("2,2", Kind::cyclic) == cyc({2, 2}));
    CHECK(io::parse_relations("rel:8:3x2,5x2,8x3") == RelationSystem{8, {{3, 2}, {5, 2}, {8, 3}}});
    CHECK(io::parse_relations("3:2x3,1x2") == RelationSystem{3, {{1, 2}, {2, 3}}});

    CHECK_THROWS_AS(io::parse_algebra("2,4"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_algebra("2,,3"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_algebra("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_algebra(""), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_algebra("2,2", Kind::linear), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_relations("rel:3:1-2"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_relations("rel:3"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_kind("both"), std::invalid_argument);
}

TEST_CASE("module parsing")
{
    CHECK(io::parse_module("3,5") == Module{3, 5});
    CHECK(io::parse_module(" 1 , 1 ") == Module{1, 1});
    CHECK_THROWS_AS(io::parse_module("3"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_module("3,5,1"), std::invalid_argument);
}

TEST_CASE("json documents")
{
    const auto doc = io::to_json(cyc({5, 5, 6, 6, 6}));
    CHECK(doc.dump() == R"({"kind":"cyclic","kupisch":[5,5,6,6,6]})");
    CHECK(io::algebra_from_json(doc) == cyc({5, 5, 6, 6, 6}));

    const RelationSystem rels{8, {{3, 2}, {5, 2}, {8, 3}}};
    const auto rdoc = io::to_json(rels);
    CHECK(rdoc.dump() ==
          R"({"vertices":8,"relations":[{"start":3,"arrows":2},{"start":5,"arrows":2},{"start":8,"arrows":3}]})");
    CHECK(io::relations_from_json(rdoc) == rels);
    CHECK(io::algebra_from_json(rdoc) == cyc({4, 3, 2, 3, 2, 5, 4, 3}));

    CHECK(io::load_algebra(NAKAYAMA_TEST_DATA "/rel8.json") == cyc({4, 3, 2, 3, 2, 5, 4, 3}));
    CHECK(io::load_algebra(NAKAYAMA_TEST_DATA "/example_55666.json") == cyc({5, 5, 6, 6, 6}));
    CHECK(io::load_relations(NAKAYAMA_TEST_DATA "/rel8.json") == rels);

    CHECK_THROWS_AS(io::algebra_from_json(io::Json::parse(R"({"kind":"cyclic"})")), std::invalid_argument);
    CHECK_THROWS_AS(io::algebra_from_json(io::Json::parse(R"({"kind":"cyclic","kupisch":"x"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::algebra_from_json(io::Json::parse(R"({"kind":"wavy","kupisch":[2,2]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::load_algebra("/nonexistent/file.json"), std::invalid_argument);
}

TEST_CASE("extended naturals serialize as integers or inf")
{
    CHECK(io::to_json(ExtNat(6)).dump() == "6");
    CHECK(io::to_json(ExtNat::infinity()).dump() == "\"inf\"");
}

TEST_CASE("report json")
{
    const Algebra a = cyc({5, 5, 6, 6, 6});
    const auto doc = io::report_json(compute_report(a), epsilon_chain(a));
    std::vector<std::string> fields;
    for (auto it = doc.begin(); it != doc.end(); ++it)
        fields.push_back(it.key());
    CHECK(fields == std::vector<std::string>{"kind", "kupisch", "N", "r", "phi_dim", "phi_dim_op", "findim",
                                             "findim_op", "gldim", "gorenstein", "gordim", "domdim", "m",
                                             "self_injective", "epsilon_chain"});
    CHECK(doc["phi_dim"] == 6);
    CHECK(doc["gordim"] == 6);
    CHECK(doc["gldim"] == "inf");
    CHECK(doc["epsilon_chain"]["depth"] == 3);
}

TEST_CASE("chain rows")
{
    const auto rows = io::chain_rows(cyc({5, 5, 6, 6, 6}), 64);
    REQUIRE(rows.size() == 4);
    const auto doc = io::chain_json(rows);
    CHECK(doc["levels"][0]["B"].dump() == R"(["1:1","2:2","4:1","5:1"])");
    CHECK(doc["levels"][3]["kupisch"].dump() == "[2,2]");
    std::vector<int> phis;
    for (const auto& level : doc["levels"])
        phis.push_back(level["phi_dim"].get<int>());
    CHECK(phis == std::vector<int>{6, 4, 2, 0});
    CHECK(io::chain_rows(cyc({2, 2}), 64).size() == 1);
    CHECK_THROWS_AS(io::chain_rows(lin({2, 1}), 64), std::invalid_argument);
}

TEST_CASE("resolution listings")
{
    const Algebra a = cyc({5, 5, 6, 6, 6});
    const auto steps = io::resolution(a, {3, 5}, Direction::projective, 64);
    REQUIRE(steps.size() == 7);
    const std::vector<Module> kernels{{3, 1}, {4, 5}, {4, 1}, {5, 5}, {5, 1}, {1, 5}};
    for (std::size_t i = 0; i < kernels.size(); ++i) {
        CHECK(steps[i].step == static_cast<int>(i) + 1);
        CHECK(steps[i].module == kernels[i]);
    }
    CHECK_FALSE(steps[6].module.has_value());
    CHECK_FALSE(steps[6].cycle_at.has_value());
    CHECK(steps[0].cover == Module{3, 6});

    const auto periodic = io::resolution(a, {1, 1}, Direction::projective, 64);
    REQUIRE(periodic.size() == 2);
    CHECK(periodic[1].cycle_at == 0);
    CHECK(io::resolution_json(periodic, Direction::projective).dump() ==
          R"([{"step":1,"module":[2,4],"cover":[1,5]},{"step":2,"module":{"cycle_at":0},"cover":[2,5]}])");

    CHECK(io::resolution(a, {1, 5}, Direction::projective, 64).empty());
    CHECK(io::resolution(a, {3, 5}, Direction::injective, 64).empty());
    CHECK(io::resolution(a, {3, 5}, Direction::projective, 2).size() == 2);
    CHECK_THROWS_AS(io::resolution(a, {1, 6}, Direction::projective, 64), std::invalid_argument);
    CHECK_THROWS_AS(io::resolution(a, {9, 1}, Direction::projective, 64), std::invalid_argument);

    const auto inj = io::resolution(cyc({2, 2}), {1, 1}, Direction::injective, 64);
    REQUIRE(inj.size() == 2);
    CHECK(inj[0].module == Module{2, 1});
    CHECK(inj[0].cover == Module{2, 2});
    CHECK(io::resolution_json(inj, Direction::injective)[0].contains("envelope"));
}

TEST_CASE("module labels")
{
    CHECK(io::module_label(cyc({5, 5, 6, 6, 6}), {3, 5}) == "3:5 [S_3..S_2]");
    CHECK(io::arc_label({2, 2}) == "2:2");
}
