#include <functional>

#include "support.hpp"

using namespace nakayama;
using testing::cyc;
using testing::lin;

TEST_CASE("validate accepts and rejects series")
{
    CHECK(validate(cyc({5, 5, 6, 6, 6})).empty());
    CHECK(validate(cyc({2, 2})).empty());
    CHECK(validate(lin({2, 1})).empty());
    CHECK(validate(lin({1, 1})).empty());

    const auto errors = validate(cyc({2, 4}));
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].index == 1);
    CHECK(errors[0].message.find("c_1") != std::string::npos);

    CHECK_FALSE(validate(cyc({1, 2})).empty());
    CHECK_FALSE(validate(lin({2, 2})).empty());     // c_N must be 1
    CHECK(validate(lin({3, 2, 1})).empty());
    CHECK_FALSE(validate(lin({4, 2, 1})).empty());  // P_1 would run off the line
    CHECK(validate(lin({1, 3, 2, 1})).empty());
    CHECK_FALSE(validate(lin({3, 1, 1})).empty());
    CHECK_THROWS_AS(require_valid(cyc({2, 4})), std::invalid_argument);
}

TEST_CASE("kupisch from relations")
{
    CHECK(kupisch_from_relations({5, {{1, 5}, {2, 5}, {3, 6}, {4, 6}}}) == cyc({5, 5, 6, 6, 6}));
    CHECK(kupisch_from_relations({3, {{1, 2}, {2, 3}}}) == cyc({2, 3, 3}));
    CHECK(kupisch_from_relations({8, {{3, 2}, {5, 2}, {8, 3}}}) == cyc({4, 3, 2, 3, 2, 5, 4, 3}));

    // Same three inputs through the zero-path oracle.
    CHECK(oracle::kupisch_by_zero_paths(5, {{1, 5}, {2, 5}, {3, 6}, {4, 6}}) == std::vector<int>{5, 5, 6, 6, 6});
    CHECK(oracle::kupisch_by_zero_paths(3, {{1, 2}, {2, 3}}) == std::vector<int>{2, 3, 3});
    CHECK(oracle::kupisch_by_zero_paths(8, {{3, 2}, {5, 2}, {8, 3}}) == std::vector<int>{4, 3, 2, 3, 2, 5, 4, 3});

    CHECK_THROWS_AS(kupisch_from_relations({3, {{1, 2}, {1, 3}}}), std::invalid_argument);  // repeated start
    CHECK_THROWS_AS(kupisch_from_relations({3, {{1, 4}, {2, 2}}}), std::invalid_argument);  // (2,2) inside (1,4)
    CHECK_THROWS_AS(kupisch_from_relations({3, {}}), std::invalid_argument);
    CHECK_THROWS_AS(kupisch_from_relations({3, {{4, 2}}}), std::invalid_argument);
}

TEST_CASE("relations from kupisch")
{
    const auto rels = relations_from_kupisch(cyc({5, 5, 6, 6, 6}));
    CHECK(rels == RelationSystem{5, {{1, 5}, {2, 5}, {3, 6}, {4, 6}}});
    CHECK(rels.count() == 4);
    CHECK(relations_from_kupisch(cyc({2, 2})) == RelationSystem{2, {{1, 2}, {2, 2}}});
    CHECK(relations_from_kupisch(cyc({2, 3, 3})) == RelationSystem{3, {{1, 2}, {2, 3}}});
    CHECK_THROWS_AS(relations_from_kupisch(lin({2, 1})), std::invalid_argument);
}

TEST_CASE("relation systems round trip")
{
    // Every irredundant system on at most 4 vertices with relations of 2..6 arrows.
    int systems = 0;
    for (int n = 1; n <= 4; ++n) {
        std::vector<Relation> current;
        std::function<void(int)> extend = [&](int start) {
            if (start > n) {
                RelationSystem system{n, current};
                if (system.count() == 0 || !validate(system).empty())
                    return;
                ++systems;
                std::vector<std::pair<int, int>> pairs;
                for (const auto& r : current)
                    pairs.emplace_back(r.start, r.arrows);
                const Algebra a = kupisch_from_relations(system);
                CHECK(a.kupisch == oracle::kupisch_by_zero_paths(n, pairs));
                CHECK(relations_from_kupisch(a) == system);
                return;
            }
            extend(start + 1);
            for (int arrows = 2; arrows <= 6; ++arrows) {
                current.push_back({start, arrows});
                extend(start + 1);
                current.pop_back();
            }
        };
        extend(1);
    }
    CHECK(systems > 100);

    for (const auto& a : testing::small_cyclic()) {
        CAPTURE(a);
        CHECK(kupisch_from_relations(relations_from_kupisch(a)) == a);
    }
}

TEST_CASE("relation count")
{
    for (const auto& a : testing::small_algebras()) {
        CAPTURE(a);
        const int r = relation_count(a);
        if (!a.is_cyclic()) {
            CHECK(r <= a.vertices() - 1);
            continue;
        }
        int rises = 0;
        for (int i = 1; i <= a.vertices(); ++i)
            rises += a.length(a.wrap(i + 1)) >= a.length(i);
        CHECK(r == rises);
        CHECK(r == static_cast<int>(oracle::socle_set(a).size()));
        if (is_self_injective(a)) {
            CHECK(r == a.vertices());
        }
        else {
            CHECK(r >= 1);
            CHECK(r <= a.vertices() - 1);
        }
    }
    CHECK(relation_count(lin({2, 1})) == 0);
    CHECK(relation_count(lin({2, 2, 1})) == 1);
    CHECK(relation_count(lin({2, 2, 2, 1})) == 2);
    CHECK(relation_count(lin({3, 2, 1})) == 0);
}

TEST_CASE("self-injectivity")
{
    CHECK(is_self_injective(cyc({2, 2})));
    CHECK(is_self_injective(cyc({7, 7, 7})));
    CHECK_FALSE(is_self_injective(cyc({5, 5, 6, 6, 6})));
    CHECK_FALSE(is_self_injective(lin({2, 1})));
    CHECK(is_self_injective(lin({1, 1})));

    for (const auto& a : testing::small_algebras()) {
        CAPTURE(a);
        bool every_projective_injective = true;
        for (int v = 1; v <= a.vertices(); ++v)
            every_projective_injective = every_projective_injective && oracle::is_injective(a, {v, a.length(v)});
        CHECK(is_self_injective(a) == every_projective_injective);
    }
}

TEST_CASE("opposite algebra")
{
    CHECK(opposite(cyc({2, 3, 3})) == cyc({2, 3, 3}));
    CHECK(opposite(cyc({5, 5, 6, 6, 6})) == cyc({6, 6, 6, 5, 5}));
    CHECK(canonical_rotation(opposite(cyc({5, 5, 6, 6, 6}))) == cyc({5, 5, 6, 6, 6}));
    CHECK(opposite(cyc({2, 2})) == cyc({2, 2}));
    CHECK(opposite(lin({2, 1})) == lin({2, 1}));
    CHECK(opposite(lin({2, 2, 1})) == lin({2, 2, 1}));
    CHECK(opposite(lin({1, 2, 1})) == lin({2, 1, 1}));

    for (const auto& a : testing::small_algebras()) {
        CAPTURE(a);
        const Algebra op = opposite(a);
        CHECK(op.kind == a.kind);
        CHECK(op.kupisch == oracle::opposite_series(a));
        CHECK(validate(op).empty());
        CHECK(opposite(op) == a);
    }
}

TEST_CASE("canonical rotation")
{
    CHECK(canonical_rotation(cyc({6, 6, 6, 5, 5})) == cyc({5, 5, 6, 6, 6}));
    CHECK(canonical_rotation(cyc({2, 2})) == cyc({2, 2}));
    CHECK(canonical_rotation(cyc({3, 2, 3})) == cyc({2, 3, 3}));
    CHECK(is_canonical(cyc({2, 3, 3})));
    CHECK_FALSE(is_canonical(cyc({3, 2, 3})));
    CHECK(canonical_rotation(lin({2, 1})) == lin({2, 1}));
    CHECK(kupisch_string(cyc({5, 5, 6, 6, 6})) == "5,5,6,6,6");
}
