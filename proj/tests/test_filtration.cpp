#include <set>

#include "nakayama/filtration.hpp"
#include "nakayama/invariants.hpp"

#include "support.hpp"

using namespace nakayama;
using testing::cyc;
using testing::lin;

namespace {

const Algebra example = cyc({5, 5, 6, 6, 6});

// Components predicted from the Hom-count series: runs ending at an entry equal to 1.
std::vector<Algebra> predicted_components(const Algebra& a)
{
    const auto e = oracle::epsilon_series(a);
    std::vector<std::size_t> ends;
    for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] == 1)
            ends.push_back(j);
    if (ends.empty())
        return {cyc(e)};
    std::vector<Algebra> out;
    for (std::size_t b = 0; b < ends.size(); ++b) {
        std::size_t j = (ends[(b + ends.size() - 1) % ends.size()] + 1) % e.size();
        std::vector<int> part;
        for (;; j = (j + 1) % e.size()) {
            part.push_back(e[j]);
            if (j == ends[b])
                break;
        }
        out.push_back(lin(part));
    }
    return out;
}

std::vector<Algebra> component_algebras(const EpsilonResult& eps)
{
    std::vector<Algebra> out;
    for (const auto& c : eps.components)
        out.push_back(c.algebra);
    return out;
}

}  // namespace

TEST_CASE("socles, shifted socles and arcs")
{
    const auto d = filtration_data(example);
    CHECK(d.socles == std::vector<int>{1, 3, 4, 5});
    CHECK(d.shifted == std::vector<int>{1, 2, 4, 5});
    CHECK(d.arcs == std::vector<Module>{{1, 1}, {2, 2}, {4, 1}, {5, 1}});

    const auto d2 = filtration_data(cyc({4, 4, 5, 5}));
    CHECK(d2.socles == std::vector<int>{1, 3, 4});
    CHECK(d2.shifted == std::vector<int>{1, 2, 4});
    CHECK(d2.arcs == std::vector<Module>{{1, 1}, {2, 2}, {4, 1}});

    const auto d3 = filtration_data(cyc({2, 2}));
    CHECK(d3.socles == std::vector<int>{1, 2});
    CHECK(d3.arcs == std::vector<Module>{{1, 1}, {2, 1}});

    CHECK_THROWS_AS(filtration_data(lin({2, 1})), std::invalid_argument);
}

TEST_CASE("epsilon reproduces the reduction table")
{
    const auto e1 = epsilon(example);
    REQUIRE(e1.is_cyclic());
    CHECK(e1.components.front().algebra == cyc({4, 4, 5, 5}));
    CHECK(epsilon(cyc({4, 4, 5, 5})).components.front().algebra == cyc({3, 3, 4}));
    CHECK(epsilon(cyc({3, 3, 4})).components.front().algebra == cyc({2, 2}));
    CHECK(epsilon(cyc({2, 2})).components.front().algebra == cyc({2, 2}));
    CHECK(epsilon(cyc({4, 5})).components.front().algebra == cyc({2}));
}

TEST_CASE("epsilon chains")
{
    const auto chain = epsilon_chain(example);
    CHECK(chain.end == ChainEnd::self_injective);
    REQUIRE(chain.depth() == 3);
    CHECK(chain.levels[0].components.front().algebra == cyc({4, 4, 5, 5}));
    CHECK(chain.levels[1].components.front().algebra == cyc({3, 3, 4}));
    CHECK(chain.levels[2].components.front().algebra == cyc({2, 2}));

    CHECK(epsilon_chain(cyc({2, 2})).depth() == 0);

    const auto family = epsilon_chain(cyc({7, 7, 6}));
    CHECK(family.end == ChainEnd::self_injective);
    CHECK(family.depth() <= 2);

    const auto truncated = epsilon_chain(example, 1);
    CHECK(truncated.end == ChainEnd::truncated);
    CHECK(truncated.depth() == 1);

    const auto linear_end = epsilon_chain(cyc({4, 3, 2, 3, 2, 5, 4, 3}));
    CHECK(linear_end.end == ChainEnd::linear);
}

TEST_CASE("phi dimension through the reduction")
{
    CHECK(phi_dim_fast(example) == 6);
    CHECK(phi_dim_fast(cyc({2, 2})) == 0);
    CHECK(phi_dim_fast(cyc({9, 9, 9, 8})) == 6);
    for (const auto& a : testing::small_cyclic()) {
        CAPTURE(a);
        CHECK(phi_dim_fast(a) == oracle::phi_dim(a));
    }
}

TEST_CASE("restriction to epsilon")
{
    const auto eps = epsilon(example);
    const auto second = syzygy(example, *syzygy(example, {3, 5}));
    REQUIRE(second.has_value());
    CHECK(*second == Module{4, 5});
    const auto r = restrict_to_epsilon(example, *second, eps);
    REQUIRE(r.has_value());
    CHECK(r->component == 0);
    CHECK(r->module == Module{3, 4});

    for (std::size_t j = 0; j < eps.source.arcs.size(); ++j) {
        const auto simple = restrict_to_epsilon(example, eps.source.arcs[j], eps);
        REQUIRE(simple.has_value());
        CHECK(simple->module == Module{static_cast<int>(j) + 1, 1});
    }
    CHECK_FALSE(restrict_to_epsilon(example, {2, 1}, eps).has_value());
    const auto m13 = restrict_to_epsilon(example, {1, 3}, eps);
    REQUIRE(m13.has_value());
    CHECK(m13->module.length == 2);
}

TEST_CASE("filtration structure matches brute force")
{
    for (const auto& a : testing::small_cyclic()) {
        CAPTURE(a);
        const auto d = filtration_data(a);
        const int r = relation_count(a);
        CHECK(d.socles == oracle::socle_set(a));
        CHECK(d.arcs == oracle::base_arcs(a));
        CHECK(static_cast<int>(d.socles.size()) == r);
        CHECK(static_cast<int>(d.arcs.size()) == r);
        CHECK(static_cast<int>(d.nabla.size()) == r);
        int covered = 0;
        for (const auto& arc : d.arcs)
            covered += arc.length;
        CHECK(covered == a.vertices());

        const auto eps = epsilon(a);
        CHECK(eps.vertices() == r);
        CHECK(component_algebras(eps) == predicted_components(a));
        CHECK(eps.is_cyclic() == eps.breaks.empty());
        for (std::size_t j = 0; j < d.arcs.size(); ++j) {
            const bool is_break = std::find(eps.breaks.begin(), eps.breaks.end(), static_cast<int>(j)) !=
                                  eps.breaks.end();
            CHECK(is_break == oracle::is_projective(a, d.arcs[j]));
        }
        if (is_self_injective(a)) {
            CHECK(eps.is_cyclic());
            CHECK(eps.components.front().algebra == a);
        }
    }
}

TEST_CASE("filtered modules and second syzygies")
{
    for (const auto& a : testing::small_cyclic()) {
        CAPTURE(a);
        const auto eps = epsilon(a);
        for (const Module& m : indecomposables(a)) {
            CAPTURE(m);
            const auto r = restrict_to_epsilon(a, m, eps);
            if (r) {
                CHECK(r->module.length == oracle::filtered_length(a, m));
                const auto& comp = eps.components[r->component].algebra;
                CHECK(pdim(a, m) == pdim(comp, r->module));
            }
            const auto first = syzygy(a, m);
            if (!first)
                continue;
            const auto second = syzygy(a, *first);
            if (!second)
                continue;
            const auto filtered = restrict_to_epsilon(a, *second, eps);
            REQUIRE(filtered.has_value());
            CHECK(pdim(a, m) == pdim(eps.components[filtered->component].algebra, filtered->module) + 2);
        }
    }
}

TEST_CASE("nabla is dual to the arcs of the opposite algebra")
{
    for (const auto& a : testing::small_cyclic()) {
        CAPTURE(a);
        const Algebra op = opposite(a);
        std::set<Module> dualized;
        for (const Module& m : filtration_data(a).nabla)
            dualized.insert(dual(a, m));
        const auto arcs = filtration_data(op).arcs;
        CHECK(dualized == std::set<Module>(arcs.begin(), arcs.end()));
    }
}

TEST_CASE("eta")
{
    const auto self = eta(cyc({2, 2}));
    REQUIRE(self.is_cyclic());
    CHECK(self.components.front().algebra == cyc({2, 2}));

    for (const Algebra& a : {cyc({2, 3, 3}), example}) {
        CAPTURE(a);
        const auto dual_side = epsilon(opposite(a));
        const auto e = eta(a);
        REQUIRE(e.components.size() == dual_side.components.size());
        std::multiset<std::vector<int>> expected;
        std::multiset<std::vector<int>> got;
        for (const auto& c : dual_side.components)
            expected.insert(oracle::opposite_series(c.algebra));
        for (const auto& c : e.components)
            got.insert(c.algebra.kupisch);
        CHECK(got == expected);
    }
    CHECK(epsilon(opposite(example)).components.front().algebra.kupisch == oracle::epsilon_series(cyc({6, 6, 6, 5, 5})));

    for (const auto& a : testing::small_cyclic()) {
        CAPTURE(a);
        const auto e = eta(a);
        CHECK(e.vertices() == relation_count(a));
        std::set<int> used;
        for (const auto& c : e.components)
            used.insert(c.arcs.begin(), c.arcs.end());
        CHECK(static_cast<int>(used.size()) == relation_count(a));
    }
}
