#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forts/forts.hpp"
#include "forts/transversal.hpp"
#include "oracles.hpp"

using namespace forts;
using oracle::vs;

TEST_CASE("disjoint families need one vertex each") {
    std::vector<VertexSet> sets{vs({0, 1}), vs({2, 3}), vs({4, 5, 6})};
    TransversalResult t = min_transversal(FortCollection::make(7, sets));
    CHECK(t.size == 3);
    CHECK(is_transversal(FortCollection::make(7, sets), t.witness));
    CHECK(t.proven_optimal);
}

TEST_CASE("named fort families") {
    CHECK(min_transversal(minimal_forts(petersen())).size == 5);
    std::vector<int> parts{3, 3, 3};
    CHECK(min_transversal(minimal_forts(complete_multipartite(parts))).size == 7);
    CHECK(min_transversal(minimal_forts(corona_k1(cycle(5)))).size == 3);
}

TEST_CASE("empty member rejected, empty family allowed") {
    FortCollection family{3, {vs({0})}, FortKind::custom};
    family.sets[0] = 0;  // bypass make() to hit the solver-side guard
    CHECK_THROWS_AS(min_transversal(family), InputError);
    CHECK(min_transversal(FortCollection::make(3, {})).size == 0);
}

TEST_CASE("minimal_sets") {
    FortCollection fam = FortCollection::make(3, {vs({1}), vs({1, 2})});
    FortCollection mins = minimal_sets(fam);
    CHECK(mins.sets == std::vector<VertexSet>{vs({1})});

    // Antichains are untouched.
    FortCollection anti = FortCollection::make(4, {vs({0, 1}), vs({1, 2}), vs({2, 3})});
    CHECK(minimal_sets(anti).sets == anti.sets);

    // All forts of the Petersen graph reduce to the twenty minimal ones.
    FortCollection all = all_forts(petersen());
    CHECK(minimal_sets(all).size() == 20);
}

TEST_CASE("tau is blind to non-minimal members") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = oracle::random_graph(2 + static_cast<int>(seed % 7), 0.45, seed + 3100);
        FortCollection all = all_forts(g);
        if (all.empty()) continue;
        CHECK(min_transversal(all).size == min_transversal(minimal_sets(all)).size);
    }
}

TEST_CASE("solver agrees with the subset oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int ground = 3 + static_cast<int>(rng() % 10);
        int count = 1 + static_cast<int>(rng() % 8);
        std::vector<VertexSet> sets;
        for (int i = 0; i < count; ++i) {
            VertexSet s = rng() & full_set(ground);
            if (s == 0) s = single(static_cast<int>(rng() % static_cast<std::uint64_t>(ground)));
            sets.push_back(s);
        }
        FortCollection fam = FortCollection::make(ground, sets);
        TransversalResult t = min_transversal(fam);
        CHECK(t.size == oracle::min_transversal_naive(ground, fam.sets));
        CHECK(is_transversal(fam, t.witness));
        CHECK(set_size(t.witness) == t.size);
    }
}

TEST_CASE("witness is deterministic") {
    FortCollection fam = minimal_forts(petersen());
    VertexSet w = min_transversal(fam).witness;
    for (int i = 0; i < 3; ++i) CHECK(min_transversal(fam).witness == w);
}
