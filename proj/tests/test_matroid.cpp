#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "forts/forts.hpp"
#include "forts/matroid.hpp"
#include "forts/rational_matrix.hpp"
#include "forts/transversal.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace forts;
using oracle::vs;

TEST_CASE("circuit axioms") {
    // Circuits of the rank-1 uniform matroid on three elements.
    FortCollection u13 = FortCollection::make(3, {vs({0, 1}), vs({0, 2}), vs({1, 2})});
    CHECK(check_circuit_axioms(3, u13).ok);

    FortCollection nested = FortCollection::make(3, {vs({0, 1}), vs({0, 1, 2})});
    AxiomCheck c2 = check_circuit_axioms(3, nested);
    REQUIRE(!c2.ok);
    CHECK(c2.violation->axiom == 2);

    FortCollection no_exchange = FortCollection::make(3, {vs({0, 1}), vs({1, 2})});
    AxiomCheck c3 = check_circuit_axioms(3, no_exchange);
    REQUIRE(!c3.ok);
    CHECK(c3.violation->axiom == 3);
    CHECK(c3.violation->element == 1);
}

TEST_CASE("matroid rank via transversal") {
    CHECK(matroid_rank(MatroidView::make(4, FortCollection::make(4, {}))) == 4);
    FortCollection u13 = FortCollection::make(3, {vs({0, 1}), vs({0, 2}), vs({1, 2})});
    CHECK(matroid_rank(MatroidView::make(3, u13)) == 1);

    // Null support circuits of the ladder matrix: rank 8 - 2 = 6, matching
    // the exact matrix rank.
    RationalMatrix c = fixtures::matrix_c();
    FortCollection circuits = min_null_supports(c);
    CHECK(matroid_rank(MatroidView::make(8, circuits)) == 6);
    CHECK(rank_of(c) == 6);
}

TEST_CASE("compatibility of named families") {
    // Disjoint forts share nothing, so the condition is vacuous.
    Graph g = fixtures::ladder8();
    FortCollection disjoint = FortCollection::make(
        8, {fixtures::ladder8_f3(), fixtures::ladder8_f4(), fixtures::ladder8_f5()});
    CHECK(is_compatible(g, disjoint).ok);

    std::vector<int> parts{3, 3, 3};
    Graph k333 = complete_multipartite(parts);
    CHECK(is_compatible(k333, minimal_forts(k333)).ok);

    Graph pet = petersen();
    CHECK(!is_compatible(pet, minimal_forts(pet)).ok);
}

TEST_CASE("the petersen pair violation and its repair attempt") {
    Graph pet = petersen();
    FortCollection pair = FortCollection::make(10, {vs({0, 5, 6, 9}), vs({2, 6, 7, 8})});
    CompatibilityCheck c = is_compatible(pet, pair);
    REQUIRE(!c.ok);
    CHECK(c.violation->f1 == vs({0, 5, 6, 9}));
    CHECK(c.violation->f2 == vs({2, 6, 7, 8}));
    CHECK(c.violation->element == 6);

    // Adding the one fort that could fix x=6 breaks a different pair.
    FortCollection triple =
        FortCollection::make(10, {vs({0, 5, 6, 9}), vs({2, 6, 7, 8}), vs({0, 2, 8, 9})});
    CompatibilityCheck c3 = is_compatible(pet, triple);
    REQUIRE(!c3.ok);
    CHECK(c3.violation->f1 == vs({0, 2, 8, 9}));
    CHECK(c3.violation->f2 == vs({0, 5, 6, 9}));
    CHECK(c3.violation->element == 0);
}

TEST_CASE("non-fort members are reported") {
    Graph pet = petersen();
    CHECK_THROWS_AS(is_compatible(pet, FortCollection::make(10, {vs({0})})), InputError);
}

TEST_CASE("fundamental forts of a disjoint family") {
    Graph g = fixtures::ladder8();
    FortCollection fam = FortCollection::make(8, {fixtures::ladder8_f3(), fixtures::ladder8_f4()});
    VertexSet t = vs({0, 4});
    auto map = fundamental_forts(g, fam, t);
    CHECK(map.at(0) == fixtures::ladder8_f3());
    CHECK(map.at(4) == fixtures::ladder8_f4());
}

TEST_CASE("fundamental forts reject bad transversals") {
    Graph g = fixtures::ladder8();
    FortCollection fam = FortCollection::make(8, {fixtures::ladder8_f3(), fixtures::ladder8_f4()});
    CHECK_THROWS_AS(fundamental_forts(g, fam, vs({0})), InputError);          // not a transversal
    CHECK_THROWS_AS(fundamental_forts(g, fam, vs({0, 3, 4})), InputError);    // not minimum
}

TEST_CASE("uniqueness failure coincides with incompatibility") {
    // {0,1} and {1,2} are forts of K3 sharing vertex 1; T = {1} is a minimum
    // transversal, two forts meet it only at 1, and the family fails the
    // exchange condition.  fundamental_forts must reject it.
    Graph k3 = complete(3);
    FortCollection fam = FortCollection::make(3, {vs({0, 1}), vs({1, 2})});
    CHECK(is_fort(k3, vs({0, 1})));
    CHECK(is_fort(k3, vs({1, 2})));
    CHECK(is_transversal(fam, vs({1})));
    CHECK(min_transversal(fam).size == 1);
    CHECK(!is_compatible(k3, fam).ok);
    CHECK_THROWS_AS(fundamental_forts(k3, fam, vs({1})), InputError);
}

TEST_CASE("only the five one-outer-vertex forts meet T = {0..4} in a singleton") {
    VertexSet t = vs({0, 1, 2, 3, 4});
    std::vector<VertexSet> singles;
    for (VertexSet f : fixtures::petersen_minimal_forts())
        if (set_size(f & t) == 1) singles.push_back(f);
    std::sort(singles.begin(), singles.end(), LexLess{});
    std::vector<VertexSet> expected{vs({0, 5, 6, 9}), vs({1, 5, 6, 7}), vs({2, 6, 7, 8}),
                                    vs({3, 7, 8, 9}), vs({4, 5, 8, 9})};
    std::sort(expected.begin(), expected.end(), LexLess{});
    CHECK(singles == expected);

    // The full twenty-fort family fails the compatibility precondition.
    Graph pet = petersen();
    FortCollection all20 = minimal_forts(pet);
    CHECK(is_transversal(all20, t));
    CHECK(min_transversal(all20).size == 5);
    CHECK_THROWS_AS(fundamental_forts(pet, all20, t), InputError);
}

TEST_CASE("matroid embedding") {
    // U_{2,4}: all 3-subsets of a 4-set embed into K4.
    std::vector<VertexSet> u24;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c) u24.push_back(vs({a, b, c}));
    MatroidView m = MatroidView::make(4, FortCollection::make(4, u24));
    MatroidEmbedding emb = embed_matroid(m);
    CHECK(emb.graph == complete(4));
    CHECK(emb.loops.empty());
    CHECK(emb.circuits_are_forts);

    // A loop plus a circuit: K1 + K2 with the loop isolated.
    MatroidView lm = MatroidView::make(3, FortCollection::make(3, {vs({0}), vs({1, 2})}));
    MatroidEmbedding lemb = embed_matroid(lm);
    CHECK(lemb.loops == std::vector<int>{0});
    CHECK(lemb.graph.degree(0) == 0);
    CHECK(lemb.graph.has_edge(1, 2));
    CHECK(lemb.circuits_are_forts);

    // No circuits: the complete graph, vacuously fine.
    MatroidEmbedding free = embed_matroid(MatroidView::make(5, FortCollection::make(5, {})));
    CHECK(free.graph == complete(5));
    CHECK(free.circuits_are_forts);
}

TEST_CASE("minimal members of compatible families satisfy the circuit axioms") {
    std::vector<int> parts{3, 3, 3};
    Graph k333 = complete_multipartite(parts);
    FortCollection mins = minimal_forts(k333);
    REQUIRE(is_compatible(k333, mins).ok);
    CHECK(check_circuit_axioms(9, mins).ok);
}
