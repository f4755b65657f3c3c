#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "forts/forts.hpp"
#include "forts/matroid.hpp"
#include "forts/rational_matrix.hpp"
#include "forts/transversal.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace forts;
using oracle::vs;

TEST_CASE("rational string round trip") {
    CHECK(rational_to_string(Rational(1, 3)) == "1/3");
    CHECK(rational_to_string(Rational(-4, 2)) == "-2");
    CHECK(rational_from_string("7/2") == Rational(7, 2));
    CHECK(rational_from_string("-5") == Rational(-5));
    CHECK_THROWS_AS(rational_from_string("x"), InputError);
    CHECK_THROWS_AS(rational_from_string("1/0"), InputError);
}

TEST_CASE("pattern_of") {
    RationalMatrix c = fixtures::matrix_c();
    CHECK(pattern_of(c) == fixtures::ladder8());

    RationalMatrix diag = RationalMatrix::identity(4);
    CHECK(pattern_of(diag) == empty_graph(4));

    RationalMatrix bad(2);
    bad.at(0, 1) = 1;  // a10 stays zero
    CHECK_THROWS_AS(pattern_of(bad), InputError);
}

TEST_CASE("csym and msym membership") {
    Graph g = fixtures::ladder8();
    RationalMatrix c = fixtures::matrix_c();
    CHECK(in_csym(c, g));
    CHECK(!in_msym(c, g));
    CHECK(c.at(2, 3) == 1);
    CHECK(c.at(3, 2) == -1);

    RationalMatrix lap = RationalMatrix::laplacian(g);
    CHECK(in_csym(lap, g));
    CHECK(in_msym(lap, g));

    CHECK(!in_csym(RationalMatrix(8), g));
    CHECK(in_msym(fixtures::matrix_c_modified(), g));
}

TEST_CASE("nullspace: identity, laplacian, ladder matrix") {
    CHECK(nullspace(RationalMatrix::identity(5)).empty());

    RationalMatrix lap = RationalMatrix::laplacian(petersen());
    auto basis = nullspace(lap);
    REQUIRE(basis.size() == 1);
    for (const Rational& r : basis[0]) CHECK(r == basis[0][0]);
    CHECK(basis[0][0] != 0);

    RationalMatrix c = fixtures::matrix_c();
    auto cb = nullspace(c);
    REQUIRE(cb.size() == 2);
    std::vector<VertexSet> supports{support(cb[0]), support(cb[1])};
    std::sort(supports.begin(), supports.end(), LexLess{});
    CHECK(supports == std::vector<VertexSet>{fixtures::ladder8_f1(), fixtures::ladder8_f2()});
    for (const auto& x : cb)
        for (const Rational& r : c.apply(x)) CHECK(r == 0);
}

TEST_CASE("rank plus nullity is n") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = oracle::random_graph(1 + static_cast<int>(seed % 8), 0.5, seed + 4000);
        RationalMatrix a = random_csym(g, seed);
        CHECK(rank_of(a) + static_cast<int>(nullspace(a).size()) == a.size());
    }
}

TEST_CASE("min_null_supports") {
    RationalMatrix c = fixtures::matrix_c();
    FortCollection circuits = min_null_supports(c);
    CHECK(circuits.sets ==
          std::vector<VertexSet>{fixtures::ladder8_f1(), fixtures::ladder8_f2()});

    CHECK(min_null_supports(RationalMatrix::identity(4)).empty());

    RationalMatrix lap = RationalMatrix::laplacian(cycle(5));
    FortCollection lc = min_null_supports(lap);
    REQUIRE(lc.size() == 1);
    CHECK(lc.sets[0] == full_set(5));
}

TEST_CASE("all_null_supports are the unions of circuits") {
    RationalMatrix c = fixtures::matrix_c();
    FortCollection all = all_null_supports(c);
    std::vector<VertexSet> expected{fixtures::ladder8_f1(), fixtures::ladder8_f2(),
                                    fixtures::ladder8_f1() | fixtures::ladder8_f2()};
    std::sort(expected.begin(), expected.end(), LexLess{});
    CHECK(all.sets == expected);

    CHECK(all_null_supports(RationalMatrix::identity(3)).empty());

    // Rank-zero matrix on two vertices: every nonzero vector is null.
    RationalMatrix zero(2);
    FortCollection z = all_null_supports(zero);
    CHECK(z.size() == 3);

    // Each union is realized by an explicit null vector.
    for (VertexSet f : all.sets) {
        auto x = null_vector_with_support(c, f);
        REQUIRE(x.has_value());
        CHECK(support(*x) == f);
        for (const Rational& r : c.apply(*x)) CHECK(r == 0);
    }
    CHECK(!null_vector_with_support(c, vs({0, 1})).has_value());
}

TEST_CASE("verify_support_fort") {
    CHECK(verify_support_fort(fixtures::matrix_c(), fixtures::ladder8()).ok);
    Graph conn = cycle(6);
    CHECK(verify_support_fort(RationalMatrix::laplacian(conn), conn).ok);
    CHECK_THROWS_AS(verify_support_fort(RationalMatrix(3), cycle(3)), InputError);
}

TEST_CASE("verify_nullity_tau on the ladder matrix") {
    NullityTauReport rep = verify_nullity_tau(fixtures::matrix_c());
    CHECK(rep.nullity == 2);
    CHECK(rep.tau_min == 2);
    CHECK(rep.tau_all == 2);
    CHECK(rep.equal);

    NullityTauReport id = verify_nullity_tau(RationalMatrix::identity(4));
    CHECK(id.nullity == 0);
    CHECK(id.equal);
}

TEST_CASE("special basis of the ladder matrix") {
    NullBasis nb = special_null_basis(fixtures::matrix_c());
    REQUIRE(nb.vectors.size() == 2);
    REQUIRE(nb.transversal.size() == 2);
    std::vector<VertexSet> supports;
    for (size_t i = 0; i < nb.vectors.size(); ++i) {
        supports.push_back(support(nb.vectors[i]));
        CHECK(nb.support_map.at(nb.transversal[i]) == supports.back());
        // Identity block on the transversal rows.
        for (size_t j = 0; j < nb.transversal.size(); ++j)
            CHECK(nb.vectors[i][static_cast<size_t>(nb.transversal[j])] == (i == j ? 1 : 0));
    }
    std::sort(supports.begin(), supports.end(), LexLess{});
    CHECK(supports == std::vector<VertexSet>{fixtures::ladder8_f1(), fixtures::ladder8_f2()});
}

TEST_CASE("special basis: laplacian and block diagonal sums") {
    NullBasis lb = special_null_basis(RationalMatrix::laplacian(cycle(4)));
    REQUIRE(lb.vectors.size() == 1);
    CHECK(lb.transversal == std::vector<int>{3});
    CHECK(lb.vectors[0][3] == 1);
    for (const Rational& r : lb.vectors[0]) CHECK(r == 1);

    // Direct sum of two singular blocks keeps supports inside the blocks.
    Graph two = disjoint_union(std::vector<Graph>{cycle(3), cycle(3)});
    NullBasis db = special_null_basis(RationalMatrix::laplacian(two));
    REQUIRE(db.vectors.size() == 2);
    std::vector<VertexSet> supports{support(db.vectors[0]), support(db.vectors[1])};
    std::sort(supports.begin(), supports.end(), LexLess{});
    CHECK(supports == std::vector<VertexSet>{vs({0, 1, 2}), vs({3, 4, 5})});

    CHECK_THROWS_AS(special_null_basis(RationalMatrix::identity(3)), InputError);
}

TEST_CASE("random members are deterministic and pattern-correct") {
    Graph g = petersen();
    RationalMatrix a = random_csym(g, 7);
    CHECK(a == random_csym(g, 7));
    CHECK(in_csym(a, g));
    RationalMatrix m = random_msym(g, 7);
    CHECK(m == random_msym(g, 7));
    CHECK(in_msym(m, g));
    CHECK(random_csym(g, 8) == random_csym(g, 8));

    RationalMatrix k2 = random_csym(complete(2), 3);
    CHECK(k2.at(0, 1) != 0);
    CHECK(k2.at(1, 0) != 0);
}

TEST_CASE("null support law: nullity = tau over sampled matrices") {
    int singular_seen = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        int n = 1 + static_cast<int>(seed % 8);
        Graph g = oracle::random_graph(n, 0.5, seed * 31 + 5);
        RationalMatrix a = seed % 2 ? random_csym(g, seed) : random_msym(g, seed);
        NullityTauReport rep = verify_nullity_tau(a);
        CHECK(rep.equal);
        if (rep.nullity > 0) {
            ++singular_seen;
            CHECK(verify_support_fort(a, g).ok);
            CHECK(check_circuit_axioms(n, min_null_supports(a)).ok);
        }
    }
    CHECK(singular_seen > 0);
}
