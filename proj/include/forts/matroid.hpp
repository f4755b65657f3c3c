#ifndef FORTS_MATROID_HPP
#define FORTS_MATROID_HPP

#include <map>
#include <optional>

#include "forts/fort_collection.hpp"
#include "forts/graph.hpp"

namespace forts {

// Circuit axiom check.  Axiom 1: no empty circuit.  Axiom 2: an antichain.
// Axiom 3: distinct circuits sharing x admit a third circuit inside their
// union minus x.
struct AxiomViolation {
    int axiom = 0;
    VertexSet c1 = 0;
    VertexSet c2 = 0;
    int element = -1;  // the shared x for axiom 3
};

struct AxiomCheck {
    bool ok = true;
    std::optional<AxiomViolation> violation;
};

AxiomCheck check_circuit_axioms(int ground_n, const FortCollection& family);

// Ground set size plus a validated circuit family.
struct MatroidView {
    int ground_n = 0;
    FortCollection circuits;

    static MatroidView make(int ground_n, FortCollection circuits);
};

// rank = ground_n - tau(circuits).
int matroid_rank(const MatroidView& m);

// Exchange condition for fort families: for distinct members sharing x, some
// member lies inside the union minus x.  The first violation in (pair, x)
// order is reported.  Members must be forts of g.
struct CompatibilityViolation {
    VertexSet f1 = 0;
    VertexSet f2 = 0;
    int element = -1;
};

struct CompatibilityCheck {
    bool ok = true;
    std::optional<CompatibilityViolation> violation;
};

CompatibilityCheck is_compatible(const Graph& g, const FortCollection& family);

// Same exchange check for an abstract family (no fort validation).
CompatibilityCheck exchange_condition(const FortCollection& family);

// For a compatible family with minimum transversal t: the unique member
// meeting t exactly in {v}, for each v in t.  Throws InputError when t is
// not a minimum transversal, when the family is incompatible, or when
// uniqueness fails (which itself certifies incompatibility).
std::map<int, VertexSet> fundamental_forts(const Graph& g, const FortCollection& family,
                                           VertexSet t);

struct MatroidEmbedding {
    Graph graph;                 // m isolated vertices plus a clique on the rest
    std::vector<int> loops;      // circuit elements that become isolated vertices
    bool circuits_are_forts = false;
};

// Every matroid arises from fort collections: loops map to isolated
// vertices, everything else to a clique.
MatroidEmbedding embed_matroid(const MatroidView& m);

}  // namespace forts

#endif
