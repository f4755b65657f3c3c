#ifndef FORTS_CONSTRUCT_HPP
#define FORTS_CONSTRUCT_HPP

#include <optional>
#include <vector>

#include "forts/flow.hpp"
#include "forts/graph.hpp"
#include "forts/rational_matrix.hpp"

namespace forts {

// Pairwise-disjoint forts together with the prescribed null vectors, one per
// fort with matching support.
struct ConstructionSpec {
    Graph graph;
    std::vector<VertexSet> forts;
    std::vector<RationalVector> vectors;

    // All-ones vectors on each fort.
    static ConstructionSpec with_indicator_vectors(Graph g, std::vector<VertexSet> forts);

    void validate() const;  // throws InputError on any violation
};

// A combinatorially symmetric matrix with every spec vector in its
// nullspace.  Always succeeds: rows against each fort are balanced using the
// 0-or->=2 neighbor counts, diagonals of fort vertices absorb the rest.
RationalMatrix build_csym_disjoint(const ConstructionSpec& spec);

struct MsymObstruction {
    int fort_i = 0;  // indices into spec.forts
    int fort_j = 0;
    Edge bridge{0, 0};  // a bridge of the cross graph, original vertex ids
};

struct MsymResult {
    std::optional<RationalMatrix> matrix;
    std::optional<MsymObstruction> obstruction;
};

// The symmetric construction: Laplacian diagonal blocks, zero-sum-flow cross
// blocks, balanced boundary rows, an arbitrary symmetric remainder; succeeds
// exactly when every pairwise cross graph is bridgeless, otherwise the
// bridged pair is returned as a certified negative.
MsymResult build_msym_disjoint(const ConstructionSpec& spec);

// Off-diagonal pattern positions (i < j) forced to vanish in every symmetric
// matrix with support inside the pattern of G and all spec vectors null.
// Nonempty output certifies that no msym(G) realization exists.
std::vector<Edge> forced_zero_entries(const ConstructionSpec& spec);

struct BarbellPartition {
    VertexSet w1 = 0;
    VertexSet w2 = 0;
    VertexSet rest = 0;
};

// First separated pair of minimal forts in (size, lex) order, if any.
// Shrinking both sides of a separated pair to minimal forts keeps them
// separated, so minimal pairs decide existence.
std::optional<BarbellPartition> barbell_partition(const Graph& g,
                                                  std::int64_t cap = kDefaultFortCap);

struct SapReport {
    bool has_sap = true;
    std::optional<RationalMatrix> witness;  // nonzero X when the SAP fails
};

// Solves A o X = I o X = AX = 0 over symmetric X exactly; the SAP holds iff
// only X = 0 remains.
SapReport sap_check(const RationalMatrix& a);

struct BarbellMatrix {
    RationalMatrix matrix;
    RationalMatrix witness;  // the all-ones block X
};

// A symmetric matrix without the SAP from a separated fort pair, plus the
// explicit block witness; all three product identities are verified exactly.
BarbellMatrix build_barbell_matrix(const Graph& g, VertexSet w1, VertexSet w2);

}  // namespace forts

#endif
