#ifndef FORTS_FLOW_HPP
#define FORTS_FLOW_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "forts/graph.hpp"
#include "forts/rational.hpp"

namespace forts {

inline constexpr std::int64_t kDefaultCycleCap = 10000;

// Bipartite graph of the edges between two disjoint vertex sets.
struct CrossGraph {
    Graph graph;                // on the relabeled union
    std::vector<int> vertex_map;  // new id -> old id, ascending
    std::vector<int> side1;     // new ids of the first fort's vertices
    std::vector<int> side2;
};

CrossGraph cross_bipartite(const Graph& g, VertexSet f1, VertexSet f2);

// All simple cycles as canonical vertex sequences: smallest vertex first,
// second vertex smaller than last, listed by (length, lex).
std::vector<std::vector<int>> enumerate_simple_cycles(const Graph& g,
                                                      std::int64_t cap = kDefaultCycleCap);

struct FlowAssignment {
    std::map<Edge, Rational> edge_weights;  // all nonzero
};

struct ZeroSumFlowResult {
    std::optional<FlowAssignment> flow;
    std::optional<Edge> bridge;  // witness when no flow exists
};

// Constructive zero-sum flow on a bipartite graph: cycle i contributes
// alternating +-1/2^i, edge weights are the sums over the cycles through
// them.  Every vertex sum is exactly zero and every weight is nonzero; a
// bridge is returned instead when one exists.  Throws on non-bipartite
// input.
ZeroSumFlowResult zero_sum_flow(const Graph& g, std::int64_t cycle_cap = kDefaultCycleCap);

// True iff every solution of the vertex-sum-zero system (zero weights
// allowed) vanishes on e, decided by an exact kernel computation.
bool bridge_forced_zero(const Graph& g, Edge e);

// Exact recheck used by certificate verification.
bool flow_is_zero_sum(const Graph& g, const FlowAssignment& flow);

}  // namespace forts

#endif
