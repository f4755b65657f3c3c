#ifndef FORTS_TRANSVERSAL_HPP
#define FORTS_TRANSVERSAL_HPP

#include "forts/fort_collection.hpp"

namespace forts {

struct TransversalResult {
    int size = 0;
    VertexSet witness = 0;
    bool proven_optimal = true;
};

// Exact minimum hitting set by branch and bound: branch on the smallest
// unhit set, lower-bound by greedy disjoint packing, seed the incumbent by
// greedy hitting.  Rejects families containing the empty set.
TransversalResult min_transversal(const FortCollection& family);

bool is_transversal(const FortCollection& family, VertexSet t);

}  // namespace forts

#endif
