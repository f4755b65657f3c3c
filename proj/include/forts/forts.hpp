#ifndef FORTS_FORTS_HPP
#define FORTS_FORTS_HPP

#include <cstdint>
#include <vector>

#include "forts/fort_collection.hpp"
#include "forts/graph.hpp"

namespace forts {

// F is a fort iff F is nonempty and no vertex outside F has exactly one
// neighbor inside F.
bool is_fort(const Graph& g, VertexSet f);

// Every fort of g, by backtracking over vertices in descending degree order
// with one-neighbor pruning.  Throws CapExceeded past cap.
FortCollection all_forts(const Graph& g, std::int64_t cap = kDefaultFortCap);

// Inclusion-minimal forts.
FortCollection minimal_forts(const Graph& g, std::int64_t cap = kDefaultFortCap);

struct FortNumber {
    int value = 0;
    std::vector<VertexSet> witness;  // pairwise-disjoint forts
};

// Maximum number of pairwise-disjoint forts.  Packing minimal forts is
// exhaustive: shrinking any fort of a disjoint family to a minimal fort
// inside it keeps the family disjoint.
FortNumber fort_number(const Graph& g, std::int64_t cap = kDefaultFortCap);

// True iff the disjoint forts f1, f2 have no edges between them.
// Throws InputError unless both are forts and they are disjoint.
bool separated(const Graph& g, VertexSet f1, VertexSet f2);

}  // namespace forts

#endif
