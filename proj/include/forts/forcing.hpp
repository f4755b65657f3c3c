#ifndef FORTS_FORCING_HPP
#define FORTS_FORCING_HPP

#include <utility>
#include <vector>

#include "forts/graph.hpp"

namespace forts {

struct ColoringState {
    VertexSet filled = 0;
    std::vector<std::pair<int, int>> force_log;  // (forcer, forced)
};

// Fixed point of the standard color change rule: a filled vertex with a
// unique unfilled neighbor fills it.  The fixed point is independent of the
// application order; the log records one valid chronology.
ColoringState forcing_closure(const Graph& g, VertexSet initial);

bool is_zfs(const Graph& g, VertexSet b);

struct ZeroForcingNumber {
    int value = 0;
    VertexSet witness = 0;
    std::vector<std::pair<int, int>> force_log;
};

// Exact Z(G) by increasing-cardinality subset search; the witness is the
// first zero forcing set in lexicographic order at the optimal size.
ZeroForcingNumber zero_forcing_number(const Graph& g);

}  // namespace forts

#endif
