#include "forts/forcing.hpp"

namespace forts {

ColoringState forcing_closure(const Graph& g, VertexSet initial) {
    g.require_small("forcing_closure");
    if (!is_subset(initial, g.full_vertex_set()))
        throw InputError("initial set has out-of-range vertex");
    ColoringState st;
    st.filled = initial;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!contains(st.filled, v)) continue;
            VertexSet unfilled = g.neighbor_mask(v) & ~st.filled;
            if (set_size(unfilled) == 1) {
                int w = lowest_vertex(unfilled);
                st.filled |= single(w);
                st.force_log.emplace_back(v, w);
                changed = true;
            }
        }
    }
    return st;
}

bool is_zfs(const Graph& g, VertexSet b) {
    return forcing_closure(g, b).filled == g.full_vertex_set();
}

namespace {

// Advances c to the next k-combination of {0..n-1} in lexicographic order on
// the ascending vertex sequence; returns false after the last one.
inline bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - k + i) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

ZeroForcingNumber zero_forcing_number(const Graph& g) {
    g.require_small("zero_forcing_number");
    int n = g.vertex_count();
    if (n == 0) return {0, 0, {}};
    VertexSet limit = full_set(n);
    for (int k = 1; k <= n; ++k) {
        std::vector<int> c(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i;
        do {
            VertexSet b = from_vertices(c);
            ColoringState st = forcing_closure(g, b);
            if (st.filled == limit) return {k, b, std::move(st.force_log)};
        } while (next_combination(c, n));
    }
    return {n, limit, {}};  // unreachable: B = V always forces
}

}  // namespace forts
