#include "forts/flow.hpp"

#include <algorithm>

#include "forts/forts.hpp"
#include "forts/rational_matrix.hpp"

namespace forts {

CrossGraph cross_bipartite(const Graph& g, VertexSet f1, VertexSet f2) {
    if (f1 & f2) throw InputError("cross_bipartite: vertex sets overlap");
    auto verts = to_vertices(f1 | f2);
    std::vector<int> new_id(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < verts.size(); ++i) new_id[static_cast<size_t>(verts[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int u : to_vertices(f1))
        for (int v : g.neighbors(u))
            if (contains(f2, v))
                edges.push_back(make_edge(new_id[static_cast<size_t>(u)], new_id[static_cast<size_t>(v)]));
    CrossGraph out;
    out.graph = Graph(static_cast<int>(verts.size()), edges);
    for (int v : verts) {
        if (contains(f1, v)) out.side1.push_back(new_id[static_cast<size_t>(v)]);
        else out.side2.push_back(new_id[static_cast<size_t>(v)]);
    }
    out.vertex_map = std::move(verts);
    return out;
}

namespace {

// Root-anchored DFS: each cycle is discovered from its smallest vertex, with
// the direction fixed by second < last.
class CycleEnumerator {
public:
    CycleEnumerator(const Graph& g, std::int64_t cap) : g_(g), cap_(cap) {}

    std::vector<std::vector<int>> run() {
        int n = g_.vertex_count();
        on_path_.assign(static_cast<size_t>(n), false);
        for (root_ = 0; root_ < n; ++root_) {
            path_.assign(1, root_);
            on_path_[static_cast<size_t>(root_)] = true;
            extend();
            on_path_[static_cast<size_t>(root_)] = false;
        }
        std::sort(cycles_.begin(), cycles_.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        return std::move(cycles_);
    }

private:
    void extend() {
        int v = path_.back();
        for (int w : g_.neighbors(v)) {
            if (w == root_) {
                if (path_.size() >= 3 && path_[1] < path_.back()) {
                    if (static_cast<std::int64_t>(cycles_.size()) >= cap_)
                        throw CapExceeded("cycle cap exceeded",
                                          static_cast<std::int64_t>(cycles_.size()));
                    cycles_.push_back(path_);
                }
                continue;
            }
            if (w < root_ || on_path_[static_cast<size_t>(w)]) continue;
            path_.push_back(w);
            on_path_[static_cast<size_t>(w)] = true;
            extend();
            on_path_[static_cast<size_t>(w)] = false;
            path_.pop_back();
        }
    }

    const Graph& g_;
    std::int64_t cap_;
    int root_ = 0;
    std::vector<int> path_;
    std::vector<bool> on_path_;
    std::vector<std::vector<int>> cycles_;
};

}  // namespace

std::vector<std::vector<int>> enumerate_simple_cycles(const Graph& g, std::int64_t cap) {
    CycleEnumerator e(g, cap);
    return e.run();
}

ZeroSumFlowResult zero_sum_flow(const Graph& g, std::int64_t cycle_cap) {
    if (!bipartition(g)) throw InputError("zero_sum_flow requires a bipartite graph");
    auto cut_edges = bridges(g);
    if (!cut_edges.empty()) return {std::nullopt, cut_edges.front()};

    auto cycles = enumerate_simple_cycles(g, cycle_cap);
    FlowAssignment flow;
    Rational value(1);
    for (const auto& cyc : cycles) {
        value /= 2;  // cycle i carries +-1/2^i
        // Locate the lexicographically smallest edge of the cycle; it takes
        // the positive sign.
        size_t k = cyc.size();
        size_t anchor = 0;
        Edge smallest = make_edge(cyc[0], cyc[1 % k]);
        for (size_t i = 1; i < k; ++i) {
            Edge e = make_edge(cyc[i], cyc[(i + 1) % k]);
            if (e < smallest) {
                smallest = e;
                anchor = i;
            }
        }
        for (size_t i = 0; i < k; ++i) {
            Edge e = make_edge(cyc[i], cyc[(i + 1) % k]);
            bool positive = ((i + k - anchor) % 2) == 0;  // even cycle: parity wraps
            flow.edge_weights[e] += positive ? value : -value;
        }
    }
    // Bridgeless means every edge lies on a cycle, and the leading 1/2^i
    // dominates the tail, so all weights are nonzero; verify exactly anyway.
    for (auto [u, v] : g.edges()) {
        auto it = flow.edge_weights.find({u, v});
        if (it == flow.edge_weights.end() || it->second == 0)
            throw Error("zero_sum_flow: constructed weight vanished");
    }
    if (!flow_is_zero_sum(g, flow)) throw Error("zero_sum_flow: vertex sums are not zero");
    return {std::move(flow), std::nullopt};
}

bool flow_is_zero_sum(const Graph& g, const FlowAssignment& flow) {
    std::vector<Rational> sums(static_cast<size_t>(g.vertex_count()));
    for (const auto& [e, w] : flow.edge_weights) {
        if (w == 0) return false;
        if (!g.has_edge(e.first, e.second)) return false;
        sums[static_cast<size_t>(e.first)] += w;
        sums[static_cast<size_t>(e.second)] += w;
    }
    if (flow.edge_weights.size() != static_cast<size_t>(g.edge_count())) return false;
    for (const Rational& s : sums)
        if (s != 0) return false;
    return true;
}

bool bridge_forced_zero(const Graph& g, Edge e) {
    if (!bipartition(g)) throw InputError("bridge_forced_zero requires a bipartite graph");
    e = make_edge(e.first, e.second);
    auto edges = g.edges();
    auto pos = std::find(edges.begin(), edges.end(), e);
    if (pos == edges.end()) throw InputError("bridge_forced_zero: edge not in graph");
    size_t target = static_cast<size_t>(pos - edges.begin());
    // Vertex-sum constraints over one variable per edge.
    std::vector<RationalVector> rows(static_cast<size_t>(g.vertex_count()),
                                     RationalVector(edges.size()));
    for (size_t j = 0; j < edges.size(); ++j) {
        rows[static_cast<size_t>(edges[j].first)][j] = 1;
        rows[static_cast<size_t>(edges[j].second)][j] = 1;
    }
    for (const auto& x : kernel_basis(rows, static_cast<int>(edges.size())))
        if (x[target] != 0) return false;
    return true;
}

}  // namespace forts
