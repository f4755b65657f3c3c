#ifndef FORTS_GRAPH_HPP
#define FORTS_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "forts/bitset64.hpp"
#include "forts/errors.hpp"

namespace forts {

using Edge = std::pair<int, int>;  // stored normalized, first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency
// rows.  Rows are stored in 64-bit words so graphs larger than 64 vertices
// work for the polynomial-time operations; the search modules require n <= 64
// and use neighbor_mask().
class Graph {
public:
    Graph() = default;
    Graph(int n, std::span<const Edge> edges,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[static_cast<size_t>(u)][static_cast<size_t>(v) / 64] >>
                (static_cast<size_t>(v) % 64)) & 1;
    }

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    // Neighborhood as a single word; only valid when n <= 64.
    VertexSet neighbor_mask(int v) const {
        check_vertex(v);
        require_small("neighbor_mask");
        return rows_[static_cast<size_t>(v)].empty() ? 0 : rows_[static_cast<size_t>(v)][0];
    }

    VertexSet full_vertex_set() const {
        require_small("full_vertex_set");
        return full_set(n_);
    }

    // All edges in lexicographic (min,max) order.
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    void require_small(const char* op) const {
        if (n_ > 64) throw InputError(std::string(op) + " requires n <= 64, got n = " + std::to_string(n_));
    }

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::string> labels_;
};

// graph6 codec (McKay's format).  parse accepts an optional ">>graph6<<"
// header; encode emits the bare token.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

// Generators.  Canonical numbering per family:
//   path(n), cycle(n): vertices 0..n-1 in order.
//   complete(n): K_n.
//   complete_multipartite(parts): consecutive blocks of the given sizes.
//   petersen(): outer cycle 0-4, spokes i <-> i+5, inner cycle 5-7-9-6-8.
//   corona_k1(g): copy of g on 0..n-1, pendant of i is i+n.
//   disjoint_union(gs): blocks relabeled consecutively.
//   empty_graph(n): n isolated vertices.
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_multipartite(std::span<const int> parts);
Graph petersen();
Graph corona_k1(const Graph& g);
Graph disjoint_union(std::span<const Graph> gs);
Graph empty_graph(int n);

// Cut edges, in lexicographic (min,max) order.
std::vector<Edge> bridges(const Graph& g);

struct Bipartition {
    std::vector<int> side1;
    std::vector<int> side2;
};

// A 2-coloring by breadth-first search, or nullopt when an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // new id -> old id, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);
InducedSubgraph induced_subgraph(const Graph& g, VertexSet vertices);

// Connected components as vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace forts

#endif
