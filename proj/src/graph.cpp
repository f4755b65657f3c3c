#include "forts/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace forts {

namespace {
constexpr int kMaxParseVertices = 10000;
}

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw InputError("negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
        throw InputError("label count does not match vertex count");
    size_t words = (static_cast<size_t>(n) + 63) / 64;
    rows_.assign(static_cast<size_t>(n), std::vector<std::uint64_t>(words, 0));
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v)) continue;  // duplicate edges collapse
        rows_[static_cast<size_t>(u)][static_cast<size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
        rows_[static_cast<size_t>(v)][static_cast<size_t>(u) / 64] |= std::uint64_t{1} << (u % 64);
        ++edge_count_;
    }
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (std::uint64_t w : rows_[static_cast<size_t>(v)]) d += std::popcount(w);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const auto& row = rows_[static_cast<size_t>(v)];
    for (size_t wi = 0; wi < row.size(); ++wi) {
        std::uint64_t w = row[wi];
        while (w) {
            out.push_back(static_cast<int>(wi * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr char kG6Lo = 63;   // '?'
constexpr char kG6Hi = 126;  // '~'

void check_g6_byte(char c) {
    if (c < kG6Lo || c > kG6Hi)
        throw InputError("character outside the graph6 alphabet: code " +
                         std::to_string(static_cast<int>(static_cast<unsigned char>(c))));
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    if (s.starts_with(">>graph6<<")) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw InputError("empty graph6 input");
    for (char c : s) check_g6_byte(c);

    size_t pos = 0;
    long long n = 0;
    if (s[0] != kG6Hi) {
        n = s[0] - kG6Lo;
        pos = 1;
    } else if (s.size() >= 4 && s[1] != kG6Hi) {
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - kG6Lo);
        pos = 4;
    } else if (s.size() >= 8 && s[1] == kG6Hi) {
        n = 0;
        for (size_t i = 2; i <= 7; ++i) n = (n << 6) | (s[i] - kG6Lo);
        pos = 8;
    } else {
        throw InputError("malformed graph6 length header");
    }
    if (n > kMaxParseVertices)
        throw InputError("graph6 vertex count " + std::to_string(n) + " exceeds parser limit");

    long long bits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((bits + 5) / 6);
    if (s.size() - pos < need) throw InputError("graph6 token truncated");
    if (s.size() - pos > need) throw InputError("trailing bytes after graph6 token");

    std::vector<Edge> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = s[pos + static_cast<size_t>(bit / 6)] - kG6Lo;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // Padding bits must be zero in a canonical token.
    for (long long b = bits; b < static_cast<long long>(need) * 6; ++b) {
        int byte = s[pos + static_cast<size_t>(b / 6)] - kG6Lo;
        if ((byte >> (5 - b % 6)) & 1) throw InputError("nonzero padding bits in graph6 token");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back(kG6Hi);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
    } else {
        throw InputError("graph too large for graph6 encoder");
    }
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<int> groups(static_cast<size_t>((bits + 5) / 6), 0);
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v))
                groups[static_cast<size_t>(bit / 6)] |= 1 << (5 - bit % 6);
    for (int grp : groups) out.push_back(static_cast<char>(grp + kG6Lo));
    return out;
}

// ---------------------------------------------------------------------------
// Generators

Graph path(int n) {
    if (n < 1) throw InputError("path requires n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw InputError("cycle requires n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, e);
}

Graph complete(int n) {
    if (n < 1) throw InputError("complete requires n >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph complete_multipartite(std::span<const int> parts) {
    if (parts.empty()) throw InputError("complete_multipartite requires at least one part");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw InputError("part sizes must be >= 1");
        n += p;
    }
    std::vector<int> part_of(static_cast<size_t>(n));
    int v = 0;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int k = 0; k < parts[i]; ++k) part_of[static_cast<size_t>(v++)] = static_cast<int>(i);
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[static_cast<size_t>(a)] != part_of[static_cast<size_t>(b)]) e.emplace_back(a, b);
    return Graph(n, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) e.push_back(make_edge(i, (i + 1) % 5));  // outer
    for (int i = 0; i < 5; ++i) e.emplace_back(i, i + 5);                // spokes
    for (int i = 0; i < 5; ++i) e.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner
    return Graph(10, e);
}

Graph corona_k1(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw InputError("corona_k1 requires a nonempty graph");
    std::vector<Edge> e = g.edges();
    for (int i = 0; i < n; ++i) e.emplace_back(i, i + n);
    return Graph(2 * n, e);
}

Graph disjoint_union(std::span<const Graph> gs) {
    int n = 0;
    std::vector<Edge> e;
    for (const Graph& g : gs) {
        for (auto [u, v] : g.edges()) e.emplace_back(u + n, v + n);
        n += g.vertex_count();
    }
    return Graph(n, e);
}

Graph empty_graph(int n) {
    if (n < 0) throw InputError("negative vertex count");
    return Graph(n, {});
}

// ---------------------------------------------------------------------------
// Structure

std::vector<Edge> bridges(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), -1);
    std::vector<Edge> out;
    int timer = 0;
    // Lowpoint DFS; parent edge tracked by endpoint, parallel edges impossible
    // in a simple graph.
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
        for (int w : g.neighbors(v)) {
            if (w == parent) {
                parent = -1;  // skip the tree edge once
                continue;
            }
            if (disc[static_cast<size_t>(w)] == -1) {
                dfs(w, v);
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
                if (low[static_cast<size_t>(w)] > disc[static_cast<size_t>(v)]) out.push_back(make_edge(v, w));
            } else {
                low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(w)]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[static_cast<size_t>(v)] == -1) dfs(v, -1);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        queue.assign(1, s);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : g.neighbors(v)) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    queue.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition bp;
    for (int v = 0; v < n; ++v)
        (color[static_cast<size_t>(v)] == 0 ? bp.side1 : bp.side2).push_back(v);
    return bp;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> vs(vertices.begin(), vertices.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs) g.check_vertex(v);
    std::vector<int> new_id(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < vs.size(); ++i) new_id[static_cast<size_t>(vs[i])] = static_cast<int>(i);
    std::vector<Edge> e;
    for (int v : vs)
        for (int w : g.neighbors(v))
            if (v < w && new_id[static_cast<size_t>(w)] != -1)
                e.push_back(make_edge(new_id[static_cast<size_t>(v)], new_id[static_cast<size_t>(w)]));
    return {Graph(static_cast<int>(vs.size()), e), std::move(vs)};
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet vertices) {
    auto vs = to_vertices(vertices);
    return induced_subgraph(g, vs);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[static_cast<size_t>(id)].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[static_cast<size_t>(id)].begin(), out[static_cast<size_t>(id)].end());
    }
    return out;
}

}  // namespace forts
