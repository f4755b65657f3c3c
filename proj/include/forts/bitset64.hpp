#ifndef FORTS_BITSET64_HPP
#define FORTS_BITSET64_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace forts {

// Vertex subsets of graphs with at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

inline constexpr VertexSet kEmptySet = 0;

inline constexpr VertexSet single(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1; }

inline constexpr int set_size(VertexSet s) { return std::popcount(s); }

inline constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline constexpr int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

inline std::vector<int> to_vertices(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(set_size(s)));
    while (s) {
        int v = std::countr_zero(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

inline VertexSet from_vertices(std::span<const int> vs) {
    VertexSet s = 0;
    for (int v : vs) s |= single(v);
    return s;
}

// Lexicographic order on the ascending vertex sequences of two sets, the
// order used whenever fort collections or witnesses are listed.
inline bool lex_less(VertexSet a, VertexSet b) {
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;  // proper prefix compares smaller
}

struct LexLess {
    bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
    while (s) {
        fn(std::countr_zero(s));
        s &= s - 1;
    }
}

}  // namespace forts

#endif
