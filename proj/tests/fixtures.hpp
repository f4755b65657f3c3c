#ifndef FORTS_TESTS_FIXTURES_HPP
#define FORTS_TESTS_FIXTURES_HPP

// Shared fixtures.  Vertex ids are 0-based throughout; the 8-vertex example
// and its matrices use 1-based labels in the source figures, so everything
// here is shifted down by one.

#include <vector>

#include "forts/graph.hpp"
#include "forts/rational_matrix.hpp"

namespace fixtures {

using forts::Edge;
using forts::Graph;
using forts::RationalMatrix;
using forts::VertexSet;

inline VertexSet vs(std::initializer_list<int> items) {
    VertexSet s = 0;
    for (int v : items) s |= forts::single(v);
    return s;
}

// The 8-vertex two-ladder example: two 4-cycles joined by one edge.
inline Graph ladder8() {
    std::vector<Edge> e = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 5},
                           {4, 5}, {4, 6}, {5, 7}, {6, 7}};
    return Graph(8, e);
}

// Disjoint forts of ladder8 (1-based labels minus one).
inline VertexSet ladder8_f1() { return vs({0, 3, 5, 6}); }  // {1,4,6,7}
inline VertexSet ladder8_f2() { return vs({1, 2, 4, 7}); }  // {2,3,5,8}
inline VertexSet ladder8_f3() { return vs({0, 3}); }        // {1,4}
inline VertexSet ladder8_f4() { return vs({4, 7}); }        // {5,8}
inline VertexSet ladder8_f5() { return vs({1, 2, 5, 6}); }  // {2,3,6,7}
inline Edge ladder8_bridge() { return {2, 5}; }             // {3,6}

// The combinatorially symmetric matrix with null supports f1 and f2.
inline RationalMatrix matrix_c() {
    const int entries[8][8] = {
        {0, -1, 1, 0, 0, 0, 0, 0},
        {-1, 0, 0, 1, 0, 0, 0, 0},
        {1, 0, 0, 1, 0, -2, 0, 0},
        {0, 1, -1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, -1, 0},
        {0, 0, -2, 0, 1, 0, 0, 1},
        {0, 0, 0, 0, -1, 0, 0, 1},
        {0, 0, 0, 0, 0, 1, -1, 0},
    };
    RationalMatrix m(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m.at(i, j) = entries[i][j];
    return m;
}

// The symmetric repair of matrix_c: entries (2,3) and (6,7) flip to -1 and
// the diagonal picks up 2 at positions 2 and 5; its null supports include
// f3, f4 and f5.
inline RationalMatrix matrix_c_modified() {
    RationalMatrix m = matrix_c();
    m.at(2, 3) = -1;
    m.at(6, 7) = -1;
    m.at(2, 2) = 2;
    m.at(5, 5) = 2;
    return m;
}

// The twenty minimal forts of the Petersen graph.
inline std::vector<VertexSet> petersen_minimal_forts() {
    return {
        vs({0, 1, 3, 8}), vs({0, 1, 9, 7}), vs({0, 2, 3, 5}), vs({0, 2, 4, 7}),
        vs({0, 8, 2, 9}), vs({0, 3, 6, 7}), vs({0, 8, 4, 6}), vs({0, 9, 5, 6}),
        vs({1, 2, 4, 9}), vs({8, 1, 2, 5}), vs({1, 3, 4, 6}), vs({1, 3, 5, 9}),
        vs({8, 1, 4, 7}), vs({1, 5, 6, 7}), vs({9, 2, 3, 6}), vs({2, 4, 5, 6}),
        vs({8, 2, 6, 7}), vs({3, 4, 5, 7}), vs({8, 9, 3, 7}), vs({8, 9, 4, 5}),
    };
}

}  // namespace fixtures

#endif
