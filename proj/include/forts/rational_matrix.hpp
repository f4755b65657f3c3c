#ifndef FORTS_RATIONAL_MATRIX_HPP
#define FORTS_RATIONAL_MATRIX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "forts/fort_collection.hpp"
#include "forts/graph.hpp"
#include "forts/rational.hpp"

namespace forts {

using RationalVector = std::vector<Rational>;

// Dense square matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * static_cast<size_t>(n)) {}

    static RationalMatrix identity(int n);
    static RationalMatrix laplacian(const Graph& g);

    int size() const { return n_; }
    Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)]; }
    const Rational& at(int i, int j) const {
        return e_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)];
    }

    bool is_symmetric() const;
    bool is_comb_symmetric() const;
    bool is_zero() const;

    RationalVector apply(std::span<const Rational> x) const;  // A x
    RationalMatrix multiply(const RationalMatrix& other) const;

    bool operator==(const RationalMatrix& other) const { return n_ == other.n_ && e_ == other.e_; }

private:
    int n_ = 0;
    std::vector<Rational> e_;
};

// Reduced row echelon form of an arbitrary rectangular system; pivot columns
// are chosen greedily left to right.
struct Echelon {
    std::vector<RationalVector> rows;  // nonzero rows of the RREF
    std::vector<int> pivot_cols;
    int rank = 0;
    int cols = 0;
};

Echelon reduced_echelon(std::vector<RationalVector> rows, int cols);

// Basis of {x : Mx = 0} for a rectangular system given by rows; one vector
// per free column, unit at its free column and zero at the other free
// columns, ordered by free column index.
std::vector<RationalVector> kernel_basis(const std::vector<RationalVector>& rows, int cols);

struct KernelResult {
    std::vector<RationalVector> basis;
    std::vector<int> free_cols;  // ascending; basis[i] is unit at free_cols[i]
};

KernelResult kernel_with_free_columns(const std::vector<RationalVector>& rows, int cols);

int rank_of(const RationalMatrix& a);
inline int nullity_of(const RationalMatrix& a) { return a.size() - rank_of(a); }
std::vector<RationalVector> nullspace(const RationalMatrix& a);

VertexSet support(std::span<const Rational> x);

// Graph of the off-diagonal nonzero pattern.  Throws InputError when the
// pattern is not combinatorially symmetric, naming an offending entry.
Graph pattern_of(const RationalMatrix& a);

bool in_csym(const RationalMatrix& a, const Graph& g);
bool in_msym(const RationalMatrix& a, const Graph& g);

// Minimal supports of nonzero null vectors == circuits of the column
// matroid.  Enumerated by rank queries inside the union of the nullspace
// basis supports, in increasing size order.
FortCollection min_null_supports(const RationalMatrix& a);

// Every support of a nonzero null vector: exactly the unions of circuits.
FortCollection all_null_supports(const RationalMatrix& a, std::int64_t cap = kDefaultFortCap);

// The unique (up to scale) null vector with support exactly c, for c a
// circuit of the column matroid.
RationalVector circuit_vector(const RationalMatrix& a, VertexSet c);

// A null vector with support exactly f, when f is a union of circuits;
// built from circuit vectors with integer coefficient powers t^i, taking the
// smallest t that avoids every cancellation.
std::optional<RationalVector> null_vector_with_support(const RationalMatrix& a, VertexSet f);

struct SupportFortReport {
    bool ok = true;
    VertexSet counterexample = 0;  // a minimal support that is not a fort
};

SupportFortReport verify_support_fort(const RationalMatrix& a, const Graph& g);

struct NullityTauReport {
    int nullity = 0;
    int tau_min = 0;
    int tau_all = 0;
    bool equal = false;
};

NullityTauReport verify_nullity_tau(const RationalMatrix& a, std::int64_t cap = kDefaultFortCap);

// Nullspace basis indexed by a minimum transversal of the null supports: the
// free columns T of the echelon form, one vector per v in T with entry 1 at
// v and 0 at the rest of T, so the rows indexed by T form an identity block.
struct NullBasis {
    std::vector<RationalVector> vectors;
    std::vector<int> transversal;          // ascending
    std::map<int, VertexSet> support_map;  // v in transversal -> support
};

NullBasis special_null_basis(const RationalMatrix& a);

// Seeded random members of csym(G) / msym(G): independent (resp. mirrored)
// nonzero integer entries on edges, small integers on the diagonal with zero
// included.
RationalMatrix random_csym(const Graph& g, std::uint64_t seed);
RationalMatrix random_msym(const Graph& g, std::uint64_t seed);

}  // namespace forts

#endif
