#include "forts/rational_matrix.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "forts/forts.hpp"
#include "forts/transversal.hpp"

namespace forts {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::laplacian(const Graph& g) {
    RationalMatrix m(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) m.at(v, v) = g.degree(v);
    for (auto [u, v] : g.edges()) {
        m.at(u, v) = -1;
        m.at(v, u) = -1;
    }
    return m;
}

bool RationalMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RationalMatrix::is_comb_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((at(i, j) == 0) != (at(j, i) == 0)) return false;
    return true;
}

bool RationalMatrix::is_zero() const {
    for (const Rational& r : e_)
        if (r != 0) return false;
    return true;
}

RationalVector RationalMatrix::apply(std::span<const Rational> x) const {
    if (static_cast<int>(x.size()) != n_) throw InputError("vector length mismatch");
    RationalVector y(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        Rational acc = 0;
        for (int j = 0; j < n_; ++j) acc += at(i, j) * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = acc;
    }
    return y;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& other) const {
    if (other.n_ != n_) throw InputError("matrix size mismatch");
    RationalMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j) out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Elimination

Echelon reduced_echelon(std::vector<RationalVector> rows, int cols) {
    Echelon e;
    e.cols = cols;
    size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][static_cast<size_t>(c)] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const Rational inv = rows[r][static_cast<size_t>(c)];
        for (int j = c; j < cols; ++j) rows[r][static_cast<size_t>(j)] /= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const Rational f = rows[i][static_cast<size_t>(c)];
            if (f == 0) continue;
            for (int j = c; j < cols; ++j)
                rows[i][static_cast<size_t>(j)] -= f * rows[r][static_cast<size_t>(j)];
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    e.rank = static_cast<int>(r);
    return e;
}

KernelResult kernel_with_free_columns(const std::vector<RationalVector>& rows, int cols) {
    Echelon e = reduced_echelon(rows, cols);
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    KernelResult out;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        RationalVector x(static_cast<size_t>(cols));
        x[static_cast<size_t>(f)] = 1;
        for (size_t r = 0; r < e.rows.size(); ++r)
            x[static_cast<size_t>(e.pivot_cols[r])] = -e.rows[r][static_cast<size_t>(f)];
        out.basis.push_back(std::move(x));
        out.free_cols.push_back(f);
    }
    return out;
}

std::vector<RationalVector> kernel_basis(const std::vector<RationalVector>& rows, int cols) {
    return kernel_with_free_columns(rows, cols).basis;
}

namespace {

std::vector<RationalVector> matrix_rows(const RationalMatrix& a) {
    std::vector<RationalVector> rows(static_cast<size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) {
        rows[static_cast<size_t>(i)].resize(static_cast<size_t>(a.size()));
        for (int j = 0; j < a.size(); ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = a.at(i, j);
    }
    return rows;
}

// Rank of the column submatrix A[:, cols].
int column_rank(const RationalMatrix& a, const std::vector<int>& cols) {
    std::vector<RationalVector> rows(static_cast<size_t>(a.size()),
                                     RationalVector(cols.size()));
    for (int i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            rows[static_cast<size_t>(i)][j] = a.at(i, cols[j]);
    return reduced_echelon(std::move(rows), static_cast<int>(cols.size())).rank;
}

}  // namespace

int rank_of(const RationalMatrix& a) {
    return reduced_echelon(matrix_rows(a), a.size()).rank;
}

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
    return kernel_basis(matrix_rows(a), a.size());
}

VertexSet support(std::span<const Rational> x) {
    if (x.size() > 64) throw InputError("support requires dimension <= 64");
    VertexSet s = 0;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) s |= single(static_cast<int>(i));
    return s;
}

// ---------------------------------------------------------------------------
// Patterns

Graph pattern_of(const RationalMatrix& a) {
    int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((a.at(i, j) == 0) != (a.at(j, i) == 0))
                throw InputError("matrix is not combinatorially symmetric at (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.at(i, j) != 0) edges.emplace_back(i, j);
    return Graph(n, edges);
}

bool in_csym(const RationalMatrix& a, const Graph& g) {
    if (a.size() != g.vertex_count()) return false;
    if (!a.is_comb_symmetric()) return false;
    return pattern_of(a) == g;
}

bool in_msym(const RationalMatrix& a, const Graph& g) {
    return a.is_symmetric() && in_csym(a, g);
}

// ---------------------------------------------------------------------------
// Null supports

FortCollection min_null_supports(const RationalMatrix& a) {
    int n = a.size();
    if (n > 64) throw InputError("min_null_supports requires n <= 64");
    VertexSet universe = 0;
    for (const RationalVector& x : nullspace(a)) universe |= support(x);
    std::vector<int> uni = to_vertices(universe);
    std::vector<VertexSet> circuits;
    // Subsets of the support universe by increasing size: a set with no
    // smaller circuit inside is a circuit exactly when its columns are
    // dependent.
    for (int size = 1; size <= static_cast<int>(uni.size()); ++size) {
        std::vector<int> idx(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            std::vector<int> cols;
            cols.reserve(static_cast<size_t>(size));
            VertexSet mask = 0;
            for (int i : idx) {
                cols.push_back(uni[static_cast<size_t>(i)]);
                mask |= single(uni[static_cast<size_t>(i)]);
            }
            bool has_smaller = false;
            for (VertexSet c : circuits)
                if (is_subset(c, mask)) {
                    has_smaller = true;
                    break;
                }
            if (!has_smaller && column_rank(a, cols) < size) circuits.push_back(mask);
            // next combination
            int i = size - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == static_cast<int>(uni.size()) - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < size; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return FortCollection::make(n, std::move(circuits), FortKind::minimal);
}

FortCollection all_null_supports(const RationalMatrix& a, std::int64_t cap) {
    FortCollection circuits = min_null_supports(a);
    std::set<VertexSet> unions;
    std::vector<VertexSet> frontier;
    for (VertexSet c : circuits.sets) {
        if (unions.insert(c).second) frontier.push_back(c);
    }
    while (!frontier.empty()) {
        std::vector<VertexSet> next;
        for (VertexSet u : frontier) {
            for (VertexSet c : circuits.sets) {
                VertexSet merged = u | c;
                if (merged == u) continue;
                if (unions.insert(merged).second) {
                    if (static_cast<std::int64_t>(unions.size()) > cap)
                        throw CapExceeded("null support cap exceeded",
                                          static_cast<std::int64_t>(unions.size()));
                    next.push_back(merged);
                }
            }
        }
        frontier = std::move(next);
    }
    return FortCollection::make(a.size(), {unions.begin(), unions.end()}, FortKind::custom);
}

RationalVector circuit_vector(const RationalMatrix& a, VertexSet c) {
    std::vector<int> cols = to_vertices(c);
    std::vector<RationalVector> rows(static_cast<size_t>(a.size()), RationalVector(cols.size()));
    for (int i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            rows[static_cast<size_t>(i)][j] = a.at(i, cols[j]);
    auto kernel = kernel_basis(rows, static_cast<int>(cols.size()));
    if (kernel.size() != 1)
        throw InputError("circuit_vector: set is not a circuit of the column matroid");
    RationalVector x(static_cast<size_t>(a.size()));
    for (size_t j = 0; j < cols.size(); ++j) x[static_cast<size_t>(cols[j])] = kernel[0][j];
    if (support(x) != c) throw InputError("circuit_vector: kernel vector has a zero inside the circuit");
    return x;
}

std::optional<RationalVector> null_vector_with_support(const RationalMatrix& a, VertexSet f) {
    FortCollection circuits = min_null_supports(a);
    std::vector<VertexSet> inside;
    VertexSet covered = 0;
    for (VertexSet c : circuits.sets)
        if (is_subset(c, f)) {
            inside.push_back(c);
            covered |= c;
        }
    if (covered != f) return std::nullopt;  // not a union of circuits
    std::vector<RationalVector> vecs;
    vecs.reserve(inside.size());
    for (VertexSet c : inside) vecs.push_back(circuit_vector(a, c));
    // Coefficients 1, t, t^2, ... kill at most |f|*(k-1) values of t in
    // total, so a small positive integer always survives.
    int limit = static_cast<int>(inside.size()) * set_size(f) + 2;
    for (int t = 1; t <= limit; ++t) {
        RationalVector z(static_cast<size_t>(a.size()));
        Rational coeff = 1;
        for (const RationalVector& x : vecs) {
            for (size_t i = 0; i < z.size(); ++i) z[i] += coeff * x[i];
            coeff *= t;
        }
        if (support(z) == f) return z;
    }
    return std::nullopt;  // unreachable for genuine unions
}

SupportFortReport verify_support_fort(const RationalMatrix& a, const Graph& g) {
    if (!in_csym(a, g)) throw InputError("verify_support_fort requires a matrix in csym(G)");
    // Unions of forts are forts, so checking the minimal supports suffices.
    for (VertexSet s : min_null_supports(a).sets)
        if (!is_fort(g, s)) return {false, s};
    return {true, 0};
}

NullityTauReport verify_nullity_tau(const RationalMatrix& a, std::int64_t cap) {
    NullityTauReport rep;
    rep.nullity = nullity_of(a);
    rep.tau_min = min_transversal(min_null_supports(a)).size;
    rep.tau_all = min_transversal(all_null_supports(a, cap)).size;
    rep.equal = rep.nullity == rep.tau_min && rep.tau_min == rep.tau_all;
    return rep;
}

NullBasis special_null_basis(const RationalMatrix& a) {
    if (a.size() > 64) throw InputError("special_null_basis requires n <= 64");
    KernelResult k = kernel_with_free_columns(matrix_rows(a), a.size());
    if (k.basis.empty()) throw InputError("special_null_basis requires nullity >= 1");
    NullBasis nb;
    nb.vectors = std::move(k.basis);
    nb.transversal = std::move(k.free_cols);
    for (size_t i = 0; i < nb.vectors.size(); ++i)
        nb.support_map[nb.transversal[i]] = support(nb.vectors[i]);
    return nb;
}

// ---------------------------------------------------------------------------
// Random members

namespace {

Rational draw_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(1, 6);
    int v = d(rng);
    return v <= 3 ? Rational(v) : Rational(3 - v);  // {1,2,3,-1,-2,-3}
}

Rational draw_diagonal(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-1, 1);
    return Rational(d(rng));
}

}  // namespace

RationalMatrix random_csym(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RationalMatrix m(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        m.at(u, v) = draw_nonzero(rng);
        m.at(v, u) = draw_nonzero(rng);
    }
    for (int v = 0; v < g.vertex_count(); ++v) m.at(v, v) = draw_diagonal(rng);
    return m;
}

RationalMatrix random_msym(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    RationalMatrix m(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        Rational w = draw_nonzero(rng);
        m.at(u, v) = w;
        m.at(v, u) = w;
    }
    for (int v = 0; v < g.vertex_count(); ++v) m.at(v, v) = draw_diagonal(rng);
    return m;
}

}  // namespace forts
