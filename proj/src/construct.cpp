#include "forts/construct.hpp"

#include <algorithm>

#include "forts/forts.hpp"

namespace forts {

ConstructionSpec ConstructionSpec::with_indicator_vectors(Graph g, std::vector<VertexSet> forts) {
    ConstructionSpec spec;
    spec.vectors.reserve(forts.size());
    for (VertexSet f : forts) {
        RationalVector x(static_cast<size_t>(g.vertex_count()));
        for (int v : to_vertices(f)) x[static_cast<size_t>(v)] = 1;
        spec.vectors.push_back(std::move(x));
    }
    spec.graph = std::move(g);
    spec.forts = std::move(forts);
    return spec;
}

void ConstructionSpec::validate() const {
    graph.require_small("construction");
    if (forts.size() != vectors.size())
        throw InputError("construction spec: fort and vector counts differ");
    VertexSet seen = 0;
    for (size_t i = 0; i < forts.size(); ++i) {
        if (!is_fort(graph, forts[i]))
            throw InputError("construction spec: set " + std::to_string(i) + " is not a fort");
        if (forts[i] & seen)
            throw InputError("construction spec: forts are not pairwise disjoint");
        seen |= forts[i];
        if (static_cast<int>(vectors[i].size()) != graph.vertex_count())
            throw InputError("construction spec: vector " + std::to_string(i) + " has wrong length");
        if (support(vectors[i]) != forts[i])
            throw InputError("construction spec: vector " + std::to_string(i) +
                             " support does not match its fort");
    }
}

RationalMatrix build_csym_disjoint(const ConstructionSpec& spec) {
    spec.validate();
    const Graph& g = spec.graph;
    int n = g.vertex_count();
    RationalMatrix a(n);
    VertexSet all_forts_mask = 0;
    for (VertexSet f : spec.forts) all_forts_mask |= f;

    for (int v = 0; v < n; ++v) {
        VertexSet unconstrained = g.neighbor_mask(v) & ~all_forts_mask;
        for (int u : to_vertices(unconstrained)) a.at(v, u) = 1;
        for (size_t i = 0; i < spec.forts.size(); ++i) {
            VertexSet f = spec.forts[i];
            const RationalVector& x = spec.vectors[i];
            std::vector<int> nbrs = to_vertices(g.neighbor_mask(v) & f);
            if (contains(f, v)) {
                // The diagonal absorbs the row sum against this fort.
                Rational s = 0;
                for (int u : nbrs) {
                    a.at(v, u) = 1;
                    s += x[static_cast<size_t>(u)];
                }
                a.at(v, v) = -s / x[static_cast<size_t>(v)];
            } else if (!nbrs.empty()) {
                // The fort condition gives >= 2 neighbors; the first ones get
                // unit weights (adjusting the second-to-last away from a
                // cancellation) and the last balances the sum.
                size_t k = nbrs.size();
                Rational s = 0;
                for (size_t j = 0; j + 2 < k; ++j) {
                    a.at(v, nbrs[j]) = 1;
                    s += x[static_cast<size_t>(nbrs[j])];
                }
                const Rational& second_last = x[static_cast<size_t>(nbrs[k - 2])];
                Rational c = (s + second_last == 0) ? 2 : 1;
                a.at(v, nbrs[k - 2]) = c;
                s += c * second_last;
                a.at(v, nbrs[k - 1]) = -s / x[static_cast<size_t>(nbrs[k - 1])];
            }
        }
    }

    if (!in_csym(a, g)) throw Error("build_csym_disjoint: output left csym(G)");
    for (const RationalVector& x : spec.vectors)
        for (const Rational& r : a.apply(x))
            if (r != 0) throw Error("build_csym_disjoint: vector not annihilated");
    return a;
}

MsymResult build_msym_disjoint(const ConstructionSpec& spec) {
    spec.validate();
    const Graph& g = spec.graph;
    int n = g.vertex_count();

    // Negative direction: a bridged cross graph certifies impossibility.
    for (size_t i = 0; i < spec.forts.size(); ++i)
        for (size_t j = i + 1; j < spec.forts.size(); ++j) {
            CrossGraph cross = cross_bipartite(g, spec.forts[i], spec.forts[j]);
            auto br = bridges(cross.graph);
            if (!br.empty()) {
                Edge orig = make_edge(cross.vertex_map[static_cast<size_t>(br[0].first)],
                                      cross.vertex_map[static_cast<size_t>(br[0].second)]);
                return {std::nullopt, MsymObstruction{static_cast<int>(i), static_cast<int>(j), orig}};
            }
        }

    // Normalize the vectors to 0/1 with a diagonal scaling.
    RationalVector d(static_cast<size_t>(n), Rational(1));
    VertexSet all_mask = 0;
    for (size_t i = 0; i < spec.forts.size(); ++i) {
        all_mask |= spec.forts[i];
        for (int v : to_vertices(spec.forts[i])) d[static_cast<size_t>(v)] = spec.vectors[i][static_cast<size_t>(v)];
    }

    RationalMatrix hat(n);
    // Diagonal blocks: Laplacians of the induced fort subgraphs.
    for (VertexSet f : spec.forts) {
        for (int v : to_vertices(f)) {
            int deg_in = set_size(g.neighbor_mask(v) & f);
            hat.at(v, v) = deg_in;
            for (int u : to_vertices(g.neighbor_mask(v) & f))
                hat.at(v, u) = -1;
        }
    }
    // Cross blocks: zero-sum flows on the bipartite cross graphs.
    for (size_t i = 0; i < spec.forts.size(); ++i)
        for (size_t j = i + 1; j < spec.forts.size(); ++j) {
            CrossGraph cross = cross_bipartite(g, spec.forts[i], spec.forts[j]);
            ZeroSumFlowResult flow = zero_sum_flow(cross.graph);
            if (!flow.flow) throw Error("build_msym_disjoint: bridge appeared after the pair scan");
            for (const auto& [e, w] : flow.flow->edge_weights) {
                int u = cross.vertex_map[static_cast<size_t>(e.first)];
                int v = cross.vertex_map[static_cast<size_t>(e.second)];
                hat.at(u, v) = w;
                hat.at(v, u) = w;
            }
        }
    // Boundary rows: entries into each fort balance to zero.
    for (int v = 0; v < n; ++v) {
        if (contains(all_mask, v)) continue;
        for (VertexSet f : spec.forts) {
            std::vector<int> nbrs = to_vertices(g.neighbor_mask(v) & f);
            if (nbrs.empty()) continue;
            size_t k = nbrs.size();  // >= 2 by the fort condition
            for (size_t idx = 0; idx + 1 < k; ++idx) {
                hat.at(v, nbrs[idx]) = 1;
                hat.at(nbrs[idx], v) = 1;
            }
            hat.at(v, nbrs[k - 1]) = -(static_cast<int>(k) - 1);
            hat.at(nbrs[k - 1], v) = -(static_cast<int>(k) - 1);
        }
    }
    // Remainder block: Laplacian of the induced complement plus the identity.
    VertexSet rest = g.full_vertex_set() & ~all_mask;
    for (int v : to_vertices(rest)) {
        hat.at(v, v) = set_size(g.neighbor_mask(v) & rest) + 1;
        for (int u : to_vertices(g.neighbor_mask(v) & rest)) hat.at(v, u) = -1;
    }

    // Undo the normalization.
    RationalMatrix a(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            a.at(u, v) = hat.at(u, v) / (d[static_cast<size_t>(u)] * d[static_cast<size_t>(v)]);

    if (!in_msym(a, g)) throw Error("build_msym_disjoint: output left msym(G)");
    for (const RationalVector& x : spec.vectors)
        for (const Rational& r : a.apply(x))
            if (r != 0) throw Error("build_msym_disjoint: vector not annihilated");
    return {std::move(a), std::nullopt};
}

std::vector<Edge> forced_zero_entries(const ConstructionSpec& spec) {
    spec.validate();
    const Graph& g = spec.graph;
    int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    size_t vars = edges.size() + static_cast<size_t>(n);  // edge entries then diagonals
    std::vector<size_t> edge_var(edges.size());
    for (size_t k = 0; k < edges.size(); ++k) edge_var[k] = k;

    std::vector<RationalVector> rows;
    for (size_t i = 0; i < spec.forts.size(); ++i) {
        const RationalVector& x = spec.vectors[i];
        for (int v = 0; v < n; ++v) {
            RationalVector row(vars);
            bool nonzero = false;
            for (size_t k = 0; k < edges.size(); ++k) {
                auto [p, q] = edges[k];
                if (p == v && x[static_cast<size_t>(q)] != 0) {
                    row[k] += x[static_cast<size_t>(q)];
                    nonzero = true;
                }
                if (q == v && x[static_cast<size_t>(p)] != 0) {
                    row[k] += x[static_cast<size_t>(p)];
                    nonzero = true;
                }
            }
            if (x[static_cast<size_t>(v)] != 0) {
                row[edges.size() + static_cast<size_t>(v)] = x[static_cast<size_t>(v)];
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    auto kernel = kernel_basis(rows, static_cast<int>(vars));
    std::vector<Edge> forced;
    for (size_t k = 0; k < edges.size(); ++k) {
        bool always_zero = true;
        for (const RationalVector& x : kernel)
            if (x[k] != 0) {
                always_zero = false;
                break;
            }
        if (always_zero) forced.push_back(edges[k]);
    }
    return forced;
}

std::optional<BarbellPartition> barbell_partition(const Graph& g, std::int64_t cap) {
    FortCollection mins = minimal_forts(g, cap);
    for (size_t i = 0; i < mins.sets.size(); ++i)
        for (size_t j = i + 1; j < mins.sets.size(); ++j) {
            VertexSet a = mins.sets[i], b = mins.sets[j];
            if (a & b) continue;
            if (separated(g, a, b))
                return BarbellPartition{a, b, g.full_vertex_set() & ~(a | b)};
        }
    return std::nullopt;
}

SapReport sap_check(const RationalMatrix& a) {
    if (!a.is_symmetric()) throw InputError("sap_check requires a symmetric matrix");
    int n = a.size();
    // Free entries of X: symmetric, zero diagonal, zero wherever A is nonzero.
    std::vector<Edge> vars;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a.at(u, v) == 0) vars.emplace_back(u, v);
    if (vars.empty()) return {true, std::nullopt};

    // AX = 0, one equation per matrix position.
    std::vector<RationalVector> rows;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            RationalVector row(vars.size());
            bool nonzero = false;
            for (size_t k = 0; k < vars.size(); ++k) {
                auto [p, q] = vars[k];
                Rational coeff = 0;
                if (q == c) coeff += a.at(r, p);
                if (p == c) coeff += a.at(r, q);
                if (coeff != 0) {
                    row[k] = coeff;
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }

    auto kernel = kernel_basis(rows, static_cast<int>(vars.size()));
    if (kernel.empty()) return {true, std::nullopt};
    RationalMatrix x(n);
    for (size_t k = 0; k < vars.size(); ++k) {
        x.at(vars[k].first, vars[k].second) = kernel[0][k];
        x.at(vars[k].second, vars[k].first) = kernel[0][k];
    }
    return {false, std::move(x)};
}

BarbellMatrix build_barbell_matrix(const Graph& g, VertexSet w1, VertexSet w2) {
    if (!separated(g, w1, w2)) throw InputError("build_barbell_matrix requires separated forts");
    ConstructionSpec spec = ConstructionSpec::with_indicator_vectors(g, {w1, w2});
    MsymResult res = build_msym_disjoint(spec);
    if (!res.matrix) throw Error("build_barbell_matrix: separated pair reported a bridge");
    const RationalMatrix& a = *res.matrix;
    int n = g.vertex_count();
    RationalMatrix x(n);
    for (int u : to_vertices(w1))
        for (int v : to_vertices(w2)) {
            x.at(u, v) = 1;
            x.at(v, u) = 1;
        }
    // A o X = I o X = AX = 0, all exact.
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (a.at(u, v) != 0 && x.at(u, v) != 0)
                throw Error("build_barbell_matrix: A o X != 0");
            if (u == v && x.at(u, v) != 0) throw Error("build_barbell_matrix: I o X != 0");
        }
    if (!a.multiply(x).is_zero()) throw Error("build_barbell_matrix: AX != 0");
    return {a, std::move(x)};
}

}  // namespace forts
