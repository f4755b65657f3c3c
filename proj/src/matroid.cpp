#include "forts/matroid.hpp"

#include "forts/forts.hpp"
#include "forts/transversal.hpp"

namespace forts {

AxiomCheck check_circuit_axioms(int ground_n, const FortCollection& family) {
    if (family.ground_n != ground_n) throw InputError("ground set size mismatch");
    for (VertexSet c : family.sets)
        if (c == 0) return {false, AxiomViolation{1, 0, 0, -1}};
    const auto& sets = family.sets;
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = 0; j < sets.size(); ++j) {
            if (i == j) continue;
            if (is_subset(sets[i], sets[j]) && sets[i] != sets[j])
                return {false, AxiomViolation{2, sets[i], sets[j], -1}};
        }
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j) {
            VertexSet shared = sets[i] & sets[j];
            for (int x : to_vertices(shared)) {
                VertexSet room = (sets[i] | sets[j]) & ~single(x);
                bool found = false;
                for (VertexSet c : sets)
                    if (is_subset(c, room)) {
                        found = true;
                        break;
                    }
                if (!found) return {false, AxiomViolation{3, sets[i], sets[j], x}};
            }
        }
    return {true, std::nullopt};
}

MatroidView MatroidView::make(int ground_n, FortCollection circuits) {
    AxiomCheck check = check_circuit_axioms(ground_n, circuits);
    if (!check.ok)
        throw InputError("circuit family violates matroid axiom " +
                         std::to_string(check.violation->axiom));
    return {ground_n, std::move(circuits)};
}

int matroid_rank(const MatroidView& m) {
    return m.ground_n - min_transversal(m.circuits).size;
}

CompatibilityCheck exchange_condition(const FortCollection& family) {
    const auto& sets = family.sets;
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j) {
            VertexSet shared = sets[i] & sets[j];
            for (int x : to_vertices(shared)) {
                VertexSet room = (sets[i] | sets[j]) & ~single(x);
                bool found = false;
                for (VertexSet c : sets)
                    if (is_subset(c, room)) {
                        found = true;
                        break;
                    }
                if (!found) return {false, CompatibilityViolation{sets[i], sets[j], x}};
            }
        }
    return {true, std::nullopt};
}

CompatibilityCheck is_compatible(const Graph& g, const FortCollection& family) {
    if (family.ground_n != g.vertex_count()) throw InputError("family ground set does not match graph");
    for (VertexSet f : family.sets)
        if (!is_fort(g, f))
            throw InputError("family member is not a fort: {" + [&] {
                std::string s;
                for (int v : to_vertices(f)) s += (s.empty() ? "" : ",") + std::to_string(v);
                return s;
            }() + "}");
    return exchange_condition(family);
}

std::map<int, VertexSet> fundamental_forts(const Graph& g, const FortCollection& family,
                                           VertexSet t) {
    CompatibilityCheck compat = is_compatible(g, family);
    if (!compat.ok) throw InputError("fundamental_forts: family is not compatible");
    if (!is_transversal(family, t)) throw InputError("fundamental_forts: t is not a transversal");
    TransversalResult opt = min_transversal(family);
    if (set_size(t) != opt.size) throw InputError("fundamental_forts: t is not minimum");
    std::map<int, VertexSet> out;
    for (int v : to_vertices(t)) {
        std::optional<VertexSet> unique_fort;
        for (VertexSet f : family.sets) {
            if ((f & t) == single(v)) {
                if (unique_fort)
                    throw InputError("fundamental_forts: two forts meet the transversal only at " +
                                     std::to_string(v) + ", certifying incompatibility");
                unique_fort = f;
            }
        }
        if (!unique_fort)
            throw InputError("fundamental_forts: no fort meets the transversal only at " +
                             std::to_string(v));
        out[v] = *unique_fort;
    }
    return out;
}

MatroidEmbedding embed_matroid(const MatroidView& m) {
    MatroidEmbedding out;
    VertexSet loop_mask = 0;
    for (VertexSet c : m.circuits.sets)
        if (set_size(c) == 1) {
            out.loops.push_back(lowest_vertex(c));
            loop_mask |= c;
        }
    std::vector<Edge> edges;
    for (int u = 0; u < m.ground_n; ++u) {
        if (contains(loop_mask, u)) continue;
        for (int v = u + 1; v < m.ground_n; ++v)
            if (!contains(loop_mask, v)) edges.emplace_back(u, v);
    }
    out.graph = Graph(m.ground_n, edges);
    out.circuits_are_forts = true;
    for (VertexSet c : m.circuits.sets)
        if (!is_fort(out.graph, c)) out.circuits_are_forts = false;
    return out;
}

}  // namespace forts
