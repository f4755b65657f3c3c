#include "forts/certify.hpp"

#include <algorithm>

#include "forts/construct.hpp"
#include "forts/forcing.hpp"
#include "forts/forts.hpp"
#include "forts/matroid.hpp"
#include "forts/transversal.hpp"
#include "forts/y_search.hpp"

namespace forts {

Json make_certificate(const std::string& command, Json inputs, Json claim, Json witness) {
    Json cert;
    cert["version"] = kCertificateVersion;
    cert["command"] = command;
    cert["inputs"] = std::move(inputs);
    cert["claim"] = std::move(claim);
    cert["witness"] = std::move(witness);
    return cert;
}

namespace {

struct CertContext {
    const Json& inputs;
    const Json& claim;
    const Json& witness;
    int base = 0;
};

Graph input_graph(const CertContext& c) {
    if (!c.inputs.contains("graph")) throw InputError("certificate inputs lack a graph");
    return graph_from_json(c.inputs["graph"], c.base);
}

void verify_fort_list(const CertContext& c, VerifyOutcome& out, bool minimal) {
    Graph g = input_graph(c);
    auto sets = fort_family_from_json(c.witness["forts"], g.vertex_count(), c.base);
    for (VertexSet s : sets)
        if (!is_fort(g, s)) {
            out.fail("listed set is not a fort");
            return;
        }
    if (c.claim["count"].get<std::int64_t>() != static_cast<std::int64_t>(sets.size()))
        out.fail("count does not match the listed forts");
    if (minimal && !FortCollection::make(g.vertex_count(), sets).is_antichain())
        out.fail("minimal fort list is not an antichain");
}

void verify_zero_forcing(const CertContext& c, VerifyOutcome& out) {
    Graph g = input_graph(c);
    VertexSet b = vertex_list_from_json(c.witness["witness"], g.vertex_count(), c.base);
    if (set_size(b) != c.claim["Z"].get<int>()) out.fail("witness size differs from Z");
    // Replay the logged chronology step by step.
    VertexSet filled = b;
    for (const Json& step : c.witness["force_log"]) {
        if (!step.is_array() || step.size() != 2) throw InputError("malformed force log entry");
        int u = step[0].get<int>() - c.base;
        int w = step[1].get<int>() - c.base;
        g.check_vertex(u);
        g.check_vertex(w);
        if (!contains(filled, u) || contains(filled, w) ||
            (g.neighbor_mask(u) & ~filled) != single(w)) {
            out.fail("force log step is illegal");
            return;
        }
        filled |= single(w);
    }
    if (filled != g.full_vertex_set()) out.fail("force log does not fill the graph");
}

void verify_tau(const CertContext& c, VerifyOutcome& out) {
    int ground_n = c.inputs["ground_n"].get<int>();
    auto sets = fort_family_from_json(c.inputs["family"], ground_n, c.base);
    FortCollection family = FortCollection::make(ground_n, sets);
    VertexSet t = vertex_list_from_json(c.witness["witness"], ground_n, c.base);
    if (!is_transversal(family, t)) out.fail("witness misses a family member");
    if (set_size(t) != c.claim["tau"].get<int>()) out.fail("witness size differs from tau");
}

void verify_compatible(const CertContext& c, VerifyOutcome& out) {
    Graph g = input_graph(c);
    auto sets = fort_family_from_json(c.inputs["family"], g.vertex_count(), c.base);
    FortCollection family = FortCollection::make(g.vertex_count(), sets);
    CompatibilityCheck check = is_compatible(g, family);
    if (check.ok != c.claim["compatible"].get<bool>()) {
        out.fail("compatibility recheck disagrees with the claim");
        return;
    }
    if (!check.ok) {
        const Json& v = c.witness["violation"];
        VertexSet f1 = vertex_list_from_json(v["F1"], g.vertex_count(), c.base);
        VertexSet f2 = vertex_list_from_json(v["F2"], g.vertex_count(), c.base);
        int x = v["x"].get<int>() - c.base;
        if (!family.contains_set(f1) || !family.contains_set(f2))
            out.fail("violation names sets outside the family");
        if (!contains(f1 & f2, x)) out.fail("violation element is not shared");
        VertexSet room = (f1 | f2) & ~single(x);
        for (VertexSet s : family.sets)
            if (is_subset(s, room)) out.fail("violation is satisfiable inside the family");
    }
}

void verify_family_tau_claim(const CertContext& c, VerifyOutcome& out, const Graph& g,
                             const std::vector<VertexSet>& sets, int claimed_tau) {
    FortCollection family = FortCollection::make(g.vertex_count(), sets);
    for (VertexSet s : sets)
        if (!is_fort(g, s)) out.fail("family member is not a fort");
    if (!exchange_condition(family).ok) out.fail("family is not compatible");
    if (min_transversal(family).size != claimed_tau)
        out.fail("family transversal number differs from the claim");
}

void verify_y_number(const CertContext& c, VerifyOutcome& out) {
    Graph g = input_graph(c);
    int y = c.claim["Y"].get<int>();
    if (!c.claim["proven"].get<bool>()) return;  // nothing to recheck beyond the bound
    auto sets = fort_family_from_json(c.witness["witness_family"], g.vertex_count(), c.base);
    if (y == 0) {
        if (!sets.empty()) out.fail("Y = 0 with a nonempty witness family");
        return;
    }
    verify_family_tau_claim(c, out, g, sets, y);
}

void verify_bounds(const CertContext& c, VerifyOutcome& out) {
    Graph g = input_graph(c);
    const Json& chain = c.claim["chain"];
    int ft = chain["ft"].get<int>();
    int n_lower = chain["N_lower"].get<int>();
    int z = chain["Z"].get<int>();

    auto packing = fort_family_from_json(c.witness["ft_witness"], g.vertex_count(), c.base);
    if (static_cast<int>(packing.size()) != ft) out.fail("packing size differs from ft");
    VertexSet seen = 0;
    for (VertexSet f : packing) {
        if (!is_fort(g, f)) out.fail("packing member is not a fort");
        if (f & seen) out.fail("packing is not disjoint");
        seen |= f;
    }

    VertexSet zw = vertex_list_from_json(c.witness["z_witness"], g.vertex_count(), c.base);
    if (set_size(zw) != z) out.fail("Z witness size mismatch");
    if (!is_zfs(g, zw)) out.fail("Z witness is not a zero forcing set");

    if (ft > n_lower) out.fail("chain violated: ft > N_lower");
    if (!chain["Y"].is_null()) {
        int y = chain["Y"].get<int>();
        bool proven = chain["y_proven"].get<bool>();
        if (proven) {
            if (n_lower > y) out.fail("chain violated: N_lower > Y");
            if (y > z) out.fail("chain violated: Y > Z");
            auto fam = fort_family_from_json(c.witness["y_witness"], g.vertex_count(), c.base);
            if (y > 0) verify_family_tau_claim(c, out, g, fam, y);
        }
    }
}

void verify_construct(const CertContext& c, VerifyOutcome& out, bool symmetric) {
    Graph g = input_graph(c);
    auto forts = fort_family_from_json(c.inputs["forts"], g.vertex_count(), c.base);
    std::vector<RationalVector> vectors;
    for (const Json& v : c.inputs["vectors"]) vectors.push_back(rational_vector_from_json(v));

    if (symmetric && !c.claim["ok"].get<bool>()) {
        const Json& ob = c.witness["obstruction"];
        int i = ob["pair"][0].get<int>();
        int j = ob["pair"][1].get<int>();
        if (i < 0 || j < 0 || i >= static_cast<int>(forts.size()) ||
            j >= static_cast<int>(forts.size())) {
            out.fail("obstruction pair out of range");
            return;
        }
        Edge bridge = edge_from_json(ob["bridge"], c.base);
        CrossGraph cross = cross_bipartite(g, forts[static_cast<size_t>(i)], forts[static_cast<size_t>(j)]);
        auto its = std::pair{
            std::find(cross.vertex_map.begin(), cross.vertex_map.end(), bridge.first),
            std::find(cross.vertex_map.begin(), cross.vertex_map.end(), bridge.second)};
        if (its.first == cross.vertex_map.end() || its.second == cross.vertex_map.end()) {
            out.fail("obstruction edge is outside the cross graph");
            return;
        }
        Edge local = make_edge(static_cast<int>(its.first - cross.vertex_map.begin()),
                               static_cast<int>(its.second - cross.vertex_map.begin()));
        auto br = bridges(cross.graph);
        if (std::find(br.begin(), br.end(), local) == br.end())
            out.fail("named edge is not a bridge of the cross graph");
        return;
    }

    RationalMatrix a = matrix_from_json(c.witness["matrix"]);
    if (symmetric && !a.is_symmetric()) out.fail("matrix is not symmetric");
    if (!in_csym(a, g)) out.fail("matrix pattern differs from the graph");
    for (const RationalVector& x : vectors)
        for (const Rational& r : a.apply(x))
            if (r != 0) {
                out.fail("matrix does not annihilate a prescribed vector");
                return;
            }
}

std::vector<RationalVector> forced_zero_rows(const Graph& g,
                                             const std::vector<VertexSet>& forts,
                                             const std::vector<RationalVector>& vectors) {
    // Mirror of the construction in forced_zero_entries: one variable per
    // edge, then one per diagonal entry.
    std::vector<Edge> edges = g.edges();
    size_t vars = edges.size() + static_cast<size_t>(g.vertex_count());
    std::vector<RationalVector> rows;
    for (size_t i = 0; i < forts.size(); ++i) {
        const RationalVector& x = vectors[i];
        for (int v = 0; v < g.vertex_count(); ++v) {
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
    return rows;
}

void verify_forced_zeros(const CertContext& c, VerifyOutcome& out) {
    Graph g = input_graph(c);
    auto forts = fort_family_from_json(c.inputs["forts"], g.vertex_count(), c.base);
    std::vector<RationalVector> vectors;
    for (const Json& v : c.inputs["vectors"]) vectors.push_back(rational_vector_from_json(v));
    std::vector<Edge> edges = g.edges();
    auto rows = forced_zero_rows(g, forts, vectors);
    size_t vars = edges.size() + static_cast<size_t>(g.vertex_count());

    std::vector<RationalVector> basis;
    for (const Json& b : c.witness["basis"]) basis.push_back(rational_vector_from_json(b));
    for (const RationalVector& x : basis) {
        if (x.size() != vars) throw InputError("kernel vector length mismatch");
        for (const RationalVector& row : rows) {
            Rational acc = 0;
            for (size_t k = 0; k < vars; ++k) acc += row[k] * x[k];
            if (acc != 0) {
                out.fail("witness vector does not solve the constraint system");
                return;
            }
        }
    }
    // The basis must span the solution space: dimension check by elimination.
    int expected = static_cast<int>(vars) - reduced_echelon(rows, static_cast<int>(vars)).rank;
    if (static_cast<int>(basis.size()) != expected) {
        out.fail("witness basis does not span the solution space");
        return;
    }
    if (!basis.empty() &&
        reduced_echelon(basis, static_cast<int>(vars)).rank != static_cast<int>(basis.size()))
        out.fail("witness basis is linearly dependent");

    std::vector<Edge> forced;
    for (size_t k = 0; k < edges.size(); ++k) {
        bool always_zero = true;
        for (const RationalVector& x : basis)
            if (x[k] != 0) always_zero = false;
        if (always_zero) forced.push_back(edges[k]);
    }
    Json expected_json = Json::array();
    for (Edge e : forced) expected_json.push_back(edge_json(e, c.base));
    if (c.claim["forced"] != expected_json) out.fail("forced entry set differs from recomputation");
}

void verify_zsf(const CertContext& c, VerifyOutcome& out) {
    Graph g = input_graph(c);
    if (c.claim["exists"].get<bool>()) {
        FlowAssignment flow = flow_from_json(c.witness, c.base);
        if (!flow_is_zero_sum(g, flow)) out.fail("flow recheck failed");
    } else {
        Edge bridge = edge_from_json(c.witness["bridge"], c.base);
        auto br = bridges(g);
        if (std::find(br.begin(), br.end(), bridge) == br.end())
            out.fail("named edge is not a bridge");
    }
}

void verify_nullspace(const CertContext& c, VerifyOutcome& out) {
    RationalMatrix a = matrix_from_json(c.inputs["matrix"]);
    std::vector<RationalVector> basis;
    for (const Json& b : c.witness["basis"]) basis.push_back(rational_vector_from_json(b));
    for (const RationalVector& x : basis) {
        if (static_cast<int>(x.size()) != a.size()) throw InputError("basis vector length mismatch");
        for (const Rational& r : a.apply(x))
            if (r != 0) {
                out.fail("basis vector is not in the nullspace");
                return;
            }
    }
    if (static_cast<int>(basis.size()) != c.claim["dimension"].get<int>())
        out.fail("dimension differs from the basis size");
    if (static_cast<int>(basis.size()) != nullity_of(a))
        out.fail("dimension differs from n - rank");
    if (!basis.empty() &&
        reduced_echelon(basis, a.size()).rank != static_cast<int>(basis.size()))
        out.fail("basis is linearly dependent");
}

void verify_special_basis(const CertContext& c, VerifyOutcome& out) {
    RationalMatrix a = matrix_from_json(c.inputs["matrix"]);
    std::vector<RationalVector> vectors;
    for (const Json& b : c.witness["vectors"]) vectors.push_back(rational_vector_from_json(b));
    std::vector<int> transversal;
    for (const Json& t : c.claim["transversal"]) transversal.push_back(t.get<int>() - c.base);
    if (vectors.size() != transversal.size()) {
        out.fail("one vector per transversal vertex required");
        return;
    }
    if (static_cast<int>(vectors.size()) != nullity_of(a)) out.fail("vector count differs from nullity");
    for (size_t i = 0; i < vectors.size(); ++i) {
        for (const Rational& r : a.apply(vectors[i]))
            if (r != 0) {
                out.fail("vector is not in the nullspace");
                return;
            }
        for (size_t j = 0; j < transversal.size(); ++j) {
            Rational expected = i == j ? 1 : 0;
            if (vectors[i][static_cast<size_t>(transversal[j])] != expected) {
                out.fail("identity block violated at the transversal rows");
                return;
            }
        }
        VertexSet supp = support(vectors[i]);
        VertexSet claimed = vertex_list_from_json(
            c.witness["support_map"][std::to_string(transversal[i] + c.base)], a.size(), c.base);
        if (supp != claimed) out.fail("support map differs from the vector support");
    }
}

void verify_embed_matroid(const CertContext& c, VerifyOutcome& out) {
    int ground_n = c.inputs["ground_n"].get<int>();
    auto circuits = fort_family_from_json(c.inputs["circuits"], ground_n, c.base);
    Graph g = graph_from_json(c.witness["graph"], c.base);
    if (g.vertex_count() != ground_n) {
        out.fail("embedding graph has the wrong order");
        return;
    }
    VertexSet loops = vertex_list_from_json(c.claim["loops"], ground_n, c.base);
    for (int v = 0; v < ground_n; ++v) {
        bool isolated = g.degree(v) == 0;
        bool clique = !contains(loops, v);
        if (isolated == clique && ground_n - set_size(loops) > 1) {
            out.fail("graph is not isolated-loops plus a clique");
            return;
        }
    }
    for (int u = 0; u < ground_n; ++u)
        for (int v = u + 1; v < ground_n; ++v) {
            bool expected = !contains(loops, u) && !contains(loops, v);
            if (g.has_edge(u, v) != expected) {
                out.fail("graph is not isolated-loops plus a clique");
                return;
            }
        }
    for (VertexSet circ : circuits)
        if (!is_fort(g, circ)) out.fail("a circuit is not a fort of the embedding");
}

void verify_sap(const CertContext& c, VerifyOutcome& out) {
    RationalMatrix a = matrix_from_json(c.inputs["matrix"]);
    if (!a.is_symmetric()) throw InputError("sap certificate matrix is not symmetric");
    if (c.claim["has_sap"].get<bool>()) {
        // Definitional recheck by elimination.
        if (!sap_check(a).has_sap) out.fail("a nonzero witness exists after all");
        return;
    }
    RationalMatrix x = matrix_from_json(c.witness["witness"]);
    if (x.size() != a.size() || !x.is_symmetric()) {
        out.fail("witness is not a symmetric matrix of matching size");
        return;
    }
    if (x.is_zero()) out.fail("witness is the zero matrix");
    for (int u = 0; u < a.size(); ++u)
        for (int v = 0; v < a.size(); ++v) {
            if (a.at(u, v) != 0 && x.at(u, v) != 0) out.fail("A o X != 0");
            if (u == v && x.at(u, v) != 0) out.fail("I o X != 0");
        }
    if (!a.multiply(x).is_zero()) out.fail("AX != 0");
}

void verify_petersen_audit(const CertContext& c, VerifyOutcome& out) {
    Graph p = petersen();
    FortCollection mins = minimal_forts(p);
    if (min_transversal(mins).size != 5) out.fail("minimal fort transversal is not 5");
    for (const Json& v : c.witness["violations"]) {
        VertexSet f1 = vertex_list_from_json(v["F1"], 10, c.base);
        VertexSet f2 = vertex_list_from_json(v["F2"], 10, c.base);
        int x = v["x"].get<int>() - c.base;
        if (!mins.contains_set(f1) || !mins.contains_set(f2)) {
            out.fail("violation names a non-minimal fort");
            continue;
        }
        if (!contains(f1 & f2, x)) {
            out.fail("violation element is not shared");
            continue;
        }
        VertexSet room = (f1 | f2) & ~single(x);
        std::vector<VertexSet> pool;
        for (VertexSet s : mins.sets)
            if (is_subset(s, room)) pool.push_back(s);
        auto claimed = fort_family_from_json(v["pool"], 10, c.base);
        std::sort(claimed.begin(), claimed.end(), LexLess{});
        if (pool != claimed) out.fail("violation pool differs from recomputation");
    }
}

}  // namespace

VerifyOutcome verify_certificate(const Json& cert) {
    if (!cert.is_object() || !cert.contains("version") || !cert.contains("command") ||
        !cert.contains("inputs") || !cert.contains("claim") || !cert.contains("witness"))
        throw InputError("certificate lacks the required fields");
    if (cert["version"].get<std::string>() != kCertificateVersion)
        throw InputError("unknown certificate version");
    CertContext c{cert["inputs"], cert["claim"], cert["witness"],
                  cert["inputs"].value("one_based", false) ? 1 : 0};
    const std::string command = cert["command"].get<std::string>();

    VerifyOutcome out;
    if (command == "forts") verify_fort_list(c, out, false);
    else if (command == "minimal-forts") verify_fort_list(c, out, true);
    else if (command == "zero-forcing") verify_zero_forcing(c, out);
    else if (command == "tau") verify_tau(c, out);
    else if (command == "compatible") verify_compatible(c, out);
    else if (command == "y-number") verify_y_number(c, out);
    else if (command == "bounds") verify_bounds(c, out);
    else if (command == "construct-csym") verify_construct(c, out, false);
    else if (command == "construct-msym") verify_construct(c, out, true);
    else if (command == "forced-zeros") verify_forced_zeros(c, out);
    else if (command == "zsf") verify_zsf(c, out);
    else if (command == "nullspace") verify_nullspace(c, out);
    else if (command == "special-basis") verify_special_basis(c, out);
    else if (command == "embed-matroid") verify_embed_matroid(c, out);
    else if (command == "sap-check") verify_sap(c, out);
    else if (command == "petersen-audit") verify_petersen_audit(c, out);
    else throw InputError("unknown certificate command: " + command);
    return out;
}

}  // namespace forts
