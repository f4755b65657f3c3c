#include "forts/json_io.hpp"

namespace forts {

namespace {

int checked_vertex(const Json& j, int n, int base) {
    if (!j.is_number_integer()) throw InputError("vertex id must be an integer");
    int v = j.get<int>() - base;
    if (v < 0 || (n >= 0 && v >= n))
        throw InputError("vertex id " + j.dump() + " out of range");
    return v;
}

}  // namespace

Json vertex_list_json(VertexSet s, int base) {
    Json out = Json::array();
    for (int v : to_vertices(s)) out.push_back(v + base);
    return out;
}

Json vertex_list_json(const std::vector<int>& vs, int base) {
    Json out = Json::array();
    for (int v : vs) out.push_back(v + base);
    return out;
}

VertexSet vertex_list_from_json(const Json& j, int n, int base) {
    if (!j.is_array()) throw InputError("vertex list must be an array");
    VertexSet s = 0;
    for (const Json& item : j) {
        int v = checked_vertex(item, n, base);
        if (v >= 64) throw InputError("vertex id exceeds the 64-vertex search limit");
        s |= single(v);
    }
    return s;
}

Json edge_json(Edge e, int base) { return Json::array({e.first + base, e.second + base}); }

Edge edge_from_json(const Json& j, int base) {
    if (!j.is_array() || j.size() != 2) throw InputError("edge must be a [u,v] pair");
    return make_edge(checked_vertex(j[0], -1, base), checked_vertex(j[1], -1, base));
}

Json graph_json(const Graph& g, int base) {
    Json out;
    out["n"] = g.vertex_count();
    Json edges = Json::array();
    for (Edge e : g.edges()) edges.push_back(edge_json(e, base));
    out["edges"] = std::move(edges);
    if (!g.labels().empty()) out["labels"] = g.labels();
    return out;
}

Graph graph_from_json(const Json& j, int base) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InputError("graph object needs \"n\" and \"edges\"");
    int n = j["n"].get<int>();
    std::vector<Edge> edges;
    for (const Json& e : j["edges"]) {
        Edge parsed = edge_from_json(e, base);
        if (parsed.first >= n || parsed.second >= n) throw InputError("edge endpoint out of range");
        edges.push_back(parsed);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return Graph(n, edges, std::move(labels));
}

Json fort_family_json(const std::vector<VertexSet>& sets, int base) {
    Json out = Json::array();
    for (VertexSet s : sets) out.push_back(vertex_list_json(s, base));
    return out;
}

std::vector<VertexSet> fort_family_from_json(const Json& j, int n, int base) {
    if (!j.is_array()) throw InputError("fort family must be an array of vertex lists");
    std::vector<VertexSet> out;
    for (const Json& item : j) out.push_back(vertex_list_from_json(item, n, base));
    return out;
}

Json matrix_json(const RationalMatrix& a) {
    Json rows = Json::array();
    for (int i = 0; i < a.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < a.size(); ++j) row.push_back(rational_to_string(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["n"] = a.size();
    out["rows"] = std::move(rows);
    return out;
}

RationalMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw InputError("matrix object needs \"n\" and \"rows\"");
    int n = j["n"].get<int>();
    if (n < 0 || static_cast<int>(j["rows"].size()) != n) throw InputError("matrix row count mismatch");
    RationalMatrix a(n);
    for (int i = 0; i < n; ++i) {
        const Json& row = j["rows"][static_cast<size_t>(i)];
        if (static_cast<int>(row.size()) != n) throw InputError("matrix column count mismatch");
        for (int k = 0; k < n; ++k)
            a.at(i, k) = rational_from_string(row[static_cast<size_t>(k)].get<std::string>());
    }
    return a;
}

Json rational_vector_json(const RationalVector& x) {
    Json out = Json::array();
    for (const Rational& r : x) out.push_back(rational_to_string(r));
    return out;
}

RationalVector rational_vector_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("vector must be an array of rational strings");
    RationalVector out;
    for (const Json& item : j) out.push_back(rational_from_string(item.get<std::string>()));
    return out;
}

Json flow_json(const FlowAssignment& flow, int base) {
    Json edges = Json::array();
    for (const auto& [e, w] : flow.edge_weights)
        edges.push_back(Json::array({e.first + base, e.second + base, rational_to_string(w)}));
    Json out;
    out["edges"] = std::move(edges);
    return out;
}

FlowAssignment flow_from_json(const Json& j, int base) {
    if (!j.is_object() || !j.contains("edges")) throw InputError("flow object needs \"edges\"");
    FlowAssignment flow;
    for (const Json& item : j["edges"]) {
        if (!item.is_array() || item.size() != 3) throw InputError("flow edge must be [u,v,weight]");
        Edge e = make_edge(item[0].get<int>() - base, item[1].get<int>() - base);
        flow.edge_weights[e] = rational_from_string(item[2].get<std::string>());
    }
    return flow;
}

}  // namespace forts
