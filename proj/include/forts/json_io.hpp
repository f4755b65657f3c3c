#ifndef FORTS_JSON_IO_HPP
#define FORTS_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "forts/fort_collection.hpp"
#include "forts/flow.hpp"
#include "forts/graph.hpp"
#include "forts/rational_matrix.hpp"

namespace forts {

using Json = nlohmann::ordered_json;

// All vertex ids in emitted JSON are shifted by base (0 by default, 1 under
// --one-based); parsing shifts them back.

Json vertex_list_json(VertexSet s, int base);
VertexSet vertex_list_from_json(const Json& j, int n, int base);

Json vertex_list_json(const std::vector<int>& vs, int base);

Json edge_json(Edge e, int base);
Edge edge_from_json(const Json& j, int base);

Json graph_json(const Graph& g, int base);
Graph graph_from_json(const Json& j, int base);

Json fort_family_json(const std::vector<VertexSet>& sets, int base);
std::vector<VertexSet> fort_family_from_json(const Json& j, int n, int base);

Json matrix_json(const RationalMatrix& a);
RationalMatrix matrix_from_json(const Json& j);

Json rational_vector_json(const RationalVector& x);
RationalVector rational_vector_from_json(const Json& j);

Json flow_json(const FlowAssignment& flow, int base);
FlowAssignment flow_from_json(const Json& j, int base);

}  // namespace forts

#endif
