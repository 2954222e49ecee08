#pragma once

#include "jfilt/lagrangian.hpp"
#include "jfilt/orient.hpp"

#include "json.hpp"

#include <string>

namespace jfilt {

// Objects serialize with sorted keys, so output is canonical.
using Json = nlohmann::json;

// Integers print as JSON numbers when they fit in 64 bits, as decimal
// strings otherwise; both forms parse.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json to_json(const LieElement& u, const std::vector<std::string>& names = {});
LieElement lie_from_json(const Json& j);

Json to_json(const TensorElement& t, const std::vector<std::string>& names = {});
TensorElement tensor_from_json(const Json& j);

// {g, q, images: {x1: "word", ...}}
Json to_json(const NilAut& h);
NilAut aut_from_json(const Json& j);

// {g, q, kind: "y"|"x", entries: ["word", ...]}
Json to_json(const LongitudeTuple& t);
LongitudeTuple tuple_from_json(const Json& j);

// {vertices: [{id, arity, halfedges}], edges: [[h,h]], cyclic: {id: [h,h,h]},
//  labels: {id: [int...]}, rank}
Json to_json(const ClasperGraph& g);
ClasperGraph graph_from_json(const Json& j);

// {edgeIndex: "tail->head"} by half-edge ids.
Json orientation_to_json(const ClasperGraph& g, const Orientation& o);

// Parse errors become ValidationError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

} // namespace jfilt
