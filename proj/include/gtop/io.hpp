#pragma once

#include <json.hpp>
#include <string>

#include "gtop/fpgroup.hpp"
#include "gtop/graph.hpp"
#include "gtop/homotopy.hpp"
#include "gtop/ncomplex.hpp"

namespace gtop {

using Json = nlohmann::ordered_json;

// {"name", "vertices": [names], "edges": [[a,b],...]} with a <= b in vertex order
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"domain", "codomain", "assignment": {v: f(v)}}
Json to_json(const GraphMap& f);
GraphMap map_from_json(const Json& j);

// {"graph", "vertices": [names]}; with a graph given, "graph" may be omitted
Json to_json(const Walk& w);
Walk walk_from_json(const Json& j);
Walk walk_from_json(const Json& j, const Graph& g);

// {"generators": [...], "relators": [text...], "text": "<...|...>"}
Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

// {"vertices": [...], "maximal_faces": [[names]...]}
Json to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

Json to_json(const AbelianInvariants& a);
Json to_json(const GroupIdentity& g);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace gtop
