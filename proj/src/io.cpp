#include "gtop/io.hpp"

#include <fstream>

namespace gtop {

namespace {

template <class T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad field '") + key + "': " + e.what());
    }
}

}  // namespace

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back({g.vertex_name(a), g.vertex_name(b)});
    return {{"name", g.name()}, {"vertices", g.vertex_names()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
    auto vertices = field<std::vector<std::string>>(j, "vertices");
    auto edges = field<std::vector<std::pair<std::string, std::string>>>(j, "edges");
    std::string name = j.contains("name") ? field<std::string>(j, "name") : "G";
    return Graph::from_names(name, vertices, edges);
}

Json to_json(const GraphMap& f) {
    Json a = Json::object();
    for (int v = 0; v < f.domain().size(); ++v) a[f.domain().vertex_name(v)] = f.codomain().vertex_name(f(v));
    return {{"domain", to_json(f.domain())}, {"codomain", to_json(f.codomain())}, {"assignment", a}};
}

GraphMap map_from_json(const Json& j) {
    Graph dom = graph_from_json(field<Json>(j, "domain"));
    Graph cod = graph_from_json(field<Json>(j, "codomain"));
    std::vector<std::pair<std::string, std::string>> pairs;
    const Json assignment = field<Json>(j, "assignment");
    for (const auto& [k, v] : assignment.items()) {
        if (!v.is_string()) throw ValidationError("assignment values must be vertex names");
        pairs.push_back({k, v.get<std::string>()});
    }
    return GraphMap::from_names(dom, cod, pairs);
}

Json to_json(const Walk& w) { return {{"graph", to_json(w.graph())}, {"vertices", w.names()}}; }

Walk walk_from_json(const Json& j) { return walk_from_json(j, graph_from_json(field<Json>(j, "graph"))); }

Walk walk_from_json(const Json& j, const Graph& g) {
    if (j.is_array()) return Walk::from_names(g, j.get<std::vector<std::string>>());
    return Walk::from_names(g, field<std::vector<std::string>>(j, "vertices"));
}

Json to_json(const Presentation& p) {
    Json rels = Json::array();
    for (const auto& r : p.relators) rels.push_back(word_to_text(p, r));
    return {{"generators", p.generators}, {"relators", rels}, {"text", to_text(p)}};
}

Presentation presentation_from_json(const Json& j) {
    if (j.is_string()) return parse_presentation(j.get<std::string>());
    if (j.contains("text")) return parse_presentation(field<std::string>(j, "text"));
    Presentation p;
    p.generators = field<std::vector<std::string>>(j, "generators");
    for (const auto& r : field<std::vector<std::string>>(j, "relators")) p.relators.push_back(parse_word(p, r));
    return p;
}

Json to_json(const SimplicialComplex& c) {
    Json faces = Json::array();
    for (const auto& f : c.maximal_faces()) {
        Json face = Json::array();
        for (int v : f) face.push_back(c.vertex_name(v));
        faces.push_back(face);
    }
    return {{"vertices", c.vertex_names()}, {"maximal_faces", faces}};
}

SimplicialComplex complex_from_json(const Json& j) {
    auto faces = field<std::vector<std::vector<std::string>>>(j, "maximal_faces");
    if (j.contains("vertices"))
        for (const auto& v : field<std::vector<std::string>>(j, "vertices")) faces.push_back({v});
    return SimplicialComplex::from_names(faces);
}

Json to_json(const AbelianInvariants& a) {
    Json t = Json::array();
    for (const auto& d : a.torsion) t.push_back(d.str());
    return {{"rank", a.rank}, {"torsion", t}, {"text", a.to_string()}};
}

Json to_json(const GroupIdentity& g) {
    Json j = {{"group", g.name}, {"certified", g.certified}, {"abelianization", to_json(g.abelian)}};
    if (g.order) j["order"] = *g.order;
    j["simplified"] = to_text(g.simplified);
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LookupError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw LookupError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace gtop
