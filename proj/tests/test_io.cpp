#include <doctest.h>

#include "gtop/io.hpp"

using namespace gtop;

TEST_CASE("json round trips") {
    for (const Graph& g : {make_family("petersen", {}), make_family("interval", {3}), make_family("xn", {5})}) {
        Json j = to_json(g);
        Graph back = graph_from_json(j);
        CHECK(back == g);
        CHECK(to_json(back).dump() == j.dump());
        CHECK(graph_from_json(Json::parse(j.dump())) == g);
    }

    Graph c6 = make_family("cycle", {6}), c3 = make_family("cycle", {3});
    std::vector<int> f(6);
    for (int i = 0; i < 6; ++i) f[c6.index_of(std::to_string(i))] = c3.index_of(std::to_string(i % 3));
    GraphMap m(c6, c3, f);
    CHECK(map_from_json(to_json(m)).assignment() == m.assignment());
    CHECK(to_json(map_from_json(to_json(m))).dump() == to_json(m).dump());

    Walk w = Walk::from_names(c6, {"0", "1", "2", "1"});
    CHECK(walk_from_json(to_json(w)) == w);
    CHECK(walk_from_json(Json::array({"0", "5"}), c6) == Walk::from_names(c6, {"0", "5"}));

    Presentation p = parse_presentation("<a,b | a^2, b^3, (ab)^5>");
    Presentation q = presentation_from_json(to_json(p));
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
    Json bare = to_json(p);
    bare.erase("text");
    CHECK(presentation_from_json(bare).relators == p.relators);

    auto c = neighborhood_complex(make_family("complete", {4}), 1);
    CHECK(complex_from_json(to_json(c)) == c);
}

TEST_CASE("json errors") {
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": []})")), ValidationError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": ["a"], "edges": [["a","b"]]})")), Error);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices": 3, "edges": []})")), ValidationError);
    Json m = to_json(GraphMap::identity(make_family("cycle", {5})));
    m["assignment"]["0"] = "2";
    CHECK_THROWS_AS(map_from_json(m), ValidationError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), LookupError);
}
