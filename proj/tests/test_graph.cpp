#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "gtop/graph.hpp"

using namespace gtop;

namespace {
std::vector<std::string> names_of(const Graph& g, const std::vector<int>& vs) {
    std::vector<std::string> out;
    for (int v : vs) out.push_back(g.vertex_name(v));
    std::sort(out.begin(), out.end());
    return out;
}

Graph random_graph(std::mt19937& rng, int n, double p, bool loops) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + (loops ? 0 : 1); j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph::from_indices("rand", names, e);
}
}  // namespace

TEST_CASE("families: Petersen, triangle, one") {
    Graph p = make_family("kneser", {5, 2});
    CHECK(p.size() == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < p.size(); ++v) CHECK(p.degree(v) == 3);
    CHECK(p.find("{1,3}").has_value());
    CHECK(p.adjacent(p.index_of("{1,2}"), p.index_of("{3,4}")));
    CHECK_FALSE(p.adjacent(p.index_of("{1,2}"), p.index_of("{2,4}")));

    CHECK(isomorphic(make_family("cycle", {3}), make_family("complete", {3})));
    Graph one = make_family("one", {});
    CHECK(one.size() == 1);
    CHECK(one.edge_count() == 1);
    CHECK(one.has_loop(0));
}

TEST_CASE("families: parameter errors name the constraint") {
    CHECK_THROWS_AS(make_family("kneser", {3, 2}), ParameterError);
    try {
        make_family("kneser", {3, 2});
    } catch (const ParameterError& e) {
        CHECK(std::string(e.what()).find("n >= 2k") != std::string::npos);
    }
    CHECK_THROWS_AS(make_family("xn", {0}), ParameterError);
    CHECK_THROWS_AS(make_family("torus67", {3, 5, 3}), ParameterError);
    CHECK_THROWS_AS(make_family("torus67", {3, 9, 4}), ParameterError);
    CHECK_THROWS_AS(make_family("nosuch", {}), ParameterError);
    CHECK_THROWS_AS(make_family("cycle", {}), ParameterError);
}

TEST_CASE("families: small shapes") {
    Graph l3 = make_family("path", {3});
    CHECK(l3.size() == 4);
    CHECK(l3.edge_count() == 3);
    Graph i2 = make_family("interval", {2});
    CHECK(i2.edge_count() == 5);
    CHECK(i2.has_loop(1));
    Graph four = make_family("four", {});
    CHECK(four.size() == 4);
    CHECK(four.edge_count() == 4);
    CHECK(make_family("cycle", {1}).has_loop(0));
    CHECK(isomorphic(make_family("cycle", {2}), make_family("complete", {2})));
    // stable Kneser SK(5,2) is C5
    CHECK(isomorphic(make_family("stable_kneser", {5, 2}), make_family("cycle", {5})));
    // cone over K3 is K4
    CHECK(isomorphic(cone(make_family("complete", {3})), make_family("complete", {4})));
    Graph g = make_family("grid", {2, 1});
    CHECK(g.size() == 6);
    CHECK(g.edge_count() == 7);
}

TEST_CASE("families: X_n and X~_n") {
    // X_1 is a looped vertex
    CHECK(isomorphic(make_family("xn", {1}), make_family("one", {})));
    Graph x5 = make_family("xn", {5});
    // 36 grid points, 20 boundary points collapse into 5 classes
    CHECK(x5.size() == 16 + 5);
    CHECK_FALSE(x5.has_loops());
    // the boundary collapses to a 5-cycle: corner class has degree 2 + interior
    VertexAction a = xn_cover_action(5);
    CHECK(a.order() == 4);
    CHECK(a.is_free());
}

TEST_CASE("families: torus67 instance") {
    Graph g = make_family("torus67", {3, 5, 4});
    // H has 9*6 = 54 points; identifications glue 9 + 6 pairs with 2 overlaps at corners
    CHECK(g.size() > 30);
    CHECK(g.size() < 54);
    CHECK_FALSE(g.has_loops());
    CHECK(is_connected(g));
}

TEST_CASE("neighborhood") {
    Graph c5 = make_family("cycle", {5});
    CHECK(names_of(c5, neighborhood(c5, c5.index_of("0"), 2)) == std::vector<std::string>{"0", "2", "3"});
    CHECK(names_of(c5, neighborhood(c5, c5.index_of("0"), 1)) == std::vector<std::string>{"1", "4"});
    Graph one = make_family("one", {});
    CHECK(neighborhood(one, 0, 3) == std::vector<int>{0});
    CHECK_THROWS_AS(neighborhood(c5, 7, 1), LookupError);
}

TEST_CASE("product") {
    Graph k2 = make_family("complete", {2});
    CHECK(isomorphic(product(k2, make_family("cycle", {5})), make_family("cycle", {10})));
    Graph d = product(k2, make_family("cycle", {6}));
    int comps = 0;
    auto lab = component_labels(d, &comps);
    CHECK(comps == 2);
    for (int v = 0; v < d.size(); ++v) CHECK(d.degree(v) == 2);
    CHECK(component_of(d, 0).size() == 6);
    Graph pet = make_family("petersen", {});
    CHECK(isomorphic(product(make_family("one", {}), pet), pet));
    CHECK(product(k2, make_family("cycle", {5})).find("(0,3)").has_value());
}

TEST_CASE("quotient") {
    Graph c6 = make_family("cycle", {6});
    auto q = quotient(c6, std::vector<std::vector<std::string>>{{"0", "3"}, {"1", "4"}, {"2", "5"}});
    CHECK(isomorphic(q.graph, make_family("cycle", {3})));
    CHECK(q.projection(c6.index_of("4")) == q.projection(c6.index_of("1")));

    auto k2 = make_family("complete", {2});
    auto q2 = quotient(k2, std::vector<std::vector<std::string>>{{"0", "1"}});
    CHECK(isomorphic(q2.graph, make_family("one", {})));

    auto disc = quotient(c6, std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(disc.graph == c6);

    CHECK_THROWS_AS(quotient(c6, std::vector<std::vector<std::string>>{{"0", "3"}, {"3"}}), ValidationError);
    CHECK_THROWS_AS(quotient(c6, std::vector<std::vector<std::string>>{{"0", "3"}}), ValidationError);
}

TEST_CASE("quotient_by_action") {
    Graph c15 = make_family("cycle", {15});
    std::vector<int> shift(15);
    for (int i = 0; i < 15; ++i) shift[c15.index_of(std::to_string(i))] = c15.index_of(std::to_string((i + 5) % 15));
    VertexAction a(c15, {shift});
    CHECK(a.order() == 3);
    CHECK(a.is_free());
    CHECK(isomorphic(quotient_by_action(a).graph, make_family("cycle", {5})));
    CHECK(quotient_by_action(VertexAction(c15, {})).graph == c15);

    auto xa = xn_cover_action(5);
    CHECK(isomorphic(quotient_by_action(xa).graph, make_family("xn", {5})));

    std::vector<int> bad(15);
    for (int i = 0; i < 15; ++i) bad[i] = i;
    std::swap(bad[0], bad[7]);
    CHECK_THROWS_AS(VertexAction(c15, {bad}), ValidationError);
}

TEST_CASE("delete_isolated") {
    Graph g = Graph::from_names("g", {"a", "b", "c"}, {{"a", "b"}});
    CHECK(isomorphic(delete_isolated(g), make_family("complete", {2})));
    CHECK(delete_isolated(make_family("one", {})).size() == 1);
    CHECK(delete_isolated(Graph::from_names("e", {"a", "b", "c"}, {})).size() == 0);
}

TEST_CASE("graph map validation") {
    Graph c6 = make_family("cycle", {6}), c3 = make_family("cycle", {3});
    std::vector<int> wind(6);
    for (int i = 0; i < 6; ++i) wind[c6.index_of(std::to_string(i))] = c3.index_of(std::to_string(i % 3));
    CHECK_NOTHROW(GraphMap(c6, c3, wind));
    std::vector<int> constant(6, 0);
    CHECK_THROWS_AS(GraphMap(c6, c3, constant), ValidationError);
}

TEST_CASE("property: neighborhood recursion and map monotonicity") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 8, 0.3, trial % 2 == 0);
        for (int v = 0; v < g.size(); ++v)
            for (int s = 1; s <= 4; ++s) {
                std::set<int> expect;
                for (int w : neighborhood(g, v, s))
                    for (int u : g.neighbors(w)) expect.insert(u);
                auto got = neighborhood(g, v, s + 1);
                CHECK(std::vector<int>(expect.begin(), expect.end()) == got);
            }
        // quotient projections are maps, hence f(N_s(v)) in N_s(f(v))
        std::vector<int> cls(g.size());
        for (int v = 0; v < g.size(); ++v) cls[v] = v % 3;
        auto q = quotient(g, cls);
        for (int v = 0; v < g.size(); ++v)
            for (int s = 1; s <= 3; ++s) {
                auto target = neighborhood_mask(q.graph, q.projection(v), s);
                for (int w : neighborhood(g, v, s)) CHECK(target[q.projection(w)]);
            }
        // product symmetric up to swap
        Graph h = random_graph(rng, 4, 0.5, true);
        CHECK(isomorphic(product(g, h), product(h, g)));
    }
}
