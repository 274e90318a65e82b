#include <doctest.h>

#include <random>

#include "gtop/fundamental.hpp"
#include "gtop/homcx.hpp"
#include "gtop/obstruct.hpp"

using namespace gtop;

namespace {

GraphMap wrap(int n, int m) {
    Graph a = make_family("cycle", {n}), b = make_family("cycle", {m});
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i) f[a.index_of(std::to_string(i))] = b.index_of(std::to_string(i % m));
    return GraphMap(a, b, f);
}

GraphMap second_projection(const Graph& k, const Graph& g) {
    Graph kg = product(k, g);
    std::vector<int> f(kg.size());
    for (int v = 0; v < kg.size(); ++v) f[v] = v % g.size();
    return GraphMap(kg, g, f);
}

GraphMap by_names(const Graph& a, const Graph& b, const std::vector<std::string>& images) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < a.size(); ++i) pairs.push_back({a.vertex_name(i), images[i]});
    return GraphMap::from_names(a, b, pairs);
}

std::vector<VertexSeq> walks_from(const Graph& g, int a, int len) {
    std::vector<VertexSeq> out{{a}};
    for (int i = 0; i < len; ++i) {
        std::vector<VertexSeq> next;
        for (const auto& w : out)
            for (int y : g.neighbors(w.back())) {
                auto e = w;
                e.push_back(y);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

// C_5 with an extra vertex "p" hanging off "1"
Graph c5_with_pendant() {
    return Graph::from_names("C5p", {"0", "1", "2", "3", "4", "p"},
                             {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "0"}, {"1", "p"}});
}

}  // namespace

TEST_CASE("one-step homotopy examples") {
    Graph c6 = make_family("cycle", {6}), k3 = make_family("complete", {3});
    // neighbours of vertex 3 are 2 and 4, both coloured 2
    auto f = by_names(c6, k3, {"0", "1", "2", "0", "2", "1"});
    auto g = by_names(c6, k3, {"0", "1", "2", "1", "2", "1"});
    CHECK(one_step_homotopic(f, g));
    auto h = times_homotopic(f, g);
    CHECK(h.homotopic);
    CHECK(h.chain.size() == 2);
    CHECK(times_homotopic(f, f).chain.size() == 1);

    // the two orientations of C_5
    Graph c5 = make_family("cycle", {5});
    auto id = GraphMap::identity(c5);
    auto flip = by_names(c5, c5, {"0", "4", "3", "2", "1"});
    CHECK(!times_homotopic(id, flip).homotopic);
    CHECK(!times_homotopic(id, flip, 0).homotopic);
    CHECK(same_induced_hom({id, 0, 0}, {flip, 0, 0}, 2) == Verdict::no);

    // folds of C_6
    auto fold1 = by_names(c6, c6, {"0", "1", "2", "1", "0", "1"});
    auto fold2 = by_names(c6, c6, {"0", "1", "0", "1", "0", "1"});
    CHECK(times_homotopic(fold1, fold2).homotopic);
    CHECK(times_homotopic(fold1, fold2, 0).homotopic);

    CHECK_THROWS_AS(times_homotopic(id, by_names(c5, c5, {"1", "2", "3", "4", "0"}), 0), PreconditionError);
    CHECK_THROWS_AS(times_homotopic(id, f), PreconditionError);
}

TEST_CASE("three forms of one-step homotopy agree") {
    std::mt19937 rng(71);
    struct Pair {
        Graph g, h;
    };
    std::vector<Pair> cases = {{make_family("cycle", {6}), make_family("complete", {3})},
                               {make_family("cycle", {5}), make_family("xn", {5})},
                               {make_family("path", {3}), make_family("cycle", {4})},
                               {make_family("complete", {3}), make_family("pendant_triangle", {})}};
    int yes = 0, no = 0;
    for (const auto& c : cases) {
        auto maps = enumerate_homs(c.g, c.h);
        REQUIRE(!maps.empty());
        std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
        for (int t = 0; t < 40; ++t) {
            GraphMap f(c.g, c.h, maps[pick(rng)]);
            GraphMap g(c.g, c.h, maps[pick(rng)]);
            if (t % 2 == 0) {
                auto nb = one_step_neighbors(f);
                if (!nb.empty()) g = nb[pick(rng) % nb.size()];
            }
            bool a = one_step_homotopic(f, g);
            CHECK(a == interpolation_is_map(f, g));
            CHECK(a == MultiHom::of_maps(f, g).valid());
            (a ? yes : no)++;
        }
    }
    CHECK(yes > 20);
    CHECK(no > 10);
}

TEST_CASE("one-step neighbours are exactly the one-step maps") {
    Graph c5 = make_family("cycle", {5}), x5 = make_family("xn", {5});
    auto maps = enumerate_homs(c5, x5);
    GraphMap f(c5, x5, maps[maps.size() / 2]);
    std::vector<std::vector<int>> expect;
    for (const auto& m : maps)
        if (m != f.assignment() && one_step_homotopic(f, GraphMap(c5, x5, m))) expect.push_back(m);
    std::vector<std::vector<int>> got;
    for (const auto& g : one_step_neighbors(f)) got.push_back(g.assignment());
    CHECK(got == expect);
}

TEST_CASE("simeq2 prime") {
    Graph k4 = make_family("complete", {4}), c5 = make_family("cycle", {5});
    CHECK(simeq2_prime_check(Walk::from_names(k4, {"1", "2", "1"}), Walk::from_names(k4, {"1", "3", "1"})));
    CHECK(simeq2_prime_check(Walk::from_names(c5, {"0", "1", "0"}), Walk::from_names(c5, {"0", "4", "0"})));
    Walk w = Walk::from_names(c5, {"0", "1", "2", "3"});
    CHECK(simeq2_prime_check(w, w));
    CHECK(!simeq2_prime_check(Walk::from_names(c5, {"0", "1", "2", "3", "4", "0"}),
                              Walk::from_names(c5, {"0", "4", "3", "2", "1", "0"})));
    CHECK_THROWS_AS(simeq2_prime_check(w, Walk::from_names(c5, {"0", "1"})), PreconditionError);

    // every simeq2' pair is 2-homotopic
    for (const Graph& g : {c5, k4}) {
        for (int len = 1; len <= 4; ++len) {
            auto ws = walks_from(g, 0, len);
            for (const auto& a : ws)
                for (const auto& b : ws)
                    if (a.back() == b.back() && simeq2_prime_check(Walk(g, a), Walk(g, b)))
                        CHECK(are_r_homotopic(Walk(g, a), Walk(g, b), 2) == Verdict::yes);
        }
    }
}

TEST_CASE("pullback covers") {
    Graph c5 = make_family("cycle", {5});
    auto a = pullback_cover(GraphMap::identity(c5), wrap(10, 5), 4);
    CHECK(isomorphic(a.graph, make_family("cycle", {10})));

    auto b = pullback_cover(wrap(9, 3), wrap(6, 3), 2);
    CHECK(isomorphic(b.graph, make_family("cycle", {18})));

    Graph c6 = make_family("cycle", {6}), k2 = make_family("complete", {2});
    auto c = pullback_cover(by_names(k2, c6, {"0", "1"}), second_projection(k2, c6), 2);
    CHECK(c.graph.size() == 4);
    CHECK(c.graph.edge_count() == 2);
    int comps = 0;
    component_labels(c.graph, &comps);
    CHECK(comps == 2);

    CHECK_THROWS_AS(pullback_cover(GraphMap::identity(c5), wrap(15, 5), 5), PreconditionError);
}

TEST_CASE("endpoint pullbacks") {
    Graph c5 = make_family("cycle", {5}), k2 = make_family("complete", {2});
    Graph base = product(c5, make_family("interval", {1}));
    auto iso = endpoint_pullback_iso(second_projection(k2, base), c5, 1);
    CHECK(isomorphic(iso.start.graph, product(k2, c5)));
    CHECK(isomorphic(iso.end.graph, product(k2, c5)));
    for (int v = 0; v < iso.start.graph.size(); ++v)
        CHECK(iso.end.projection(iso.forward(v)) == iso.start.projection(v));

    auto zero = endpoint_pullback_iso(second_projection(k2, product(c5, make_family("interval", {0}))), c5, 0);
    CHECK(zero.forward.assignment() == GraphMap::identity(zero.start.graph).assignment());

    // a homotopy of folds C_6 -> C_6 pulls the double cover back to isomorphic covers
    Graph c6 = make_family("cycle", {6});
    auto f = by_names(c6, c6, {"0", "1", "2", "1", "0", "1"});
    auto g = by_names(c6, c6, {"0", "1", "0", "1", "0", "1"});
    REQUIRE(one_step_homotopic(f, g));
    Graph cyl = product(c6, make_family("interval", {1}));
    std::vector<int> hmap(cyl.size());
    for (int v = 0; v < c6.size(); ++v) {
        hmap[cyl.index_of("(" + c6.vertex_name(v) + ",0)")] = f(v);
        hmap[cyl.index_of("(" + c6.vertex_name(v) + ",1)")] = g(v);
    }
    GraphMap h(cyl, c6, hmap);
    auto e = pullback_cover(h, wrap(12, 6), 2);
    auto t = endpoint_pullback_iso(e.projection, c6, 1);
    auto fe = pullback_cover(f, wrap(12, 6), 2);
    auto ge = pullback_cover(g, wrap(12, 6), 2);
    CHECK(isomorphic(t.start.graph, fe.graph));
    CHECK(isomorphic(t.end.graph, ge.graph));
    CHECK(isomorphic(fe.graph, ge.graph));

    Graph lonely = Graph::from_names("two", {"a", "b"}, {{"a", "a"}});
    CHECK_THROWS_AS(endpoint_pullback_iso(second_projection(k2, product(lonely, make_family("interval", {1}))), lonely, 1),
                    PreconditionError);
}

TEST_CASE("Hom poset coverings") {
    Graph k2 = make_family("complete", {2}), k4 = make_family("complete", {4});
    auto a = poset_cover_check(k2, second_projection(k2, k4));
    CHECK(a.pass);
    CHECK(a.domain_size > 0);
    auto b = poset_cover_check(k2, wrap(10, 5));
    CHECK(b.pass);
    auto c = poset_cover_check(make_family("looped", {1}), wrap(10, 5));
    CHECK(c.pass);
    CHECK(c.domain_size == 0);

    // multi-homs K2 -> K2 are the two edges and nothing else
    CHECK(enumerate_multihoms(k2, k2).size() == 2);
    // into a looped vertex pair every nonempty choice works
    CHECK(enumerate_multihoms(k2, make_family("interval", {1})).size() == 9);
    for (const auto& m : enumerate_multihoms(make_family("cycle", {4}), make_family("cycle", {4}))) CHECK(m.valid());
}

TEST_CASE("based homotopic maps induce the same homomorphism") {
    Graph c5 = make_family("cycle", {5}), x5 = make_family("xn", {5});
    auto maps = enumerate_homs(c5, x5);
    int checked = 0;
    for (std::size_t i = 0; i < maps.size() && checked < 20; i += 7) {
        GraphMap f(c5, x5, maps[i]);
        for (const auto& g : one_step_neighbors(f, 0)) {
            CHECK(same_induced_hom({f, 0, f(0)}, {g, 0, g(0)}, 2) == Verdict::yes);
            ++checked;
            break;
        }
    }
    CHECK(checked == 20);
}

TEST_CASE("unbased homotopies conjugate the induced map") {
    Graph c5 = make_family("cycle", {5}), x5 = make_family("xn", {5});
    Walk loop(c5, {0, 1, 2, 3, 4, 0});
    std::vector<Walk> loops{loop, power(loop, 2), power(loop, -1)};
    auto maps = enumerate_homs(c5, x5);
    int checked = 0;
    for (std::size_t i = 0; i < maps.size() && checked < 10; i += 11) {
        GraphMap f(c5, x5, maps[i]);
        for (const auto& g : one_step_neighbors(f)) {
            if (g(0) == f(0)) continue;
            CHECK(adjoint_relation_holds({f, g}, 0, 2, loops) == Verdict::yes);
            ++checked;
            break;
        }
    }
    CHECK(checked == 10);

    // a longer chain
    auto f = GraphMap(c5, x5, maps.front());
    auto g = GraphMap(c5, x5, maps.back());
    auto h = times_homotopic(f, g);
    if (h.homotopic) CHECK(adjoint_relation_holds(h.chain, 0, 2, loops) == Verdict::yes);
}

TEST_CASE("based homotopy equivalences are isometries") {
    Graph g = c5_with_pendant(), c5 = make_family("cycle", {5});
    auto fold = by_names(g, c5, {"0", "1", "2", "3", "4", "0"});
    std::vector<int> inc(5);
    for (int i = 0; i < 5; ++i) inc[i] = g.index_of(std::to_string(i));
    GraphMap include(c5, g, inc);
    CHECK(times_homotopic(fold.then(include), GraphMap::identity(g), 0).homotopic);
    CHECK(include.then(fold).assignment() == GraphMap::identity(c5).assignment());

    Walk a(g, {0, 1, 2, 3, 4, 0});
    Walk b(g, {0, 1, 5, 1, 2, 3, 4, 0});
    for (const Walk& w : {a, b, power(a, 2), compose(b, a)}) {
        VertexSeq img;
        for (int x : w.vertices()) img.push_back(fold(x));
        CHECK(geodesic_length(w, 2).length == geodesic_length(Walk(c5, img), 2).length);
    }

    // the pendant graph and the triangle are homotopy equivalent but not based
    Graph pend = make_family("pendant_triangle", {}), k3 = make_family("complete", {3});
    auto f = by_names(pend, k3, {"0", "1", "2", "0"});
    auto back = by_names(k3, pend, {"0", "1", "2"});
    CHECK(times_homotopic(f.then(back), GraphMap::identity(pend)).homotopic);
    CHECK(back.then(f).assignment() == GraphMap::identity(k3).assignment());
    auto pg = identify(cw_presentation(based(pend, "v"), 2).presentation);
    auto tg = identify(cw_presentation(based(k3, "0"), 2).presentation);
    CHECK(pg.name == "Z");
    CHECK(tg.name == "Z");
}
