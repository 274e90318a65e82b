#include <doctest.h>

#include <random>

#include "gtop/covering.hpp"

using namespace gtop;

namespace {

GraphMap wrap(int n, int m) {
    Graph a = make_family("cycle", {n}), b = make_family("cycle", {m});
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i) f[a.index_of(std::to_string(i))] = b.index_of(std::to_string(i % m));
    return GraphMap(a, b, f);
}

GraphMap k2_projection(const Graph& g) {
    Graph k2g = product(make_family("complete", {2}), g);
    std::vector<int> f(k2g.size());
    for (int v = 0; v < k2g.size(); ++v) {
        const std::string& nm = k2g.vertex_name(v);
        f[v] = g.index_of(nm.substr(3, nm.size() - 4));
    }
    return GraphMap(k2g, g, f);
}

VertexAction shift(int n, int by) {
    Graph c = make_family("cycle", {n});
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[c.index_of(std::to_string(i))] = c.index_of(std::to_string((i + by) % n));
    return VertexAction(c, {perm});
}

}  // namespace

TEST_CASE("r-coverings of cycles") {
    for (int r = 1; r <= 8; ++r) CHECK(verify_r_covering(wrap(10, 5), r).pass);
    CHECK(verify_r_covering(wrap(15, 5), 4).pass);
    auto bad = verify_r_covering(wrap(15, 5), 5);
    REQUIRE_FALSE(bad.pass);
    REQUIRE(bad.witness);
    CHECK(bad.witness->kind == CoverWitness::Kind::collision);
    CHECK(bad.witness->radius == 5);
    CHECK(replay(bad.map, *bad.witness));
    Graph pet = make_family("petersen", {});
    for (int r : {1, 3, 6}) CHECK(verify_r_covering(GraphMap::identity(pet), r).pass);

    // a non-surjective map
    Graph p3 = make_family("path", {3});
    Graph c5 = make_family("cycle", {5});
    GraphMap inc(p3, c5, {c5.index_of("0"), c5.index_of("1"), c5.index_of("2"), c5.index_of("3")});
    auto ns = verify_r_covering(inc, 1);
    REQUIRE(ns.witness);
    CHECK(ns.witness->kind == CoverWitness::Kind::not_surjective);
    CHECK(replay(inc, *ns.witness));
}

TEST_CASE("serial and parallel verification agree") {
    std::mt19937 rng(5);
    std::vector<GraphMap> maps{wrap(15, 5), wrap(10, 5), wrap(21, 7), k2_projection(make_family("petersen", {})),
                               k2_projection(make_family("complete", {4})),
                               quotient_by_action(xn_cover_action(5)).projection};
    for (const auto& m : maps)
        for (int r = 1; r <= 6; ++r) {
            auto a = verify_r_covering(m, r), b = verify_r_covering_serial(m, r);
            CHECK(a.pass == b.pass);
            if (a.witness) {
                CHECK(a.witness->vertex == b.witness->vertex);
                CHECK(a.witness->radius == b.witness->radius);
                CHECK(a.witness->a == b.witness->a);
                CHECK(a.witness->b == b.witness->b);
                CHECK(replay(m, *a.witness));
            }
        }
}

TEST_CASE("covering actions match quotient projections") {
    auto a4 = verify_covering_action(shift(15, 5), 4);
    CHECK(a4.pass);
    auto a5 = verify_covering_action(shift(15, 5), 5);
    REQUIRE(a5.witness);
    Graph c15 = make_family("cycle", {15});
    int v = std::stoi(c15.vertex_name(a5.witness->vertex));
    int u = std::stoi(c15.vertex_name(a5.witness->common));
    CHECK(((u - v) % 15 + 15) % 15 == 10);
    CHECK(verify_covering_action(VertexAction(c15, {}), 3).pass);

    std::vector<VertexAction> acts{shift(15, 5), shift(12, 4), shift(12, 6), shift(20, 5), xn_cover_action(5)};
    for (const auto& act : acts)
        for (int r = 1; r <= 5; ++r) {
            bool by_action = verify_covering_action(act, r).pass;
            CHECK(by_action == verify_covering_action_serial(act, r).pass);
            CHECK(by_action == verify_r_covering(quotient_by_action(act).projection, r).pass);
        }
}

TEST_CASE("composition of coverings") {
    // C20 -> C10 -> C5
    GraphMap p = wrap(20, 10), q = wrap(10, 5);
    for (int r = 1; r <= 6; ++r) {
        bool pr = verify_r_covering(p, r).pass, qr = verify_r_covering(q, r).pass;
        bool qp = verify_r_covering(p.then(q), r).pass;
        if (pr && qr) CHECK(qp);
        // q surjective: qp and q coverings give p a covering, qp and p give q
        if (qp && qr) CHECK(pr);
        if (qp && pr) CHECK(qr);
    }
}

TEST_CASE("lifting walks") {
    auto c = verify_r_covering(wrap(10, 5), 2);
    Graph c5 = c.map.codomain(), c10 = c.map.domain();
    Walk wind = Walk::from_names(c5, {"0", "1", "2", "3", "4", "0"});
    Walk l = lift_path(c, wind, c10.index_of("0"));
    CHECK(l.names() == std::vector<std::string>{"0", "1", "2", "3", "4", "5"});
    CHECK(lift_path(c, Walk::constant(c5, 0), c10.index_of("5")).length() == 0);
    CHECK_FALSE(loop_in_image(c, wind, c10.index_of("0")));
    CHECK(loop_in_image(c, power(wind, 2), c10.index_of("0")));
    CHECK_THROWS_AS(lift_path(c, wind, c10.index_of("1")), PreconditionError);

    Graph k4 = make_family("complete", {4});
    auto k = verify_r_covering(k2_projection(k4), 2);
    REQUIRE(k.pass);
    Walk tri = Walk::from_names(k4, {"1", "2", "3", "1"});
    Walk lt = lift_path(k, tri, k.map.domain().index_of("(0,1)"));
    CHECK(k.map.domain().vertex_name(lt.terminal()) == "(1,1)");

    auto id = verify_r_covering(GraphMap::identity(k4), 2);
    CHECK(loop_in_image(id, tri, tri.initial()));
}

TEST_CASE("lifts respect r-homotopy") {
    std::mt19937 rng(9);
    for (auto m : {wrap(10, 5), k2_projection(make_family("complete", {4}))}) {
        auto c = verify_r_covering(m, 2);
        REQUIRE(c.pass);
        const Graph& g = m.codomain();
        HomotopyDecider dg(g, 0, 2);
        int start = 0;
        while (m(start) != 0) ++start;
        HomotopyDecider dc(m.domain(), start, 2);
        for (int t = 0; t < 40; ++t) {
            VertexSeq s{0};
            for (int i = 0; i < 5; ++i) {
                auto nb = g.neighbors(s.back());
                s.push_back(nb[rng() % nb.size()]);
            }
            auto moves = move_neighbors(g, s, 2);
            VertexSeq s2 = moves[rng() % moves.size()];
            Walk a(g, s), b(g, s2);
            Walk la = lift_path(c, a, start), lb = lift_path(c, b, start);
            CHECK(la.terminal() == lb.terminal());
            CHECK(dc.same_class(la.vertices(), lb.vertices()) == Verdict::yes);
            if (a.is_loop() && la.is_loop())
                CHECK(geodesic_length(la, 2).length == geodesic_length(a, 2).length);
        }
    }
}

TEST_CASE("universal covers") {
    auto one = universal_cover(make_based_family("one", {}), 1, 4);
    CHECK(one.graph.size() == 2);
    CHECK(isomorphic(one.graph, make_family("complete", {2})));
    CHECK(one.exact_classes);

    auto k2 = universal_cover(make_based_family("complete", {2}), 1, 3);
    CHECK(isomorphic(k2.graph, make_family("complete", {2})));

    auto c5 = universal_cover(make_based_family("cycle", {5}), 2, 12);
    CHECK(c5.graph.size() == 25);
    CHECK(isomorphic(c5.graph, make_family("path", {24})));
    for (int v = 0; v < c5.graph.size(); ++v) CHECK(c5.depth[v] == static_cast<int>(c5.rep[v].size()) - 1);
    CHECK(c5.certified_radius == 10);
    CHECK(c5.check_ball());

    // universal 2-cover of X_5 closes up into X~_5
    auto x5 = universal_cover(make_based_family("xn", {5}), 2, 40);
    CHECK(isomorphic(x5.graph, xn_cover_action(5).graph()));
    CHECK(x5.check_ball());

    auto k4 = universal_cover(make_based_family("complete", {4}), 2, 10);
    CHECK(isomorphic(k4.graph, product(make_family("complete", {2}), make_family("complete", {4}))));
}

TEST_CASE("fibers and cosets") {
    auto c = verify_r_covering(wrap(15, 5), 4);
    auto f = fiber_coset_check(c, c.map.domain().index_of("0"));
    CHECK(f.fiber == 3);
    CHECK(f.index == 3);
    CHECK(f.agree);
    Graph k4 = make_family("complete", {4});
    auto k = verify_r_covering(k2_projection(k4), 2);
    auto fk = fiber_coset_check(k, k.map.domain().index_of("(0,0)"));
    CHECK(fk.fiber == 2);
    CHECK(fk.index == 2);
    auto id = fiber_coset_check(verify_r_covering(GraphMap::identity(k4), 2), 0);
    CHECK(id.fiber == 1);
    CHECK(id.index == 1);
}

TEST_CASE("subgroup covers") {
    auto c5 = make_based_family("cycle", {5});
    auto dbl = subgroup_cover(c5, 2, {{1, 1}});
    CHECK(dbl.index == 2);
    CHECK(isomorphic(dbl.graph, make_family("cycle", {10})));
    CHECK(verify_r_covering(dbl.projection, 2).pass);
    auto whole = subgroup_cover(c5, 2, {{1}});
    CHECK(isomorphic(whole.graph, c5.graph));

    auto k4 = make_based_family("complete", {4});
    auto pp = cw_presentation(k4, 2);
    auto ev = even_part(pp);
    auto sc = subgroup_cover(k4, 2, ev.generator_words);
    CHECK(isomorphic(sc.graph, product(make_family("complete", {2}), k4.graph)));
    CHECK(verify_r_covering(sc.projection, 2).pass);

    // Z/4 quotient of X~_5: the group of the quotient has order 4
    auto q = quotient_by_action(xn_cover_action(5));
    CHECK(identify(cw_presentation({q.graph, 0}, 2).presentation).name == "Z/4");
    CHECK(identify(cw_presentation({xn_cover_action(5).graph(), 0}, 2).presentation).name == "1");
}

TEST_CASE("lifting maps") {
    auto c = verify_r_covering(wrap(10, 5), 2);
    Graph c10 = c.map.domain();
    auto ok = lift_map(c, c10.index_of("0"), {wrap(10, 5), c10.index_of("0"), c.map.codomain().index_of("0")});
    REQUIRE(ok.lift);
    CHECK(isomorphic(c10, c10));
    std::vector<int> a = ok.lift->assignment();
    std::sort(a.begin(), a.end());
    CHECK(std::unique(a.begin(), a.end()) == a.end());

    Graph c5 = c.map.codomain();
    auto no = lift_map(c, c10.index_of("0"), {GraphMap::identity(c5), c5.index_of("0"), c5.index_of("0")});
    CHECK_FALSE(no.lift);
    REQUIRE(no.witness);
    CHECK(no.witness->length() == 5);
    CHECK_FALSE(loop_in_image(c, *no.witness, c10.index_of("0")));

    Graph k1 = Graph::from_names("K1", {"x"}, {});
    auto single = lift_map(c, c10.index_of("0"), {GraphMap(k1, c5, {c5.index_of("0")}), 0, c5.index_of("0")});
    CHECK(single.lift);
}
