#include <doctest.h>

#include <algorithm>
#include <random>

#include "gtop/fundamental.hpp"
#include "gtop/homotopy.hpp"

using namespace gtop;

namespace {

bool contains(const std::vector<VertexSeq>& v, const VertexSeq& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

VertexSeq ids(const Graph& g, std::initializer_list<const char*> names) {
    VertexSeq s;
    for (auto n : names) s.push_back(g.index_of(n));
    return s;
}

// all loops at v of length <= n
std::vector<VertexSeq> loops_upto(const Graph& g, int v, int n) {
    std::vector<VertexSeq> out;
    VertexSeq cur{v};
    auto dfs = [&](auto&& self) -> void {
        if (cur.back() == v) out.push_back(cur);
        if (static_cast<int>(cur.size()) - 1 == n) return;
        for (int y : g.neighbors(cur.back())) {
            cur.push_back(y);
            self(self);
            cur.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

Walk random_loop(const Graph& g, int v, int len, std::mt19937& rng) {
    VertexSeq s{v};
    for (int i = 0; i < len; ++i) {
        auto nb = g.neighbors(s.back());
        s.push_back(nb[rng() % nb.size()]);
    }
    // close up along a shortest path back to v
    auto pp = cw_presentation({g, v}, 1);
    VertexSeq back = pp.tree_path(s.back());
    std::reverse(back.begin(), back.end());
    s.insert(s.end(), back.begin() + 1, back.end());
    return Walk(g, s);
}

}  // namespace

TEST_CASE("walk basics") {
    Graph c5 = make_family("cycle", {5});
    Walk a = Walk::from_names(c5, {"0", "1"}), b = Walk::from_names(c5, {"1", "2"});
    CHECK(compose(a, b).names() == std::vector<std::string>{"0", "1", "2"});
    Walk c = compose(Walk::from_names(c5, {"0", "1", "2"}), Walk::from_names(c5, {"2", "3", "4", "0"}));
    CHECK(c.length() == 5);
    CHECK(c.to_string() == "(0,1,2,3,4,0)");
    Walk cr = compose(c, reverse(c));
    CHECK(cr.length() == 10);
    CHECK(cr.terminal() == c.initial());
    CHECK_THROWS_AS(compose(a, a), PreconditionError);
    CHECK_THROWS_AS(Walk::from_names(c5, {"0", "2"}), ValidationError);
    CHECK_THROWS_AS(Walk::from_names(c5, {"0", "9"}), LookupError);
    CHECK(power(c, 3).length() == 15);
    CHECK(power(c, -1) == reverse(c));
    CHECK(power(c, 0).length() == 0);
}

TEST_CASE("elementary moves") {
    Graph k4 = make_family("complete", {4});
    auto n = move_neighbors(k4, ids(k4, {"1", "2", "1"}), 2);
    CHECK(contains(n, ids(k4, {"1", "3", "1"})));
    CHECK(contains(n, ids(k4, {"1", "0", "1"})));
    CHECK(contains(n, ids(k4, {"1"})));

    Graph c5 = make_family("cycle", {5});
    auto z = move_neighbors(c5, ids(c5, {"0"}), 1);
    CHECK(z == std::vector<VertexSeq>{ids(c5, {"0", "1", "0"}), ids(c5, {"0", "4", "0"})});
    CHECK(contains(move_neighbors(c5, ids(c5, {"0", "1", "0"}), 1), ids(c5, {"0"})));
    // r = 1 has no window moves
    for (const auto& s : move_neighbors(k4, ids(k4, {"0", "1", "2", "0"}), 1)) CHECK(s.size() != 4);

    // parity is preserved by every move
    std::mt19937 rng(7);
    for (auto g : {k4, c5, make_family("petersen", {}), make_family("one", {})}) {
        for (int t = 0; t < 30; ++t) {
            Walk w = random_loop(g, 0, static_cast<int>(rng() % 6), rng);
            for (int r : {1, 2, 3})
                for (const auto& s : move_neighbors(g, w.vertices(), r)) {
                    CHECK((s.size() - w.vertices().size()) % 2 == 0);
                    CHECK(s.front() == w.initial());
                    CHECK(s.back() == w.terminal());
                    CHECK_NOTHROW(Walk(g, s));
                }
        }
    }
}

TEST_CASE("class tables") {
    Graph c5 = make_family("cycle", {5});
    auto t = enumerate_classes(c5, 0, 0, 2, 5);
    int trivial = t.block_of({0});
    for (int i = 0; i < static_cast<int>(t.walks.size()); ++i)
        if (t.walks[i].size() % 2 == 1) CHECK(t.block[i] == trivial);
    int w1 = t.block_of(ids(c5, {"0", "1", "2", "3", "4", "0"}));
    int w2 = t.block_of(ids(c5, {"0", "4", "3", "2", "1", "0"}));
    CHECK(w1 != w2);
    CHECK(w1 != trivial);
    CHECK(t.blocks == 3);

    Graph k2 = make_family("complete", {2});
    CHECK(enumerate_classes(k2, 0, 0, 1, 4).blocks == 1);

    Graph one = make_family("one", {});
    CHECK(enumerate_classes(one, 0, 0, 1, 3).blocks == 2);

    // raising the cap only merges blocks
    Graph k4 = make_family("complete", {4});
    auto small = enumerate_classes(k4, 0, 0, 2, 4), big = enumerate_classes(k4, 0, 0, 2, 6);
    for (int i = 0; i < static_cast<int>(small.walks.size()); ++i)
        for (int j = 0; j < i; ++j)
            if (small.block[i] == small.block[j])
                CHECK(big.block_of(small.walks[i]) == big.block_of(small.walks[j]));

    // s-homotopy refines r-homotopy for s <= r
    auto r1 = enumerate_classes(k4, 0, 0, 1, 6);
    for (int i = 0; i < static_cast<int>(r1.walks.size()); i += 7)
        for (int j = 0; j < i; j += 5)
            if (r1.block[i] == r1.block[j]) CHECK(big.block[i] == big.block[j]);
}

TEST_CASE("group verdicts agree with the class tables") {
    for (auto fam : {std::pair<std::string, long long>{"cycle", 5}, {"complete", 4}}) {
        Graph g = make_family(fam.first, {fam.second});
        for (int r : {1, 2}) {
            HomotopyDecider d(g, 0, r);
            auto t = enumerate_classes(g, 0, 0, r, 6 + 2 * r);
            auto loops = loops_upto(g, 0, 6);
            for (std::size_t i = 0; i < loops.size(); ++i)
                for (std::size_t j = 0; j <= i; ++j) {
                    Verdict v = d.same_class(loops[i], loops[j]);
                    REQUIRE(v != Verdict::unknown);
                    CHECK((v == Verdict::yes) == (t.block_of(loops[i]) == t.block_of(loops[j])));
                }
        }
    }
}

TEST_CASE("r-homotopy decisions") {
    Graph k4 = make_family("complete", {4});
    CHECK(are_r_homotopic(Walk::from_names(k4, {"1", "2", "1"}), Walk::from_names(k4, {"1", "3", "1"}), 2) ==
          Verdict::yes);
    Graph c5 = make_family("cycle", {5});
    Walk wind = Walk::from_names(c5, {"0", "1", "2", "3", "4", "0"});
    Walk triv = Walk::from_names(c5, {"0", "1", "2", "1", "2", "1", "0"});
    CHECK(are_r_homotopic(power(wind, 2), triv, 2) == Verdict::no);
    CHECK(are_r_homotopic(wind, Walk::constant(c5, 0), 2) == Verdict::no);
    CHECK(are_r_homotopic(wind, wind, 3) == Verdict::yes);
    CHECK_THROWS_AS(are_r_homotopic(wind, Walk::from_names(c5, {"0", "1"}), 2), PreconditionError);

    // compositions of r-homotopic pairs stay r-homotopic
    std::mt19937 rng(3);
    Graph pet = make_family("petersen", {});
    HomotopyDecider d(pet, 0, 2);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 40; ++t) {
        Walk a = random_loop(pet, 0, 4, rng);
        auto nb = move_neighbors(pet, a.vertices(), 2);
        Walk b(pet, nb[rng() % nb.size()]);
        Walk c = random_loop(pet, 0, 3, rng);
        auto nc = move_neighbors(pet, c.vertices(), 2);
        Walk e(pet, nc[rng() % nc.size()]);
        CHECK(d.same_class(compose(a, c).vertices(), compose(b, e).vertices()) == Verdict::yes);
        ++checked;
    }
}

TEST_CASE("lengths and distances") {
    Graph c5 = make_family("cycle", {5});
    Walk wind = Walk::from_names(c5, {"0", "1", "2", "3", "4", "0"});
    auto l = geodesic_length(wind, 2, 9);
    CHECK(l.length == 5);
    CHECK(l.exact);
    for (int k = 1; k <= 3; ++k) CHECK(geodesic_length(power(wind, k), 2).length == 5 * k);

    Graph one = make_family("one", {});
    CHECK(geodesic_length(Walk::from_names(one, {"*", "*", "*"}), 1).length == 0);
    CHECK(geodesic_length(Walk::from_names(one, {"*", "*"}), 1).length == 1);

    // tree walks shrink to the tree distance
    Graph p5 = make_family("path", {5});
    auto lp = geodesic_length(Walk::from_names(p5, {"0", "1", "2", "1", "2", "3"}), 1);
    CHECK(lp.length == 3);

    Walk t0 = Walk::constant(c5, 0);
    CHECK(metric_d(wind, wind, 2).length == 0);
    CHECK(metric_d(t0, wind, 2).length == 5);
    CHECK(metric_d(wind, power(wind, 2), 2).length == 5);

    auto s = stable_length_upper(wind, 2, 3);
    CHECK(s.num == 5);
    CHECK(s.den == 1);
    auto s1 = stable_length_upper(Walk::from_names(one, {"*", "*"}), 1, 2);
    CHECK(s1.num == 0);
    CHECK(stable_length_upper(t0, 2, 2).num == 0);

    // the pendant graph against the triangle
    auto pend = make_based_family("pendant_triangle", {});
    Walk gen = Walk::from_names(pend.graph, {"v", "2", "0", "1", "2", "v"});
    CHECK(geodesic_length(gen, 2).length == 5);
    Graph k3 = make_family("complete", {3});
    CHECK(geodesic_length(Walk::from_names(k3, {"0", "1", "2", "0"}), 2).length == 3);
}

TEST_CASE("metric properties on samples") {
    std::mt19937 rng(11);
    Graph k4 = make_family("complete", {4});
    Graph c7 = make_family("cycle", {7});
    for (auto g : {k4, c7}) {
        for (int t = 0; t < 15; ++t) {
            Walk a = random_loop(g, 0, 1 + static_cast<int>(rng() % 5), rng);
            Walk b = random_loop(g, 0, 1 + static_cast<int>(rng() % 5), rng);
            Walk c = random_loop(g, 0, 1 + static_cast<int>(rng() % 4), rng);
            int d = metric_d(a, b, 2).length;
            CHECK(metric_d(compose(a, c), compose(b, c), 2).length == d);
            CHECK(metric_d(compose(c, a), compose(c, b), 2).length == d);
            // subadditivity of powers
            int l1 = geodesic_length(a, 2).length, l2 = geodesic_length(power(a, 2), 2).length,
                l3 = geodesic_length(power(a, 3), 2).length;
            CHECK(l3 <= l1 + l2);
            CHECK(l2 <= 2 * l1);
        }
    }
}
