#include <doctest.h>

#include <random>

#include "gtop/fundamental.hpp"

using namespace gtop;

namespace {

std::string pi1_name(const std::string& fam, std::vector<long long> params, int r, bool filter = false) {
    Pi1Options o;
    o.drop_decomposable = filter;
    return identify(cw_presentation(make_based_family(fam, params), r, o).presentation).name;
}

}  // namespace

TEST_CASE("pi1 of small graphs") {
    CHECK(pi1_name("one", {}, 1) == "Z/2");
    auto one = cw_presentation(make_based_family("one", {}), 1);
    REQUIRE(one.presentation.ngens() == 1);
    CHECK(to_text(one.presentation) == "<g | g^2>");
    CHECK(pi1_name("cycle", {5}, 2) == "Z");
    CHECK(cw_presentation(make_based_family("cycle", {5}), 2).presentation.relators.empty());
    CHECK(pi1_name("complete", {4}, 2) == "Z/2");
    CHECK(pi1_name("complete", {2}, 3) == "1");
    CHECK(pi1_name("complete", {4}, 1) == "F_3");
}

TEST_CASE("cycle table") {
    for (int n = 3; n <= 8; ++n)
        for (int r = 1; r <= 8; ++r) {
            std::string want;
            if (n % 2) want = r < n ? "Z" : "Z/2";
            else want = 2 * r < n ? "Z" : "1";
            CAPTURE(n);
            CAPTURE(r);
            CHECK(pi1_name("cycle", {n}, r) == want);
            CHECK(pi1_name("cycle", {n}, r, true) == want);
        }
}

TEST_CASE("walk words and parity") {
    auto pp = cw_presentation(make_based_family("cycle", {5}), 2);
    Graph c5 = pp.base.graph;
    Walk wind = Walk::from_names(c5, {"0", "1", "2", "3", "4", "0"});
    Word w = walk_to_word(pp, wind);
    CHECK(w.size() == 1);
    CHECK(parity_of(pp, w) == 1);
    CHECK(walk_to_word(pp, compose(wind, reverse(wind))).empty());
    CHECK(walk_to_word(pp, Walk::from_names(c5, {"0", "1", "2", "1", "0"})).empty());
    CHECK(parity_of(pp, {}) == 0);

    // every relator has even parity
    for (auto fam : {std::pair<std::string, std::vector<long long>>{"complete", {4}}, {"petersen", {}}, {"xn", {5}}}) {
        auto q = cw_presentation(make_based_family(fam.first, fam.second), 2);
        for (const auto& rel : q.presentation.relators) CHECK(parity_of(q, rel) == 0);
        // generator parity equals the parity of the fundamental cycle length
        for (int g = 0; g < q.presentation.ngens(); ++g)
            CHECK(q.parity[g] == static_cast<int>(q.fundamental_cycle(g).size() - 1) % 2);
    }
}

TEST_CASE("even part") {
    CHECK(identify(even_part(cw_presentation(make_based_family("one", {}), 1)).presentation).name == "1");
    CHECK(identify(even_part(cw_presentation(make_based_family("cycle", {5}), 2)).presentation).name == "Z");
    CHECK(identify(even_part(cw_presentation(make_based_family("complete", {4}), 2)).presentation).name == "1");
    CHECK(even_part(cw_presentation(make_based_family("cycle", {6}), 1)).whole_group);

    // oracle: the even part is the group of K2 x G based at (0,v)
    for (auto fam : {std::pair<std::string, std::vector<long long>>{"cycle", {5}}, {"cycle", {7}}, {"complete", {4}},
                     {"complete", {5}}, {"petersen", {}}}) {
        for (int r : {1, 2}) {
            auto bg = make_based_family(fam.first, fam.second);
            Graph k2g = product(make_family("complete", {2}), bg.graph);
            BasedGraph b{k2g, k2g.index_of("(0," + bg.graph.vertex_name(bg.base) + ")")};
            auto a = identify(even_part(cw_presentation(bg, r)).presentation);
            auto c = identify(cw_presentation(b, r).presentation);
            CAPTURE(fam.first);
            CAPTURE(r);
            CHECK(a.name == c.name);
            CHECK(a.abelian == c.abelian);
        }
    }
}

TEST_CASE("induced homomorphisms") {
    Graph c10 = make_family("cycle", {10});
    Graph c5 = make_family("cycle", {5});
    std::vector<int> wrap(10);
    for (int i = 0; i < 10; ++i) wrap[c10.index_of(std::to_string(i))] = c5.index_of(std::to_string(i % 5));
    BasedMap f{GraphMap(c10, c5, wrap), c10.index_of("0"), c5.index_of("0")};
    auto h = induced_hom(f, 2);
    REQUIRE(h.images.size() == 1);
    CHECK(free_reduce(h.images[0]).size() == 2);
    CHECK(h.images[0][0] == h.images[0][1]);

    auto k4 = make_based_family("complete", {4});
    auto id = induced_hom({GraphMap::identity(k4.graph), k4.base, k4.base}, 2);
    for (int g = 0; g < static_cast<int>(id.images.size()); ++g) CHECK(id.images[g] == Word{letter(g)});

    Graph k2k4 = product(make_family("complete", {2}), k4.graph);
    std::vector<int> proj(k2k4.size());
    for (int v = 0; v < k2k4.size(); ++v) {
        const std::string& nm = k2k4.vertex_name(v);
        proj[v] = k4.graph.index_of(nm.substr(3, nm.size() - 4));
    }
    BasedMap p{GraphMap(k2k4, k4.graph, proj), k2k4.index_of("(0,0)"), k4.base};
    auto hp = induced_hom(p, 2);
    for (const auto& img : hp.images) CHECK(parity_of(hp.codomain, img) == 0);
}

TEST_CASE("functoriality of induced maps") {
    // C20 -> C10 -> C5 by wrapping
    auto wrapmap = [](int n, int m) {
        Graph a = make_family("cycle", {n}), b = make_family("cycle", {m});
        std::vector<int> f(n);
        for (int i = 0; i < n; ++i) f[a.index_of(std::to_string(i))] = b.index_of(std::to_string(i % m));
        return BasedMap{GraphMap(a, b, f), a.index_of("0"), b.index_of("0")};
    };
    auto f = wrapmap(20, 10), g = wrapmap(10, 5);
    BasedMap gf{f.map.then(g.map), f.domain_base, g.codomain_base};
    auto hf = induced_hom(f, 2), hg = induced_hom(g, 2), hgf = induced_hom(gf, 2);
    WordSolver s(hgf.codomain.presentation);
    for (int gen = 0; gen < hgf.domain.presentation.ngens(); ++gen)
        CHECK(s.are_equal(hgf.images[gen], hg.apply(hf.images[gen])) == Verdict::yes);
}

TEST_CASE("decomposable cycles") {
    auto c5 = nondecomposable_filter(make_family("cycle", {5}), 2);
    CHECK(c5.nondecomposable.empty());
    CHECK(!c5.decomposable.empty());
    CHECK(pi1_name("cycle", {5}, 1) == pi1_name("cycle", {5}, 2));
    auto c4 = nondecomposable_filter(make_family("cycle", {4}), 2);
    REQUIRE(c4.nondecomposable.size() == 1);
    CHECK(c4.nondecomposable[0] == VertexSeq{0, 1, 2, 3});
    CHECK(nondecomposable_filter(make_family("complete", {2}), 2).nondecomposable.empty());
}

TEST_CASE("changing r gives a surjection") {
    // finite orders divide as r grows
    for (auto fam : {std::pair<std::string, std::vector<long long>>{"complete", {4}}, {"complete", {5}}, {"xn", {5}}}) {
        long long prev = 0;
        for (int r = 2; r <= 3; ++r) {
            auto gi = identify(cw_presentation(make_based_family(fam.first, fam.second), r, {true}).presentation);
            if (!gi.order) continue;
            if (prev) CHECK(prev % *gi.order == 0);
            prev = *gi.order;
        }
    }
}

TEST_CASE("base change keeps the group") {
    Graph p = make_family("petersen", {});
    for (int v = 0; v < p.size(); v += 3) {
        CHECK(identify(cw_presentation({p, v}, 2, {true}).presentation).name == "F_6");
    }
}
