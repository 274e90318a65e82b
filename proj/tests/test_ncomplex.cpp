#include <doctest.h>

#include <random>

#include "gtop/fundamental.hpp"
#include "gtop/ncomplex.hpp"

using namespace gtop;

namespace {

std::vector<std::vector<std::string>> named_faces(const SimplicialComplex& c) {
    std::vector<std::vector<std::string>> out;
    for (const auto& f : c.maximal_faces()) {
        std::vector<std::string> s;
        for (int v : f) s.push_back(c.vertex_name(v));
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

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

}  // namespace

TEST_CASE("neighborhood complexes") {
    auto c5 = neighborhood_complex(make_family("cycle", {5}), 1);
    CHECK(named_faces(c5) == std::vector<std::vector<std::string>>{{"0", "2"}, {"0", "3"}, {"1", "3"}, {"1", "4"}, {"2", "4"}});
    auto k4 = neighborhood_complex(make_family("complete", {4}), 1);
    CHECK(k4.maximal_faces().size() == 4);
    CHECK(k4.dimension() == 2);
    auto k2 = neighborhood_complex(make_family("complete", {2}), 1);
    CHECK(named_faces(k2) == std::vector<std::vector<std::string>>{{"0"}, {"1"}});
    // N_r stabilises to a full simplex on C5
    for (int r : {5, 6}) {
        auto big = neighborhood_complex(make_family("cycle", {5}), r);
        CHECK(big.maximal_faces().size() == 1);
        CHECK(big.maximal_faces()[0].size() == 5);
    }
    // isolated vertices are not vertices of the complex
    Graph iso = Graph::from_names("iso", {"a", "b", "c"}, {{"a", "b"}});
    CHECK(neighborhood_complex(iso, 1).size() == 2);
}

TEST_CASE("complex basics") {
    auto c = SimplicialComplex::from_names({{"a", "b", "c"}, {"a", "b"}, {"d"}});
    CHECK(c.maximal_faces().size() == 2);
    CHECK(c.contains({0, 2}));
    CHECK_FALSE(c.contains({0, 3}));
    int n = 0;
    c.component_labels(&n);
    CHECK(n == 2);
    CHECK(c.component(0).size() == 3);
    CHECK(c.faces(1).size() == 3);
}

TEST_CASE("edge-loop groups and homology") {
    auto c5 = neighborhood_complex(make_family("cycle", {5}), 1);
    CHECK(identify(edge_loop_presentation(c5, 0).presentation).name == "Z");
    auto h = homology(c5);
    CHECK(h.h0_rank == 1);
    CHECK(h.h1.rank == 1);
    CHECK(h.h1.torsion.empty());

    auto k4 = neighborhood_complex(make_family("complete", {4}), 1);
    CHECK(identify(edge_loop_presentation(k4, 0).presentation).name == "1");
    auto hk = homology(k4);
    CHECK(hk.h1.is_trivial());
    CHECK(hk.h2.rank == 1);

    auto tri = SimplicialComplex::from_names({{"a", "b", "c"}});
    CHECK(identify(edge_loop_presentation(tri, 0).presentation).name == "1");
    auto pt = SimplicialComplex::from_names({{"a"}});
    auto hp = homology(pt);
    CHECK(hp.h0_rank == 1);
    CHECK(hp.h1.is_trivial());
    CHECK(hp.h2.is_trivial());

    // projective plane (6-vertex triangulation): H1 = Z/2
    auto rp2 = SimplicialComplex::from_names({{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"},
                                              {"1", "6", "2"}, {"2", "3", "5"}, {"3", "4", "6"}, {"4", "5", "2"},
                                              {"5", "6", "3"}, {"6", "2", "4"}});
    auto hr = homology(rp2);
    CHECK(hr.h1.rank == 0);
    CHECK(hr.h1.torsion == std::vector<BigInt>{2});
    CHECK(hr.h2.is_trivial());
    CHECK(identify(edge_loop_presentation(rp2, 0).presentation).name == "Z/2");

    auto pet = homology(neighborhood_complex(make_family("petersen", {}), 1));
    CHECK(pet.h1.rank == 11);
}

TEST_CASE("Hurewicz on sample complexes") {
    std::vector<Graph> gs{make_family("cycle", {5}), make_family("cycle", {6}), make_family("complete", {4}),
                          make_family("petersen", {}), make_family("xn", {5}), make_family("kneser", {6, 2})};
    for (const auto& g : gs)
        for (int r : {1, 2}) {
            auto c = neighborhood_complex(g, r).component(0);
            auto ab = abelianize(edge_loop_presentation(c, 0).presentation);
            auto h = homology(c);
            CAPTURE(g.name());
            CAPTURE(r);
            CHECK(ab == h.h1);
        }
}

TEST_CASE("neighborhood complexes of coverings") {
    CHECK(complex_covering_check(k2_projection(make_family("petersen", {})), 1).pass);
    CHECK(complex_covering_check(wrap(10, 5), 1).pass);
    CHECK(complex_covering_check(wrap(15, 5), 2).pass);
    CHECK_THROWS_AS(complex_covering_check(wrap(15, 5), 3), PreconditionError);
    CHECK(complex_covering_check(quotient_by_action(xn_cover_action(5)).projection, 1).pass);
}

TEST_CASE("edge-loop group against the even part") {
    for (auto fam : {std::pair<std::string, std::vector<long long>>{"cycle", {5}}, {"cycle", {6}}, {"complete", {4}},
                     {"petersen", {}}, {"cycle", {9}}, {"xn", {5}}}) {
        auto rep = theorem_5_3_check(make_based_family(fam.first, fam.second), 1);
        CAPTURE(fam.first);
        CHECK(rep.agree);
    }
    auto c5 = theorem_5_3_check(make_based_family("cycle", {5}), 1);
    CHECK(c5.complex_side.name == "Z");
    CHECK(theorem_5_3_check(make_based_family("complete", {4}), 1).graph_side.name == "1");
    CHECK(theorem_5_3_check(make_based_family("cycle", {6}), 1).complex_side.name == "Z");
    CHECK(theorem_5_3_check(make_based_family("cycle", {11}), 2).agree);
    Graph iso = Graph::from_names("iso", {"a", "b", "c"}, {{"a", "b"}});
    CHECK_THROWS_AS(theorem_5_3_check({iso, iso.index_of("c")}, 1), PreconditionError);
}

TEST_CASE("product of even parts") {
    Graph c5 = make_family("cycle", {5});
    Graph p = product(c5, c5);
    Pi1Options o;
    o.drop_decomposable = true;
    auto ev = identify(even_part(cw_presentation({p, p.index_of("(0,0)")}, 4, o)).presentation);
    CHECK(ev.abelian.rank == 2);
    CHECK(ev.abelian.torsion.empty());
}
