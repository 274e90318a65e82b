#include "gtop/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <queue>
#include <random>
#include <sstream>

#include "gtop/covering.hpp"
#include "gtop/fundamental.hpp"
#include "gtop/homcx.hpp"
#include "gtop/homotopy.hpp"
#include "gtop/ncomplex.hpp"
#include "gtop/obstruct.hpp"

namespace gtop {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream out;
    std::vector<std::string> failures;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
    std::string detail() const {
        std::string s = out.str();
        for (const auto& f : failures) s += (s.empty() ? "" : "; ") + std::string("FAILED ") + f;
        return s;
    }
};

GraphMap wrap(int n, int m) {
    Graph a = make_family("cycle", {n}), b = make_family("cycle", {m});
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i) f[a.index_of(std::to_string(i))] = b.index_of(std::to_string(i % m));
    return GraphMap(a, b, f);
}

// K_2 x G -> G
GraphMap double_cover(const Graph& g) {
    Graph k = product(make_family("complete", {2}), g);
    std::vector<int> f(k.size());
    for (int v = 0; v < k.size(); ++v) f[v] = v % g.size();
    return GraphMap(k, g, f);
}

std::string group_name(const Graph& g, int base, int r, long long cap = kDefaultMaxCosets) {
    return identify(cw_presentation({g, base}, r).presentation, cap).name;
}

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

void c1(Check& c) {
    int cells = 0;
    for (int n = 3; n <= 8; ++n)
        for (int r = 1; r <= 8; ++r) {
            std::string expect;
            if (n % 2) expect = r < n ? "Z" : "Z/2";
            else expect = 2 * r < n ? "Z" : "1";
            std::string got = group_name(make_family("cycle", {n}), 0, r);
            c.expect(got == expect, "C" + std::to_string(n) + " r=" + std::to_string(r) + ": " + got + " != " + expect);
            ++cells;
        }
    c.out << cells << " cells of the cycle table match";
}

void c2(Check& c) {
    for (int n : {4, 5})
        for (int r : {2, 3}) {
            auto gi = identify(cw_presentation({make_family("complete", {n}), 0}, r).presentation, 100'000);
            c.expect(gi.order == 2, "K" + std::to_string(n) + " r=" + std::to_string(r) + " gave " + gi.name);
            c.out << "K" << n << ",r" << r << ": " << gi.name << "  ";
        }
}

void c3(Check& c) {
    auto gi = identify(cw_presentation({make_family("petersen", {}), 0}, 3).presentation, 1'000'000);
    c.expect(gi.order == 2, "Petersen r=3 gave " + gi.name);
    c.out << "pi_1^3(Petersen) = " << gi.name;
}

void c4(Check& c) {
    Graph pet = make_family("petersen", {});
    auto none = find_hom(pet, make_family("cycle", {5}));
    auto some = find_hom(pet, make_family("complete", {3}));
    auto rep = cycle_obstruction_report({pet, 0}, 5, 3);
    c.expect(none.none(), "find_hom(Petersen, C5) not refuted");
    c.expect(some.map.has_value(), "find_hom(Petersen, K3) found nothing");
    c.expect(rep.verdict == Obstruction::obstructed, std::string("cycle report ") + to_string(rep.verdict));
    c.out << "Petersen->C5 none (" << none.nodes << " nodes), Petersen->K3 found, cycle report " << to_string(rep.verdict);
}

void c5(Check& c) {
    Graph x5 = make_family("xn", {5}), pet = make_family("petersen", {});
    auto ab = abelianize(cw_presentation({x5, 0}, 2).presentation);
    c.expect(ab.rank == 0 && ab.torsion == std::vector<BigInt>{4}, "abelianization " + ab.to_string());
    auto chi = chromatic_number(x5, 5);
    c.expect(chi.value == 4, "chromatic number of X5");
    auto t = torsion_obstruction_report({pet, 0}, {x5, 0});
    c.expect(t.verdict == Obstruction::obstructed,
             std::string("torsion_obstruction_report(Petersen, X5) = ") + to_string(t.verdict) + " (" + t.reason +
                 "; find_hom(Petersen, X5) = " + to_string(t.hom) + ")");
    auto k4 = torsion_obstruction_report({make_family("complete", {4}), 0}, {x5, 0});
    auto k62 = torsion_obstruction_report({make_family("kneser", {6, 2}), 0}, {x5, 0});
    c.out << "H_1 = " << ab.to_string() << ", chi(X5) = " << (chi.value ? std::to_string(*chi.value) : "?")
          << ", torsion(K4,X5) " << to_string(k4.verdict) << ", torsion(K(6,2),X5) " << to_string(k62.verdict);
}

void c6(Check& c) {
    auto a = verify_r_covering(wrap(15, 5), 4);
    auto b = verify_r_covering(wrap(15, 5), 5);
    c.expect(a.pass, "C15->C5 not a 4-covering");
    c.expect(!b.pass && b.witness && replay(b.map, *b.witness), "C15->C5 r=5 witness missing or not replayable");
    for (int r = 1; r <= 8; ++r) c.expect(verify_r_covering(wrap(10, 5), r).pass, "C10->C5 r=" + std::to_string(r));
    if (b.witness) c.out << "r=5 witness: " << b.witness->describe(b.map);
}

void c7(Check& c) {
    auto a = fiber_coset_check(verify_r_covering(wrap(15, 5), 4), 0);
    c.expect(a.fiber == 3 && a.index == 3, "C15->C5 fiber/index");
    Graph k4 = make_family("complete", {4});
    auto b = fiber_coset_check(verify_r_covering(double_cover(k4), 2), 0);
    c.expect(b.fiber == 2 && b.index == 2, "K2xK4->K4 fiber/index");
    c.out << "C15->C5: " << a.fiber << " = " << (a.index ? std::to_string(*a.index) : "?") << ", K2xK4->K4: " << b.fiber
          << " = " << (b.index ? std::to_string(*b.index) : "?");
}

void c8(Check& c) {
    std::vector<std::pair<Graph, std::string>> cases = {{make_family("cycle", {5}), "C5"},
                                                        {make_family("cycle", {6}), "C6"},
                                                        {make_family("complete", {4}), "K4"},
                                                        {make_family("petersen", {}), "Petersen"}};
    for (const auto& [g, name] : cases) {
        auto t = theorem_5_3_check({g, 0}, 1);
        c.expect(t.agree, name + ": " + t.complex_side.name + " vs " + t.graph_side.name);
        c.out << name << ": " << t.complex_side.name << "  ";
    }
}

void c9(Check& c) {
    auto a = complex_covering_check(double_cover(make_family("petersen", {})), 1);
    auto b = complex_covering_check(wrap(10, 5), 1);
    c.expect(a.pass, "K2xPetersen: " + a.failure);
    c.expect(b.pass, "C10->C5: " + b.failure);
    c.out << a.stars_checked + b.stars_checked << " stars checked";
}

void c10(Check& c) {
    auto h5 = homology(neighborhood_complex(make_family("cycle", {5}), 1));
    auto h4 = homology(neighborhood_complex(make_family("complete", {4}), 1));
    c.expect(h5.h1.rank == 1 && h5.h1.torsion.empty(), "H_1(N(C5)) = " + h5.h1.to_string());
    c.expect(h4.h1.is_trivial(), "H_1(N(K4)) = " + h4.h1.to_string());
    c.expect(h4.h2.rank == 1 && h4.h2.torsion.empty(), "H_2(N(K4)) = " + h4.h2.to_string());
    Graph pet = make_family("petersen", {});
    auto r1 = h1_obstruction_report(pet, 5, 1);
    auto r2 = h1_obstruction_report(pet, 5, 2);
    c.expect(r1.verdict == Obstruction::obstructed,
             std::string("h1_obstruction_report(Petersen, 5, 1) = ") + to_string(r1.verdict) + " (" + r1.reason + ")");
    c.out << "H_1(N(C5)) = " << h5.h1.to_string() << ", H_1(N(K4)) = " << h4.h1.to_string()
          << ", H_2 = " << h4.h2.to_string() << ", h1 report at r=2: " << to_string(r2.verdict);
}

void c11(Check& c) {
    long long pairs = 0, disagree = 0;
    for (const Graph& g : {make_family("cycle", {5}), make_family("complete", {4})})
        for (int r : {1, 2}) {
            HomotopyDecider d(g, 0, r);
            auto table = enumerate_classes(g, 0, 0, r, 8 + 2 * r);
            auto loops = loops_upto(g, 0, 8);
            std::vector<int> block(loops.size());
            for (std::size_t i = 0; i < loops.size(); ++i) block[i] = table.block_of(loops[i]);
            for (std::size_t i = 0; i < loops.size(); ++i)
                for (std::size_t j = 0; j <= i; ++j) {
                    ++pairs;
                    Verdict v = d.same_class(loops[i], loops[j]);
                    if (v == Verdict::unknown || (v == Verdict::yes) != (block[i] == block[j])) ++disagree;
                }
        }
    c.expect(disagree == 0, std::to_string(disagree) + " disagreements");
    c.out << pairs << " pairs, " << disagree << " disagreements";
}

void c12(Check& c) {
    std::mt19937 rng(12);
    int samples = 0, endpoint_bad = 0, length_bad = 0;
    for (const GraphMap& m : {wrap(10, 5), double_cover(make_family("complete", {4}))}) {
        const int r = 2;
        auto cert = verify_r_covering(m, r);
        c.expect(cert.pass, "covering did not certify");
        const Graph& g = m.codomain();
        int start = 0;
        while (m(start) != 0) ++start;
        std::vector<int> dist(g.size(), -1);
        std::queue<int> q;
        dist[0] = 0;
        q.push(0);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : g.neighbors(x))
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push(y);
                }
        }
        for (int t = 0; t < 100; ++t) {
            VertexSeq s{0};
            for (int i = 0; i < 6; ++i) {
                auto nb = g.neighbors(s.back());
                s.push_back(nb[rng() % nb.size()]);
            }
            while (s.back() != 0) {
                // close up along a shortest path to the base
                auto nb = g.neighbors(s.back());
                s.push_back(*std::min_element(nb.begin(), nb.end(), [&](int x, int y) { return dist[x] < dist[y]; }));
            }
            VertexSeq s2 = s;
            for (int k = 0; k < 4; ++k) {
                auto moves = move_neighbors(g, s2, r, static_cast<int>(s.size()) + 3);
                if (!moves.empty()) s2 = moves[rng() % moves.size()];
            }
            Walk a(g, s), b(g, s2);
            Walk la = lift_path(cert, a, start), lb = lift_path(cert, b, start);
            ++samples;
            if (la.terminal() != lb.terminal()) ++endpoint_bad;
            if (geodesic_length(la, r).length != geodesic_length(a, r).length) ++length_bad;
        }
    }
    c.expect(endpoint_bad == 0, std::to_string(endpoint_bad) + " lifted endpoints differ");
    c.expect(length_bad == 0, std::to_string(length_bad) + " length changes under p_*");
    c.out << samples << " sampled pairs";
}

void c13(Check& c) {
    Graph t = make_family("torus67", {3, 5, 4});
    auto og = odd_girth(t);
    c.expect(og == 5, "odd girth");
    auto k3 = find_hom(t, make_family("cycle", {3}));
    c.expect(k3.map.has_value(), "no map to C3");
    auto c5 = find_hom(t, make_family("cycle", {5}));
    c.expect(c5.none(), c5.complete ? "a map to C5 was found" : "search budget exhausted");
    auto gi = identify(cw_presentation({t, 0}, 3).presentation);
    c.expect(gi.order == 2, "pi_1^3 = " + gi.name);
    c.out << t.size() << " vertices, odd girth " << (og ? std::to_string(*og) : "inf") << ", C5 refuted in " << c5.nodes
          << " nodes, pi_1^3 = " << gi.name;
}

void c14(Check& c) {
    std::mt19937 rng(14);
    Graph c5 = make_family("cycle", {5}), x5 = make_family("xn", {5});
    auto maps = enumerate_homs(c5, x5);
    std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
    int bad = 0, agreeing_yes = 0;
    for (int t = 0; t < 100; ++t) {
        GraphMap f(c5, x5, maps[pick(rng)]);
        GraphMap g(c5, x5, maps[pick(rng)]);
        if (t % 2 == 0) {
            auto nb = one_step_neighbors(f);
            if (!nb.empty()) g = nb[rng() % nb.size()];
        }
        bool a = one_step_homotopic(f, g), b = interpolation_is_map(f, g), m = MultiHom::of_maps(f, g).valid();
        if (a != b || a != m) ++bad;
        agreeing_yes += a;
    }
    c.expect(bad == 0, std::to_string(bad) + " disagreements among the three forms");

    int based = 0, based_bad = 0;
    for (std::size_t i = 0; i < maps.size() && based < 20; i += 7) {
        GraphMap f(c5, x5, maps[i]);
        auto nb = one_step_neighbors(f, 0);
        if (nb.empty()) continue;
        ++based;
        if (same_induced_hom({f, 0, f(0)}, {nb.front(), 0, f(0)}, 2) != Verdict::yes) ++based_bad;
    }
    c.expect(based == 20 && based_bad == 0, std::to_string(based_bad) + " of " + std::to_string(based) + " based pairs differ");

    int pulled = 0;
    try {
        Graph c6 = make_family("cycle", {6}), k2 = make_family("complete", {2});
        pulled += isomorphic(pullback_cover(GraphMap::identity(c5), wrap(10, 5), 2).graph, make_family("cycle", {10}));
        pulled += isomorphic(pullback_cover(wrap(9, 3), wrap(6, 3), 2).graph, make_family("cycle", {18}));
        auto e = pullback_cover(GraphMap::from_names(k2, c6, {{"0", "0"}, {"1", "1"}}), double_cover(c6), 2);
        int comps = 0;
        component_labels(e.graph, &comps);
        pulled += e.graph.size() == 4 && e.graph.edge_count() == 2 && comps == 2;
    } catch (const Error& e) {
        c.expect(false, std::string("pullback: ") + e.what());
    }
    c.expect(pulled == 3, std::to_string(pulled) + " of 3 pullbacks as expected");

    bool iso_ok = false;
    try {
        Graph base = product(c5, make_family("interval", {1}));
        auto iso = endpoint_pullback_iso(double_cover(base), c5, 1);
        iso_ok = isomorphic(iso.start.graph, iso.end.graph);
    } catch (const Error& e) {
        c.expect(false, std::string("endpoint iso: ") + e.what());
    }
    c.expect(iso_ok, "endpoint pullback iso");
    c.out << "100 pairs (" << agreeing_yes << " one-step), " << based << " based pairs, " << pulled
          << " pullbacks, endpoint iso " << (iso_ok ? "inverted" : "failed");
}

void c15(Check& c) {
    auto pend = based(make_family("pendant_triangle", {}), "v");
    auto tri = based(make_family("complete", {3}), "0");
    auto pp = cw_presentation(pend, 2), tp = cw_presentation(tri, 2);
    auto pg = identify(pp.presentation), tg = identify(tp.presentation);
    c.expect(pg.name == "Z" && tg.name == "Z", "groups " + pg.name + ", " + tg.name);
    int lp = geodesic_length(Walk(pend.graph, pp.fundamental_cycle(0)), 2).length;
    int lt = geodesic_length(Walk(tri.graph, tp.fundamental_cycle(0)), 2).length;
    c.expect(lp == 5 && lt == 3, "generator lengths " + std::to_string(lp) + ", " + std::to_string(lt));
    c.out << "both Z, generator lengths " << lp << " vs " << lt;
}

struct Spec {
    const char* title;
    double limit;
    std::function<void(Check&)> run;
};

const std::vector<Spec>& specs() {
    static const std::vector<Spec> s = {
        {"cycle table of pi_1^r(C_n)", 60, c1},
        {"pi_1^r(K_n) has order 2", 30, c2},
        {"pi_1^3(Petersen) has order 2", 300, c3},
        {"Petersen has no map to C_5", 10, c4},
        {"X_5: Z/4, torsion obstruction, chromatic number 4", 120, c5},
        {"C_15 -> C_5 is a 4-covering and not a 5-covering", 1, c6},
        {"fiber size equals subgroup index", 30, c7},
        {"N_r(G) edge-loop group equals the even part", 120, c8},
        {"coverings induce complex coverings", 30, c9},
        {"neighborhood complex homology", 30, c10},
        {"group method agrees with union-find", 120, c11},
        {"lifting properties", 120, c12},
        {"torus67(3,5,4) instance", 600, c13},
        {"x-homotopy suite", 180, c14},
        {"pendant graph vs triangle", 5, c15},
    };
    return s;
}

}  // namespace

CriterionResult run_criterion(int id) {
    if (id < 1 || id > kCriteria) throw ParameterError("criterion must be in 1.." + std::to_string(kCriteria));
    const Spec& s = specs()[id - 1];
    CriterionResult res;
    res.id = id;
    res.title = s.title;
    res.limit = s.limit;
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        s.run(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(res.seconds < res.limit, "time limit exceeded");
    res.pass = c.ok;
    res.detail = c.detail();
    res.failures = c.failures;
    return res;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids) {
    std::vector<CriterionResult> out;
    if (ids.empty())
        for (int i = 1; i <= kCriteria; ++i) out.push_back(run_criterion(i));
    else
        for (int i : ids) out.push_back(run_criterion(i));
    return out;
}

std::string format_line(const CriterionResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.2fs / %.0fs)", r.seconds, r.limit);
    return std::string(r.pass ? "[PASS] " : "[FAIL] ") + (r.id < 10 ? " " : "") + std::to_string(r.id) + "  " + r.title +
           buf + ": " + r.detail;
}

}  // namespace gtop
