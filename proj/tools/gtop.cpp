// Command-line front end. Results go to stdout as JSON; errors go to stderr.
// Exit codes: 0 ok, 1 failed check, 2 usage or precondition error, 3 budget exhausted.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "gtop/acceptance.hpp"
#include "gtop/covering.hpp"
#include "gtop/fundamental.hpp"
#include "gtop/homcx.hpp"
#include "gtop/homotopy.hpp"
#include "gtop/io.hpp"
#include "gtop/ncomplex.hpp"
#include "gtop/obstruct.hpp"

using namespace gtop;

namespace {


std::vector<std::string> split(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

std::vector<long long> numbers(const std::string& s) {
    std::vector<long long> out;
    for (const auto& t : split(s)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(t, &used));
            if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::logic_error&) {
            throw ParameterError("expected an integer, got '" + t + "'");
        }
    }
    return out;
}

// "cycle,5" or "petersen"
BasedGraph family_graph(const std::string& spec) {
    auto parts = split(spec);
    if (parts.empty()) throw ParameterError("empty family");
    std::vector<long long> params;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        auto n = numbers(parts[i]);
        params.insert(params.end(), n.begin(), n.end());
    }
    return make_based_family(parts[0], params);
}

struct GraphArg {
    std::string file, family, base;

    void add(CLI::App* app, const std::string& prefix = "") {
        auto* g = app->add_option("--" + prefix + "graph", file, "graph JSON file");
        auto* f = app->add_option("--" + prefix + "family", family, "family and parameters, e.g. cycle,5");
        g->excludes(f);
        app->add_option("--" + prefix + "base", base, "base vertex name");
    }
    BasedGraph get() const {
        BasedGraph bg;
        if (!family.empty()) bg = family_graph(family);
        else if (!file.empty()) bg = {graph_from_json(read_json_file(file)), 0};
        else throw ParameterError("a graph is required (--graph or --family)");
        if (!base.empty()) bg.base = bg.graph.index_of(base);
        return bg;
    }
};

void emit(const Json& j, const std::string& out) {
    if (out.empty()) std::cout << j.dump(2) << "\n";
    else write_json_file(out, j);
}

Walk parse_walk(const Graph& g, const std::string& s) {
    if (s.size() > 5 && s.substr(s.size() - 5) == ".json") return walk_from_json(read_json_file(s), g);
    return Walk::from_names(g, split(s));
}

Presentation read_presentation(const std::string& text, const std::string& file) {
    if (!text.empty()) return parse_presentation(text);
    if (!file.empty()) return presentation_from_json(read_json_file(file));
    throw ParameterError("a presentation is required (--text or --file)");
}

int verdict_exit(Verdict v) { return v == Verdict::yes ? 0 : v == Verdict::no ? 1 : 3; }

Json pi1_json(const Pi1Presentation& pp, bool with_identify, bool even) {
    Json j;
    j["r"] = pp.r;
    const Presentation* p = &pp.presentation;
    EvenPart ev;
    if (even) {
        ev = even_part(pp);
        p = &ev.presentation;
        j["even_part"] = true;
        j["whole_group"] = ev.whole_group;
    }
    if (with_identify) {
        auto gi = identify(*p);
        j["group"] = gi.name;
        j["identify"] = to_json(gi);
    }
    j["presentation"] = to_json(*p);
    if (!even) {
        Json gens = Json::array();
        for (int i = 0; i < pp.presentation.ngens(); ++i) {
            auto [a, b] = pp.chords[i];
            gens.push_back({{"name", pp.presentation.generators[i]},
                            {"chord", {a, b}},
                            {"odd", static_cast<bool>(pp.parity[i])}});
        }
        j["generators"] = gens;
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete homotopy of graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 0;
    std::string out;
    app.add_option("--threads", threads, "OpenMP threads (output does not depend on it)");
    app.add_option("--out", out, "write JSON here instead of stdout");
    std::function<int()> action;

    // gen
    auto* gen = app.add_subcommand("gen", "build a graph or a covering map");
    GraphArg gen_g;
    gen_g.add(gen);
    std::string wrap_spec;
    bool dot = false, list = false, k2cover = false;
    gen->add_option("--wrap", wrap_spec, "n,m: the winding map C_n -> C_m");
    gen->add_flag("--double-cover", k2cover, "the projection K_2 x G -> G");
    gen->add_flag("--dot", dot, "emit Graphviz instead of JSON");
    gen->add_flag("--list", list, "list the graph families");
    gen->callback([&] {
        action = [&] {
            if (list) {
                emit(Json(family_names()), out);
                return 0;
            }
            if (!wrap_spec.empty()) {
                auto nm = numbers(wrap_spec);
                if (nm.size() != 2 || nm[1] < 1 || nm[0] % nm[1] != 0)
                    throw ParameterError("--wrap needs n,m with m dividing n");
                Graph a = make_family("cycle", {nm[0]}), b = make_family("cycle", {nm[1]});
                std::vector<int> f(a.size());
                for (long long i = 0; i < nm[0]; ++i)
                    f[a.index_of(std::to_string(i))] = b.index_of(std::to_string(i % nm[1]));
                emit(to_json(GraphMap(a, b, f)), out);
                return 0;
            }
            Graph g = gen_g.get().graph;
            if (k2cover) {
                Graph k = product(make_family("complete", {2}), g);
                std::vector<int> f(k.size());
                for (int v = 0; v < k.size(); ++v) f[v] = v % g.size();
                emit(to_json(GraphMap(k, g, f)), out);
                return 0;
            }
            if (dot) std::cout << to_dot(g);
            else emit(to_json(g), out);
            return 0;
        };
    });

    // walk
    auto* walk = app.add_subcommand("walk", "r-homotopy of walks");
    walk->require_subcommand(1);
    GraphArg walk_g;
    int walk_r = 2, walk_cap = -1, walk_power = 4;
    std::string wa, wb;
    auto walk_common = [&](CLI::App* s) {
        walk_g.add(s);
        s->add_option("--r", walk_r, "homotopy radius")->required();
        s->add_option("--cap", walk_cap, "length cap for union-find fallbacks");
    };
    auto* w_hom = walk->add_subcommand("homotopic", "decide whether two walks are r-homotopic");
    walk_common(w_hom);
    w_hom->add_option("--a", wa, "first walk: names a,b,c or a JSON file")->required();
    w_hom->add_option("--b", wb, "second walk")->required();
    w_hom->callback([&] {
        action = [&] {
            Graph g = walk_g.get().graph;
            Verdict v = are_r_homotopic(parse_walk(g, wa), parse_walk(g, wb), walk_r, walk_cap);
            emit({{"homotopic", to_string(v)}}, out);
            return verdict_exit(v);
        };
    });
    auto* w_len = walk->add_subcommand("length", "geodesic length of the class of a walk");
    walk_common(w_len);
    w_len->add_option("--walk", wa, "walk")->required();
    w_len->callback([&] {
        action = [&] {
            Graph g = walk_g.get().graph;
            auto l = geodesic_length(parse_walk(g, wa), walk_r, walk_cap);
            emit({{"length", l.length}, {"exact", l.exact}}, out);
            return l.exact ? 0 : 3;
        };
    });
    auto* w_stable = walk->add_subcommand("stable", "upper bound for the stable length of a loop");
    walk_common(w_stable);
    w_stable->add_option("--walk", wa, "loop")->required();
    w_stable->add_option("--max-power", walk_power, "largest power tried");
    w_stable->callback([&] {
        action = [&] {
            Graph g = walk_g.get().graph;
            auto s = stable_length_upper(parse_walk(g, wa), walk_r, walk_power, walk_cap);
            emit({{"bound", std::to_string(s.num) + "/" + std::to_string(s.den)},
                  {"value", s.value()},
                  {"power", s.best_power},
                  {"exact_lengths", s.exact_lengths}},
                 out);
            return 0;
        };
    });

    // pi1
    auto* pi1 = app.add_subcommand("pi1", "presentation of the r-fundamental group");
    GraphArg pi1_g;
    pi1_g.add(pi1);
    int pi1_r = 1;
    bool pi1_identify = false, pi1_even = false, pi1_filter = false;
    pi1->add_option("--r", pi1_r, "radius")->required();
    pi1->add_flag("--identify", pi1_identify, "name the group");
    pi1->add_flag("--even", pi1_even, "use the even part");
    pi1->add_flag("--drop-decomposable", pi1_filter, "omit decomposable relators");
    pi1->callback([&] {
        action = [&] {
            auto bg = pi1_g.get();
            Pi1Options opt;
            opt.drop_decomposable = pi1_filter;
            auto pp = cw_presentation(bg, pi1_r, opt);
            Json j = pi1_json(pp, pi1_identify, pi1_even);
            j["base"] = bg.graph.vertex_name(bg.base);
            emit(j, out);
            return 0;
        };
    });

    // group
    auto* group = app.add_subcommand("group", "finitely presented groups");
    group->require_subcommand(1);
    std::string g_text, g_file, g_word, g_sub;
    long long g_cap = kDefaultMaxCosets;
    auto group_common = [&](CLI::App* s) {
        s->add_option("--text", g_text, "presentation such as \"<a,b | a^2, b^3, (ab)^5>\"");
        s->add_option("--file", g_file, "presentation JSON file");
        s->add_option("--max-cosets", g_cap, "coset enumeration cap");
    };
    auto* g_id = group->add_subcommand("identify", "identify the group");
    group_common(g_id);
    g_id->callback([&] {
        action = [&] {
            emit(to_json(identify(read_presentation(g_text, g_file), g_cap)), out);
            return 0;
        };
    });
    auto* g_triv = group->add_subcommand("trivial", "decide whether a word is trivial");
    group_common(g_triv);
    g_triv->add_option("--word", g_word, "word")->required();
    g_triv->callback([&] {
        action = [&] {
            auto p = read_presentation(g_text, g_file);
            Verdict v = word_is_trivial(p, parse_word(p, g_word), g_cap);
            emit({{"trivial", to_string(v)}}, out);
            return verdict_exit(v);
        };
    });
    auto* g_index = group->add_subcommand("index", "index of a subgroup by coset enumeration");
    group_common(g_index);
    g_index->add_option("--subgroup", g_sub, "comma separated generating words");
    g_index->callback([&] {
        action = [&] {
            auto p = read_presentation(g_text, g_file);
            std::vector<Word> h;
            for (const auto& w : split(g_sub))
                if (!w.empty()) h.push_back(parse_word(p, w));
            auto res = coset_enumerate(p, h, g_cap);
            if (!res.complete()) {
                emit({{"index", nullptr}, {"defined", res.defined}}, out);
                return 3;
            }
            emit({{"index", res.table.size()}, {"defined", res.defined}}, out);
            return 0;
        };
    });

    // cover
    auto* cover = app.add_subcommand("cover", "r-covering maps");
    cover->require_subcommand(1);
    std::string c_map, c_walk, c_start, c_vertex;
    int c_r = 1, c_cap = 8;
    GraphArg cover_g;
    auto* c_verify = cover->add_subcommand("verify", "check that a map is an r-covering");
    c_verify->add_option("--map", c_map, "map JSON file")->required();
    c_verify->add_option("--r", c_r, "radius")->required();
    c_verify->callback([&] {
        action = [&] {
            auto p = map_from_json(read_json_file(c_map));
            auto cert = verify_r_covering(p, c_r);
            Json j = {{"r", c_r}, {"pass", cert.pass}};
            if (cert.witness) {
                const auto& w = *cert.witness;
                j["witness"] = {{"kind", w.kind == CoverWitness::Kind::collision ? "collision" : "not_surjective"},
                                {"vertex", p.domain().vertex_name(w.vertex)},
                                {"radius", w.radius},
                                {"text", w.describe(p)},
                                {"replays", replay(p, w)}};
            }
            emit(j, out);
            return cert.pass ? 0 : 1;
        };
    });
    auto* c_fiber = cover->add_subcommand("fiber", "compare a fiber with the subgroup index");
    c_fiber->add_option("--map", c_map, "map JSON file")->required();
    c_fiber->add_option("--r", c_r, "radius")->required();
    c_fiber->add_option("--vertex", c_vertex, "vertex of the cover (default: first)");
    c_fiber->callback([&] {
        action = [&] {
            auto p = map_from_json(read_json_file(c_map));
            auto cert = verify_r_covering(p, c_r);
            if (!cert.pass) throw PreconditionError("not an r-covering: " + cert.witness->describe(p));
            int v = c_vertex.empty() ? 0 : p.domain().index_of(c_vertex);
            auto rep = fiber_coset_check(cert, v);
            Json j = {{"fiber", rep.fiber}, {"agree", rep.agree}, {"note", rep.note}};
            j["index"] = rep.index ? Json(*rep.index) : Json(nullptr);
            emit(j, out);
            return rep.index ? (rep.agree ? 0 : 1) : 3;
        };
    });
    auto* c_lift = cover->add_subcommand("lift", "lift a walk through an r-covering");
    c_lift->add_option("--map", c_map, "map JSON file")->required();
    c_lift->add_option("--r", c_r, "radius")->required();
    c_lift->add_option("--walk", c_walk, "walk in the base")->required();
    c_lift->add_option("--start", c_start, "start vertex in the cover")->required();
    c_lift->callback([&] {
        action = [&] {
            auto p = map_from_json(read_json_file(c_map));
            auto cert = verify_r_covering(p, c_r);
            if (!cert.pass) throw PreconditionError("not an r-covering: " + cert.witness->describe(p));
            auto l = lift_path(cert, parse_walk(p.codomain(), c_walk), p.domain().index_of(c_start));
            emit(to_json(l), out);
            return 0;
        };
    });
    auto* c_univ = cover->add_subcommand("universal", "ball of the universal r-cover");
    cover_g.add(c_univ);
    c_univ->add_option("--r", c_r, "radius")->required();
    c_univ->add_option("--cap", c_cap, "walk length cap");
    c_univ->callback([&] {
        action = [&] {
            auto u = universal_cover(cover_g.get(), c_r, c_cap);
            emit({{"graph", to_json(u.graph)},
                  {"projection", to_json(u.projection)["assignment"]},
                  {"certified_radius", u.certified_radius},
                  {"exact_classes", u.exact_classes}},
                 out);
            return 0;
        };
    });

    // ncomplex
    auto* nc = app.add_subcommand("ncomplex", "r-neighborhood complexes");
    GraphArg nc_g;
    nc_g.add(nc);
    int nc_r = 1;
    bool nc_hom = false, nc_pi1 = false, nc_thm = false;
    std::string nc_map;
    nc->add_option("--r", nc_r, "radius")->required();
    nc->add_flag("--homology", nc_hom, "H_0, H_1 and H_2 of the 2-skeleton");
    nc->add_flag("--pi1", nc_pi1, "edge-loop group at the base");
    nc->add_flag("--check-thm53", nc_thm, "compare with the even part of pi_1^{2r}");
    nc->add_option("--cover-map", nc_map, "check that this 2r-covering induces a covering of complexes");
    nc->callback([&] {
        action = [&] {
            int code = 0;
            Json j;
            if (!nc_map.empty()) {
                auto rep = complex_covering_check(map_from_json(read_json_file(nc_map)), nc_r);
                j["complex_cover"] = {{"pass", rep.pass}, {"failure", rep.failure}, {"stars_checked", rep.stars_checked}};
                code = rep.pass ? 0 : 1;
                emit(j, out);
                return code;
            }
            auto bg = nc_g.get();
            auto c = neighborhood_complex(bg.graph, nc_r);
            j["complex"] = to_json(c);
            j["dimension"] = c.dimension();
            if (nc_hom) {
                auto h = homology(c);
                j["homology"] = {{"h0_rank", h.h0_rank}, {"h1", to_json(h.h1)}, {"h2_2skeleton", to_json(h.h2)}};
            }
            if (nc_pi1) {
                auto comp = c.component(complex_vertex(c, bg.graph, bg.base));
                auto e = edge_loop_presentation(comp, comp.index_of(bg.graph.vertex_name(bg.base)));
                auto gi = identify(e.presentation);
                j["pi1"] = {{"group", gi.name}, {"presentation", to_json(e.presentation)}};
            }
            if (nc_thm) {
                auto t = theorem_5_3_check(bg, nc_r);
                j["thm53"] = {{"complex_side", t.complex_side.name}, {"graph_side", t.graph_side.name}, {"agree", t.agree}};
                code = t.agree ? 0 : 1;
            }
            emit(j, out);
            return code;
        };
    });

    // homcx
    auto* hx = app.add_subcommand("homcx", "x-homotopy, pullbacks and Hom posets");
    hx->require_subcommand(1);
    std::string hf, hg, hp, h_based;
    int h_r = 2;
    GraphArg h_t;
    auto* hx_hom = hx->add_subcommand("homotopic", "search for a chain of one-step homotopies");
    hx_hom->add_option("--f", hf, "first map JSON")->required();
    hx_hom->add_option("--g", hg, "second map JSON")->required();
    hx_hom->add_option("--based", h_based, "domain vertex kept fixed");
    hx_hom->callback([&] {
        action = [&] {
            auto f = map_from_json(read_json_file(hf)), g = map_from_json(read_json_file(hg));
            int base = h_based.empty() ? -1 : f.domain().index_of(h_based);
            auto res = times_homotopic(f, g, base);
            Json chain = Json::array();
            for (const auto& m : res.chain) chain.push_back(to_json(m)["assignment"]);
            emit({{"homotopic", res.homotopic}, {"chain", chain}, {"visited", res.visited}}, out);
            return res.homotopic ? 0 : 1;
        };
    });
    auto* hx_pb = hx->add_subcommand("pullback", "pull an r-covering back along a map");
    hx_pb->add_option("--f", hf, "map G -> H")->required();
    hx_pb->add_option("--p", hp, "r-covering E -> H")->required();
    hx_pb->add_option("--r", h_r, "radius");
    hx_pb->callback([&] {
        action = [&] {
            auto pb = pullback_cover(map_from_json(read_json_file(hf)), map_from_json(read_json_file(hp)), h_r);
            emit({{"graph", to_json(pb.graph)}, {"projection", to_json(pb.projection)["assignment"]}, {"verified", true}},
                 out);
            return 0;
        };
    });
    auto* hx_poset = hx->add_subcommand("poset-check", "unique lifts in Hom(T,G) -> Hom(T,H)");
    h_t.add(hx_poset, "t-");
    hx_poset->add_option("--p", hp, "2-covering G -> H")->required();
    hx_poset->callback([&] {
        action = [&] {
            auto rep = poset_cover_check(h_t.get().graph, map_from_json(read_json_file(hp)));
            emit({{"pass", rep.pass},
                  {"domain_size", rep.domain_size},
                  {"codomain_size", rep.codomain_size},
                  {"failure", rep.failure}},
                 out);
            return rep.pass ? 0 : 1;
        };
    });

    // obstruct
    auto* ob = app.add_subcommand("obstruct", "obstructions to graph maps");
    ob->require_subcommand(1);
    GraphArg ob_g, ob_h;
    int ob_n = 5, ob_r = 2, ob_power = 3;
    long long ob_nodes = 10'000'000;
    auto hom_json = [](HomCheck h) { return to_string(h); };
    auto report_exit = [](bool consistent, HomCheck h) { return !consistent ? 1 : h == HomCheck::budget ? 3 : 0; };
    auto* ob_cycle = ob->add_subcommand("cycle", "stable-length obstruction for maps to C_n");
    ob_g.add(ob_cycle);
    ob_cycle->add_option("--n", ob_n, "odd cycle length")->required();
    ob_cycle->add_option("--r", ob_r, "radius")->required();
    ob_cycle->add_option("--max-power", ob_power, "largest power tried");
    ob_cycle->add_option("--hom-nodes", ob_nodes, "search budget for the cross-check (0 skips it)");
    ob_cycle->callback([&] {
        action = [&] {
            auto bg = ob_g.get();
            auto rep = cycle_obstruction_report(bg, ob_n, ob_r, ob_power, ob_nodes);
            Json j = {{"verdict", to_string(rep.verdict)},
                      {"group", rep.group.name},
                      {"reason", rep.reason},
                      {"hom", hom_json(rep.hom)},
                      {"consistent", rep.consistent}};
            if (rep.odd_loop)
                j["certificate"] = {{"loop", rep.odd_loop->names()},
                                    {"power", rep.power},
                                    {"power_length", rep.power_length}};
            emit(j, out);
            return report_exit(rep.consistent, rep.hom);
        };
    });
    auto* ob_h1 = ob->add_subcommand("h1", "homology obstruction for maps to C_n");
    ob_g.add(ob_h1);
    ob_h1->add_option("--n", ob_n, "odd cycle length")->required();
    ob_h1->add_option("--r", ob_r, "radius with 2r < n")->required();
    ob_h1->add_option("--hom-nodes", ob_nodes, "search budget for the cross-check (0 skips it)");
    ob_h1->callback([&] {
        action = [&] {
            auto rep = h1_obstruction_report(ob_g.get().graph, ob_n, ob_r, ob_nodes);
            emit({{"verdict", to_string(rep.verdict)},
                  {"h1", to_json(rep.h1)},
                  {"reason", rep.reason},
                  {"hom", hom_json(rep.hom)},
                  {"consistent", rep.consistent}},
                 out);
            return report_exit(rep.consistent, rep.hom);
        };
    });
    auto* ob_tor = ob->add_subcommand("torsion", "odd-torsion obstruction between two graphs");
    ob_g.add(ob_tor, "source-");
    ob_h.add(ob_tor, "target-");
    ob_tor->add_option("--r", ob_r, "radius");
    ob_tor->add_option("--hom-nodes", ob_nodes, "search budget for the cross-check (0 skips it)");
    ob_tor->callback([&] {
        action = [&] {
            auto rep = torsion_obstruction_report(ob_g.get(), ob_h.get(), ob_r, ob_nodes);
            Json j = {{"verdict", to_string(rep.verdict)},
                      {"source", rep.source.name},
                      {"target", rep.target.name},
                      {"target_odd_orders", rep.target_odd_orders},
                      {"reason", rep.reason},
                      {"hom", hom_json(rep.hom)},
                      {"consistent", rep.consistent}};
            j["odd_order"] = rep.odd_order ? Json(*rep.odd_order) : Json(nullptr);
            emit(j, out);
            return report_exit(rep.consistent, rep.hom);
        };
    });
    auto* ob_hom = ob->add_subcommand("hom", "exhaustive search for a graph map");
    ob_g.add(ob_hom, "source-");
    ob_h.add(ob_hom, "target-");
    ob_hom->add_option("--hom-nodes", ob_nodes, "search budget");
    ob_hom->callback([&] {
        action = [&] {
            auto s = find_hom(ob_g.get().graph, ob_h.get().graph, ob_nodes);
            Json j = {{"result", s.map ? "exists" : s.complete ? "none" : "budget exhausted"}, {"nodes", s.nodes}};
            if (s.map) j["map"] = to_json(*s.map)["assignment"];
            emit(j, out);
            return s.map || s.complete ? 0 : 3;
        };
    });

    // paper-check
    auto* pc = app.add_subcommand("paper-check", "run the acceptance criteria");
    std::string suite = "core", pc_ids;
    pc->add_option("--suite", suite, "suite name")->check(CLI::IsMember({"core"}));
    pc->add_option("--criteria", pc_ids, "comma separated subset, e.g. 1,4,13");
    pc->callback([&] {
        action = [&] {
            std::vector<int> ids;
            for (long long i : numbers(pc_ids.empty() ? "" : pc_ids)) ids.push_back(static_cast<int>(i));
            auto results = run_acceptance(ids);
            Json j = Json::array();
            bool all = true;
            for (const auto& r : results) {
                std::cerr << format_line(r) << "\n";
                j.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
                all = all && r.pass;
            }
            emit(j, out);
            return all ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (threads > 0) omp_set_num_threads(threads);
    try {
        return action ? action() : 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LookupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
