#include "gtop/covering.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace gtop {

namespace {

// N_{i+1} from N_i, as sorted vertex lists; stamp is scratch of size |G|
std::vector<int> step(const Graph& g, const std::vector<int>& cur, std::vector<int>& stamp, int tag) {
    std::vector<int> out;
    for (int x : cur)
        for (int y : g.neighbors(x))
            if (stamp[y] != tag) {
                stamp[y] = tag;
                out.push_back(y);
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<CoverWitness> check_vertex(const GraphMap& p, int r, int v, std::vector<int>& stamp,
                                         std::vector<int>& seen, int& tag) {
    const Graph& g = p.domain();
    const Graph& h = p.codomain();
    // N_1 surjectivity
    ++tag;
    for (int u : g.neighbors(v)) seen[p(u)] = tag;
    for (int y : h.neighbors(p(v)))
        if (seen[y] != tag) return CoverWitness{CoverWitness::Kind::not_surjective, v, 1, y, -1};
    // N_i injectivity, first failing radius; owner[] holds the preimage found first
    std::vector<int> cur{v};
    std::map<int, int> owner;
    for (int i = 1; i <= r; ++i) {
        cur = step(g, cur, stamp, ++tag);
        owner.clear();
        for (int u : cur) {
            auto [it, fresh] = owner.emplace(p(u), u);
            if (!fresh) return CoverWitness{CoverWitness::Kind::collision, v, i, it->second, u};
        }
    }
    return std::nullopt;
}

CoverCertificate verify_impl(const GraphMap& p, int r, bool parallel) {
    if (r < 1) throw ParameterError("radius must be at least 1");
    CoverCertificate c;
    c.map = p;
    c.r = r;
    const int n = p.domain().size();
    const int m = p.codomain().size();
    // least failing vertex; deterministic whatever the schedule
    int first_bad = n;
#pragma omp parallel if (parallel)
    {
        std::vector<int> stamp(std::max(n, 1), 0), seen(std::max(m, 1), 0);
        int tag = 0;
#pragma omp for schedule(dynamic, 16) reduction(min : first_bad)
        for (int v = 0; v < n; ++v) {
            if (v > first_bad) continue;
            if (check_vertex(p, r, v, stamp, seen, tag)) first_bad = std::min(first_bad, v);
        }
    }
    if (first_bad < n) {
        std::vector<int> stamp(n, 0), seen(std::max(m, 1), 0);
        int tag = 0;
        c.witness = check_vertex(p, r, first_bad, stamp, seen, tag);
    }
    c.pass = !c.witness;
    return c;
}

}  // namespace

std::string CoverWitness::describe(const GraphMap& p) const {
    const Graph& g = p.domain();
    if (kind == Kind::not_surjective)
        return "N_1(" + g.vertex_name(vertex) + ") misses " + p.codomain().vertex_name(a) + " in N_1(" +
               p.codomain().vertex_name(p(vertex)) + ")";
    return g.vertex_name(a) + " and " + g.vertex_name(b) + " in N_" + std::to_string(radius) + "(" +
           g.vertex_name(vertex) + ") both map to " + p.codomain().vertex_name(p(a));
}

CoverCertificate verify_r_covering(const GraphMap& p, int r) { return verify_impl(p, r, true); }
CoverCertificate verify_r_covering_serial(const GraphMap& p, int r) { return verify_impl(p, r, false); }

bool replay(const GraphMap& p, const CoverWitness& w) {
    const Graph& g = p.domain();
    if (w.kind == CoverWitness::Kind::not_surjective) {
        if (!p.codomain().adjacent(p(w.vertex), w.a)) return false;
        for (int u : g.neighbors(w.vertex))
            if (p(u) == w.a) return false;
        return true;
    }
    if (w.a == w.b || p(w.a) != p(w.b)) return false;
    auto mask = neighborhood_mask(g, w.vertex, w.radius);
    return mask[w.a] && mask[w.b];
}

// ---------------------------------------------------------------- actions

namespace {

ActionCertificate action_impl(const VertexAction& a, int r, bool parallel) {
    if (r < 1) throw ParameterError("radius must be at least 1");
    const Graph& g = a.graph();
    const int n = g.size();
    const auto& el = a.elements();
    std::vector<std::vector<char>> nb(n);
#pragma omp parallel for if (parallel) schedule(dynamic, 16)
    for (int v = 0; v < n; ++v) nb[v] = neighborhood_mask(g, v, r);

    auto first_common = [&](int v, int e) -> int {
        int w = el[e][v];
        for (int u = 0; u < n; ++u)
            if (nb[v][u] && nb[w][u]) return u;
        return -1;
    };
    int first_bad = n;
#pragma omp parallel for if (parallel) schedule(dynamic, 16) reduction(min : first_bad)
    for (int v = 0; v < n; ++v) {
        for (int e = 1; e < static_cast<int>(el.size()); ++e)
            if (first_common(v, e) >= 0) {
                first_bad = std::min(first_bad, v);
                break;
            }
    }
    ActionCertificate c;
    if (first_bad < n)
        for (int e = 1; e < static_cast<int>(el.size()); ++e) {
            int u = first_common(first_bad, e);
            if (u >= 0) {
                c.witness = ActionWitness{first_bad, e, u};
                break;
            }
        }
    c.pass = !c.witness;
    return c;
}

}  // namespace

ActionCertificate verify_covering_action(const VertexAction& a, int r) { return action_impl(a, r, true); }
ActionCertificate verify_covering_action_serial(const VertexAction& a, int r) { return action_impl(a, r, false); }

// ---------------------------------------------------------------- lifting

namespace {

void require_cover(const CoverCertificate& p) {
    if (!p.pass) throw PreconditionError("lifting needs a map certified as a covering");
}

int lift_step(const CoverCertificate& p, int at, int target) {
    for (int u : p.map.domain().neighbors(at))
        if (p.map(u) == target) return u;
    throw ValidationError("no lift of a step; the map is not a covering here");
}

}  // namespace

Walk lift_path(const CoverCertificate& p, const Walk& walk, int start) {
    require_cover(p);
    if (!(walk.graph() == p.map.codomain())) throw PreconditionError("walk is not in the base graph of the covering");
    if (p.map(start) != walk.initial())
        throw PreconditionError("start vertex " + p.map.domain().vertex_name(start) + " is not over " +
                                walk.graph().vertex_name(walk.initial()));
    VertexSeq s{start};
    for (std::size_t i = 1; i < walk.vertices().size(); ++i) s.push_back(lift_step(p, s.back(), walk.vertices()[i]));
    return Walk(p.map.domain(), std::move(s));
}

bool loop_in_image(const CoverCertificate& p, const Walk& loop, int start) {
    if (!loop.is_loop()) throw PreconditionError("loop_in_image expects a loop");
    return lift_path(p, loop, start).is_loop();
}

// ---------------------------------------------------------------- universal covers

TruncatedCover universal_cover(const BasedGraph& bg, int r, int cap, long long max_states) {
    if (cap < 0) throw ParameterError("cap must be non-negative");
    const Graph& g = bg.graph;
    HomotopyDecider d(g, bg.base, r);
    const WordSolver& solver = d.solver();
    TruncatedCover tc;
    tc.base = bg;
    tc.r = r;
    tc.cap = cap;
    tc.exact_classes = solver.canonical_key({}).has_value();

    std::vector<Word> words;  // chord word of each class representative
    std::vector<int> vert;
    std::map<std::pair<int, std::vector<long long>>, int> index;
    // without canonical keys we compare against every class over the vertex
    std::map<int, std::vector<int>> by_vertex;
    auto find_class = [&](int v, const Word& w) -> int {
        if (tc.exact_classes) {
            auto it = index.find({v, *solver.canonical_key(w)});
            return it == index.end() ? -1 : it->second;
        }
        for (int c : by_vertex[v])
            if (solver.are_equal(words[c], w) == Verdict::yes) return c;
        return -1;
    };
    auto add_class = [&](int v, Word w, VertexSeq rep, int dep) {
        int id = static_cast<int>(vert.size());
        if (tc.exact_classes) index[{v, *solver.canonical_key(w)}] = id;
        by_vertex[v].push_back(id);
        words.push_back(std::move(w));
        vert.push_back(v);
        tc.rep.push_back(std::move(rep));
        tc.depth.push_back(dep);
        if (static_cast<long long>(vert.size()) > max_states)
            throw BudgetExceeded("universal cover ball exceeded " + std::to_string(max_states) + " vertices");
        return id;
    };
    add_class(bg.base, {}, {bg.base}, 0);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t head = 0; head < vert.size(); ++head) {
        const int c = static_cast<int>(head);
        for (int y : g.neighbors(vert[c])) {
            Word w = free_reduce(concat(words[c], d.word_of({vert[c], y})));
            int t = find_class(y, w);
            if (t < 0) {
                if (tc.depth[c] == cap) continue;
                VertexSeq rep = tc.rep[c];
                rep.push_back(y);
                t = add_class(y, std::move(w), std::move(rep), tc.depth[c] + 1);
            }
            if (c <= t) edges.emplace_back(c, t);
        }
    }
    std::vector<std::string> names;
    for (const auto& rep : tc.rep) {
        std::string s;
        for (std::size_t i = 0; i < rep.size(); ++i) s += (i ? "-" : "") + g.vertex_name(rep[i]);
        names.push_back(s);
    }
    // Graph sorts names; keep the mapping from class id to vertex id
    tc.graph = Graph::from_indices("univ_" + std::to_string(r) + "(" + g.name() + ")", names, edges);
    std::vector<int> pos(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) pos[i] = tc.graph.index_of(names[i]);
    std::vector<int> proj(names.size());
    std::vector<int> depth(names.size());
    std::vector<VertexSeq> rep(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        proj[pos[i]] = vert[i];
        depth[pos[i]] = tc.depth[i];
        rep[pos[i]] = tc.rep[i];
    }
    tc.depth = std::move(depth);
    tc.rep = std::move(rep);
    tc.projection = GraphMap(tc.graph, g, proj);
    tc.cover_base = pos[0];
    tc.certified_radius = std::max(0, cap - r);
    return tc;
}

bool TruncatedCover::check_ball() const {
    const GraphMap& p = projection;
    std::vector<int> stamp(graph.size(), 0), seen(std::max(1, p.codomain().size()), 0);
    int tag = 0;
    for (int v = 0; v < graph.size(); ++v)
        if (depth[v] <= certified_radius && check_vertex(p, r, v, stamp, seen, tag)) return false;
    return true;
}

// ---------------------------------------------------------------- fibers and subgroups

FiberReport fiber_coset_check(const CoverCertificate& p, int cover_base, long long max_cosets) {
    FiberReport rep;
    if (!p.pass) throw PreconditionError("fiber check needs a certified covering");
    const Graph& cov = p.map.domain();
    auto comp = component_of(cov, cover_base);
    const int target = p.map(cover_base);
    for (int v : comp)
        if (p.map(v) == target) ++rep.fiber;
    if (static_cast<int>(comp.size()) != cov.size()) rep.note = "cover is disconnected; fiber counted in the base component. ";
    InducedHom h = induced_hom({p.map, cover_base, target}, p.r);
    auto res = coset_enumerate(h.codomain.presentation, h.images, max_cosets);
    if (!res.complete()) {
        rep.note += "coset enumeration did not finish; index unknown";
        return rep;
    }
    rep.index = res.table.size();
    rep.agree = *rep.index == rep.fiber;
    return rep;
}

SubgroupCover subgroup_cover(const BasedGraph& bg, int r, const std::vector<Word>& subgroup, long long max_cosets) {
    Pi1Presentation pp = cw_presentation(bg, r);
    for (const auto& w : subgroup)
        for (int l : w)
            if (gen_of(l) >= pp.presentation.ngens()) throw ParameterError("subgroup word uses an unknown generator");
    auto res = coset_enumerate(pp.presentation, subgroup, max_cosets);
    if (!res.complete())
        throw BudgetExceeded("subgroup has no finite index within " + std::to_string(max_cosets) + " cosets");
    const CosetTable& t = res.table;
    const Graph& g = bg.graph;
    const int k = t.size();
    std::vector<int> comp = component_of(g, bg.base);
    std::vector<int> slot(g.size(), -1);
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) slot[comp[i]] = i;
    std::vector<std::string> names;
    std::vector<int> proj;
    for (int u : comp)
        for (int c = 0; c < k; ++c) {
            names.push_back("(" + g.vertex_name(u) + "," + std::to_string(c) + ")");
            proj.push_back(u);
        }
    auto id = [&](int u, int c) { return slot[u] * k + c; };
    std::vector<std::pair<int, int>> edges;
    for (int u : comp)
        for (int y : g.neighbors(u)) {
            if (y < u) continue;
            Word w = walk_to_word(pp, VertexSeq{u, y});
            for (int c = 0; c < k; ++c) edges.emplace_back(id(u, c), id(y, t.trace(c, w)));
        }
    SubgroupCover sc;
    sc.index = k;
    sc.graph = Graph::from_indices(g.name() + "_cover" + std::to_string(k), names, edges);
    std::vector<int> assign(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) assign[sc.graph.index_of(names[i])] = proj[i];
    sc.projection = GraphMap(sc.graph, g, assign);
    sc.cover_base = sc.graph.index_of("(" + g.vertex_name(bg.base) + ",0)");
    return sc;
}

LiftResult lift_map(const CoverCertificate& p, int cover_base, const BasedMap& f) {
    require_cover(p);
    const Graph& t = f.map.domain();
    if (!(f.map.codomain() == p.map.codomain())) throw PreconditionError("map does not land in the covered graph");
    if (p.map(cover_base) != f.codomain_base) throw PreconditionError("cover base is not over the map's base");
    if (!is_connected(t)) throw PreconditionError("domain of the map must be connected");
    const int n = t.size();
    std::vector<int> lift(n, -1), parent(n, -1);
    std::queue<int> q;
    lift[f.domain_base] = cover_base;
    q.push(f.domain_base);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : t.neighbors(x))
            if (lift[y] < 0 && y != f.domain_base) {
                lift[y] = lift_step(p, lift[x], f.map(y));
                parent[y] = x;
                q.push(y);
            }
    }
    auto path_to = [&](int v) {
        VertexSeq s;
        for (int x = v; x != -1; x = parent[x]) s.push_back(x);
        std::reverse(s.begin(), s.end());
        return s;
    };
    LiftResult out;
    for (auto [a, b] : t.edges()) {
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            if (lift_step(p, lift[x], f.map(y)) == lift[y]) continue;
            VertexSeq loop = path_to(x);
            VertexSeq back = path_to(y);
            std::reverse(back.begin(), back.end());
            loop.insert(loop.end(), back.begin(), back.end());
            out.witness = Walk(t, loop);
            return out;
        }
    }
    out.lift = GraphMap(t, p.map.domain(), lift);
    return out;
}

}  // namespace gtop
