#include "gtop/homcx.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

#include "gtop/fundamental.hpp"

namespace gtop {

namespace {

void same_ends(const GraphMap& f, const GraphMap& g) {
    if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
        throw PreconditionError("maps must share domain and codomain");
}

int level_vertex(const Graph& gi, const Graph& g, int v, int k) {
    return gi.index_of("(" + g.vertex_name(v) + "," + std::to_string(k) + ")");
}

}  // namespace

bool MultiHom::valid() const {
    if (static_cast<int>(sets.size()) != domain.size()) return false;
    for (const auto& s : sets) {
        if (s.empty() || !std::is_sorted(s.begin(), s.end())) return false;
        for (int x : s)
            if (x < 0 || x >= codomain.size()) return false;
    }
    for (auto [a, b] : domain.edges())
        for (int x : sets[a])
            for (int y : sets[b])
                if (!codomain.adjacent(x, y)) return false;
    return true;
}

MultiHom MultiHom::of_maps(const GraphMap& f, const GraphMap& g) {
    same_ends(f, g);
    MultiHom m{f.domain(), f.codomain(), {}};
    for (int v = 0; v < f.domain().size(); ++v) {
        std::vector<int> s{f(v), g(v)};
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        m.sets.push_back(std::move(s));
    }
    return m;
}

bool one_step_homotopic(const GraphMap& f, const GraphMap& g) {
    same_ends(f, g);
    const Graph& h = f.codomain();
    for (auto [a, b] : f.domain().edges())
        if (!h.adjacent(f(a), g(b)) || !h.adjacent(f(b), g(a))) return false;
    return true;
}

bool interpolation_is_map(const GraphMap& f, const GraphMap& g) {
    same_ends(f, g);
    const Graph& dom = f.domain();
    Graph gi = product(dom, make_family("interval", {1}));
    std::vector<int> a(gi.size());
    for (int v = 0; v < dom.size(); ++v) {
        a[level_vertex(gi, dom, v, 0)] = f(v);
        a[level_vertex(gi, dom, v, 1)] = g(v);
    }
    return !GraphMap::first_bad_edge(gi, f.codomain(), a);
}

std::vector<GraphMap> one_step_neighbors(const GraphMap& f, int base) {
    const Graph& g = f.domain();
    const Graph& h = f.codomain();
    const int n = g.size();
    // g(v) must be adjacent to f(w) for every neighbour w of v
    std::vector<std::vector<int>> cand(n);
    for (int v = 0; v < n; ++v) {
        for (int y = 0; y < h.size(); ++y) {
            if (base == v && y != f(v)) continue;
            bool ok = true;
            for (int w : g.neighbors(v))
                if (!h.adjacent(y, f(w))) {
                    ok = false;
                    break;
                }
            if (ok) cand[v].push_back(y);
        }
    }
    std::vector<GraphMap> out;
    std::vector<int> cur(n, -1);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (cur != f.assignment()) out.emplace_back(g, h, cur);
            return;
        }
        for (int y : cand[v]) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w <= v && !h.adjacent(y, w == v ? y : cur[w])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur[v] = y;
            self(self, v + 1);
        }
        cur[v] = -1;
    };
    rec(rec, 0);
    return out;
}

TimesHomotopy times_homotopic(const GraphMap& f, const GraphMap& g, int base, long long max_maps) {
    same_ends(f, g);
    if (base >= 0 && f(base) != g(base)) throw PreconditionError("based homotopy needs f(base) = g(base)");
    TimesHomotopy res;
    std::unordered_map<VertexSeq, int, SeqHash> index;
    std::vector<GraphMap> seen{f};
    std::vector<int> parent{-1};
    index.emplace(f.assignment(), 0);
    std::queue<int> q;
    q.push(0);
    int hit = f.assignment() == g.assignment() ? 0 : -1;
    while (hit < 0 && !q.empty()) {
        int i = q.front();
        q.pop();
        for (auto& nb : one_step_neighbors(seen[i], base)) {
            if (index.count(nb.assignment())) continue;
            int j = static_cast<int>(seen.size());
            index.emplace(nb.assignment(), j);
            parent.push_back(i);
            seen.push_back(std::move(nb));
            if (static_cast<long long>(seen.size()) > max_maps)
                throw BudgetExceeded("more than " + std::to_string(max_maps) + " maps in the homotopy search");
            if (seen[j].assignment() == g.assignment()) {
                hit = j;
                break;
            }
            q.push(j);
        }
    }
    res.visited = static_cast<long long>(seen.size());
    if (hit < 0) return res;
    res.homotopic = true;
    for (int i = hit; i >= 0; i = parent[i]) res.chain.push_back(seen[i]);
    std::reverse(res.chain.begin(), res.chain.end());
    return res;
}

bool simeq2_prime_check(const Walk& phi, const Walk& psi) {
    if (!(phi.graph() == psi.graph())) throw PreconditionError("walks live in different graphs");
    if (phi.length() != psi.length()) throw PreconditionError("walks must have equal length");
    if (phi.initial() != psi.initial() || phi.terminal() != psi.terminal())
        throw PreconditionError("walks must have equal endpoints");
    const Graph& g = phi.graph();
    const auto& a = phi.vertices();
    const auto& b = psi.vertices();
    for (int i = 0; i < phi.length(); ++i)
        if (!g.adjacent(a[i], b[i + 1]) || !g.adjacent(a[i + 1], b[i])) return false;
    return true;
}

Pullback pullback_cover(const GraphMap& f, const GraphMap& p, int r) {
    if (!(f.codomain() == p.codomain())) throw PreconditionError("f and p must have the same codomain");
    if (!verify_r_covering(p, r).pass) throw PreconditionError("p is not an r-covering");
    const Graph& g = f.domain();
    const Graph& e = p.domain();
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> id;
    for (int v = 0; v < g.size(); ++v)
        for (int x = 0; x < e.size(); ++x)
            if (f(v) == p(x)) {
                id[{v, x}] = static_cast<int>(pairs.size());
                pairs.push_back({v, x});
                names.push_back("(" + g.vertex_name(v) + "," + e.vertex_name(x) + ")");
            }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
        auto [v, x] = pairs[i];
        for (int w : g.neighbors(v))
            for (int y : e.neighbors(x)) {
                auto it = id.find({w, y});
                if (it != id.end() && i <= it->second) edges.push_back({i, it->second});
            }
    }
    Graph pb = Graph::from_indices(g.name() + "*" + e.name(), names, edges);
    std::vector<int> first(pb.size()), second(pb.size());
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
        int k = pb.index_of(names[i]);
        first[k] = pairs[i].first;
        second[k] = pairs[i].second;
    }
    Pullback out{pb, GraphMap(pb, g, first), GraphMap(pb, e, second)};
    auto cert = verify_r_covering(out.projection, r);
    if (!cert.pass) throw Error("pullback projection failed re-verification: " + cert.witness->describe(out.projection));
    return out;
}

EndpointIso endpoint_pullback_iso(const GraphMap& p, const Graph& g, int n) {
    if (n < 0) throw ParameterError("n must be non-negative");
    Graph gi = product(g, make_family("interval", {n}));
    if (!(p.codomain() == gi)) throw PreconditionError("p must cover G x I_n");
    for (int v = 0; v < g.size(); ++v)
        if (g.is_isolated(v)) throw PreconditionError("G has an isolated vertex " + g.vertex_name(v));
    auto inclusion = [&](int k) {
        std::vector<int> a(g.size());
        for (int v = 0; v < g.size(); ++v) a[v] = level_vertex(gi, g, v, k);
        return GraphMap(g, gi, a);
    };
    EndpointIso out;
    out.start = pullback_cover(inclusion(0), p, 2);
    out.end = pullback_cover(inclusion(n), p, 2);

    const Graph& e = p.domain();
    // the unique point of N_2(x) over the target vertex
    auto step = [&](int x, int target) {
        auto two = neighborhood_mask(e, x, 2);
        int found = -1;
        for (int y = 0; y < e.size(); ++y)
            if (two[y] && p(y) == target) {
                if (found >= 0) throw Error("two lifts in N_2 of " + e.vertex_name(x));
                found = y;
            }
        if (found < 0) throw Error("no lift in N_2 of " + e.vertex_name(x));
        return found;
    };
    auto transport = [&](const Pullback& from, const Pullback& to, int k0, int dir) {
        std::map<std::pair<int, int>, int> id;
        for (int i = 0; i < to.graph.size(); ++i) id[{to.projection(i), to.second(i)}] = i;
        std::vector<int> a(from.graph.size());
        for (int i = 0; i < from.graph.size(); ++i) {
            int v = from.projection(i), x = from.second(i);
            for (int k = k0; k != k0 + dir * n; k += dir) x = step(x, level_vertex(gi, g, v, k + dir));
            a[i] = id.at({v, x});
        }
        return GraphMap(from.graph, to.graph, a);
    };
    out.forward = transport(out.start, out.end, 0, 1);
    out.backward = transport(out.end, out.start, n, -1);
    if (out.forward.then(out.backward).assignment() != GraphMap::identity(out.start.graph).assignment() ||
        out.backward.then(out.forward).assignment() != GraphMap::identity(out.end.graph).assignment())
        throw Error("endpoint transport is not invertible");
    return out;
}

namespace {

using Mask = std::uint64_t;
using MaskHom = std::vector<Mask>;

std::vector<MaskHom> multihom_masks(const Graph& t, const Graph& h, long long max_elements) {
    if (h.size() > 63) throw ParameterError("codomain too large for multi-homomorphism enumeration (max 63)");
    for (int v = 0; v < t.size(); ++v)
        if (t.is_isolated(v)) throw PreconditionError("T has an isolated vertex " + t.vertex_name(v));
    std::vector<Mask> nb(h.size(), 0);
    for (int x = 0; x < h.size(); ++x)
        for (int y : h.neighbors(x)) nb[x] |= Mask{1} << y;
    const Mask all = h.size() ? (Mask{1} << h.size()) - 1 : 0;
    auto common = [&](Mask a) {
        Mask c = all;
        for (int x = 0; x < h.size(); ++x)
            if (a >> x & 1) c &= nb[x];
        return c;
    };
    std::vector<MaskHom> out;
    MaskHom cur(t.size(), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == t.size()) {
            out.push_back(cur);
            if (static_cast<long long>(out.size()) > max_elements)
                throw BudgetExceeded("more than " + std::to_string(max_elements) + " multi-homomorphisms");
            return;
        }
        Mask allowed = all;
        for (int w : t.neighbors(v))
            if (w < v) allowed &= common(cur[w]);
        bool loop = t.has_loop(v);
        // ascending submasks of allowed
        for (Mask s = allowed & (~allowed + 1); s; s = (s - allowed) & allowed) {
            if (loop && (s & ~common(s))) continue;
            cur[v] = s;
            self(self, v + 1);
            if (s == allowed) break;
        }
        cur[v] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

bool sub(const MaskHom& a, const MaskHom& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

}  // namespace

std::vector<MultiHom> enumerate_multihoms(const Graph& t, const Graph& h, long long max_elements) {
    std::vector<MultiHom> out;
    for (const auto& m : multihom_masks(t, h, max_elements)) {
        MultiHom mh{t, h, {}};
        for (Mask s : m) {
            std::vector<int> set;
            for (int x = 0; x < h.size(); ++x)
                if (s >> x & 1) set.push_back(x);
            mh.sets.push_back(std::move(set));
        }
        out.push_back(std::move(mh));
    }
    return out;
}

PosetCoverReport poset_cover_check(const Graph& t, const GraphMap& p, long long max_elements) {
    if (!verify_r_covering(p, 2).pass) throw PreconditionError("p is not a 2-covering");
    PosetCoverReport rep;
    auto pp = multihom_masks(t, p.domain(), max_elements);
    auto qq = multihom_masks(t, p.codomain(), max_elements);
    rep.domain_size = static_cast<long long>(pp.size());
    rep.codomain_size = static_cast<long long>(qq.size());
    auto image = [&](const MaskHom& m) {
        MaskHom out(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int x = 0; x < p.domain().size(); ++x)
                if (m[i] >> x & 1) out[i] |= Mask{1} << p(x);
        return out;
    };
    std::vector<MaskHom> img;
    for (const auto& m : pp) img.push_back(image(m));
    auto describe = [&](std::size_t i) {
        std::string s = "[";
        for (std::size_t v = 0; v < pp[i].size(); ++v) {
            s += v ? "; " : "";
            bool first = true;
            for (int x = 0; x < p.domain().size(); ++x)
                if (pp[i][v] >> x & 1) {
                    s += (first ? "" : ",") + p.domain().vertex_name(x);
                    first = false;
                }
        }
        return s + "]";
    };
    for (std::size_t i = 0; i < pp.size(); ++i) {
        std::map<MaskHom, int> up, down;
        for (std::size_t j = 0; j < pp.size(); ++j) {
            if (sub(pp[i], pp[j])) ++up[img[j]];
            if (sub(pp[j], pp[i])) ++down[img[j]];
        }
        for (const auto& y : qq) {
            if (sub(img[i], y) && up[y] != 1) {
                rep.failure = "element " + describe(i) + " has " + std::to_string(up[y]) + " upper lifts of an element above its image";
                return rep;
            }
            if (sub(y, img[i]) && down[y] != 1) {
                rep.failure = "element " + describe(i) + " has " + std::to_string(down[y]) + " lower lifts of an element below its image";
                return rep;
            }
        }
    }
    rep.pass = true;
    return rep;
}

Verdict same_induced_hom(const BasedMap& f, const BasedMap& g, int r) {
    if (f.domain_base != g.domain_base || f.codomain_base != g.codomain_base)
        throw PreconditionError("maps must agree on base points");
    auto a = induced_hom(f, r);
    auto b = induced_hom(g, r);
    WordSolver solver(a.codomain.presentation);
    Verdict out = Verdict::yes;
    for (std::size_t i = 0; i < a.images.size(); ++i) {
        Verdict v = solver.are_equal(a.images[i], b.images[i]);
        if (v == Verdict::no) return Verdict::no;
        if (v == Verdict::unknown) out = Verdict::unknown;
    }
    return out;
}

Walk homotopy_track(const std::vector<GraphMap>& chain, int v) {
    if (chain.empty()) throw PreconditionError("empty homotopy chain");
    const Graph& dom = chain.front().domain();
    const Graph& h = chain.front().codomain();
    if (dom.is_isolated(v)) throw PreconditionError("base vertex is isolated");
    const int w = dom.neighbors(v).front();
    VertexSeq path{chain.front()(v)};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        // f(v) ~ f(w) ~ g(v)
        path.push_back(chain[i](w));
        path.push_back(chain[i + 1](v));
    }
    return Walk(h, path);
}

Verdict adjoint_relation_holds(const std::vector<GraphMap>& chain, int v, int r, const std::vector<Walk>& loops) {
    Walk gamma = homotopy_track(chain, v);
    const GraphMap& f = chain.front();
    const GraphMap& g = chain.back();
    auto image = [](const GraphMap& m, const Walk& a) {
        VertexSeq s;
        for (int x : a.vertices()) s.push_back(m(x));
        return Walk(m.codomain(), s);
    };
    HomotopyDecider decider(g.codomain(), g(v), r);
    Verdict out = Verdict::yes;
    for (const Walk& loop : loops) {
        if (loop.initial() != v || !loop.is_loop()) throw PreconditionError("loops must be based at v");
        Walk lhs = compose(compose(reverse(gamma), image(f, loop)), gamma);
        Verdict s = decider.same_class(lhs.vertices(), image(g, loop).vertices());
        if (s == Verdict::no) return Verdict::no;
        if (s == Verdict::unknown) out = Verdict::unknown;
    }
    return out;
}

}  // namespace gtop
