#include "gtop/ncomplex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "gtop/fundamental.hpp"

namespace gtop {

namespace {

std::vector<Face> maximal_only(std::vector<Face> faces) {
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    // larger faces first so containment only needs checking one way
    std::vector<std::size_t> order(faces.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return faces[a].size() > faces[b].size(); });
    std::vector<Face> kept;
    for (std::size_t i : order) {
        const Face& f = faces[i];
        bool inside = false;
        for (const Face& k : kept)
            if (k.size() > f.size() && std::includes(k.begin(), k.end(), f.begin(), f.end())) {
                inside = true;
                break;
            }
        if (!inside) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

void subsets(const Face& f, int k, std::size_t from, Face& cur, std::set<Face>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.insert(cur);
        return;
    }
    for (std::size_t i = from; i + (k - cur.size()) <= f.size(); ++i) {
        cur.push_back(f[i]);
        subsets(f, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> names, std::vector<Face> faces) {
    const int n = static_cast<int>(names.size());
    for (const auto& f : faces)
        for (int v : f)
            if (v < 0 || v >= n) throw LookupError("face vertex out of range");
    // relabel so names are sorted
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return names[a] < names[b]; });
    std::vector<int> relabel(n);
    for (int i = 0; i < n; ++i) relabel[order[i]] = i;
    for (int i = 0; i + 1 < n; ++i)
        if (names[order[i]] == names[order[i + 1]]) throw ValidationError("duplicate vertex name " + names[order[i]]);
    for (int i = 0; i < n; ++i) names_.push_back(names[order[i]]);
    for (auto& f : faces)
        for (int& v : f) v = relabel[v];
    for (int v = 0; v < n; ++v) faces.push_back({v});
    max_ = maximal_only(std::move(faces));
    at_.assign(n, {});
    for (int i = 0; i < static_cast<int>(max_.size()); ++i)
        for (int v : max_[i]) at_[v].push_back(i);
}

SimplicialComplex SimplicialComplex::from_names(const std::vector<std::vector<std::string>>& faces) {
    std::map<std::string, int> id;
    std::vector<std::string> names;
    std::vector<Face> fs;
    for (const auto& f : faces) {
        Face x;
        for (const auto& s : f) {
            auto [it, fresh] = id.emplace(s, static_cast<int>(names.size()));
            if (fresh) names.push_back(s);
            x.push_back(it->second);
        }
        fs.push_back(std::move(x));
    }
    return SimplicialComplex(std::move(names), std::move(fs));
}

int SimplicialComplex::index_of(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) throw LookupError("no vertex '" + name + "' in the complex");
    return static_cast<int>(it - names_.begin());
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : max_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::contains(const Face& sigma) const {
    if (sigma.empty()) return true;
    for (int i : at_.at(sigma.front()))
        if (std::includes(max_[i].begin(), max_[i].end(), sigma.begin(), sigma.end())) return true;
    return false;
}

std::vector<Face> SimplicialComplex::faces(int k) const {
    std::set<Face> out;
    Face cur;
    for (const auto& f : max_)
        if (static_cast<int>(f.size()) >= k + 1) subsets(f, k + 1, 0, cur, out);
    return {out.begin(), out.end()};
}

std::vector<int> SimplicialComplex::component_labels(int* count) const {
    std::vector<int> lab(size(), -1);
    int c = 0;
    for (int s = 0; s < size(); ++s) {
        if (lab[s] >= 0) continue;
        std::queue<int> q;
        lab[s] = c;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int fi : at_[x])
                for (int y : max_[fi])
                    if (lab[y] < 0) {
                        lab[y] = c;
                        q.push(y);
                    }
        }
        ++c;
    }
    if (count) *count = c;
    return lab;
}

SimplicialComplex SimplicialComplex::component(int v) const {
    auto lab = component_labels();
    std::vector<int> keep(size(), -1);
    std::vector<std::string> names;
    for (int x = 0; x < size(); ++x)
        if (lab[x] == lab[v]) {
            keep[x] = static_cast<int>(names.size());
            names.push_back(names_[x]);
        }
    std::vector<Face> fs;
    for (const auto& f : max_)
        if (lab[f.front()] == lab[v]) {
            Face g;
            for (int x : f) g.push_back(keep[x]);
            fs.push_back(std::move(g));
        }
    return SimplicialComplex(std::move(names), std::move(fs));
}

std::vector<Face> SimplicialComplex::star(int v) const {
    std::vector<Face> out;
    for (int i : at_[v]) out.push_back(max_[i]);
    return out;
}

std::vector<int> SimplicialComplex::star_vertices(int v) const {
    std::set<int> s;
    for (int i : at_[v]) s.insert(max_[i].begin(), max_[i].end());
    return {s.begin(), s.end()};
}

// ---------------------------------------------------------------- neighborhood complexes

SimplicialComplex neighborhood_complex(const Graph& g, int r) {
    if (r < 1) throw ParameterError("radius must be at least 1");
    std::vector<int> keep(g.size(), -1);
    std::vector<std::string> names;
    for (int v = 0; v < g.size(); ++v)
        if (!g.is_isolated(v)) {
            keep[v] = static_cast<int>(names.size());
            names.push_back(g.vertex_name(v));
        }
    std::vector<Face> faces;
    for (int v = 0; v < g.size(); ++v) {
        if (g.is_isolated(v)) continue;
        Face f;
        for (int u : neighborhood(g, v, r)) f.push_back(keep[u]);
        faces.push_back(std::move(f));
    }
    return SimplicialComplex(std::move(names), std::move(faces));
}

int complex_vertex(const SimplicialComplex& c, const Graph& g, int gv) { return c.index_of(g.vertex_name(gv)); }

// ---------------------------------------------------------------- edge-loop groups

EdgeLoopPresentation edge_loop_presentation(const SimplicialComplex& c, int base) {
    if (base < 0 || base >= c.size()) throw LookupError("base vertex out of range");
    EdgeLoopPresentation e;
    e.complex = c;
    e.base = base;
    const int n = c.size();
    // 1-skeleton adjacency
    std::vector<std::set<int>> adj(n);
    for (const auto& f : c.maximal_faces())
        for (int a : f)
            for (int b : f)
                if (a != b) adj[a].insert(b);
    e.parent.assign(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> comp;
    std::queue<int> q;
    seen[base] = 1;
    q.push(base);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        comp.push_back(x);
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                e.parent[y] = x;
                q.push(y);
            }
    }
    std::sort(comp.begin(), comp.end());
    std::map<std::pair<int, int>, int> chord;
    for (int a : comp)
        for (int b : adj[a]) {
            if (b < a || e.parent[b] == a || e.parent[a] == b) continue;
            chord[{a, b}] = static_cast<int>(e.chords.size());
            e.chords.emplace_back(a, b);
        }
    const int k = static_cast<int>(e.chords.size());
    if (k == 1)
        e.presentation.generators = {"e"};
    else
        for (int i = 1; i <= k; ++i) e.presentation.generators.push_back("e" + std::to_string(i));
    auto step = [&](int x, int y, Word& w) {
        auto it = chord.find({std::min(x, y), std::max(x, y)});
        if (it == chord.end()) return;
        w.push_back(x < y ? letter(it->second) : -letter(it->second));
    };
    std::set<Word> rels;
    for (const auto& t : c.faces(2)) {
        if (!seen[t[0]]) continue;
        Word w;
        step(t[0], t[1], w);
        step(t[1], t[2], w);
        step(t[2], t[0], w);
        w = cyclic_reduce(w);
        if (!w.empty()) rels.insert(cyclic_canonical(w));
    }
    e.presentation.relators.assign(rels.begin(), rels.end());
    return e;
}

// ---------------------------------------------------------------- homology

std::string Homology::to_string() const {
    return "H0 = Z^" + std::to_string(h0_rank) + ", H1 = " + h1.to_string() + ", H2 = " + h2.to_string();
}

Homology homology(const SimplicialComplex& c) {
    auto f0 = c.faces(0), f1 = c.faces(1), f2 = c.faces(2);
    std::map<Face, int> id1;
    for (int i = 0; i < static_cast<int>(f1.size()); ++i) id1[f1[i]] = i;
    // boundary of [a,b] is b - a; boundary of [a,b,c] is [b,c] - [a,c] + [a,b]
    auto rank_and_torsion = [](IntMatrix m, std::vector<BigInt>* torsion) -> int {
        if (m.empty() || m.front().empty()) return 0;
        auto s = smith_normal_form(std::move(m));
        if (torsion)
            for (const auto& d : s.diagonal)
                if (abs(d) > 1) torsion->push_back(abs(d));
        return static_cast<int>(s.diagonal.size());
    };
    IntMatrix d1(f0.size(), std::vector<BigInt>(f1.size(), 0));
    for (int j = 0; j < static_cast<int>(f1.size()); ++j) {
        d1[f1[j][0]][j] -= 1;
        d1[f1[j][1]][j] += 1;
    }
    IntMatrix d2(f1.size(), std::vector<BigInt>(f2.size(), 0));
    for (int j = 0; j < static_cast<int>(f2.size()); ++j) {
        const Face& t = f2[j];
        d2[id1.at({t[1], t[2]})][j] += 1;
        d2[id1.at({t[0], t[2]})][j] -= 1;
        d2[id1.at({t[0], t[1]})][j] += 1;
    }
    Homology h;
    int r1 = rank_and_torsion(std::move(d1), nullptr);
    std::vector<BigInt> tors;
    int r2 = rank_and_torsion(std::move(d2), &tors);
    h.h0_rank = static_cast<int>(f0.size()) - r1;
    h.h1.rank = static_cast<int>(f1.size()) - r1 - r2;
    h.h1.torsion = tors;
    h.h2.rank = static_cast<int>(f2.size()) - r2;
    return h;
}

// ---------------------------------------------------------------- covering criterion

namespace {

std::vector<Face> maximal_image(const std::vector<Face>& faces, const std::vector<int>& f) {
    std::vector<Face> img;
    for (const auto& x : faces) {
        Face y;
        for (int v : x) y.push_back(f[v]);
        img.push_back(std::move(y));
    }
    return maximal_only(std::move(img));
}

}  // namespace

ComplexCoverReport complex_covering_check(const GraphMap& p, int r) {
    auto cert = verify_r_covering(p, 2 * r);
    if (!cert.pass)
        throw PreconditionError("map is not a " + std::to_string(2 * r) + "-covering: " +
                                cert.witness->describe(p));
    const Graph& g = p.domain();
    const Graph& h = p.codomain();
    SimplicialComplex ng = neighborhood_complex(g, r), nh = neighborhood_complex(h, r);
    // vertex map between the complexes
    std::vector<int> f(ng.size());
    for (int v = 0; v < ng.size(); ++v) f[v] = nh.index_of(h.vertex_name(p(g.index_of(ng.vertex_name(v)))));
    std::vector<std::vector<int>> fiber(nh.size());
    for (int v = 0; v < ng.size(); ++v) fiber[f[v]].push_back(v);

    ComplexCoverReport rep;
    auto fail = [&](std::string why) {
        rep.failure = std::move(why);
        return rep;
    };
    // faces of dimension <= 2 and all maximal faces of N_r(G), checked against every star
    std::vector<Face> probe = ng.faces(0);
    for (int k : {1, 2}) {
        auto fk = ng.faces(k);
        probe.insert(probe.end(), fk.begin(), fk.end());
    }
    probe.insert(probe.end(), ng.maximal_faces().begin(), ng.maximal_faces().end());

    for (int v = 0; v < nh.size(); ++v) {
        ++rep.stars_checked;
        auto sv = nh.star_vertices(v);
        auto star_h = maximal_only(nh.star(v));
        std::vector<char> in_some(ng.size(), 0);
        std::vector<int> owner(ng.size(), -1);
        for (int w : fiber[v]) {
            auto sw = ng.star_vertices(w);
            // step 1: p maps st(w) isomorphically onto st(v)
            std::vector<int> img;
            for (int x : sw) img.push_back(f[x]);
            std::sort(img.begin(), img.end());
            if (std::adjacent_find(img.begin(), img.end()) != img.end() || img != sv)
                return fail("p is not a bijection from st(" + ng.vertex_name(w) + ") onto st(" + nh.vertex_name(v) +
                            ")");
            if (maximal_image(ng.star(w), f) != star_h)
                return fail("faces of st(" + ng.vertex_name(w) + ") do not match st(" + nh.vertex_name(v) + ")");
            // step 2: the stars over v are disjoint
            for (int x : sw) {
                if (owner[x] >= 0)
                    return fail("st(" + ng.vertex_name(owner[x]) + ") and st(" + ng.vertex_name(w) + ") meet at " +
                                ng.vertex_name(x));
                owner[x] = w;
                in_some[x] = 1;
            }
        }
        // step 3: whatever maps into st(v) lies in one of those stars
        for (const Face& s : probe) {
            Face img;
            for (int x : s) img.push_back(f[x]);
            img.push_back(v);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (!nh.contains(img)) continue;
            int w = owner[s.front()];
            bool ok = w >= 0;
            if (ok) {
                Face with = s;
                with.push_back(w);
                std::sort(with.begin(), with.end());
                with.erase(std::unique(with.begin(), with.end()), with.end());
                ok = ng.contains(with);
            }
            if (!ok) {
                std::string name;
                for (int x : s) name += (name.empty() ? "" : ",") + ng.vertex_name(x);
                return fail("face {" + name + "} maps into st(" + nh.vertex_name(v) + ") but lies in no star above it");
            }
        }
    }
    rep.pass = true;
    return rep;
}

Theorem53Report theorem_5_3_check(const BasedGraph& bg, int r) {
    if (bg.graph.is_isolated(bg.base)) throw PreconditionError("base vertex is isolated");
    Theorem53Report rep;
    SimplicialComplex c = neighborhood_complex(bg.graph, r);
    auto e = edge_loop_presentation(c, complex_vertex(c, bg.graph, bg.base));
    rep.complex_side = identify(e.presentation);
    Pi1Options o;
    o.drop_decomposable = true;
    rep.graph_side = identify(even_part(cw_presentation(bg, 2 * r, o)).presentation);
    rep.agree = rep.complex_side.name == rep.graph_side.name && rep.complex_side.abelian == rep.graph_side.abelian &&
                rep.complex_side.name != "unknown";
    return rep;
}

}  // namespace gtop
