#include "gtop/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace gtop {

Graph::Graph() : d_(std::make_shared<Data>()) {}

Graph Graph::from_indices(std::string name, std::vector<std::string> vertices,
                          const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(vertices.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vertices[a] < vertices[b]; });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->names.resize(n);
    for (int i = 0; i < n; ++i) d->names[i] = std::move(vertices[order[i]]);
    for (int i = 1; i < n; ++i)
        if (d->names[i] == d->names[i - 1])
            throw ParameterError("duplicate vertex name '" + d->names[i] + "'");

    d->adj.assign(n, {});
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw ParameterError("edge endpoint out of range");
        int x = pos[a], y = pos[b];
        d->adj[x].push_back(y);
        if (x != y) d->adj[y].push_back(x);
    }
    std::size_t count = 0;
    for (int v = 0; v < n; ++v) {
        auto& a = d->adj[v];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        for (int w : a)
            if (w >= v) ++count;
    }
    d->edge_count = count;
    return Graph(std::move(d));
}

Graph Graph::from_names(std::string name, std::vector<std::string> vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
    std::unordered_map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        if (!idx.emplace(vertices[i], i).second)
            throw ParameterError("duplicate vertex name '" + vertices[i] + "'");
    }
    std::vector<std::pair<int, int>> e;
    e.reserve(edges.size());
    for (auto& [a, b] : edges) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end()) throw LookupError("edge mentions unknown vertex '" + a + "'");
        if (ib == idx.end()) throw LookupError("edge mentions unknown vertex '" + b + "'");
        e.emplace_back(ia->second, ib->second);
    }
    return from_indices(std::move(name), std::move(vertices), e);
}

int Graph::index_of(std::string_view vname) const {
    auto f = find(vname);
    if (!f) throw LookupError("unknown vertex '" + std::string(vname) + "' in graph '" + d_->name + "'");
    return *f;
}

std::optional<int> Graph::find(std::string_view vname) const {
    auto it = std::lower_bound(d_->names.begin(), d_->names.end(), vname,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == d_->names.end() || *it != vname) return std::nullopt;
    return static_cast<int>(it - d_->names.begin());
}

bool Graph::adjacent(int a, int b) const {
    const auto& n = d_->adj[a];
    return std::binary_search(n.begin(), n.end(), b);
}

bool Graph::has_loops() const {
    for (int v = 0; v < size(); ++v)
        if (has_loop(v)) return true;
    return false;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(d_->edge_count);
    for (int v = 0; v < size(); ++v)
        for (int w : d_->adj[v])
            if (w >= v) out.emplace_back(v, w);
    return out;
}

Graph Graph::renamed(std::string new_name) const {
    auto d = std::make_shared<Data>(*d_);
    d->name = std::move(new_name);
    return Graph(std::move(d));
}

bool operator==(const Graph& a, const Graph& b) {
    return a.d_->names == b.d_->names && a.d_->adj == b.d_->adj;
}

BasedGraph based(const Graph& g, std::string_view base_name) { return {g, g.index_of(base_name)}; }

std::vector<int> component_of(const Graph& g, int v) {
    std::vector<char> seen(g.size(), 0);
    std::vector<int> out{v}, stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
                stack.push_back(y);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> component_labels(const Graph& g, int* count) {
    std::vector<int> label(g.size(), -1);
    int c = 0;
    for (int v = 0; v < g.size(); ++v) {
        if (label[v] >= 0) continue;
        for (int w : component_of(g, v)) label[w] = c;
        ++c;
    }
    if (count) *count = c;
    return label;
}

bool is_connected(const Graph& g) {
    int c = 0;
    component_labels(g, &c);
    return c <= 1;
}

// ---------------------------------------------------------------- maps

std::optional<std::pair<int, int>> GraphMap::first_bad_edge(const Graph& dom, const Graph& cod,
                                                            const std::vector<int>& f) {
    for (int v = 0; v < dom.size(); ++v)
        for (int w : dom.neighbors(v))
            if (w >= v && !cod.adjacent(f[v], f[w])) return std::make_pair(v, w);
    return std::nullopt;
}

GraphMap::GraphMap(Graph domain, Graph codomain, std::vector<int> assignment)
    : dom_(std::move(domain)), cod_(std::move(codomain)), map_(std::move(assignment)) {
    if (static_cast<int>(map_.size()) != dom_.size())
        throw ValidationError("map assignment has wrong size");
    for (int x : map_)
        if (x < 0 || x >= cod_.size()) throw ValidationError("map assignment out of range");
    if (auto bad = first_bad_edge(dom_, cod_, map_)) {
        auto [v, w] = *bad;
        throw ValidationError("not a graph map: edge (" + dom_.vertex_name(v) + "," + dom_.vertex_name(w) +
                              ") goes to non-edge (" + cod_.vertex_name(map_[v]) + "," +
                              cod_.vertex_name(map_[w]) + ")");
    }
}

GraphMap GraphMap::identity(const Graph& g) {
    std::vector<int> id(g.size());
    std::iota(id.begin(), id.end(), 0);
    return GraphMap(g, g, std::move(id));
}

GraphMap GraphMap::from_names(Graph domain, Graph codomain,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<int> f(domain.size(), -1);
    for (auto& [a, b] : pairs) f[domain.index_of(a)] = codomain.index_of(b);
    for (int v = 0; v < domain.size(); ++v)
        if (f[v] < 0) throw ValidationError("map is not total: no image for '" + domain.vertex_name(v) + "'");
    return GraphMap(std::move(domain), std::move(codomain), std::move(f));
}

GraphMap GraphMap::then(const GraphMap& next) const {
    if (!(cod_ == next.dom_)) throw ValidationError("maps are not composable");
    std::vector<int> f(map_.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = next.map_[map_[i]];
    return GraphMap(dom_, next.cod_, std::move(f));
}

// ---------------------------------------------------------------- actions

VertexAction::VertexAction(Graph g, std::vector<std::vector<int>> generators)
    : g_(std::move(g)), gens_(std::move(generators)) {
    const int n = g_.size();
    for (const auto& p : gens_) {
        if (static_cast<int>(p.size()) != n) throw ValidationError("action generator has wrong size");
        std::vector<char> hit(n, 0);
        for (int x : p) {
            if (x < 0 || x >= n || hit[x]) throw ValidationError("action generator is not a permutation");
            hit[x] = 1;
        }
        if (GraphMap::first_bad_edge(g_, g_, p)) throw ValidationError("action generator is not an automorphism");
    }
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, int> seen;
    elems_.push_back(id);
    seen.emplace(id, 0);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        for (const auto& s : gens_) {
            std::vector<int> c(n);
            for (int v = 0; v < n; ++v) c[v] = s[elems_[i][v]];
            if (seen.emplace(c, static_cast<int>(elems_.size())).second) elems_.push_back(std::move(c));
            if (elems_.size() > 100000) throw BudgetExceeded("action group larger than 100000 elements");
        }
    }
}

bool VertexAction::is_free() const {
    for (std::size_t i = 1; i < elems_.size(); ++i)
        for (int v = 0; v < g_.size(); ++v)
            if (elems_[i][v] == v) return false;
    return true;
}

// ---------------------------------------------------------------- operations

Graph cone(const Graph& g) {
    auto names = g.vertex_names();
    if (g.find("*")) throw ParameterError("cone: graph already has a vertex named '*'");
    names.push_back("*");
    auto e = g.edges();
    const int star = g.size();
    for (int v = 0; v < g.size(); ++v) e.emplace_back(v, star);
    return Graph::from_indices(g.name() + "+", std::move(names), e);
}

Graph product(const Graph& g, const Graph& h) {
    const int n = g.size(), m = h.size();
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n) * m);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) names.push_back("(" + g.vertex_name(a) + "," + h.vertex_name(b) + ")");
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < n; ++a)
        for (int a2 : g.neighbors(a))
            for (int b = 0; b < m; ++b)
                for (int b2 : h.neighbors(b)) {
                    int x = a * m + b, y = a2 * m + b2;
                    if (x <= y) e.emplace_back(x, y);
                }
    return Graph::from_indices(g.name() + "x" + h.name(), std::move(names), e);
}

Quotient quotient(const Graph& g, const std::vector<int>& class_of) {
    const int n = g.size();
    if (static_cast<int>(class_of.size()) != n) throw ValidationError("partition does not cover the vertex set");
    std::map<int, std::vector<int>> members;
    for (int v = 0; v < n; ++v) members[class_of[v]].push_back(v);
    // classes are named after their lexicographically least member
    std::vector<std::string> names;
    std::map<int, int> cls_index;
    for (auto& [c, vs] : members) {
        cls_index[c] = static_cast<int>(names.size());
        names.push_back(g.vertex_name(vs.front()));
    }
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : g.edges()) e.emplace_back(cls_index[class_of[a]], cls_index[class_of[b]]);
    Graph q = Graph::from_indices(g.name() + "/~", names, e);
    std::vector<int> proj(n);
    for (int v = 0; v < n; ++v) proj[v] = q.index_of(names[cls_index[class_of[v]]]);
    GraphMap p(g, q, std::move(proj));
    return {q, p};
}

Quotient quotient(const Graph& g, const std::vector<std::vector<std::string>>& classes) {
    std::vector<int> cls(g.size(), -1);
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        if (classes[c].empty()) throw ValidationError("partition has an empty class");
        for (const auto& vn : classes[c]) {
            int v = g.index_of(vn);
            if (cls[v] >= 0) throw ValidationError("vertex '" + vn + "' appears in two classes");
            cls[v] = c;
        }
    }
    for (int v = 0; v < g.size(); ++v)
        if (cls[v] < 0) throw ValidationError("vertex '" + g.vertex_name(v) + "' is in no class");
    return quotient(g, cls);
}

namespace {
struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};
}  // namespace

Quotient quotient_by_action(const VertexAction& a) {
    const Graph& g = a.graph();
    UnionFind uf(g.size());
    for (const auto& s : a.generators())
        for (int v = 0; v < g.size(); ++v) uf.unite(v, s[v]);
    std::vector<int> cls(g.size());
    for (int v = 0; v < g.size(); ++v) cls[v] = uf.find(v);
    return quotient(g, cls);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices, std::string name) {
    std::vector<int> pos(g.size(), -1);
    std::vector<std::string> names;
    for (int v : vertices) {
        if (pos[v] >= 0) continue;
        pos[v] = static_cast<int>(names.size());
        names.push_back(g.vertex_name(v));
    }
    std::vector<std::pair<int, int>> e;
    for (auto [x, y] : g.edges())
        if (pos[x] >= 0 && pos[y] >= 0) e.emplace_back(pos[x], pos[y]);
    return Graph::from_indices(name.empty() ? g.name() : std::move(name), std::move(names), e);
}

Graph delete_isolated(const Graph& g) {
    std::vector<int> keep;
    for (int v = 0; v < g.size(); ++v)
        if (!g.is_isolated(v)) keep.push_back(v);
    return induced_subgraph(g, keep, g.name());
}

std::vector<char> neighborhood_mask(const Graph& g, int v, int s) {
    if (s < 1) throw ParameterError("neighborhood radius must be at least 1");
    std::vector<char> cur(g.size(), 0), next(g.size(), 0);
    cur[v] = 1;
    for (int i = 0; i < s; ++i) {
        std::fill(next.begin(), next.end(), 0);
        for (int x = 0; x < g.size(); ++x)
            if (cur[x])
                for (int y : g.neighbors(x)) next[y] = 1;
        std::swap(cur, next);
    }
    return cur;
}

std::vector<int> neighborhood(const Graph& g, int v, int s) {
    if (v < 0 || v >= g.size()) throw LookupError("neighborhood: vertex out of range");
    auto m = neighborhood_mask(g, v, s);
    std::vector<int> out;
    for (int x = 0; x < g.size(); ++x)
        if (m[x]) out.push_back(x);
    return out;
}

// ---------------------------------------------------------------- isomorphism

namespace {

// colour refinement on the disjoint union so colours are comparable
std::vector<int> refine(const Graph& g, std::vector<int> colour) {
    const int n = g.size();
    int classes = static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> sig;
        std::vector<std::pair<int, std::vector<int>>> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nc;
            for (int w : g.neighbors(v)) nc.push_back(colour[w]);
            std::sort(nc.begin(), nc.end());
            keys[v] = {colour[v], std::move(nc)};
            sig.emplace(keys[v], 0);
        }
        int id = 0;
        for (auto& [k, val] : sig) val = id++;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) next[v] = sig[keys[v]];
        colour.swap(next);
        if (id == classes) return colour;
        classes = id;
    }
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::string> names;
    for (auto& s : a.vertex_names()) names.push_back("a" + s);
    for (auto& s : b.vertex_names()) names.push_back("b" + s);
    std::vector<std::pair<int, int>> e = a.edges();
    for (auto [x, y] : b.edges()) e.emplace_back(x + a.size(), y + a.size());
    return Graph::from_indices("u", std::move(names), e);
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> ca, cb;  // refined colours, comparable
    std::vector<int> map, inv;
    std::vector<int> order;

    bool extend(std::size_t k) {
        if (k == order.size()) return true;
        int v = order[k];
        for (int w = 0; w < b.size(); ++w) {
            if (inv[w] >= 0 || cb[w] != ca[v]) continue;
            if (a.has_loop(v) != b.has_loop(w)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                int u = order[j];
                if (a.adjacent(v, u) != b.adjacent(w, map[u])) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            inv[w] = v;
            if (extend(k + 1)) return true;
            map[v] = -1;
            inv[w] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
    Graph u = disjoint_union(a, b);
    // disjoint_union sorts names; recover positions
    std::vector<int> ia(a.size()), ib(b.size());
    for (int v = 0; v < a.size(); ++v) ia[v] = u.index_of("a" + a.vertex_name(v));
    for (int v = 0; v < b.size(); ++v) ib[v] = u.index_of("b" + b.vertex_name(v));
    std::vector<int> init(u.size());
    for (int v = 0; v < u.size(); ++v) init[v] = u.has_loop(v) ? 1 : 0;
    auto col = refine(u, init);
    IsoSearch s{a, b, {}, {}, std::vector<int>(a.size(), -1), std::vector<int>(b.size(), -1), {}};
    s.ca.resize(a.size());
    s.cb.resize(b.size());
    for (int v = 0; v < a.size(); ++v) s.ca[v] = col[ia[v]];
    for (int v = 0; v < b.size(); ++v) s.cb[v] = col[ib[v]];
    {
        auto x = s.ca, y = s.cb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return std::nullopt;
    }
    // BFS order so that each new vertex has assigned neighbours to check against
    std::vector<char> seen(a.size(), 0);
    for (int r = 0; r < a.size(); ++r) {
        if (seen[r]) continue;
        std::queue<int> q;
        q.push(r);
        seen[r] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            s.order.push_back(x);
            for (int y : a.neighbors(x))
                if (!seen[y]) {
                    seen[y] = 1;
                    q.push(y);
                }
        }
    }
    if (!s.extend(0)) return std::nullopt;
    return s.map;
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph \"" << g.name() << "\" {\n";
    for (int v = 0; v < g.size(); ++v) os << "  \"" << g.vertex_name(v) << "\";\n";
    for (auto [a, b] : g.edges())
        os << "  \"" << g.vertex_name(a) << "\" -- \"" << g.vertex_name(b) << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace gtop
