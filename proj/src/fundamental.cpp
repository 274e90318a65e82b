#include "gtop/fundamental.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace gtop {

int Pi1Presentation::generator_of(int a, int b) const {
    auto it = chord_index.find({std::min(a, b), std::max(a, b)});
    return it == chord_index.end() ? -1 : it->second;
}

VertexSeq Pi1Presentation::tree_path(int to) const {
    if (!in_component(to)) throw PreconditionError("vertex is outside the base component");
    VertexSeq s;
    for (int x = to; x != -1; x = parent[x]) s.push_back(x);
    std::reverse(s.begin(), s.end());
    return s;
}

VertexSeq Pi1Presentation::fundamental_cycle(int gen) const {
    auto [a, b] = chords.at(gen);
    VertexSeq s = tree_path(a);
    VertexSeq back = tree_path(b);
    std::reverse(back.begin(), back.end());
    s.insert(s.end(), back.begin(), back.end());
    return s;
}

namespace {

std::vector<std::vector<int>> all_distances(const Graph& g, const std::vector<int>& verts) {
    // distances inside one component; indexed by global vertex ids
    std::vector<std::vector<int>> d(g.size());
    for (int s : verts) {
        auto& row = d[s];
        row.assign(g.size(), -1);
        std::queue<int> q;
        row[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : g.neighbors(x))
                if (row[y] < 0) {
                    row[y] = row[x] + 1;
                    q.push(y);
                }
        }
    }
    return d;
}

// Closed walks of length 2n starting at their least vertex, depth first.
// Calls visit(seq) with seq of length 2n (the return to the start implied).
template <class Visit>
void closed_walks(const Graph& g, const std::vector<int>& verts, const std::vector<std::vector<int>>& dist, int len,
                  bool skip_decomposable, long long& budget, Visit&& visit) {
    VertexSeq cur;
    auto dfs = [&](auto&& self, int start) -> void {
        if (--budget < 0) throw BudgetExceeded("closed walk enumeration exceeded its budget");
        const int pos = static_cast<int>(cur.size());
        const int x = cur.back();
        if (pos == len) {
            if (g.adjacent(x, start)) visit(cur);
            return;
        }
        for (int y : g.neighbors(x)) {
            if (y < start) continue;
            int dy = dist[start][y];
            if (dy > len - pos) continue;
            if (skip_decomposable) {
                bool rep = false;
                for (int j = pos - 2; j >= 0 && !rep; j -= 2) rep = cur[j] == y;
                if (rep) continue;
            }
            cur.push_back(y);
            self(self, start);
            cur.pop_back();
        }
    };
    for (int s : verts) {
        cur.assign(1, s);
        dfs(dfs, s);
    }
}

}  // namespace

bool is_decomposable(const VertexSeq& c) {
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; j += 2)
            if (c[i] == c[j]) return true;
    return false;
}

Pi1Presentation cw_presentation(const BasedGraph& bg, int r, const Pi1Options& opt) {
    if (r < 1) throw ParameterError("radius must be at least 1");
    const Graph& g = bg.graph;
    Pi1Presentation pp;
    pp.base = bg;
    pp.r = r;
    pp.filtered = opt.drop_decomposable;
    pp.parent.assign(g.size(), -1);
    pp.depth.assign(g.size(), -1);
    if (g.size() == 0) return pp;

    std::vector<int> order;
    std::queue<int> q;
    pp.depth[bg.base] = 0;
    q.push(bg.base);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        order.push_back(x);
        for (int y : g.neighbors(x))
            if (pp.depth[y] < 0) {
                pp.depth[y] = pp.depth[x] + 1;
                pp.parent[y] = x;
                q.push(y);
            }
    }
    std::sort(order.begin(), order.end());
    for (int a : order)
        for (int b : g.neighbors(a)) {
            if (b < a) continue;
            if (a != b && (pp.parent[b] == a || pp.parent[a] == b)) continue;
            pp.chord_index[{a, b}] = static_cast<int>(pp.chords.size());
            pp.chords.emplace_back(a, b);
        }
    const int k = static_cast<int>(pp.chords.size());
    if (k == 1)
        pp.presentation.generators = {"g"};
    else
        for (int i = 1; i <= k; ++i) pp.presentation.generators.push_back("g" + std::to_string(i));
    for (auto [a, b] : pp.chords) pp.parity.push_back((pp.depth[a] + pp.depth[b] + 1) % 2);

    auto dist = all_distances(g, order);
    std::set<Word> rels;
    long long budget = opt.max_walks;
    for (int n = 1; n <= r; ++n)
        closed_walks(g, order, dist, 2 * n, opt.drop_decomposable, budget, [&](const VertexSeq& c) {
            VertexSeq closed = c;
            closed.push_back(c.front());
            Word w = cyclic_reduce(walk_to_word(pp, closed));
            if (!w.empty()) rels.insert(cyclic_canonical(w));
        });
    pp.presentation.relators.assign(rels.begin(), rels.end());
    std::stable_sort(pp.presentation.relators.begin(), pp.presentation.relators.end(),
                     [](const Word& a, const Word& b) { return a.size() < b.size(); });
    return pp;
}

Word walk_to_word(const Pi1Presentation& pp, const VertexSeq& walk) {
    Word w;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        int x = walk[i], y = walk[i + 1];
        if (!pp.in_component(x) || !pp.in_component(y))
            throw PreconditionError("walk leaves the component of the base");
        if (x != y && (pp.parent[y] == x || pp.parent[x] == y)) continue;
        int gen = pp.generator_of(x, y);
        if (gen < 0) throw ValidationError("walk step is not an edge");
        w.push_back(x <= y ? letter(gen) : -letter(gen));
    }
    return free_reduce(w);
}

Word walk_to_word(const Pi1Presentation& pp, const Walk& walk) { return walk_to_word(pp, walk.vertices()); }

int parity_of(const Pi1Presentation& pp, const Word& w) {
    int p = 0;
    for (int l : w) p ^= pp.parity[gen_of(l)];
    return p;
}

EvenPart even_part(const Pi1Presentation& pp) {
    EvenPart out;
    const int n = pp.presentation.ngens();
    if (std::none_of(pp.parity.begin(), pp.parity.end(), [](int p) { return p != 0; })) {
        out.presentation = pp.presentation;
        for (int g = 0; g < n; ++g) out.generator_words.push_back({letter(g)});
        out.whole_group = true;
        return out;
    }
    std::vector<int> t(static_cast<std::size_t>(2) * 2 * n);
    for (int c = 0; c < 2; ++c)
        for (int g = 0; g < n; ++g) {
            t[c * 2 * n + 2 * g] = c ^ pp.parity[g];
            t[c * 2 * n + 2 * g + 1] = c ^ pp.parity[g];
        }
    auto sp = subgroup_presentation(pp.presentation, CosetTable(n, std::move(t)));
    out.presentation = std::move(sp.presentation);
    out.generator_words = std::move(sp.generator_words);
    return out;
}

Word InducedHom::apply(const Word& w) const {
    Word out;
    for (int l : w) {
        const Word& img = images[gen_of(l)];
        if (l > 0)
            out.insert(out.end(), img.begin(), img.end());
        else {
            Word inv = inverse(img);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return free_reduce(out);
}

InducedHom induced_hom(const BasedMap& f, int r, const Pi1Options& opt) {
    if (f.map(f.domain_base) != f.codomain_base) throw PreconditionError("map does not send base to base");
    InducedHom h;
    h.domain = cw_presentation({f.map.domain(), f.domain_base}, r, opt);
    h.codomain = cw_presentation({f.map.codomain(), f.codomain_base}, r, opt);
    for (int gen = 0; gen < h.domain.presentation.ngens(); ++gen) {
        VertexSeq c = h.domain.fundamental_cycle(gen);
        for (int& v : c) v = f.map(v);
        h.images.push_back(walk_to_word(h.codomain, c));
    }
    WordSolver solver(h.codomain.presentation);
    for (const auto& rel : h.domain.presentation.relators)
        if (solver.is_trivial(h.apply(rel)) == Verdict::no)
            throw Error("induced homomorphism sends a relator to a nontrivial element");
    return h;
}

CycleSplit nondecomposable_filter(const Graph& g, int r, long long max_walks) {
    if (r < 1) throw ParameterError("radius must be at least 1");
    std::vector<int> all(g.size());
    for (int i = 0; i < g.size(); ++i) all[i] = i;
    auto dist = all_distances(g, all);
    // unreachable pairs read as "too far"
    for (auto& row : dist)
        for (int& d : row)
            if (d < 0) d = 1 << 29;
    CycleSplit out;
    std::set<VertexSeq> seen;
    long long budget = max_walks;
    closed_walks(g, all, dist, 2 * r, false, budget, [&](const VertexSeq& c) {
        // canonical form over rotations and reflections
        VertexSeq best = c;
        const int n = static_cast<int>(c.size());
        for (int dir = 0; dir < 2; ++dir)
            for (int s = 0; s < n; ++s) {
                VertexSeq x(n);
                for (int i = 0; i < n; ++i) x[i] = dir == 0 ? c[(s + i) % n] : c[((s - i) % n + n) % n];
                best = std::min(best, x);
            }
        if (!seen.insert(best).second) return;
        (is_decomposable(best) ? out.decomposable : out.nondecomposable).push_back(best);
    });
    return out;
}

}  // namespace gtop
