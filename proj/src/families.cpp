#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "gtop/graph.hpp"

namespace gtop {

namespace {

std::string num(long long x) { return std::to_string(x); }
std::string pt(long long x, long long y) { return "(" + num(x) + "," + num(y) + ")"; }

void need(bool ok, std::string_view family, const std::string& what) {
    if (!ok) throw ParameterError(std::string(family) + ": requires " + what);
}

void arity(std::string_view family, const std::vector<long long>& p, std::size_t k) {
    if (p.size() != k)
        throw ParameterError(std::string(family) + ": expects " + std::to_string(k) + " parameter(s), got " +
                             std::to_string(p.size()));
}

std::vector<std::string> numbered(long long n, long long from = 0) {
    std::vector<std::string> v;
    for (long long i = 0; i < n; ++i) v.push_back(num(from + i));
    return v;
}

Graph cycle(long long n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, static_cast<int>((i + 1) % n));
    return Graph::from_indices("C" + num(n), numbered(n), e);
}

Graph complete(long long n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_indices("K" + num(n), numbered(n), e);
}

Graph path(long long n, bool loops) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, i + 1);
    if (loops)
        for (int i = 0; i <= n; ++i) e.emplace_back(i, i);
    return Graph::from_indices((loops ? "I" : "L") + num(n), numbered(n + 1), e);
}

Graph looped(long long n, std::string name) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, i);
    return Graph::from_indices(std::move(name), numbered(n), e);
}

std::string subset_name(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + num(s[i]);
    return out + "}";
}

// k-subsets of {1..n}; adjacency = disjointness
Graph kneser_like(long long n, long long k, bool stable, std::string name) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<long long>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int x = next; x <= n; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(1);
    if (stable) {
        // no two cyclically consecutive elements of {1..n}
        std::erase_if(subsets, [&](const std::vector<int>& s) {
            for (std::size_t i = 0; i + 1 < s.size(); ++i)
                if (s[i + 1] == s[i] + 1) return true;
            return s.size() >= 2 && s.front() == 1 && s.back() == n;
        });
    }
    std::vector<std::string> names;
    for (auto& s : subsets) names.push_back(subset_name(s));
    std::vector<std::pair<int, int>> e;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b) {
            bool disjoint = true;
            for (int x : subsets[a])
                if (std::find(subsets[b].begin(), subsets[b].end(), x) != subsets[b].end()) disjoint = false;
            if (disjoint) e.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return Graph::from_indices(std::move(name), std::move(names), e);
}

// X(m,k): (m+1)x(k+1) grid, Manhattan distance one
struct Grid {
    long long w, h;
    int id(long long x, long long y) const { return static_cast<int>(x * (h + 1) + y); }
    std::vector<std::string> names() const {
        std::vector<std::string> v;
        for (long long x = 0; x <= w; ++x)
            for (long long y = 0; y <= h; ++y) v.push_back(pt(x, y));
        return v;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (long long x = 0; x <= w; ++x)
            for (long long y = 0; y <= h; ++y) {
                if (x < w) e.emplace_back(id(x, y), id(x + 1, y));
                if (y < h) e.emplace_back(id(x, y), id(x, y + 1));
            }
        return e;
    }
    int count() const { return static_cast<int>((w + 1) * (h + 1)); }
};

std::vector<int> union_classes(int n, const std::vector<std::pair<int, int>>& same) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
    for (auto [a, b] : same) {
        int x = find(a), y = find(b);
        if (x != y) p[std::max(x, y)] = std::min(x, y);
    }
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i) cls[i] = find(i);
    return cls;
}

Graph grid_square(long long n) {
    Grid g{n, n};
    return Graph::from_indices("G" + num(n), g.names(), g.edges());
}

bool on_boundary(long long x, long long y, long long n) { return x == 0 || y == 0 || x == n || y == n; }

Graph xn(long long n) {
    Grid g{n, n};
    Graph base = Graph::from_indices("G" + num(n), g.names(), g.edges());
    std::vector<std::pair<int, int>> same;
    for (long long x = 0; x <= n; ++x)
        for (long long y = 0; y <= n; ++y)
            if (on_boundary(x, y, n))
                same.emplace_back(base.index_of(pt(x, y)), base.index_of(pt(n - y, x)));
    return quotient(base, union_classes(base.size(), same)).graph.renamed("X" + num(n));
}

struct XnCover {
    Graph graph;
    std::vector<int> rotation;
};

XnCover xn_cover(long long n) {
    Graph gn = grid_square(n);
    Graph four = looped(4, "4");
    Graph prod = product(gn, four);
    auto pname = [&](long long x, long long y, long long k) { return "(" + pt(x, y) + "," + num(k) + ")"; };
    std::vector<std::pair<int, int>> same;
    for (long long x = 0; x <= n; ++x)
        for (long long y = 0; y <= n; ++y)
            if (on_boundary(x, y, n))
                for (int k = 1; k < 4; ++k)
                    same.emplace_back(prod.index_of(pname(x, y, 0)), prod.index_of(pname(x, y, k)));
    Quotient q = quotient(prod, union_classes(prod.size(), same));
    std::vector<int> rot(q.graph.size(), -1);
    for (long long x = 0; x <= n; ++x)
        for (long long y = 0; y <= n; ++y)
            for (int k = 0; k < 4; ++k) {
                int from = q.projection(prod.index_of(pname(x, y, k)));
                int to = q.projection(prod.index_of(pname(n - y, x, (k + 1) % 4)));
                if (rot[from] >= 0 && rot[from] != to) throw ValidationError("xn_cover: rotation not well defined");
                rot[from] = to;
            }
    return {q.graph.renamed("X~" + num(n)), rot};
}

Graph torus67(long long m, long long n, long long k) {
    std::string fam = "torus67";
    need(m >= 3 && m % 2 == 1, fam, "m odd and m >= 3");
    need(n % 2 == 1 && n > m, fam, "n odd and n > m");
    need(k >= 2 && k % 2 == 0, fam, "k even and k >= 2");
    need(k * (m - 1) > n, fam, "k(m-1) > n");
    const long long W = k * (m - 1);
    Grid g{W, n};
    std::vector<std::pair<int, int>> e;
    for (long long x = 0; x <= W; ++x)
        for (long long y = 0; y <= n; ++y) {
            if (x < W) e.emplace_back(g.id(x, y), g.id(x + 1, y));
            if (y < n && x % (m - 1) == 0) e.emplace_back(g.id(x, y), g.id(x, y + 1));
        }
    Graph h = Graph::from_indices("H", g.names(), e);
    std::vector<std::pair<int, int>> same;
    for (long long x = 0; x <= W; ++x) same.emplace_back(h.index_of(pt(x, 0)), h.index_of(pt(W - x, n)));
    for (long long y = 0; y <= n; ++y) same.emplace_back(h.index_of(pt(0, y)), h.index_of(pt(W, n - y)));
    return quotient(h, union_classes(h.size(), same))
        .graph.renamed("torus67(" + num(m) + "," + num(n) + "," + num(k) + ")");
}

// Y' = Y / Z from the stable-length example; the Z coordinate collapses.
BasedGraph y69(long long n, long long m, long long a, long long k) {
    std::string fam = "y69";
    need(n >= 1 && m >= 1 && (n - m) % 2 == 0, fam, "positive n, m of equal parity");
    need(a >= 5 && a % 2 == 1, fam, "a odd and a >= 5");
    need(a * m >= n, fam, "a*m >= n");
    need(k > n && k > 2, fam, "k > n and k > 2");
    const long long W = a * a * m;
    Grid g{W, k};
    Graph x = Graph::from_indices("X", g.names(), g.edges());
    std::vector<std::pair<int, int>> same;
    for (long long t = 0; t <= W - a; ++t) same.emplace_back(x.index_of(pt(t + a, 0)), x.index_of(pt(t, 0)));
    for (long long i = 0; i <= k; ++i) same.emplace_back(x.index_of(pt(W, i)), x.index_of(pt(0, i)));
    for (long long t = 0; 2 * t <= W - a * n; ++t) same.emplace_back(x.index_of(pt(W - t, k)), x.index_of(pt(t, k)));
    Quotient q = quotient(x, union_classes(x.size(), same));
    // P' = ((a^2 m - a n)/2, k)
    int base = q.projection(x.index_of(pt((W - a * n) / 2, k)));
    return {q.graph.renamed("y69(" + num(n) + "," + num(m) + "," + num(a) + "," + num(k) + ")"), base};
}

Graph pendant_triangle() {
    return Graph::from_names("pendant", {"0", "1", "2", "v"}, {{"0", "1"}, {"1", "2"}, {"2", "0"}, {"2", "v"}});
}

}  // namespace

std::vector<std::string> family_names() {
    return {"cycle", "complete", "path", "interval", "kneser", "petersen", "stable_kneser", "one",
            "looped", "four", "grid", "square_grid", "xn", "xn_cover", "torus67", "y69", "pendant_triangle"};
}

Graph make_family(std::string_view f, const std::vector<long long>& p) {
    if (f == "cycle") {
        arity(f, p, 1);
        need(p[0] >= 1, f, "n >= 1");
        return cycle(p[0]);
    }
    if (f == "complete") {
        arity(f, p, 1);
        need(p[0] >= 1, f, "n >= 1");
        return complete(p[0]);
    }
    if (f == "path" || f == "interval") {
        arity(f, p, 1);
        need(p[0] >= 0, f, "n >= 0");
        return path(p[0], f == "interval");
    }
    if (f == "kneser" || f == "stable_kneser") {
        arity(f, p, 2);
        need(p[1] >= 1 && p[0] >= 2 * p[1], f, "n >= 2k >= 2");
        need(p[0] <= 30, f, "n <= 30");
        std::string nm = (f == "kneser" ? "K(" : "SK(") + num(p[0]) + "," + num(p[1]) + ")";
        return kneser_like(p[0], p[1], f == "stable_kneser", nm);
    }
    if (f == "petersen") {
        arity(f, p, 0);
        return kneser_like(5, 2, false, "Petersen");
    }
    if (f == "one") {
        arity(f, p, 0);
        return Graph::from_names("1", {"*"}, {{"*", "*"}});
    }
    if (f == "looped") {
        arity(f, p, 1);
        need(p[0] >= 1, f, "n >= 1");
        return looped(p[0], "looped" + num(p[0]));
    }
    if (f == "four") {
        arity(f, p, 0);
        return looped(4, "4");
    }
    if (f == "grid") {
        arity(f, p, 2);
        need(p[0] >= 0 && p[1] >= 0, f, "m >= 0 and k >= 0");
        Grid g{p[0], p[1]};
        return Graph::from_indices("X(" + num(p[0]) + "," + num(p[1]) + ")", g.names(), g.edges());
    }
    if (f == "square_grid") {
        arity(f, p, 1);
        need(p[0] >= 0, f, "n >= 0");
        return grid_square(p[0]);
    }
    if (f == "xn") {
        arity(f, p, 1);
        need(p[0] >= 1, f, "n >= 1");
        return xn(p[0]);
    }
    if (f == "xn_cover") {
        arity(f, p, 1);
        need(p[0] >= 1, f, "n >= 1");
        return xn_cover(p[0]).graph;
    }
    if (f == "torus67") {
        arity(f, p, 3);
        return torus67(p[0], p[1], p[2]);
    }
    if (f == "y69") {
        arity(f, p, 4);
        return y69(p[0], p[1], p[2], p[3]).graph;
    }
    if (f == "pendant_triangle") {
        arity(f, p, 0);
        return pendant_triangle();
    }
    throw ParameterError("unknown graph family '" + std::string(f) + "'");
}

BasedGraph make_based_family(std::string_view f, const std::vector<long long>& p) {
    Graph g = make_family(f, p);
    if (f == "kneser" || f == "petersen") {
        std::vector<int> first;
        long long k = f == "petersen" ? 2 : p[1];
        for (int i = 1; i <= k; ++i) first.push_back(i);
        return {g, g.index_of(subset_name(first))};
    }
    if (f == "pendant_triangle") return {g, g.index_of("v")};
    if (f == "y69") return y69(p[0], p[1], p[2], p[3]);
    if (f == "cycle" || f == "complete" || f == "path" || f == "interval" || f == "looped" || f == "four")
        return {g, g.index_of("0")};
    return {g, 0};
}

VertexAction xn_cover_action(int n) {
    if (n < 1) throw ParameterError("xn_cover: requires n >= 1");
    auto c = xn_cover(n);
    return VertexAction(c.graph, {c.rotation});
}

}  // namespace gtop
